"""Module: Report Generator

Human tables go to standard output through the Jinja2 templates; machine
readable reports are JSON lines (one object per line) and optional CSV.
"""

import csv
import json
import logging
import sys
from contextlib import ExitStack, contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, TextIO

from permpoly.engine.lemma_suite import LemmaReport
from permpoly.engine.perm_check import PermReport
from permpoly.templates import report_templates

LOG = logging.getLogger(__name__)

CSV_COLUMNS = ("p", "j", "n", "modulus", "k", "k_coset", "gamma", "is_pp", "family_tag")


@dataclass
class SubVerdict:
    """Data Class: one labelled row of a multi-map verification"""

    label: str
    report: PermReport

    @property
    def is_pp(self) -> bool:
        return self.report.is_pp

    @property
    def evals(self) -> int:
        return self.report.evals


class ReportGenerator:
    """Class: Report Generator"""

    def __init__(self, out: Optional[Path] = None, csv_path: Optional[Path] = None, stream: Optional[TextIO] = None):
        self.out = out
        self.csv_path = csv_path
        self.stream = stream if stream is not None else sys.stdout

    def emit(self, text: str) -> None:
        """Method: write rendered text to the output stream"""

        self.stream.write(text)
        if not text.endswith("\n"):
            self.stream.write("\n")

    # human tables

    def verdict(self, title: str, domain: str, report: PermReport) -> None:
        """Method: single map verdict"""

        self.emit(report_templates.VERDICT.render(title=title, domain=domain, report=report))

    def sub_verdicts(self, title: str, rows: Sequence[SubVerdict]) -> None:
        """Method: one row per map plus a pass count"""

        passed = sum(1 for row in rows if row.is_pp)
        self.emit(report_templates.SUB_VERDICTS.render(title=title, rows=rows, passed=passed))

    def lemma_table(self, report: LemmaReport) -> None:
        """Method: lemma suite lines"""

        self.emit(report_templates.LEMMA_TABLE.render(report=report))

    def search_table(self, records: Sequence[Any]) -> None:
        """Method: search records grouped by field"""

        novel = sum(1 for record in records if record.family_tag is None)
        self.emit(report_templates.SEARCH_TABLE.render(records=records, novel=novel))

    def niho_table(self, order: int, records: Sequence[Any]) -> None:
        """Method: Niho trinomial permutations"""

        self.emit(report_templates.NIHO_TABLE.render(order=order, records=records))

    def mu_decomposition(self, **context: Any) -> None:
        """Method: mu and its omega halves"""

        self.emit(report_templates.MU_DECOMPOSITION.render(**context))

    def records_check(self, path: Path, results: Sequence[Any]) -> None:
        """Method: re-verification summary of a records file"""

        failures = [record for record, report in results if not report.is_pp]
        self.emit(
            report_templates.RECORDS_CHECK.render(path=path, total=len(results), failed=len(failures), failures=failures)
        )

    # files

    def write_jsonl(self, rows: Iterable[Dict[str, Any]], header: Optional[Dict[str, Any]] = None) -> int:
        """Method: JSON lines to self.out, returns the number of data rows"""

        if self.out is None:
            return 0
        self.out.parent.mkdir(parents=True, exist_ok=True)
        count = 0
        with open(self.out, "w", encoding="utf-8") as file:
            if header is not None:
                file.write(json.dumps(header, sort_keys=True) + "\n")
            for row in rows:
                file.write(json.dumps(row, sort_keys=True) + "\n")
                count += 1
        LOG.info("Wrote %d JSON line(s) to %s", count, self.out)
        return count

    @contextmanager
    def record_stream(self, header: Optional[Dict[str, Any]] = None) -> Iterator[Callable[[Sequence[Any]], None]]:
        """Method: sink writing search records to JSON lines and CSV batch by batch

        Both files are flushed after every batch, so an interrupted search
        leaves every finished unit on disk.
        """

        written = 0
        with ExitStack() as stack:
            handles: List[TextIO] = []
            jsonl: Optional[TextIO] = None
            writer: Optional[csv.DictWriter] = None
            if self.out is not None:
                self.out.parent.mkdir(parents=True, exist_ok=True)
                jsonl = stack.enter_context(open(self.out, "w", encoding="utf-8"))
                handles.append(jsonl)
                if header is not None:
                    jsonl.write(json.dumps(header, sort_keys=True) + "\n")
            if self.csv_path is not None:
                self.csv_path.parent.mkdir(parents=True, exist_ok=True)
                csv_file = stack.enter_context(open(self.csv_path, "w", newline="", encoding="utf-8"))
                handles.append(csv_file)
                writer = csv.DictWriter(csv_file, fieldnames=CSV_COLUMNS)
                writer.writeheader()

            def sink(records: Sequence[Any]) -> None:
                nonlocal written
                for record in records:
                    if jsonl is not None:
                        jsonl.write(json.dumps(record.to_dict(), sort_keys=True) + "\n")
                    if writer is not None:
                        writer.writerow(_csv_row(record))
                for handle in handles:
                    handle.flush()
                written += len(records)

            yield sink
        for path in (self.out, self.csv_path):
            if path is not None:
                LOG.info("Wrote %d record(s) to %s", written, path)


def _csv_row(record: Any) -> Dict[str, Any]:
    data = record.to_dict()
    data.update(data.pop("field"))
    data["modulus"] = " ".join(str(c) for c in data["modulus"])
    data["k_coset"] = " ".join(str(k) for k in data["k_coset"])
    data["family_tag"] = data["family_tag"] or ""
    return {column: data[column] for column in CSV_COLUMNS}
