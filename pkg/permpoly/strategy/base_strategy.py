"""Module: Base Search

A search is a list of independent work units run either serially or on a
process pool. Results come back in work-unit order whatever the worker count,
so the merged record stream is deterministic.
"""

import logging
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence

from permpoly.config import SearchConfig
from permpoly.utils import log_counts, stopwatch

LOG = logging.getLogger(__name__)


class BaseSearch(ABC):
    """Class: Base Search"""

    name = "search"

    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        self.counts: Dict[str, int] = {}

    @abstractmethod
    def work_units(self) -> List[Any]:
        """Method: picklable unit descriptions in canonical order"""

        raise NotImplementedError()

    @abstractmethod
    def unit_runner(self) -> Callable[[Any, Dict[str, Any]], List[Any]]:
        """Method: module-level function (unit, options) -> records"""

        raise NotImplementedError()

    def unit_options(self) -> Dict[str, Any]:
        """Method: options passed to every unit runner call"""

        return {"early_abort": self.cfg.early_abort, "prefilter": self.cfg.prefilter}

    def iter_batches(self, units: Sequence[Any]) -> Iterator[List[Any]]:
        """Method: each unit's records as soon as that unit and all before it are done"""

        runner = self.unit_runner()
        options = self.unit_options()
        if self.cfg.jobs > 1 and len(units) > 1:
            LOG.info("Running %d %s unit(s) on %d worker(s)", len(units), self.name, self.cfg.jobs)
            with ProcessPoolExecutor(max_workers=self.cfg.jobs) as executor:
                yield from executor.map(runner, units, repeat(options))
            return
        LOG.info("Running %d %s unit(s) serially", len(units), self.name)
        for unit in units:
            yield runner(unit, options)

    def run(self, sink: Optional[Callable[[List[Any]], None]] = None) -> List[Any]:
        """Method: every unit's records, concatenated in unit order

        sink, when given, receives each unit's batch in that same order while
        the search is still running.
        """

        units = self.work_units()
        records: List[Any] = []
        with stopwatch() as timing:
            for batch in self.iter_batches(units):
                if sink is not None:
                    sink(batch)
                records.extend(batch)
        self.counts.update({"units": len(units), "records": len(records)})
        log_counts(self.name, self.counts)
        LOG.info("%s finished in %.1f s", self.name, timing["ms"] / 1000.0)
        return records
