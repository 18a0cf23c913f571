"""Module: This is main module that activates library"""

import argparse
import logging
from pathlib import Path
from typing import List, Optional

import coloredlogs

from permpoly.config import SearchConfig
from permpoly.engine.lemma_suite import SUITES, default_suite, run_lemma_suite
from permpoly.engine.perm_check import is_permutation, permutes_subset
from permpoly.exceptions import HypothesisError, InversionError, PoleError
from permpoly.families.conjectures import CONJ_PRIME, conj1_map, conj2_map
from permpoly.families.known_examples import EXAMPLES, ExampleId, example_map
from permpoly.families.trace_family import trace_family
from permpoly.fields.galois_field import field_new
from permpoly.generators.report_generator import ReportGenerator, SubVerdict
from permpoly.strategy.niho_search import NIHO_PRIME, search_niho
from permpoly.strategy.trace_search import header_line, reverify_records, search_trace_pps
from permpoly.views.subgroup_view import check_partition, mu_view, omega_split

LOG = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    """Function: argument parser with verify / search / decompose command groups"""

    formatter = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(prog="permpoly", formatter_class=formatter)
    parser.add_argument("-v", "--verbose", help="verbose", required=False, action="store_true", default=False)
    commands = parser.add_subparsers(dest="command", required=True)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", help="path of a JSON-lines report", required=False, type=Path, default=None)

    verify = commands.add_parser("verify", help="verify a permutation claim", formatter_class=formatter)
    targets = verify.add_subparsers(dest="target", required=True)
    for name, parity in (("conj1", "odd"), ("conj2", "even")):
        target = targets.add_parser(name, parents=[output], formatter_class=formatter)
        target.add_argument("--k", help=f"extension degree k ({parity})", required=True, type=int)
        target.add_argument("--force", help="bypass the parity hypothesis", action="store_true", default=False)
    target = targets.add_parser("trace", parents=[output], formatter_class=formatter)
    target.add_argument("--r", help="q = 3^r, r >= 2", required=True, type=int)
    target = targets.add_parser("example", parents=[output], formatter_class=formatter)
    target.add_argument("--id", help="example id", required=True, choices=[e.value for e in ExampleId])
    target = targets.add_parser("lemmas", parents=[output], formatter_class=formatter)
    parameter = target.add_mutually_exclusive_group(required=True)
    parameter.add_argument("--k", help="k of the conjecture suites", type=int)
    parameter.add_argument("--r", help="r of the trace-family suite", type=int)
    target.add_argument("--suite", help="suite to run, inferred when omitted", choices=SUITES, default=None)
    target = targets.add_parser("records", formatter_class=formatter)
    target.add_argument("--input", help="JSON-lines search output", required=True, type=Path)

    search = commands.add_parser("search", help="exhaustive searches", formatter_class=formatter)
    kinds = search.add_subparsers(dest="target", required=True)
    target = kinds.add_parser("trace", parents=[output], formatter_class=formatter)
    target.add_argument("--max-order", help="largest q^n searched", type=int, default=None)
    target.add_argument("--jobs", help="worker processes", type=int, default=None)
    target.add_argument("--csv", help="path of a CSV export", type=Path, default=None)
    target.add_argument("--config", help="YAML search config", type=Path, default=None)
    target.add_argument(
        "--fields", help="restrict to p,j,n triples, e.g. 3,2,2", nargs="+", type=_field_triple, default=None
    )
    target.add_argument(
        "--no-early-abort", help="full evaluation, no prefilter", dest="early_abort", action="store_false", default=None
    )
    target = kinds.add_parser("niho", parents=[output], formatter_class=formatter)
    target.add_argument("--k", help="field F_5^(2k)", required=True, type=int)
    target.add_argument("--jobs", help="worker processes", type=int, default=None)

    decompose = commands.add_parser("decompose", help="show subgroup decompositions", formatter_class=formatter)
    shapes = decompose.add_subparsers(dest="target", required=True)
    target = shapes.add_parser("mu", formatter_class=formatter)
    target.add_argument("--k", help="q = 5^k", required=True, type=int)
    return parser


def _field_triple(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected p,j,n, got {text!r}")
    try:
        return tuple(int(part) for part in parts)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from error


def _exit_code(passed: bool) -> int:
    return EXIT_PASS if passed else EXIT_FAIL


def verify_conj1(args, generator: ReportGenerator) -> int:
    fmap = conj1_map(args.k, force=args.force)
    report = is_permutation(fmap, fmap.field)
    generator.verdict(f"f(x) = x((x^2-x+2)/(x^2+x+2))^2, k={args.k}", f"F_{fmap.field.order}", report)
    generator.write_jsonl([report.to_dict()])
    return _exit_code(report.is_pp)


def verify_conj2(args, generator: ReportGenerator) -> int:
    gmap, mu = conj2_map(args.k, force=args.force)
    report = permutes_subset(gmap, mu)
    generator.verdict(
        f"g(x) = -x((x^2-2)/(x^2+2))^2, k={args.k}", f"mu_{len(mu)} in F_{mu.ctx.order}", report
    )
    generator.write_jsonl([report.to_dict()])
    return _exit_code(report.is_pp)


def verify_trace(args, generator: ReportGenerator) -> int:
    rows = [SubVerdict(f"gamma={tmap.gamma}", is_permutation(tmap, tmap.field)) for tmap in trace_family(args.r)]
    generator.sub_verdicts(f"x + gamma*Tr(x^k), q = 3^{args.r}", rows)
    generator.write_jsonl(row.report.to_dict() for row in rows)
    return _exit_code(bool(rows) and all(row.is_pp for row in rows))


def verify_example(args, generator: ReportGenerator) -> int:
    example = EXAMPLES[ExampleId(args.id)]
    rows = [
        SubVerdict(f"k={tmap.k} gamma={tmap.gamma}", is_permutation(tmap, tmap.field))
        for tmap in example_map(example.example_id)
    ]
    generator.sub_verdicts(f"Example {example.example_id.value}: q={example.q} n={example.n}, {example.condition}", rows)
    generator.write_jsonl(row.report.to_dict() for row in rows)
    return _exit_code(bool(rows) and all(row.is_pp for row in rows))


def verify_lemmas(args, generator: ReportGenerator) -> int:
    suite = args.suite or default_suite(args.k, args.r)
    parameter = args.r if suite == "trace" else args.k
    if parameter is None:
        raise HypothesisError(f"suite {suite} needs --{'r' if suite == 'trace' else 'k'}")
    report = run_lemma_suite(suite, parameter)
    generator.lemma_table(report)
    generator.write_jsonl([report.to_dict()])
    return _exit_code(report.passed)


def verify_records(args, generator: ReportGenerator) -> int:
    results = reverify_records(args.input)
    generator.records_check(args.input, results)
    return _exit_code(all(report.is_pp for _, report in results))


def search_trace(args, generator: ReportGenerator) -> int:
    cfg = SearchConfig.from_yaml(args.config) if args.config else SearchConfig()
    cfg = cfg.merged(
        {
            "max_order": args.max_order,
            "jobs": args.jobs,
            "out": args.out,
            "csv": args.csv,
            "fields": args.fields,
            "early_abort": args.early_abort,
        }
    )
    LOG.debug("Search config: %s", cfg)
    generator.out, generator.csv_path = cfg.out, cfg.csv
    with generator.record_stream(header=header_line(cfg)) as sink:
        records = search_trace_pps(cfg, sink=sink)
    generator.search_table(records)
    return EXIT_PASS


def search_niho_command(args, generator: ReportGenerator) -> int:
    cfg = SearchConfig().merged({"jobs": args.jobs})
    records = search_niho(args.k, cfg)
    generator.niho_table(NIHO_PRIME ** (2 * args.k), records)
    generator.write_jsonl(record.to_dict() for record in records)
    return EXIT_PASS


def decompose_mu(args, generator: ReportGenerator) -> int:
    if args.k < 1:
        raise HypothesisError(f"k must be positive, got {args.k}")
    q = CONJ_PRIME ** args.k
    mu = mu_view(field_new(CONJ_PRIME, 2 * args.k), q)
    plus, minus = omega_split(mu)
    partition = check_partition((plus, minus), mu)
    generator.mu_decomposition(
        q=q,
        order=mu.ctx.order,
        mu=list(mu.elements),
        plus=list(plus.elements),
        minus=list(minus.elements),
        partition=partition,
    )
    if not partition.ok:
        LOG.warning("Omega-plus and omega-minus do not partition mu_%d for k=%d", q + 1, args.k)
    return _exit_code(partition.ok)


COMMANDS = {
    ("verify", "conj1"): verify_conj1,
    ("verify", "conj2"): verify_conj2,
    ("verify", "trace"): verify_trace,
    ("verify", "example"): verify_example,
    ("verify", "lemmas"): verify_lemmas,
    ("verify", "records"): verify_records,
    ("search", "trace"): search_trace,
    ("search", "niho"): search_niho_command,
    ("decompose", "mu"): decompose_mu,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Launching function"""

    args = build_parser().parse_args(argv)
    if args.verbose:
        loglevel = "DEBUG"
    else:
        loglevel = "INFO"
    coloredlogs.install(level=loglevel, fmt="%(asctime)s [%(levelname)s] %(filename)s: %(message)s")
    LOG.debug("Command line args: %s", args)

    generator = ReportGenerator(out=getattr(args, "out", None))
    command = COMMANDS[(args.command, args.target)]
    try:
        return command(args, generator)
    except HypothesisError as error:
        LOG.error("Hypothesis violated: %s", error)
        return EXIT_USAGE
    except (PoleError, InversionError) as error:
        LOG.error("Verification failed: %s", error)
        return EXIT_FAIL
    except ValueError as error:
        LOG.error("Invalid request: %s", error)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
