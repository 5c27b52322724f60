"""Command line front end.

Exit status: 0 when every assertion holds, 1 when a counterexample or lemma
violation was found (or reproduced, for ``replay``), 2 for usage and input
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from pathlib import Path

from .audit import LEMMAS
from .campaigns import (
    JOBS_ENV,
    CampaignError,
    Source,
    default_jobs,
    replay,
    run_audit,
    run_classify,
    run_search_open,
    run_verify_remark,
    run_verify_theorem,
)
from .catalog import CatalogError, ForbiddenCatalog, canonical_name, catalog_build
from .enumeration import FILTERS, MAX_ENUM_ORDER, MIN_ORDER, generate_levels
from .graph import Graph, is_two_connected
from .graph6 import Graph6Error, graph6_decode, graph6_encode

log = logging.getLogger("domcycle")

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2

DEFAULT_RANGES = {
    "verify": (3, 8),
    "remark": (3, 8),
    "search-open": (3, 10),
    "audit": (3, 8),
    "enumerate": (3, 6),
}


class UsageError(Exception):
    pass


def _resolve_family(args, catalog: ForbiddenCatalog) -> tuple[list[str], list[Graph]]:
    if args.pair and args.family:
        raise UsageError("give either --pair or --family, not both")
    entries: list[str] = []
    if args.pair:
        entries = [p for p in args.pair.split(",") if p.strip()]
    elif args.family:
        text = Path(args.family).read_text(encoding="ascii")
        entries = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        entries = [e for e in entries if e]
    names, graphs = [], []
    for entry in entries:
        try:
            name = canonical_name(entry)
            graphs.append(catalog[name])
        except CatalogError:
            try:
                graphs.append(graph6_decode(entry))
            except Graph6Error:
                raise UsageError(f"{entry!r} is neither a catalog name nor a graph6 string") from None
            name = entry
        names.append(name)
    return names, graphs


def _source(args) -> Source:
    lo, hi = DEFAULT_RANGES.get(args.command, (3, 8))
    n_min = lo if args.n_min is None else args.n_min
    n_max = hi if args.n_max is None else args.n_max
    if args.input:
        return Source("file", path=args.input, skip_malformed=args.skip_malformed)
    count = getattr(args, "random", None)
    if count:
        return Source("random", n_min, n_max, count=count, seed=args.seed)
    return Source("enumerate", n_min, n_max)


def _csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if report.get("kind") == "audit":
        w.writerow(["lemma", "graphs_checked", "graphs_skipped", "instances", "violations"])
        for name, row in report["lemmas"].items():
            w.writerow([name, row["graphs_checked"], row["graphs_skipped"],
                        sum(row["instances"].values()), len(row["violations"])])
    elif report.get("kind") == "classify":
        v = report["verdict"]
        w.writerow(["covered", "dominated_by", "sufficient_via"])
        w.writerow([v["covered"], ";".join("+".join(m) for m in v["dominated_by"]),
                    ";".join("+".join(m) for m in v["sufficient_via"])])
    else:
        w.writerow(["order", "scanned", "passed_filters", "counterexamples"])
        for n, row in report["populations"].items():
            w.writerow([n, row["scanned"], row["passed_filters"], row["counterexamples"]])
    return buf.getvalue()


def _emit(args, report: dict) -> None:
    text = _csv(report) if args.format == "csv" else json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        log.info("report written to %s", args.output)
    else:
        sys.stdout.write(text)
    if getattr(args, "figure", None):
        from .plotting import render

        if render(report, args.figure) is None:
            log.warning("nothing to plot for a %s report", report.get("kind"))


def _run_campaign(args, catalog: ForbiddenCatalog) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    start = time.perf_counter()
    if args.command == "verify":
        names, family = _resolve_family(args, catalog)
        if not family:
            raise UsageError("verify needs --pair or --family")
        report = run_verify_theorem(names, family, _source(args), catalog, args.mode, jobs)
    elif args.command == "search-open":
        report = run_search_open(_source(args), catalog, jobs)
    elif args.command == "remark":
        report = run_verify_remark(_source(args), catalog, jobs, args.multipartite_max)
    elif args.command == "audit":
        lemmas = tuple(x for x in args.lemmas.split(",") if x) if args.lemmas else LEMMAS
        report = run_audit(lemmas, _source(args), catalog, jobs, not args.all_graphs)
    else:
        names, pair = _resolve_family(args, catalog)
        report = run_classify(names, pair, catalog)
    elapsed = time.perf_counter() - start
    log.info("%s finished in %.2f s: scanned %d, passed filters %d, counterexamples %d",
             args.command, elapsed, report.scanned, report.passed_filters, len(report.counterexamples))
    if args.timing:
        report.timing = elapsed
    out = report.to_dict()
    out["catalog_source"] = catalog.source
    _emit(args, out)
    return EXIT_OK if report.ok else EXIT_FOUND


def _run_replay(args, catalog: ForbiddenCatalog) -> int:
    try:
        saved = json.loads(Path(args.report).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.report}: not a JSON report ({exc})") from None
    results = replay(saved, catalog)
    text = json.dumps({"replayed": results}, sort_keys=True, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_FOUND if any(r["reproduced"] for r in results) else EXIT_OK


def _run_enumerate(args, catalog: ForbiddenCatalog) -> int:
    _, family = _resolve_family(args, catalog)
    lo, hi = DEFAULT_RANGES["enumerate"]
    n_min = lo if args.n_min is None else args.n_min
    n_max = hi if args.n_max is None else args.n_max
    if not MIN_ORDER <= n_min <= n_max <= MAX_ENUM_ORDER:
        raise UsageError(f"need {MIN_ORDER} <= n-min <= n-max <= {MAX_ENUM_ORDER}")
    counts: dict[int, int] = {}
    lines = []
    levels = generate_levels(n_max, args.filter != "all", family, n_min=n_min, minimal=True)
    for n, level in levels:
        if args.filter == "two_connected":
            level = [g for g in level if is_two_connected(g)]
        counts[n] = len(level)
        lines.extend(graph6_encode(g) for g in level)
        log.info("order %d: %d graphs", n, len(level))
    text = "".join(line + "\n" for line in lines)
    if args.output:
        Path(args.output).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    if args.figure:
        from .plotting import plot_counts

        plot_counts(counts, args.figure, f"{args.filter} graphs")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domcycle",
        description="Exhaustive small-graph checks for dominating cycles under forbidden pairs.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    verbose = argparse.ArgumentParser(add_help=False)
    verbose.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS)

    def common(p: argparse.ArgumentParser, family: bool = True, source: bool = True) -> None:
        if family:
            p.add_argument("--pair", help="comma-separated catalog names or graph6 strings, e.g. P5,K4-")
            p.add_argument("--family", metavar="FILE", help="file with one catalog name or graph6 string per line")
        if source:
            p.add_argument("--n-min", type=int)
            p.add_argument("--n-max", type=int)
            p.add_argument("--input", metavar="FILE", help="read graphs from a graph6 file instead of enumerating")
            p.add_argument("--skip-malformed", action="store_true", help="skip bad graph6 lines instead of failing")
            p.add_argument("--jobs", type=int, help=f"worker processes (default: ${JOBS_ENV} or 1)")
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--catalog-override", metavar="FILE")
        p.add_argument("--output", metavar="FILE")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--figure", metavar="PNG", help="also render a summary figure to this file")
        p.add_argument("--timing", action="store_true", help="add wall time to the report (breaks byte identity)")

    p = sub.add_parser("verify", parents=[verbose], help="every 2-connected family-free graph has a dominating (longest) cycle")
    common(p)
    p.add_argument("--mode", choices=("longest", "any"),
                   help="longest: some longest cycle dominates; any: some cycle dominates "
                        "(default: longest when the family allows it)")

    p = sub.add_parser("remark", parents=[verbose], help="complete multipartite and paw-free checks")
    common(p, family=False)
    p.add_argument("--multipartite-max", type=int, default=12, help="largest complete multipartite order")

    p = sub.add_parser("search-open", parents=[verbose], help="look for 2-connected {K1_3*, K3}-free graphs without dominating cycles")
    common(p, family=False)

    p = sub.add_parser("classify", parents=[verbose], help="place a pair against the seven maximal pairs")
    common(p, source=False)
    p.set_defaults(jobs=1)

    p = sub.add_parser("audit", parents=[verbose], help="run the structural lemma predicates")
    common(p, family=False)
    p.add_argument("--lemmas", help=f"comma-separated subset of {','.join(LEMMAS)}")
    p.add_argument("--random", type=int, metavar="COUNT", help="audit COUNT seeded random graphs")
    p.add_argument("--all-graphs", action="store_true", help="do not restrict to 2-connected graphs")

    p = sub.add_parser("replay", parents=[verbose], help="re-run the checks on the counterexamples of a saved report")
    p.add_argument("report")
    p.add_argument("--catalog-override", metavar="FILE")
    p.add_argument("--output", metavar="FILE")

    p = sub.add_parser("enumerate", parents=[verbose], help="write one graph6 line per isomorphism class")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--filter", choices=FILTERS, default="connected")
    p.add_argument("--pair")
    p.add_argument("--family", metavar="FILE")
    p.add_argument("--catalog-override", metavar="FILE")
    p.add_argument("--output", metavar="FILE")
    p.add_argument("--figure", metavar="PNG")
    return parser


def _configure_logging(verbosity: int) -> None:
    # a handler on the package logger, so an embedding program's root
    # configuration neither swallows nor duplicates our messages
    for h in list(log.handlers):
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.WARNING - 10 * min(verbosity, 2))
    log.propagate = False


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        catalog = catalog_build(args.catalog_override)
        if args.command == "replay":
            return _run_replay(args, catalog)
        if args.command == "enumerate":
            return _run_enumerate(args, catalog)
        return _run_campaign(args, catalog)
    except (UsageError, CampaignError, CatalogError, Graph6Error, OSError, ValueError) as exc:
        print(f"domcycle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
