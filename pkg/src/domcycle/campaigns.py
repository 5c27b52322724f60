"""Verification campaigns: sources, per-graph checks, ordered fan-out, reports.

A campaign streams graphs from a source, filters them, runs one check per
graph and folds the results into a :class:`VerificationReport`.  Checks are
module-level functions of one graph so they can be shipped to worker
processes; results are merged in input order, so the report does not depend
on the number of jobs.
"""

from __future__ import annotations

import logging
import multiprocessing
import os
import random
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Iterator, Sequence

from . import __version__
from .audit import AUDITS, LEMMAS, LemmaReport
from .catalog import (
    LONGEST_PAIRS,
    ForbiddenCatalog,
    classify_pair,
    contains_induced,
    family_leq,
    is_family_free,
)
from .cycles import (
    circumference,
    has_dominating_cycle,
    has_dominating_longest_cycle,
    longest_cycles,
)
from .enumeration import MAX_ENUM_ORDER, generate_levels
from .graph import (
    Graph,
    bits,
    complete_multipartite,
    has_triangle,
    is_complete_multipartite,
    is_connected,
    is_two_connected,
)
from .graph6 import graph6_decode, graph6_encode, read_stream

log = logging.getLogger(__name__)

JOBS_ENV = "DOMCYCLE_JOBS"
KINDS = ("verify-theorem", "verify-remark", "classify", "audit", "search-open")
MODES = ("longest", "any")
OPEN_PAIR = ("K1_3*", "K3")
REMARK_PAW = "Z1"
MULTIPARTITE_MAX_ORDER = 12

FINITE_CAVEAT = (
    "Finite check only: a pass covers the orders examined and nothing larger, "
    "so this run cannot tell a family that works at every order from one that "
    "works only above some threshold order."
)
OPEN_CAVEAT = (
    "An empty violator list is consistent with the conjectured pair but is not a proof of it."
)
CLASSIFY_CAVEAT = (
    "Classification by the family order only; the necessity threshold order is "
    "not computed and nothing here is verified on graphs."
)


class CampaignError(ValueError):
    """Bad campaign configuration (maps to a usage error on the CLI)."""


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise CampaignError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None
    return max(jobs, 1)


# ---------------------------------------------------------------- sources


@dataclass(frozen=True)
class Source:
    """Where graphs come from: ``enumerate`` an order range, a graph6 ``file``,
    or ``random`` graphs drawn from a seeded generator."""

    kind: str = "enumerate"
    n_min: int = 3
    n_max: int = 8
    path: str | None = None
    count: int = 0
    seed: int = 0
    skip_malformed: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("enumerate", "file", "random"):
            raise CampaignError(f"unknown source kind {self.kind!r}")
        if self.kind == "file" and not self.path:
            raise CampaignError("file source needs a path")
        if self.kind != "file":
            if not 1 <= self.n_min <= self.n_max:
                raise CampaignError("need 1 <= n-min <= n-max")
        if self.kind == "enumerate" and self.n_max > MAX_ENUM_ORDER:
            raise CampaignError(f"built-in enumeration stops at n = {MAX_ENUM_ORDER}")
        if self.kind == "random" and self.count < 0:
            raise CampaignError("random source needs a non-negative count")

    def echo(self) -> dict:
        if self.kind == "file":
            return {"kind": "file", "path": os.path.basename(self.path or "")}
        out = {"kind": self.kind, "n_min": self.n_min, "n_max": self.n_max}
        if self.kind == "random":
            out.update(count=self.count, seed=self.seed)
        return out


def random_graph(rng: random.Random, n_min: int, n_max: int) -> Graph:
    """G(n, p) with n and p themselves drawn from ``rng``."""
    n = rng.randint(n_min, n_max)
    p = rng.uniform(0.2, 0.6)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def iter_source(source: Source, forbidden: Sequence[Graph] = (), connected: bool = True) -> Iterator[Graph]:
    """Graphs of the source.  For ``enumerate`` the generator only ever
    builds connected members of the hereditary class, so filtering by the
    family again downstream is harmless but redundant."""
    if source.kind == "enumerate":
        for _, reps in generate_levels(source.n_max, connected, forbidden, n_min=source.n_min):
            yield from reps
    elif source.kind == "file":
        diagnostics: list[str] = []
        for rec in read_stream(source.path, skip_malformed=source.skip_malformed, diagnostics=diagnostics):
            yield rec.graph
    else:
        rng = random.Random(source.seed)
        for _ in range(source.count):
            yield random_graph(rng, source.n_min, source.n_max)


def fan_out(func: Callable, items: Iterable, jobs: int = 1, chunksize: int = 64) -> Iterator:
    """``map(func, items)`` over ``jobs`` processes, results in input order."""
    if jobs <= 1:
        yield from map(func, items)
        return
    ctx = multiprocessing.get_context("fork" if "fork" in multiprocessing.get_all_start_methods() else None)
    with ctx.Pool(jobs) as pool:
        yield from pool.imap(func, items, chunksize=chunksize)


# ---------------------------------------------------------------- reports


@dataclass
class VerificationReport:
    kind: str
    campaign: dict
    catalog_fingerprint: str
    scanned: int = 0
    passed_filters: int = 0
    populations: dict[int, dict[str, int]] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    timing: float | None = None

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def count(self, n: int, passed: bool, failed: bool = False) -> None:
        row = self.populations.setdefault(n, {"scanned": 0, "passed_filters": 0, "counterexamples": 0})
        row["scanned"] += 1
        self.scanned += 1
        if passed:
            row["passed_filters"] += 1
            self.passed_filters += 1
        if failed:
            row["counterexamples"] += 1

    def to_dict(self) -> dict:
        out = {
            "tool": {"name": "domcycle", "version": __version__},
            "kind": self.kind,
            "campaign": self.campaign,
            "catalog_fingerprint": self.catalog_fingerprint,
            "scanned": self.scanned,
            "passed_filters": self.passed_filters,
            "populations": {str(n): row for n, row in sorted(self.populations.items())},
            "counterexamples": self.counterexamples,
            "status": "pass" if self.ok else "fail",
            "caveats": self.caveats,
        }
        out.update(self.extra)
        if self.timing is not None:
            out["timing_seconds"] = round(self.timing, 3)
        return out


def _family_echo(names: Sequence[str], family: Sequence[Graph]) -> list[dict]:
    return [{"name": nm, "graph6": graph6_encode(h)} for nm, h in zip(names, family)]


def _counterexample(index: int, g: Graph, diagnosis: str, **more) -> dict:
    return {"index": index, "order": g.n, "graph6": graph6_encode(g), "diagnosis": diagnosis, **more}


# ---------------------------------------------------------------- per-graph checks


def diagnose_no_dominating(g: Graph, longest_only: bool) -> str:
    """Human-readable reason why no (longest) cycle is dominating."""
    length = circumference(g)
    if length < 3:
        return "acyclic"
    if longest_only:
        c = next(longest_cycles(g))
        off = g.vertices & ~c.mask
        u = next(v for v in bits(off) if g.adj[v] & off)
        w = next(bits(g.adj[u] & off))
        return (
            f"circumference {length}; no longest cycle is dominating, "
            f"e.g. C={list(c.seq)} misses edge {min(u, w)}-{max(u, w)}"
        )
    return f"circumference {length}; no cycle of any length is dominating"


def check_dominating(family: Sequence[Graph], mode: str, g: Graph) -> tuple[bool, str | None]:
    """(passes filters, diagnosis if it is a counterexample)."""
    if not is_two_connected(g) or not is_family_free(g, family):
        return False, None
    if mode == "longest":
        ok = has_dominating_longest_cycle(g)
    else:
        ok = has_dominating_cycle(g)
    return True, None if ok else diagnose_no_dominating(g, mode == "longest")


def check_paw_free(paw: Graph, g: Graph) -> tuple[bool, str | None]:
    if not is_connected(g) or not has_triangle(g) or contains_induced(g, paw):
        return False, None
    if is_complete_multipartite(g):
        return True, None
    return True, "connected, paw-free, has a triangle, but non-adjacency is not transitive"


def check_audit(lemmas: Sequence[str], g: Graph) -> dict[str, LemmaReport]:
    return {name: AUDITS[name](g) for name in lemmas}


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples, in reverse lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


# ---------------------------------------------------------------- campaigns


def resolve_mode(names: Sequence[str], family: Sequence[Graph], catalog: ForbiddenCatalog, mode: str | None) -> str:
    """Longest-cycle mode is only meaningful below a pair for which the
    dominating longest cycle is guaranteed."""
    longest_ok = any(family_leq(family, catalog.family(p)) for p in LONGEST_PAIRS)
    if mode is None:
        return "longest" if longest_ok else "any"
    if mode not in MODES:
        raise CampaignError(f"mode must be one of {MODES}")
    if mode == "longest" and not longest_ok:
        raise CampaignError(
            "mode 'longest' needs a family below {P5, W*} or {P5, K4-}; "
            f"{{{', '.join(names)}}} is not"
        )
    return mode


def run_verify_theorem(
    names: Sequence[str],
    family: Sequence[Graph],
    source: Source,
    catalog: ForbiddenCatalog,
    mode: str | None = None,
    jobs: int = 1,
    kind: str = "verify-theorem",
) -> VerificationReport:
    mode = resolve_mode(names, family, catalog, mode) if kind == "verify-theorem" else "any"
    report = VerificationReport(
        kind,
        {"family": _family_echo(names, family), "mode": mode, "source": source.echo()},
        catalog.fingerprint(),
        caveats=[FINITE_CAVEAT],
    )
    graphs = iter_source(source, family)
    check = partial(_indexed, partial(check_dominating, tuple(family), mode))
    for (i, g), (passed, diagnosis) in _zip_indexed(graphs, check, jobs):
        report.count(g.n, passed, diagnosis is not None)
        if diagnosis is not None:
            report.counterexamples.append(_counterexample(i, g, diagnosis))
    return report


def run_search_open(source: Source, catalog: ForbiddenCatalog, jobs: int = 1) -> VerificationReport:
    family = catalog.family(OPEN_PAIR)
    report = run_verify_theorem(OPEN_PAIR, family, source, catalog, "any", jobs, kind="search-open")
    report.caveats.append(OPEN_CAVEAT)
    report.extra["violators"] = [c["graph6"] for c in report.counterexamples]
    return report


def run_verify_remark(
    source: Source, catalog: ForbiddenCatalog, jobs: int = 1, max_parts_order: int = MULTIPARTITE_MAX_ORDER
) -> VerificationReport:
    """(a) complete multipartite graphs up to ``max_parts_order`` vertices that
    are 2-connected with a triangle have a dominating cycle; (b) connected
    paw-free graphs with a triangle are complete multipartite."""
    paw = catalog[REMARK_PAW]
    report = VerificationReport(
        "verify-remark",
        {"multipartite_max_order": max_parts_order, "source": source.echo()},
        catalog.fingerprint(),
        caveats=[FINITE_CAVEAT],
    )
    shapes = [p for n in range(1, max_parts_order + 1) for p in partitions(n)]
    graphs = [complete_multipartite(p) for p in shapes]
    part_a = {"shapes": 0, "passed_filters": 0, "failures": 0}
    results = fan_out(_multipartite_check, graphs, jobs, chunksize=4)
    for shape, g, (passed, ok) in zip(shapes, graphs, results):
        part_a["shapes"] += 1
        if passed:
            part_a["passed_filters"] += 1
            if not ok:
                part_a["failures"] += 1
                report.counterexamples.append(
                    _counterexample(len(report.counterexamples), g, f"K{shape}: no dominating cycle", subcheck="a")
                )
    report.extra["multipartite"] = part_a
    check = partial(_indexed, partial(check_paw_free, paw))
    for (i, g), (passed, diagnosis) in _zip_indexed(iter_source(source, [paw]), check, jobs):
        report.count(g.n, passed, diagnosis is not None)
        if diagnosis is not None:
            report.counterexamples.append(_counterexample(i, g, diagnosis, subcheck="b"))
    return report


def _multipartite_check(g: Graph) -> tuple[bool, bool]:
    if not is_two_connected(g) or not has_triangle(g):
        return False, True
    return True, has_dominating_cycle(g)


def run_classify(names: Sequence[str], pair: Sequence[Graph], catalog: ForbiddenCatalog) -> VerificationReport:
    if len(pair) != 2:
        raise CampaignError("classify takes exactly two graphs")
    verdict = classify_pair((pair[0], pair[1]), catalog)
    report = VerificationReport(
        "classify",
        {"family": _family_echo(names, pair)},
        catalog.fingerprint(),
        caveats=[CLASSIFY_CAVEAT],
    )
    report.extra["verdict"] = {
        "covered": verdict.covered,
        "dominated_by": [list(m) for m in verdict.dominated_by],
        "sufficient_via": [list(m) for m in verdict.sufficient_via],
        "explanation": verdict.explain(tuple(names)),
    }
    return report


def run_audit(
    lemmas: Sequence[str], source: Source, catalog: ForbiddenCatalog, jobs: int = 1, two_connected: bool = True
) -> VerificationReport:
    for name in lemmas:
        if name not in AUDITS:
            raise CampaignError(f"unknown lemma {name!r}; choose from {', '.join(LEMMAS)}")
    report = VerificationReport(
        "audit",
        {"lemmas": list(lemmas), "two_connected_only": two_connected, "source": source.echo()},
        catalog.fingerprint(),
    )
    merged = {name: LemmaReport(name) for name in lemmas}
    check = partial(_indexed, partial(_audit_if, tuple(lemmas), two_connected))
    for (i, g), reports in _zip_indexed(iter_source(source, connected=source.kind == "enumerate"), check, jobs):
        violated = bool(reports) and any(r.violations for r in reports.values())
        report.count(g.n, bool(reports), violated)
        for name, r in reports.items():
            merged[name].merge(r)
            for _, witness in r.violations:
                report.counterexamples.append(_counterexample(i, g, witness, lemma=name))
    report.extra["lemmas"] = {name: r.to_dict() for name, r in merged.items()}
    return report


def _audit_if(lemmas: Sequence[str], two_connected: bool, g: Graph) -> dict[str, LemmaReport]:
    if two_connected and not is_two_connected(g):
        return {}
    return check_audit(lemmas, g)


def _indexed(func: Callable, item: tuple[int, Graph]):
    return func(item[1])


def _zip_indexed(graphs: Iterable[Graph], check: Callable, jobs: int) -> Iterator[tuple[tuple[int, Graph], object]]:
    items = list(enumerate(graphs)) if jobs > 1 else enumerate(graphs)
    if jobs > 1:
        yield from zip(items, fan_out(check, items, jobs))
    else:
        for item in items:
            yield item, check(item)


# ---------------------------------------------------------------- replay


def replay(report: dict, catalog: ForbiddenCatalog) -> list[dict]:
    """Re-run the campaign's check on every counterexample of a saved report.

    Returns one entry per counterexample with ``reproduced`` set when the
    graph fails again.  Family members are decoded from the report itself,
    so a replay does not depend on the current catalog.
    """
    kind = report.get("kind")
    campaign = report.get("campaign", {})
    out = []
    for ce in report.get("counterexamples", []):
        g = graph6_decode(ce["graph6"])
        if kind in ("verify-theorem", "search-open"):
            family = [graph6_decode(m["graph6"]) for m in campaign["family"]]
            _, diagnosis = check_dominating(family, campaign.get("mode", "any"), g)
            failed = diagnosis is not None
        elif kind == "verify-remark":
            if ce.get("subcheck") == "a":
                passed, ok = _multipartite_check(g)
                failed = passed and not ok
            else:
                _, diagnosis = check_paw_free(catalog[REMARK_PAW], g)
                failed = diagnosis is not None
        elif kind == "audit":
            failed = bool(AUDITS[ce["lemma"]](g).violations)
        else:
            raise CampaignError(f"cannot replay a {kind!r} report")
        out.append({"graph6": ce["graph6"], "reproduced": failed})
    return out

