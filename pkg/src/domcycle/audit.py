"""Executable versions of the structural lemmas about longest cycles.

Each audit takes one graph, checks whether the lemma's hypotheses hold, and
if so evaluates every instance of the lemma's conclusion.  The lemmas are
theorems, so a violation means a bug somewhere in this package.  Every
predicate evaluation is counted per predicate, which lets tests confirm
that nothing runs on a graph that fails its gate.

Two quantifiers are discharged exactly rather than by enumeration:

* consecutive-paths lemma: for a fixed induced ``Q1`` a violating ``Q2``
  exists iff the component of ``a`` in ``G - (Q1 - a) - N(Q1 - a)`` holds a
  vertex other than ``a`` that is not adjacent to ``a`` (a shortest path to
  it is a witness, and every ``Q2`` lives in that component);
* independent-set lemma: a longest cycle ``D`` is a counterexample for some
  admissible ``S`` iff it is one for the least candidate
  ``S = V(C) - V(D)``, so it suffices to test each longest ``D`` once.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .catalog import contains_induced, path_graph
from .cycles import (
    OrientedCycle,
    c_path_exists,
    circumference,
    cycle_stats,
    cycle_vertex_sets,
    has_dominating_longest_cycle,
    longest_cycles,
)
from .graph import Graph, bits, components, is_independent, set_neighborhood
from .graph6 import graph6_encode

P5 = path_graph(5)

LEMMAS = ("consecutive", "extension", "maximality", "framework")


@dataclass
class LemmaReport:
    lemma: str
    graphs_checked: int = 0
    graphs_skipped: int = 0
    instances: Counter = field(default_factory=Counter)
    skip_reasons: Counter = field(default_factory=Counter)
    gated: Counter = field(default_factory=Counter)
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: LemmaReport) -> LemmaReport:
        self.graphs_checked += other.graphs_checked
        self.graphs_skipped += other.graphs_skipped
        self.instances.update(other.instances)
        self.skip_reasons.update(other.skip_reasons)
        self.gated.update(other.gated)
        self.violations.extend(other.violations)
        return self

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "graphs_checked": self.graphs_checked,
            "graphs_skipped": self.graphs_skipped,
            "instances": dict(sorted(self.instances.items())),
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
            "gated_predicates": dict(sorted(self.gated.items())),
            "violations": [{"graph6": g6, "witness": w} for g6, w in self.violations],
        }


def _fmt_set(mask: int) -> str:
    return "{" + ",".join(str(v) for v in bits(mask)) + "}"


def _skip(report: LemmaReport, reason: str) -> LemmaReport:
    report.graphs_skipped += 1
    report.skip_reasons[reason] += 1
    return report


def _is_p5_free(g: Graph) -> bool:
    return not contains_induced(g, P5)


def _orientations(g: Graph, cycles: Iterable[OrientedCycle] | None = None) -> Iterator[OrientedCycle]:
    for c in longest_cycles(g) if cycles is None else cycles:
        yield c
        yield c.reversed()


# induced paths and arcs


def induced_paths_from(g: Graph, a: int, min_order: int = 3) -> Iterator[tuple[int, ...]]:
    """Induced paths with end ``a`` and at least ``min_order`` vertices."""

    def grow(path: list[int], used: int, inner_nbrs: int) -> Iterator[tuple[int, ...]]:
        if len(path) >= min_order:
            yield tuple(path)
        last = path[-1]
        # next vertex: adjacent to the last one only
        for w in bits(g.adj[last] & ~used & ~inner_nbrs):
            yield from grow(path + [w], used | 1 << w, inner_nbrs | (g.adj[last] & ~(1 << w)))

    yield from grow([a], 1 << a, 0)


def consecutive_witness(g: Graph, q1: tuple[int, ...]) -> tuple[int, ...] | None:
    """A path ``Q2`` from ``q1[0]`` breaking the consecutive-paths
    conclusion for this ``Q1``, or None."""
    a = q1[0]
    inner = 0
    for v in q1[1:]:
        inner |= 1 << v
    allowed = g.vertices & ~inner & ~set_neighborhood(g, inner, g.vertices) | 1 << a
    # BFS tree from a inside `allowed`
    prev = {a: -1}
    frontier = [a]
    seen = 1 << a
    while frontier:
        nxt = []
        for u in frontier:
            for w in bits(g.adj[u] & allowed & ~seen):
                seen |= 1 << w
                prev[w] = u
                nxt.append(w)
        frontier = nxt
    far = seen & ~g.adj[a] & ~(1 << a)
    if not far:
        return None
    w = (far & -far).bit_length() - 1
    path = []
    while w != -1:
        path.append(w)
        w = prev[w]
    return tuple(reversed(path))


def audit_consecutive(g: Graph) -> LemmaReport:
    report = LemmaReport("consecutive")
    if not _is_p5_free(g):
        return _skip(report, "not P5-free")
    report.graphs_checked += 1
    for a in range(g.n):
        for q1 in induced_paths_from(g, a):
            report.instances["induced Q1"] += 1
            q2 = consecutive_witness(g, q1)
            if q2 is not None:
                report.violations.append(
                    (graph6_encode(g), f"a={a} Q1={list(q1)} Q2={list(q2)}")
                )
    return report


def audit_extension_lemma(g: Graph, cycles: Iterable[OrientedCycle] | None = None) -> LemmaReport:
    """Arc lemma at attachment vertices not complete to H.

    ``cycles`` replaces the longest cycles (the lemma holds for any cycle);
    tests use it to feed arbitrary cycles.
    """
    report = LemmaReport("extension")
    if not _is_p5_free(g):
        return _skip(report, "not P5-free")
    length = circumference(g)
    if length < 3 or length == g.n:
        return _skip(report, "no longest cycle with vertices off it")
    report.graphs_checked += 1
    g6 = graph6_encode(g)
    for c in _orientations(g, cycles):
        cmask = c.mask
        for h in components(g, cmask):
            attach = set_neighborhood(g, h, cmask)
            for v in bits(attach):
                if not h & ~g.adj[v]:
                    continue
                # walk a = v^{+2}, v^{+3}, ... while the arc v^+ -> a misses N(H)
                arc = 1 << c.succ(v)
                if g.adj[c.succ(v)] & h:
                    continue
                for step in range(2, len(c)):
                    a = c.succ(v, step)
                    if g.adj[a] & h:
                        break
                    arc |= 1 << a
                    report.instances["arc free of N(H)"] += 1
                    if arc & ~g.adj[v]:
                        report.violations.append(
                            (g6, f"C={list(c.seq)} H={_fmt_set(h)} v={v} a={a}")
                        )
    return report


# maximality of longest cycles


def _maximality_one(g: Graph, c: OrientedCycle, h: int, record: Callable[[str, str], None]) -> None:
    cmask = c.mask
    nbr = {x: g.adj[x] & cmask for x in bits(h)}
    minus1 = {x: c.shift(m, -1) for x, m in nbr.items()}
    minus2 = {x: c.shift(m, -2) for x, m in nbr.items()}
    for x in nbr:
        for y in nbr:
            record("(1) N(x) vs N(y)^-", "")
            if nbr[x] & minus1[y]:
                record("!", f"x={x} y={y} N(x;C)&N(y;C)^-={_fmt_set(nbr[x] & minus1[y])}")
            if x != y:
                record("(1) N(x) vs N(y)^-2", "")
                if nbr[x] & minus2[y]:
                    record("!", f"x={x} y={y} N(x;C)&N(y;C)^-2={_fmt_set(nbr[x] & minus2[y])}")


def _maximality_two(
    g: Graph, c: OrientedCycle, h: int, v1: int, v2: int, record: Callable[[str, str], None]
) -> None:
    s, p = c.succ, c.pred
    edge = g.has_edge
    strong = (g.adj[v1] | g.adj[v2]) & h
    strong = strong & (strong - 1) != 0  # |N(v1;H) u N(v2;H)| >= 2
    tag = f"v1={v1} v2={v2}"

    def no_cpath(name: str, a: int, b: int) -> None:
        if a == b:
            record("!", f"{tag} {name}: endpoints coincide ({a})")
            return
        record(name, "")
        if c_path_exists(g, c, a, b):
            record("!", f"{tag} {name}: C-path between {a} and {b}")

    no_cpath("(2i) v1- v2-", p(v1), p(v2))
    no_cpath("(2i) v1+ v2+", s(v1), s(v2))
    if strong:
        no_cpath("(2i) v1- v2-2", p(v1), p(v2, 2))
        no_cpath("(2i) v1+ v2+2", s(v1), s(v2, 2))
    if edge(v1, p(v2)):
        record("(2ii) v1-v1+", "")
        if edge(p(v1), s(v1)):
            record("!", f"{tag} (2ii): v1v2- and v1-v1+ both edges")
        if strong:
            record("(2ii) v1-v1+2 / v1-2v1+", "")
            if edge(p(v1), s(v1, 2)) or edge(p(v1, 2), s(v1)):
                record("!", f"{tag} (2ii): v1-v1+2 or v1-2v1+ is an edge")
    for w in c.segment(v1, p(v2)):
        if edge(p(v1), w):
            record("(2iii) forward", "")
            if edge(s(v2), s(w)):
                record("!", f"{tag} w={w} (2iii): v1-w and v2+w+ both edges")
    for w in c.reversed().segment(v1, s(v2)):
        if edge(s(v1), w):
            record("(2iii) backward", "")
            if edge(p(v2), p(w)):
                record("!", f"{tag} w={w} (2iii): v1+w and v2-w- both edges")


def audit_maximality(g: Graph, cycles: Iterable[OrientedCycle] | None = None) -> LemmaReport:
    """Both maximality lemmas for every longest cycle and component of G - C.

    Passing ``cycles`` audits those instead; on a cycle that is not longest
    the conclusions may fail, which is how the tests check that violations
    are actually detected.
    """
    report = LemmaReport("maximality")
    length = circumference(g)
    if length < 3:
        return _skip(report, "acyclic")
    if length == g.n:
        return _skip(report, "hamiltonian")
    report.graphs_checked += 1
    g6 = graph6_encode(g)
    for c in _orientations(g, cycles):
        cmask = c.mask
        for h in components(g, cmask):
            where = f"C={list(c.seq)} H={_fmt_set(h)}"

            def record(name: str, msg: str) -> None:
                if name == "!":
                    report.violations.append((g6, f"{where} {msg}"))
                else:
                    report.instances[name] += 1

            _maximality_one(g, c, h, record)
            attach = list(bits(set_neighborhood(g, h, cmask)))
            for v1 in attach:
                for v2 in attach:
                    if v1 != v2:
                        _maximality_two(g, c, h, v1, v2, record)
    return report


# non-dominating longest cycles


def extremal_cycles(g: Graph) -> list[tuple[OrientedCycle, int, int]]:
    """All longest cycles minimising (mu, omega), with their stats."""
    scored = [(cycle_stats(g, c), c) for c in longest_cycles(g)]
    if not scored:
        return []
    best = min((st.mu, st.omega) for st, _ in scored)
    return [(c, st.mu, st.omega) for st, c in scored if (st.mu, st.omega) == best]


def audit_nondominating_framework(g: Graph) -> LemmaReport:
    report = LemmaReport("framework")
    length = circumference(g)
    if length < 3:
        return _skip(report, "acyclic")
    if has_dominating_longest_cycle(g):
        return _skip(report, "some longest cycle is dominating")
    report.graphs_checked += 1
    p5_free = _is_p5_free(g)
    if not p5_free:
        report.gated["(b),(c): not P5-free"] += 1
    g6 = graph6_encode(g)
    full = g.vertices
    longest_sets = cycle_vertex_sets(g, length)
    for c, mu, _ in extremal_cycles(g):
        cmask = c.mask
        off = full & ~cmask
        for h in components(g, cmask):
            if h.bit_count() != mu:
                continue
            where = f"C={list(c.seq)} H={_fmt_set(h)}"
            # (a) no longest D through H covering V(C) minus an admissible S
            for dmask in longest_sets:
                if not dmask & h:
                    continue
                report.instances["(a) longest D meeting H"] += 1
                s = cmask & ~dmask
                if is_independent(g, s) and not set_neighborhood(g, s, off):
                    report.violations.append(
                        (g6, f"{where} (a): D on {_fmt_set(dmask)} with S={_fmt_set(s)}")
                    )
            if not p5_free:
                continue
            for oc in (c, c.reversed()):
                attach = set_neighborhood(g, h, cmask)
                report.instances["(b) N(H;C) vs N(H;C)^-2"] += 1
                clash = attach & oc.shift(attach, -2)
                if clash:
                    report.violations.append(
                        (g6, f"C={list(oc.seq)} H={_fmt_set(h)} (b): {_fmt_set(clash)}")
                    )
                for v1 in bits(attach):
                    for v2 in bits(attach):
                        if v1 == v2:
                            continue
                        union = (g.adj[v1] | g.adj[v2]) & h
                        if union.bit_count() < 2:
                            continue
                        tag = f"C={list(oc.seq)} H={_fmt_set(h)} v1={v1} v2={v2}"
                        report.instances["(c-i) v1-2 v2-2"] += 1
                        if g.has_edge(oc.pred(v1, 2), oc.pred(v2, 2)):
                            report.violations.append((g6, f"{tag} (c-i)"))
                        if h & ~g.adj[v1] and g.has_edge(v1, oc.pred(v2)):
                            report.instances["(c-ii) v1-2 v1+2"] += 1
                            if g.has_edge(oc.pred(v1, 2), oc.succ(v1, 2)):
                                report.violations.append((g6, f"{tag} (c-ii)"))
    return report


AUDITS: dict[str, Callable[[Graph], LemmaReport]] = {
    "consecutive": audit_consecutive,
    "extension": audit_extension_lemma,
    "maximality": audit_maximality,
    "framework": audit_nondominating_framework,
}


def run_audits(g: Graph, lemmas: tuple[str, ...] = LEMMAS) -> dict[str, LemmaReport]:
    return {name: AUDITS[name](g) for name in lemmas}
