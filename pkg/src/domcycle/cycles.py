"""Longest cycles, dominating cycles and the extremal-cycle choice.

Everything here is exact.  For each start vertex ``s`` a bitmask dynamic
program records, for every set ``M`` of vertices above ``s``, which vertices
can end an ``s``-path covering exactly ``M``.  A cycle lives on
``{s} | M`` iff some such end is adjacent to ``s``.  This yields every cycle
vertex set of the graph in ``O(2^n n)`` word operations; concrete cycles are
recovered by walking the table backwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

from .graph import Graph, bits, components, is_independent, vset

CYCLE_ORDER_LIMIT = 20


class CycleError(ValueError):
    pass


@dataclass(frozen=True)
class OrientedCycle:
    """A cycle with a fixed orientation, given as its vertex sequence."""

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.seq) < 3 or len(set(self.seq)) != len(self.seq):
            raise CycleError(f"not a cycle sequence: {self.seq}")

    @cached_property
    def _index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.seq)}

    def __len__(self) -> int:
        return len(self.seq)

    def __contains__(self, v: int) -> bool:
        return v in self._index

    @property
    def mask(self) -> int:
        return vset(self.seq)

    def succ(self, v: int, h: int = 1) -> int:
        """v^{+h}"""
        return self.seq[(self._index[v] + h) % len(self.seq)]

    def pred(self, v: int, h: int = 1) -> int:
        """v^{-h}"""
        return self.seq[(self._index[v] - h) % len(self.seq)]

    def shift(self, x: int, h: int) -> int:
        """X^{+h} for a vertex set X contained in the cycle (negative h for X^{-h})."""
        return vset(self.succ(v, h) for v in bits(x))

    def segment(self, u: int, v: int) -> list[int]:
        """Vertices of u C-> v, following the orientation."""
        i, j = self._index[u], self._index[v]
        k = len(self.seq)
        return [self.seq[(i + t) % k] for t in range((j - i) % k + 1)]

    def reversed(self) -> OrientedCycle:
        return OrientedCycle((self.seq[0],) + tuple(reversed(self.seq[1:])))

    def is_valid_in(self, g: Graph) -> bool:
        k = len(self.seq)
        return all(
            0 <= v < g.n and g.has_edge(v, self.seq[(i + 1) % k]) for i, v in enumerate(self.seq)
        )


def canonical_cycle(seq: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    """Least rotation/reflection, starting at the least vertex."""
    k = len(seq)
    i = min(range(k), key=seq.__getitem__)
    fwd = tuple(seq[(i + t) % k] for t in range(k))
    rev = (fwd[0],) + fwd[:0:-1]
    return min(fwd, rev)


@dataclass(frozen=True)
class CycleStats:
    mu: int
    omega: int


class _CycleTable:
    """Per-graph DP tables, built once and cached."""

    def __init__(self, g: Graph) -> None:
        if g.n > CYCLE_ORDER_LIMIT:
            raise CycleError(f"exact cycle search is limited to {CYCLE_ORDER_LIMIT} vertices")
        self.g = g
        self.tables: list[list[int]] = []
        sets: list[int] = []
        adj = g.adj
        full = g.vertices
        for s in range(g.n):
            shift = s + 1
            upper = full & ~((1 << shift) - 1)
            dp = [0] * (1 << (g.n - shift))
            back = adj[s]
            for v in bits(back & upper):
                dp[1 << (v - shift)] |= 1 << v
            for idx in range(1, len(dp)):
                ends = dp[idx]
                if not ends:
                    continue
                mask = idx << shift
                if ends & back and idx & (idx - 1):
                    sets.append(mask | 1 << s)
                free = upper & ~mask
                while ends:
                    low = ends & -ends
                    ends ^= low
                    ext = adj[low.bit_length() - 1] & free
                    while ext:
                        ub = ext & -ext
                        ext ^= ub
                        dp[(mask | ub) >> shift] |= ub
            self.tables.append(dp)
        self.cycle_sets = sets
        self.circumference = max((m.bit_count() for m in sets), default=0)

    def sets_of_length(self, length: int) -> list[int]:
        return sorted(m for m in self.cycle_sets if m.bit_count() == length)

    def cycles_on(self, cmask: int) -> list[tuple[int, ...]]:
        """All cycles with vertex set exactly ``cmask``, in canonical form."""
        s = (cmask & -cmask).bit_length() - 1
        shift = s + 1
        dp = self.tables[s]
        adj = self.g.adj
        out = []

        def walk(rest: int, end: int, tail: list[int]) -> None:
            # tail holds the path from `end` onwards, reversed order
            tail.append(end)
            rest_wo = rest & ~(1 << end)
            if not rest_wo:
                seq = (s,) + tuple(reversed(tail))
                if seq[1] < seq[-1]:
                    out.append(seq)
            else:
                for u in bits(dp[rest_wo >> shift] & adj[end]):
                    walk(rest_wo, u, tail)
            tail.pop()

        rest = cmask & ~(1 << s)
        for end in bits(dp[rest >> shift] & adj[s]):
            walk(rest, end, [])
        return sorted(out)


@lru_cache(maxsize=64)
def _table(g: Graph) -> _CycleTable:
    return _CycleTable(g)


def circumference(g: Graph) -> int:
    """Length of a longest cycle, 0 for forests."""
    return _table(g).circumference


def cycle_vertex_sets(g: Graph, length: int | None = None) -> list[int]:
    """Vertex sets (bitmasks) that carry at least one cycle."""
    t = _table(g)
    if length is None:
        return sorted(t.cycle_sets, key=lambda m: (-m.bit_count(), m))
    return t.sets_of_length(length)


def longest_cycles(g: Graph) -> Iterator[OrientedCycle]:
    """Every longest cycle once, canonical form, in lexicographic order."""
    t = _table(g)
    if t.circumference < 3:
        return
    seqs: list[tuple[int, ...]] = []
    for cmask in t.sets_of_length(t.circumference):
        seqs.extend(t.cycles_on(cmask))
    for seq in sorted(seqs):
        yield OrientedCycle(seq)


def _check_cycle(g: Graph, c: OrientedCycle) -> None:
    if not c.is_valid_in(g):
        raise CycleError(f"{c.seq} is not a cycle of the graph")


def is_dominating(g: Graph, c: OrientedCycle) -> bool:
    _check_cycle(g, c)
    return is_independent(g, g.vertices & ~c.mask)


def has_dominating_longest_cycle(g: Graph) -> bool:
    t = _table(g)
    if t.circumference < 3:
        return False
    full = g.vertices
    return any(is_independent(g, full & ~m) for m in t.sets_of_length(t.circumference))


def has_dominating_cycle(g: Graph) -> bool:
    """Some cycle (any length) is dominating; lengths tried longest first."""
    full = g.vertices
    return any(is_independent(g, full & ~m) for m in cycle_vertex_sets(g))


def find_dominating_cycle(g: Graph, longest_only: bool = False) -> OrientedCycle | None:
    t = _table(g)
    full = g.vertices
    masks = t.sets_of_length(t.circumference) if longest_only else cycle_vertex_sets(g)
    for m in masks:
        if is_independent(g, full & ~m):
            return OrientedCycle(t.cycles_on(m)[0])
    return None


def cycle_stats(g: Graph, c: OrientedCycle) -> CycleStats:
    _check_cycle(g, c)
    sizes = [comp.bit_count() for comp in components(g, c.mask)]
    if not sizes:
        return CycleStats(0, 0)
    mu = max(sizes)
    return CycleStats(mu, sizes.count(mu))


def select_extremal_cycle(g: Graph) -> tuple[OrientedCycle, CycleStats]:
    """Longest cycle minimising (mu, omega); ties go to the least canonical form."""
    best = None
    for c in longest_cycles(g):
        st = cycle_stats(g, c)
        if best is None or (st.mu, st.omega) < (best[1].mu, best[1].omega):
            best = (c, st)
    if best is None:
        raise CycleError("graph has no cycle")
    return best


def c_path_exists(g: Graph, c: OrientedCycle, a: int, b: int) -> bool:
    """Is there an (a, b)-path with at least one edge whose interior avoids C?"""
    if a not in c or b not in c or a == b:
        raise CycleError("endpoints must be two distinct cycle vertices")
    if g.has_edge(a, b):
        return True
    # the interior of such a path is connected in G - C, hence inside one component
    for comp in components(g, c.mask):
        if g.adj[a] & comp and g.adj[b] & comp:
            return True
    return False
