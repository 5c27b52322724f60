"""Small-graph enumeration up to isomorphism.

A graph's canonical code is the least graph6-order adjacency bit string over
all vertex permutations.  Graphs are grown one vertex at a time: every graph
in a hereditary class arises from a class member with one vertex fewer (and
every connected graph from a connected one, by deleting a non-cut vertex),
so each level is the canonical closure of the previous one.  Forbidden
families prune children before canonicalisation, which is what keeps the
H-free campaigns at order 9 and 10 cheap.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .graph import Graph, articulation_points, bits, is_two_connected

log = logging.getLogger(__name__)

MIN_ORDER = 1
MAX_ENUM_ORDER = 10
FILTERS = ("all", "connected", "two_connected")


def canonical_labeling(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return ``(code, order)`` where ``order[i]`` is the vertex placed at
    position ``i`` by a permutation attaining the minimal code.

    Depth-first over placements.  Column ``j`` of the code is the adjacency
    of the ``j``-th placed vertex to the earlier ones, so a branch dies as
    soon as its prefix of columns exceeds the best code found.  Among
    unplaced twins only the least vertex is tried, since swapping twins is
    an automorphism.
    """
    n = g.n
    if n <= 1:
        return 0, tuple(range(n))
    adj = g.adj
    shadow = [0] * n
    for v in range(n):
        for u in range(v):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                shadow[v] |= 1 << u
    best: list[int] | None = None
    best_order: list[int] = []
    cols = [0] * n
    order = [0] * n

    def search(j: int, unplaced: int, vals: dict[int, int]) -> None:
        nonlocal best, best_order
        if j == n:
            if best is None or cols < best:
                best = cols[:]
                best_order = order[:]
            return
        cand = [v for v in bits(unplaced) if not shadow[v] & unplaced]
        m = min(vals[v] for v in cand)
        if best is not None and cols[:j] == best[:j] and m > best[j]:
            return
        cols[j] = m
        for v in cand:
            if vals[v] != m:
                continue
            # best may have improved inside an earlier sibling
            if best is not None and cols[: j + 1] > best[: j + 1]:
                return
            order[j] = v
            rest = unplaced & ~(1 << v)
            row = adj[v]
            search(j + 1, rest, {u: vals[u] << 1 | (row >> u & 1) for u in bits(rest)})

    search(0, g.vertices, dict.fromkeys(range(n), 0))
    code = 0
    for j in range(1, n):
        code = code << j | best[j]
    return code, tuple(best_order)


def refined_colors(g: Graph) -> list[int]:
    """Colour refinement (1-WL) with colours numbered canonically, so the
    ordered partition is an isomorphism invariant."""
    n = g.n
    adj = g.adj
    color = [0] * n
    ncolors = 1
    cells = [g.vertices]
    while True:
        sigs = [(color[v],) + tuple((adj[v] & cm).bit_count() for cm in cells) for v in range(n)]
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [ranking[sig] for sig in sigs]
        if len(ranking) == ncolors:
            return new
        color = new
        ncolors = len(ranking)
        cells = [0] * ncolors
        for v, c in enumerate(color):
            cells[c] |= 1 << v


def certificate(g: Graph, with_orbits: bool = False) -> tuple:
    """A complete isomorphism invariant that is much cheaper than the
    minimal code: the least code over permutations that list refinement
    cells in colour order.

    Returns ``(key, order)`` like :func:`canonical_labeling`; with
    ``with_orbits`` also the automorphism orbit id of every vertex (read off
    the tied optimal leaves plus twin swaps, which together generate the
    automorphism group).
    """
    n = g.n
    if n <= 1:
        return ((n,), tuple(range(n)), list(range(n))) if with_orbits else ((n,), tuple(range(n)))
    adj = g.adj
    color = refined_colors(g)
    cell_of_pos = sorted(color)
    cell_mask = [0] * (max(color) + 1)
    for v, c in enumerate(color):
        cell_mask[c] |= 1 << v
    shadow = [0] * n
    for v in range(n):
        for u in bits(cell_mask[color[v]] & ((1 << v) - 1)):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                shadow[v] |= 1 << u
    best: list[int] | None = None
    best_orders: list[list[int]] = []
    cols = [0] * n
    order = [0] * n

    def search(j: int, unplaced: int, vals: dict[int, int]) -> None:
        nonlocal best, best_orders
        if j == n:
            if best is None or cols < best:
                best = cols[:]
                best_orders = [order[:]]
            elif with_orbits and cols == best:
                best_orders.append(order[:])
            return
        cand = [v for v in bits(unplaced & cell_mask[cell_of_pos[j]]) if not shadow[v] & unplaced]
        m = min(vals[v] for v in cand)
        if best is not None and cols[:j] == best[:j] and m > best[j]:
            return
        cols[j] = m
        for v in cand:
            if vals[v] != m:
                continue
            # best may have improved inside an earlier sibling
            if best is not None and cols[: j + 1] > best[: j + 1]:
                return
            order[j] = v
            rest = unplaced & ~(1 << v)
            row = adj[v]
            search(j + 1, rest, {u: vals[u] << 1 | (row >> u & 1) for u in bits(rest)})

    search(0, g.vertices, dict.fromkeys(range(n), 0))
    key = (n, tuple(cell_of_pos), tuple(best))
    if not with_orbits:
        return key, tuple(best_orders[0])
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    first = best_orders[0]
    for other in best_orders[1:]:
        for a, b in zip(first, other):
            union(a, b)
    for v in range(n):
        for u in bits(shadow[v]):
            union(u, v)
    return key, tuple(first), [find(v) for v in range(n)]


def canonical_code(g: Graph) -> int:
    return canonical_labeling(g)[0]


def _placed(g: Graph, order: tuple[int, ...]) -> Graph:
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_form(g: Graph) -> Graph:
    """The relabelled copy of ``g`` whose graph6 bit string is minimal."""
    return _placed(g, canonical_labeling(g)[1])


def certified_form(g: Graph) -> Graph:
    """The relabelled copy of ``g`` attaining its certificate."""
    return _placed(g, certificate(g)[1])


def code_to_graph(n: int, code: int) -> Graph:
    rows = [0] * n
    k = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def twin_classes(g: Graph) -> list[list[int]]:
    """Partition V(G) into classes of pairwise twins (equal open or equal
    closed neighbourhoods).  Permuting a class is an automorphism."""
    n = g.n
    adj = g.adj
    by_open: dict[int, list[int]] = {}
    by_closed: dict[int, list[int]] = {}
    for v in range(n):
        by_open.setdefault(adj[v], []).append(v)
        by_closed.setdefault(adj[v] | 1 << v, []).append(v)
    classes = []
    taken = 0
    for group in list(by_open.values()) + list(by_closed.values()):
        if len(group) > 1:
            classes.append(group)
            for v in group:
                taken |= 1 << v
    classes.extend([v] for v in range(n) if not taken >> v & 1)
    return classes


def _neighbour_sets(parent: Graph) -> list[int]:
    """Neighbour sets for a new vertex, one per orbit of the twin-swap group:
    within each twin class only a prefix of the class is joined."""
    masks = [0]
    for cls in twin_classes(parent):
        prefixes = [0]
        acc = 0
        for v in cls:
            acc |= 1 << v
            prefixes.append(acc)
        masks = [m | p for m in masks for p in prefixes]
    return sorted(masks)


def _position_code(adj: Sequence[int], verts: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(verts)):
        row = adj[verts[j]]
        for i in range(j):
            code = code << 1 | (row >> verts[i] & 1)
    return code


@lru_cache(maxsize=256)
def _trace_table(family: tuple[Graph, ...]) -> dict[int, dict[int, frozenset[int]]]:
    """For every member h and vertex r of h: labelled copies of h - r on
    positions 0..k-2, keyed by size then code, giving the position sets that
    a new vertex must see exactly for the copy to complete to h."""
    table: dict[int, dict[int, set[int]]] = {}
    for h in family:
        for r in range(h.n):
            rest = [v for v in range(h.n) if v != r]
            by_code = table.setdefault(len(rest), {})
            for perm in permutations(rest):
                need = 0
                for pos, v in enumerate(perm):
                    if h.adj[r] >> v & 1:
                        need |= 1 << pos
                by_code.setdefault(_position_code(h.adj, perm), set()).add(need)
    return {m: {c: frozenset(ns) for c, ns in d.items()} for m, d in table.items()}


def _forbidden_traces(parent: Graph, family: tuple[Graph, ...]) -> list[tuple[int, frozenset[int]]]:
    """Pairs ``(T, needs)``: joining a new vertex to S completes a forbidden
    copy iff ``S & T in needs`` for some pair."""
    out = []
    for m, by_code in _trace_table(family).items():
        if m > parent.n:
            continue
        for verts in combinations(range(parent.n), m):
            needs = by_code.get(_position_code(parent.adj, verts))
            if needs is None:
                continue
            tmask = 0
            for v in verts:
                tmask |= 1 << v
            out.append(
                (tmask, frozenset(
                    sum(1 << verts[p] for p in bits(need)) for need in needs
                ))
            )
    return out


def _deletion_invariant(adj: Sequence[int], deg: list[int], v: int) -> tuple[int, int]:
    return deg[v], sum(deg[u] for u in bits(adj[v]))


def _accept(child: Graph, connected: bool) -> bool:
    """Canonical-augmentation test: is the new (last) vertex in the orbit of
    the canonically chosen deletable vertex of ``child``?"""
    n = child.n
    adj = child.adj
    new = n - 1
    deg = [row.bit_count() for row in adj]
    inv = [_deletion_invariant(adj, deg, v) for v in range(n)]
    top = inv[new]
    higher = [u for u in range(new) if inv[u] > top]
    tied = [u for u in range(new) if inv[u] == top]
    cuts = 0
    if connected and (higher or tied):
        cuts = articulation_points(child)
    if any(not cuts >> u & 1 for u in higher):
        return False
    tied = [u for u in tied if not cuts >> u & 1]
    if not tied:
        return True
    _, order, orbit = certificate(child, with_orbits=True)
    pos = {v: i for i, v in enumerate(order)}
    chosen = max(tied + [new], key=pos.__getitem__)
    return orbit[chosen] == orbit[new]


def generate_levels(
    n_max: int,
    connected: bool = True,
    forbidden: Sequence[Graph] = (),
    n_min: int = MIN_ORDER,
    minimal: bool = False,
) -> Iterator[tuple[int, list[Graph]]]:
    """Yield ``(n, reps)`` for ``n_min <= n <= n_max``.

    With ``connected`` only connected graphs are kept at every level (every
    connected graph has a non-cut vertex); with ``forbidden`` only graphs
    free of every member (the class is hereditary, so pruning parents is
    safe).  Representatives are certificate forms in certificate order, or
    with ``minimal`` the minimal-code forms in code order (slower).
    """
    if n_max > MAX_ENUM_ORDER:
        raise ValueError(f"built-in enumeration is limited to n <= {MAX_ENUM_ORDER}")
    family = tuple(forbidden)
    level = [Graph(1, (0,))]
    if n_min <= 1 <= n_max:
        yield 1, level
    for n in range(2, n_max + 1):
        seen: dict[tuple, Graph] = {}
        for parent in level:
            traces = _forbidden_traces(parent, family) if family else []
            for nbrs in _neighbour_sets(parent):
                if connected and not nbrs:
                    continue
                if any(nbrs & t in needs for t, needs in traces):
                    continue
                child = parent.add_vertex(nbrs)
                if not _accept(child, connected):
                    continue
                key, order = certificate(child)
                if key not in seen:
                    seen[key] = _placed(child, order)
        level = [seen[k] for k in sorted(seen)]
        log.debug("order %d: %d classes", n, len(level))
        if n >= n_min:
            if minimal:
                yield n, sorted((canonical_form(g) for g in level), key=canonical_code)
            else:
                yield n, level


def enumerate_graphs(
    n: int, filter: str = "connected", forbidden: Sequence[Graph] = ()
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of order ``n``.

    ``filter`` is ``all``, ``connected`` or ``two_connected``; ``forbidden``
    optionally restricts to graphs with no induced member of the family.
    """
    if filter not in FILTERS:
        raise ValueError(f"filter must be one of {FILTERS}")
    if not MIN_ORDER <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"n must be in {MIN_ORDER}..{MAX_ENUM_ORDER}")
    for _, reps in generate_levels(n, filter != "all", forbidden, n_min=n, minimal=True):
        for g in reps:
            if filter == "two_connected" and not is_two_connected(g):
                continue
            yield g
