"""Immutable simple graphs on at most 64 vertices.

Vertices are the integers ``0..n-1``.  Vertex sets are plain ``int`` bitmasks
(bit ``v`` set means ``v`` is a member); this keeps neighbourhood
intersections to a single ``&``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex-set bitmask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"graph order must be in 0..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have exactly n rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loopless adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertices(self) -> int:
        """All vertices as a bitmask."""
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def complement(self) -> Graph:
        full = self.vertices
        return Graph._trusted(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def add_vertex(self, neighbours: int) -> Graph:
        """Return the graph with a new vertex ``n`` joined to ``neighbours``."""
        new = 1 << self.n
        rows = tuple(row | new if neighbours >> v & 1 else row for v, row in enumerate(self.adj))
        return Graph._trusted(self.n + 1, rows + (neighbours,))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph where old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            nv = perm[v]
            for u in bits(row):
                rows[nv] |= 1 << perm[u]
        return Graph._trusted(self.n, tuple(rows))


def neighborhood(g: Graph, v: int, x: int) -> int:
    """N_G(v; X): the neighbours of ``v`` inside ``x``."""
    return g.adj[v] & x


def set_neighborhood(g: Graph, s: int, x: int) -> int:
    """Union of N_G(v; X) over the members ``v`` of ``s``."""
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out & x


def induced_subgraph(g: Graph, s: int) -> Graph:
    """G[S], relabelled order-preservingly onto ``0..|S|-1``."""
    members = list(bits(s & g.vertices))
    index = {v: i for i, v in enumerate(members)}
    rows = []
    for v in members:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << index[u]
        rows.append(row)
    return Graph._trusted(len(members), tuple(rows))


def components(g: Graph, removed: int = 0) -> list[int]:
    """Connected components of G - removed, ordered by least vertex."""
    remaining = g.vertices & ~removed
    parts = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        parts.append(comp)
        remaining &= ~comp
    return parts


def is_independent(g: Graph, s: int) -> bool:
    for v in bits(s):
        if g.adj[v] & s:
            return False
    return True


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def articulation_points(g: Graph) -> int:
    """Cut vertices of ``g`` (as a bitmask), by iterative lowpoint DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = 0
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(bits(g.adj[u]))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts |= 1 << parent
        if root_children > 1:
            cuts |= 1 << root
    return cuts


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


def has_triangle(g: Graph) -> bool:
    for u, v in g.edges():
        if g.adj[u] & g.adj[v]:
            return True
    return False


def is_complete_multipartite(g: Graph) -> bool:
    """True iff non-adjacency is an equivalence relation on V(G)."""
    classes = []
    for v in range(g.n):
        non_nbrs = g.vertices & ~g.adj[v]  # includes v itself
        classes.append(non_nbrs)
    for v in range(g.n):
        for u in bits(classes[v]):
            if classes[u] != classes[v]:
                return False
    return True


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    labels = []
    for part, size in enumerate(sizes):
        labels.extend([part] * size)
    n = len(labels)
    return Graph.from_edges(
        n, [(u, v) for v in range(n) for u in range(v) if labels[u] != labels[v]]
    )
