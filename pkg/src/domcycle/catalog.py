"""Named forbidden graphs with induced containment and the family order.

Names accepted by :func:`parse_name` (ASCII, no commas so that pairs can be
written ``A,B``)::

    Pn  Kn  K1_3 (claw)  K4- (diamond)  Zn  Bm_n  Nl_m_n
    W (bowtie)  W*  K1_3*  K1_3**

Path parameters in ``Zn``, ``Bm_n`` and ``Nl_m_n`` count edges; ``Z1`` is the paw.
"""

from __future__ import annotations

import hashlib
import re
from functools import lru_cache
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .graph import Graph, bits, is_connected, popcount
from .graph6 import Graph6Error, graph6_decode, graph6_encode


class CatalogError(ValueError):
    pass


ALIASES = {
    "claw": "K1_3",
    "paw": "Z1",
    "diamond": "K4-",
    "bowtie": "W",
    "K3": "K3",
}

# names making up the catalog fingerprint
BASE_NAMES = (
    "P4", "P5", "P6", "K3", "K1_3", "K4-", "Z1", "Z3", "Z4",
    "B1_2", "N1_1_1", "W", "W*", "K1_3*", "K1_3**",
)

_PATTERNS = [
    (re.compile(r"P(\d+)"), "P"),
    (re.compile(r"K1_3\*\*"), "K1_3**"),
    (re.compile(r"K1_3\*"), "K1_3*"),
    (re.compile(r"K1_3"), "K1_3"),
    (re.compile(r"K4-"), "K4-"),
    (re.compile(r"K(\d+)"), "K"),
    (re.compile(r"Z(\d+)"), "Z"),
    (re.compile(r"B(\d+)_(\d+)"), "B"),
    (re.compile(r"N(\d+)_(\d+)_(\d+)"), "N"),
    (re.compile(r"W\*"), "W*"),
    (re.compile(r"W"), "W"),
]


def parse_name(name: str) -> tuple[str, tuple[int, ...]]:
    """Split a catalog name into its kind and integer parameters."""
    name = ALIASES.get(name.strip(), name.strip())
    for pattern, kind in _PATTERNS:
        m = pattern.fullmatch(name)
        if m:
            params = tuple(int(x) for x in m.groups())
            if any(p < 1 for p in params):
                raise CatalogError(f"{name}: indices must be >= 1")
            return kind, params
    raise CatalogError(f"unknown graph name {name!r}")


def canonical_name(name: str) -> str:
    kind, params = parse_name(name)
    if kind in ("P", "K", "Z"):
        return f"{kind}{params[0]}"
    if kind in ("B", "N"):
        return kind + "_".join(str(p) for p in params)
    return kind


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _triangle_with_tails(lengths: Sequence[int]) -> Graph:
    """Triangle 0,1,2 with a pendant path of ``lengths[i]`` edges at vertex i."""
    edges = [(0, 1), (1, 2), (0, 2)]
    n = 3
    for root, length in enumerate(lengths):
        prev = root
        for _ in range(length):
            edges.append((prev, n))
            prev = n
            n += 1
    return Graph.from_edges(n, edges)


def _build(kind: str, params: tuple[int, ...]) -> Graph:
    if kind == "P":
        return path_graph(params[0])
    if kind == "K":
        return complete_graph(params[0])
    if kind == "K1_3":
        return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    if kind == "K4-":
        return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    if kind in ("Z", "B", "N"):
        return _triangle_with_tails(params)
    if kind == "W":
        return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    if kind == "W*":
        return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5)])
    if kind == "K1_3*":
        # centre 0, subdivision vertices 1..3, leaves 4..6
        return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
    if kind == "K1_3**":
        return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)])
    raise CatalogError(f"no construction for {kind}")


@dataclass(frozen=True)
class ForbiddenCatalog:
    """Name -> graph lookup with optional per-name overrides."""

    overrides: dict[str, Graph] = field(default_factory=dict)
    source: str = "built-in"

    def __getitem__(self, name: str) -> Graph:
        key = canonical_name(name)
        if key in self.overrides:
            return self.overrides[key]
        return _build(*parse_name(key))

    def family(self, names: Iterable[str]) -> list[Graph]:
        return [self[name] for name in names]

    def fingerprint(self) -> str:
        names = sorted(set(BASE_NAMES) | set(self.overrides))
        lines = "".join(f"{name} {graph6_encode(self[name])}\n" for name in names)
        return hashlib.sha256(lines.encode("ascii")).hexdigest()


def catalog_build(override: str | Path | None = None) -> ForbiddenCatalog:
    """Built-in catalog, optionally patched by an override file.

    Override lines read ``NAME GRAPH6``; ``#`` starts a comment.
    """
    if override is None:
        return ForbiddenCatalog()
    overrides: dict[str, Graph] = {}
    text = Path(override).read_text(encoding="ascii")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise CatalogError(f"{override}:{lineno}: expected 'NAME GRAPH6'")
        try:
            key = canonical_name(parts[0])
        except CatalogError as exc:
            raise CatalogError(f"{override}:{lineno}: {exc}") from exc
        try:
            g = graph6_decode(parts[1])
        except Graph6Error as exc:
            raise CatalogError(f"{override}:{lineno}: {exc}") from exc
        if g.n < 3 or not is_connected(g):
            raise CatalogError(f"{override}:{lineno}: {key} must be connected of order >= 3")
        overrides[key] = g
    return ForbiddenCatalog(overrides, source=f"override:{Path(override).name}")


@lru_cache(maxsize=4096)
def _plan(h: Graph, root: int | None) -> tuple:
    """Search order for h plus, per position, the earlier positions that must
    be adjacent / non-adjacent to it.

    Vertices are taken greedily by number of already placed neighbours, then
    by degree, so each one after the first touches an earlier one.
    """
    deg = [popcount(r) for r in h.adj]
    order: list[int] = []
    placed = 0
    remaining = h.vertices
    while remaining:
        if not order and root is not None:
            best = root
        else:
            best = max(
                bits(remaining),
                key=lambda v: (popcount(h.adj[v] & placed), deg[v], -v),
            )
        order.append(best)
        placed |= 1 << best
        remaining &= ~(1 << best)
    pos = {v: i for i, v in enumerate(order)}
    hdeg = tuple(deg[v] for v in order)
    back_adj = tuple(
        tuple(pos[u] for u in bits(h.adj[v]) if pos[u] < i) for i, v in enumerate(order)
    )
    back_non = tuple(
        tuple(j for j in range(i) if not h.adj[v] >> order[j] & 1) for i, v in enumerate(order)
    )
    return hdeg, back_adj, back_non


@lru_cache(maxsize=4096)
def _anchor_roots(h: Graph) -> tuple[int, ...]:
    """Vertices of h to try as the preimage of an anchor.

    A vertex whose neighbourhood matches an earlier root's (twins, adjacent
    or not) is skipped: swapping twins is an automorphism of h.
    """
    roots: list[int] = []
    for v in range(h.n):
        if not any(h.adj[u] & ~(1 << v) == h.adj[v] & ~(1 << u) for u in roots):
            roots.append(v)
    return tuple(roots)


def _degree_masks(g: Graph, dmax: int) -> list[int]:
    masks = [0] * (dmax + 1)
    for v in range(g.n):
        d = min(popcount(g.adj[v]), dmax)
        masks[d] |= 1 << v
    for d in range(dmax - 1, -1, -1):
        masks[d] |= masks[d + 1]
    return masks


def contains_induced(g: Graph, h: Graph, anchor: int | None = None) -> bool:
    """True iff ``g`` has an induced subgraph isomorphic to ``h``.

    Backtracking injection of h into g along a connected search order, with
    candidates narrowed by bit-parallel neighbourhood intersection and a
    degree filter.  With ``anchor`` set, only copies through vertex
    ``anchor`` of ``g`` are considered.
    """
    k = h.n
    if k > g.n:
        return False
    if k == 0:
        return anchor is None
    gadj = g.adj
    deg_ok = _degree_masks(g, max(popcount(r) for r in h.adj))
    image = [0] * k

    def run(hdeg, back_adj, back_non, first: int) -> bool:
        def extend(i: int, used: int) -> bool:
            if i == k:
                return True
            cand = deg_ok[hdeg[i]] & ~used
            for j in back_adj[i]:
                cand &= gadj[image[j]]
            for j in back_non[i]:
                cand &= ~gadj[image[j]]
            while cand:
                low = cand & -cand
                cand ^= low
                image[i] = low.bit_length() - 1
                if extend(i + 1, used | low):
                    return True
            return False

        cand = first & deg_ok[hdeg[0]]
        while cand:
            low = cand & -cand
            cand ^= low
            image[0] = low.bit_length() - 1
            if extend(1, low):
                return True
        return False

    if anchor is None:
        return run(*_plan(h, None), g.vertices)
    for root in _anchor_roots(h):
        if run(*_plan(h, root), 1 << anchor):
            return True
    return False


def is_family_free(g: Graph, family: Sequence[Graph], anchor: int | None = None) -> bool:
    if not family:
        raise ValueError("family must be nonempty")
    return not any(contains_induced(g, h, anchor) for h in family)


def family_leq(f1: Sequence[Graph], f2: Sequence[Graph]) -> bool:
    """F1 <= F2: every member of F2 induces some member of F1."""
    if not f1 or not f2:
        raise ValueError("families must be nonempty")
    return all(any(contains_induced(h2, h1) for h1 in f1) for h2 in f2)


# maximal pairs for which some n0 works (necessity list)
MAXIMAL_PAIRS = (
    ("K1_3", "Z4"),
    ("K1_3", "B1_2"),
    ("K1_3", "N1_1_1"),
    ("P4", "W"),
    ("K1_3*", "Z1"),
    ("P5", "W*"),
    ("P5", "K4-"),
)

# pairs whose sufficiency is proved for every order
SUFFICIENT_PAIRS = (
    ("K1_3", "Z4"),
    ("K1_3", "B1_2"),
    ("K1_3", "N1_1_1"),
    ("P4", "W"),
    ("K1_3**", "Z1"),
    ("P5", "W*"),
    ("P5", "K4-"),
)

# pairs where a dominating *longest* cycle is guaranteed
LONGEST_PAIRS = (("P5", "W*"), ("P5", "K4-"))


@dataclass(frozen=True)
class PairVerdict:
    pair: tuple[Graph, Graph]
    dominated_by: tuple[tuple[str, str], ...]
    sufficient_via: tuple[tuple[str, str], ...] = ()

    @property
    def covered(self) -> bool:
        return bool(self.dominated_by)

    def explain(self, names: tuple[str, str] | None = None) -> str:
        label = "{%s}" % ", ".join(names) if names else "pair"
        if not self.covered:
            return (
                f"{label} lies below none of the seven maximal pairs; no n0 can make every "
                "2-connected pair-free graph of order >= n0 have a dominating cycle."
            )
        lines = [f"{label} <= " + ", ".join("{%s, %s}" % m for m in self.dominated_by)]
        if self.sufficient_via:
            lines.append(
                "sufficiency proved via " + ", ".join("{%s, %s}" % m for m in self.sufficient_via)
            )
        else:
            lines.append("sufficiency open (only below {K1_3*, Z1})")
        lines.append("necessity threshold n0 is not computed; classification only")
        return "\n".join(lines)


def classify_pair(pair: tuple[Graph, Graph], catalog: ForbiddenCatalog | None = None) -> PairVerdict:
    catalog = catalog or ForbiddenCatalog()
    for h in pair:
        if h.n < 3 or not is_connected(h):
            raise CatalogError("pair members must be connected of order >= 3")
    f1 = list(pair)
    dominated = tuple(m for m in MAXIMAL_PAIRS if family_leq(f1, catalog.family(m)))
    sufficient = tuple(m for m in SUFFICIENT_PAIRS if family_leq(f1, catalog.family(m)))
    return PairVerdict(tuple(pair), dominated, sufficient)
