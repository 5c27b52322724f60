import random
from itertools import product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domcycle.catalog import (
    BASE_NAMES,
    MAXIMAL_PAIRS,
    CatalogError,
    ForbiddenCatalog,
    canonical_name,
    catalog_build,
    classify_pair,
    complete_graph,
    contains_induced,
    cycle_graph,
    family_leq,
    is_family_free,
    path_graph,
)
from helpers import graphs_of_order
from domcycle.graph import Graph, bits, induced_subgraph, is_connected
from domcycle.graph6 import graph6_encode
from oracles import contains_induced_brute


def _subsets_with(n, k, a):
    from itertools import combinations

    for rest in combinations([v for v in range(n) if v != a], k - 1):
        mask = 1 << a
        for v in rest:
            mask |= 1 << v
        yield mask


def iso(g, h):
    a, b = nx.Graph(), nx.Graph()
    a.add_nodes_from(range(g.n))
    b.add_nodes_from(range(h.n))
    a.add_edges_from(g.edges())
    b.add_edges_from(h.edges())
    return nx.is_isomorphic(a, b)


class TestShapes:
    def test_w_star(self, catalog):
        w = catalog["W*"]
        assert (w.n, w.num_edges()) == (6, 7)
        assert sorted(w.degree(v) for v in range(6)) == [1, 2, 2, 2, 2, 5]

    def test_w_star_is_bowtie_plus_pendant_at_centre(self, catalog):
        w, bowtie = catalog["W*"], catalog["W"]
        centre = max(range(w.n), key=w.degree)
        leaf = next(v for v in range(w.n) if w.degree(v) == 1)
        assert w.has_edge(centre, leaf)
        assert iso(induced_subgraph(w, w.vertices & ~(1 << leaf)), bowtie)

    def test_paw(self, catalog):
        z1 = catalog["Z1"]
        assert z1.n == 4 and z1.num_edges() == 4
        assert iso(z1, catalog["paw"])

    def test_k13_double_star_is_single_star_minus_leaf(self, catalog):
        a, b = catalog["K1_3*"], catalog["K1_3**"]
        assert (a.n, b.n) == (7, 6)
        leaves = [v for v in range(a.n) if a.degree(v) == 1]
        assert len(leaves) == 3
        assert iso(induced_subgraph(a, a.vertices & ~(1 << leaves[0])), b)

    def test_orders(self, catalog):
        assert catalog["Z4"].n == 7
        assert catalog["B1_2"].n == 6
        assert catalog["N1_1_1"].n == 6
        assert catalog["K4-"].num_edges() == 5
        assert catalog["P6"].n == 6

    def test_all_entries_connected(self, catalog):
        for name in BASE_NAMES:
            h = catalog[name]
            assert h.n >= 3 and is_connected(h), name

    def test_names(self):
        assert canonical_name("claw") == "K1_3"
        assert canonical_name("diamond") == "K4-"
        with pytest.raises(CatalogError):
            canonical_name("Q7")


class TestOverride:
    def test_replaces_entry(self, tmp_path, catalog):
        f = tmp_path / "over.txt"
        f.write_text("# a bigger W\nW " + graph6_encode(cycle_graph(5)) + "\n")
        cat = catalog_build(f)
        assert cat["W"].num_edges() == 5
        assert cat.fingerprint() != catalog.fingerprint()
        assert cat["P5"] == catalog["P5"]

    def test_unknown_name(self, tmp_path):
        f = tmp_path / "over.txt"
        f.write_text("Foo Cl\n")
        with pytest.raises(CatalogError, match=":1:"):
            catalog_build(f)

    @pytest.mark.parametrize("body", ["W D??", "W A_", "W Cl extra", "W C!!"])
    def test_rejects_bad_entries(self, tmp_path, body):
        f = tmp_path / "over.txt"
        f.write_text(body + "\n")
        with pytest.raises(CatalogError):
            catalog_build(f)

    def test_fingerprint_stable(self):
        assert ForbiddenCatalog().fingerprint() == catalog_build().fingerprint()


class TestContainsInduced:
    def test_examples(self, catalog, petersen):
        assert contains_induced(path_graph(5), path_graph(4))
        assert not contains_induced(cycle_graph(5), path_graph(5))
        assert not contains_induced(complete_graph(4), catalog["K4-"])
        assert contains_induced(petersen, catalog["K1_3"])

    def test_larger_pattern(self):
        assert not contains_induced(path_graph(3), path_graph(4))

    def test_against_subset_brute_force(self, catalog):
        names = [nm for nm in BASE_NAMES if catalog[nm].n <= 7]
        for n in range(3, 8):
            gs = list(graphs_of_order(n, "all"))
            for nm in names:
                h = catalog[nm]
                ref = contains_induced_brute(n, [g.edges() for g in gs], h.n, h.edges())
                got = [contains_induced(g, h) for g in gs]
                assert got == ref.tolist(), (n, nm)

    def test_anchor(self):
        assert contains_induced(path_graph(5), path_graph(4), anchor=0)
        # paw: triangle 0-1-2 with pendant 3 at 2
        paw = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        assert contains_induced(paw, path_graph(3), anchor=3)
        assert not contains_induced(paw, complete_graph(3), anchor=3)
        assert contains_induced(paw, complete_graph(3), anchor=0)

    def test_anchor_matches_brute_force(self, catalog):
        for g in graphs_of_order(6, "connected"):
            for name in ("P4", "K1_3", "Z1", "K4-"):
                h = catalog[name]
                for a in range(g.n):
                    expected = any(
                        contains_induced(induced_subgraph(g, s), h)
                        for s in _subsets_with(g.n, h.n, a)
                    )
                    assert contains_induced(g, h, anchor=a) == expected


class TestFamilies:
    def test_is_family_free_examples(self, catalog):
        assert is_family_free(cycle_graph(5), catalog.family(["P5", "K4-"]))
        assert is_family_free(complete_graph(4), [catalog["K4-"]])
        assert not is_family_free(path_graph(6), [catalog["P5"]])

    def test_family_leq_examples(self, catalog):
        # W* has no induced P4 (its centre sees everything), so {P4} is not <= {P5, W*}
        w = catalog["W*"]
        assert not contains_induced_brute(6, [w.edges()], 4, catalog["P4"].edges())[0]
        assert not family_leq([catalog["P4"]], catalog.family(["P5", "W*"]))
        assert family_leq([catalog["P4"]], catalog.family(["P5", "P6"]))
        assert family_leq(catalog.family(["P5", "W*"]), catalog.family(["P5", "W*"]))
        assert not family_leq([catalog["K1_3"]], [catalog["P6"]])

    def test_leq_reflexive_and_transitive_on_maximal_pairs(self, catalog):
        fams = [catalog.family(p) for p in MAXIMAL_PAIRS]
        for f in fams:
            assert family_leq(f, f)
        for a, b, c in product(fams, repeat=3):
            if family_leq(a, b) and family_leq(b, c):
                assert family_leq(a, c)

    def test_leq_implies_freeness(self, catalog):
        pairs = list(MAXIMAL_PAIRS) + [("P4", "W"), ("K1_3", "P6"), ("K1_3**", "Z1"), ("P4", "K3")]
        fams = [catalog.family(p) for p in pairs]
        related = [(a, b) for a in fams for b in fams if family_leq(a, b)]
        for n in range(3, 8):
            for g in graphs_of_order(n, "connected"):
                for a, b in related:
                    if is_family_free(g, a):
                        assert is_family_free(g, b)


class TestClassify:
    def test_reflexive(self, catalog):
        v = classify_pair(tuple(catalog.family(["P5", "K4-"])), catalog)
        assert ("P5", "K4-") in v.dominated_by and v.covered

    def test_p4_w(self, catalog):
        v = classify_pair(tuple(catalog.family(["P4", "W"])), catalog)
        assert ("P4", "W") in v.dominated_by
        assert ("P5", "W*") in v.dominated_by

    def test_claw_p6_decided_by_engine(self, catalog):
        # Z4 contains an induced P6, so {K1_3, P6} <= {K1_3, Z4}
        v = classify_pair(tuple(catalog.family(["K1_3", "P6"])), catalog)
        assert contains_induced(catalog["Z4"], catalog["P6"])
        assert v.dominated_by == (("K1_3", "Z4"),)

    def test_uncovered_pair(self, catalog):
        v = classify_pair((catalog["P7"], catalog["K3"]), catalog)
        assert not v.covered and v.dominated_by == ()
        assert "none of the seven" in v.explain(("P7", "K3"))

    def test_open_pair_not_sufficient(self, catalog):
        v = classify_pair(tuple(catalog.family(["K1_3*", "K3"])), catalog)
        assert v.dominated_by == (("K1_3*", "Z1"),)
        assert v.sufficient_via == ()

    def test_rejects_bad_members(self):
        with pytest.raises(CatalogError):
            classify_pair((path_graph(2), path_graph(4)))

    def test_covered_iff_dominated(self, catalog):
        for a, b in product(["P4", "P5", "K3", "K1_3", "Z1", "W"], repeat=2):
            v = classify_pair((catalog[a], catalog[b]), catalog)
            assert v.covered == bool(v.dominated_by)


@st.composite
def small_graph(draw, lo=1, hi=7):
    n = draw(st.integers(lo, hi))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    p = rng.random()
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


@settings(max_examples=150, deadline=None)
@given(small_graph(4, 8), small_graph(2, 6), small_graph(1, 4))
def test_containment_is_transitive(g, h2, h1):
    if contains_induced(h2, h1) and contains_induced(g, h2):
        assert contains_induced(g, h1)


@settings(max_examples=100, deadline=None)
@given(small_graph(1, 8))
def test_subgraph_of_itself_and_subsets(g):
    assert contains_induced(g, g)
    for v in range(g.n):
        sub = induced_subgraph(g, g.vertices & ~(1 << v))
        assert contains_induced(g, sub)


def test_bits_helper_consistency():
    assert list(bits(0)) == []
