from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from fraisse.constructions import (GlueSpec, decompose_oplus_epi, factorize_product_epi, fresh_name, graph_family,
                                   identify, oplus, oplus_epi, oplus_family, order_max, order_min, otimes,
                                   otimes_epi, otimes_family, sum_of)
from fraisse.epi import Morphism, enumerate_epimorphisms, is_epimorphism
from fraisse.families import (arc_sequence, cantor_sequence, chain, dyadic_glue, singleton_sequence)
from fraisse.limits import quotient_graph
from fraisse.oracles import cycle_graph, graphs_isomorphic, king_grid, path_graph, subdivision
from fraisse.structure import Signature, Structure, validate


def test_fresh_name():
    assert fresh_name("P1", {"R"}) == "P1"
    assert fresh_name("P1", {"P1"}) == "P1_1"
    assert fresh_name("P1", {"P1", "P1_1"}) == "P1_2"


def test_oplus_chain2_chain1(c2):
    s = oplus(c2, chain(1))
    assert s.size == 3 and validate(s) == []
    assert s["P1"] == {(0,), (1,)} and s["P2"] == {(2,)}
    assert s["R"] == {(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)}
    assert s.offset == 2


def test_oplus_marker_collision():
    sig = Signature((("R", 2), ("P1", 1)), "R")
    a = Structure(sig, 1, {"R": [(0, 0)], "P1": [(0,)]})
    s = oplus(a, a)
    assert s.markers == ("P1_1", "P2")
    assert s["P1"] == {(0,), (1,)}


def test_oplus_iterated_markers_distinct(c2):
    s = oplus(oplus(c2, c2), c2)
    assert len(set(s.markers) | set(s.components[0].markers)) == 4


def test_oplus_epimorphisms_decompose(c2, c3):
    src, dst = oplus(c3, c2), oplus(c2, c2)
    epis = enumerate_epimorphisms(src, dst)
    assert [m.map for m in epis] == [(0, 0, 1, 2, 3), (0, 1, 1, 2, 3)]
    f1, f2 = decompose_oplus_epi(epis[0])
    assert f1.map == (0, 0, 1) and f2.map == (0, 1)
    assert oplus_epi(f1, f2).map == epis[0].map


def test_oplus_cross_block_map_rejected(c2):
    s = oplus(c2, c2)
    with pytest.raises(ValueError, match="element 0"):
        decompose_oplus_epi(Morphism(s, s, [2, 3, 0, 1]))


def test_otimes_chain2_squared(c2):
    s = otimes(c2, c2)
    assert s.size == 4 and validate(s) == []
    assert len(s["R"]) == 16  # every pair of the 2x2 king grid is adjacent
    assert s["r1"] == {(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)}
    assert s.renamed == ({"leq": "leq@1"}, {"leq": "leq@2"})


def test_otimes_qualifies_shared_names(c2):
    s = otimes(c2, c2)
    assert {"leq@1", "leq@2"} <= set(s.sig.names)
    assert s["leq@1"] == {(s.index(a, y), s.index(b, y2)) for a, b in c2["leq"] for y in range(2) for y2 in range(2)}


def test_otimes_epimorphisms_factorize(c2, c3):
    src, dst = otimes(c3, c2), otimes(c2, c2)
    epis = enumerate_epimorphisms(src, dst)
    assert len(epis) == 2
    for e in epis:
        psi, theta = factorize_product_epi(e)
        assert theta.map == (0, 1)
        assert otimes_epi(psi, theta).map == e.map


def test_non_rectangular_rejected(c2):
    s = otimes(c2, c2)
    with pytest.raises(ValueError, match="not rectangular"):
        factorize_product_epi(Morphism(s, s, [0, 2, 1, 3]))


def test_triple_product_is_king_lattice():
    cube = otimes_family(otimes_family(arc_sequence(), arc_sequence()), arc_sequence())
    g = quotient_graph(cube, 1)
    assert g.n_vertices == 27
    pts = list(product(range(3), repeat=3))
    expected = {frozenset((i, j)) for i, p in enumerate(pts) for j, q in enumerate(pts)
                if i != j and max(abs(a - b) for a, b in zip(p, q)) == 1}
    assert {frozenset(e) for e in g.edges} == expected


def test_sequence_bonds_are_epis():
    seqs = [oplus_family(arc_sequence(), singleton_sequence()), otimes_family(arc_sequence(), arc_sequence()),
            sum_of([arc_sequence()] * 3), oplus_family(arc_sequence(), cantor_sequence(dyadic_glue(3)))]
    for seq in seqs:
        for n in range(3):
            assert is_epimorphism(seq.bond(n)), (seq.name, n)
    assert seqs[3].max_depth == 3


def test_mismatched_distinguished_symbol():
    a = Structure(Signature((("S", 2),), "S"), 1, {"S": [(0, 0)]})
    with pytest.raises(ValueError):
        oplus(a, chain(1))


def test_order_anchors(c3):
    assert order_min(c3) == 0 and order_max(c3) == 2


def test_glued_path():
    seq = identify(GlueSpec([arc_sequence(), arc_sequence()], [(0, "max"), (1, "min")], [(0, 1)]))
    assert seq.signature.distinguished == "S"
    for n in range(4):
        lvl = seq.level(n)
        k = 2 ** n + 1
        assert (k - 1, k) in lvl["S"] and (k, k - 1) in lvl["S"]
        assert lvl["S"] >= lvl["R"]
        assert graphs_isomorphic(quotient_graph(seq, n), path_graph(2 * k - 1))
        assert is_epimorphism(seq.bond(n))


def test_glued_circle():
    seq = identify(GlueSpec([arc_sequence()], [(0, "min"), (0, "max")], [(0, 1)]))
    for n in range(2, 5):
        assert graphs_isomorphic(quotient_graph(seq, n), cycle_graph(2 ** n))


def test_glue_rejects_incompatible_anchor():
    middle = lambda s, n: s.size // 2  # noqa: E731
    with pytest.raises(ValueError, match="bond-compatible"):
        identify(GlueSpec([arc_sequence(), arc_sequence()], [(0, middle), (1, "min")], [(0, 1)]))


def test_glue_rejects_bad_indices():
    with pytest.raises(ValueError):
        identify(GlueSpec([arc_sequence()], [(1, "min")], []))
    with pytest.raises(ValueError):
        identify(GlueSpec([arc_sequence()], [(0, "min")], [(0, 3)]))


@pytest.mark.parametrize("name, v, e", [
    ("edge", 2, [(0, 1)]),
    ("path", 3, [(0, 1), (1, 2)]),
    ("theta", 2, [(0, 1), (0, 1), (0, 1)]),
    ("triangle", 3, [(0, 1), (1, 2), (2, 0)]),
    ("square", 4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    ("K4", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
])
def test_graph_family_subdivides(name, v, e):
    seq = graph_family(v, e)
    for n in range(5):
        assert graphs_isomorphic(quotient_graph(seq, n), subdivision(v, e, 2 ** n)), (name, n)


def test_theta_level_one():
    g = quotient_graph(graph_family(2, [(0, 1)] * 3), 1)
    assert g.n_vertices == 5 and len(g.edges) == 6
    assert sorted(g.degree(v) for v in range(5)) == [2, 2, 2, 3, 3]


def test_sum_of_arcs_is_two_paths():
    seq = oplus_family(arc_sequence(), arc_sequence())
    for n in range(4):
        k = 2 ** n + 1
        g = quotient_graph(seq, n)
        two_paths = (2 * k, {frozenset((i, i + 1)) for i in range(k - 1)} | {frozenset((k + i, k + i + 1)) for i in range(k - 1)})
        assert graphs_isomorphic(g, two_paths)


def test_graph_family_isolated_vertex():
    seq = graph_family(3, [(0, 1)])
    g = quotient_graph(seq, 1)
    assert g.n_vertices == 4 and sum(g.degree(v) == 0 for v in range(4)) == 1


def test_graph_family_errors():
    with pytest.raises(ValueError):
        graph_family(2, [])
    with pytest.raises(ValueError):
        graph_family(2, [(0, 2)])


def test_grid_of_arcs():
    sq = otimes_family(arc_sequence(), arc_sequence())
    assert graphs_isomorphic(quotient_graph(sq, 1), king_grid(3, 3))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3),
       st.integers(0, 2))
def test_glued_anchors_follow_bonds(nv, edges, n):
    edges = [(u % nv, w % nv) for u, w in edges]
    seq = graph_family(nv, edges)
    bond = seq.bond_map(n)
    upper, lower = seq.classes(n + 1), seq.classes(n)
    where = {x: i for i, c in enumerate(lower) for x in c}
    for c in upper:
        assert len({where[bond[x]] for x in c}) == 1
    assert is_epimorphism(seq.bond(n))
