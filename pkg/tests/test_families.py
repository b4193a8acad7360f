from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from fraisse.epi import Morphism, compose_maps, enumerate_epimorphisms, is_epimorphism
from fraisse.families import (GlueSystem, arc_amalgamate, arc_sequence, arc_bond, arc_bond_map, arc_level, cantor_bond_map,
                              cantor_level, chain, check_glue_system, dyadic_glue, dyadic_related, is_chain,
                              word, word_name)


def test_arc_levels():
    assert [arc_level(n).size for n in range(5)] == [2, 3, 5, 9, 17]
    assert arc_level(2) == chain(5)
    assert arc_level(1).tuples("R") == [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)]
    with pytest.raises(ValueError):
        arc_level(-1)


def test_arc_bonds():
    assert arc_bond_map(0) == (0, 0, 1)
    assert arc_bond_map(1) == (0, 1, 1, 2, 2)
    assert arc_bond_map(1, "floor") == (0, 0, 1, 1, 2)
    assert compose_maps(arc_bond_map(1), arc_bond_map(0)) == (0, 0, 0, 1, 1)
    for n in range(6):
        assert is_epimorphism(arc_bond(n))
        assert is_epimorphism(arc_bond(n, "floor"))
    with pytest.raises(ValueError):
        arc_bond_map(0, "round")


@pytest.mark.parametrize("n", range(4))
def test_composite_fibers(n):
    def smallest(seq, m):
        f = seq.composite_map(n, m)
        return min(f.count(j) for j in range(2 ** n + 1))
    alt, floor = arc_sequence(), arc_sequence("floor")
    assert [smallest(alt, m) for m in range(n, n + 6)] == [1, 1, 2, 3, 6, 11]
    assert [smallest(floor, m) for m in range(n, n + 6)] == [1] * 6


def test_amalgamate_examples():
    d, theta, rho = arc_amalgamate(Morphism(chain(3), chain(2), [0, 0, 1]), Morphism(chain(3), chain(2), [0, 1, 1]))
    assert d == chain(4)
    assert theta.map == (0, 1, 2, 2) and rho.map == (0, 0, 1, 2)
    d, theta, rho = arc_amalgamate(Morphism(chain(2), chain(1), [0, 0]), Morphism(chain(3), chain(1), [0, 0, 0]))
    assert d.size == 3 and theta.map == (0, 1, 1)


def test_amalgamate_rejects_non_epis():
    with pytest.raises(ValueError):
        arc_amalgamate(Morphism(chain(3), chain(2), [0, 1, 0]), Morphism(chain(2), chain(2), [0, 1]))


@st.composite
def chain_epis(draw, target):
    m = draw(st.integers(target, 6))
    return draw(st.sampled_from(enumerate_epimorphisms(chain(m), chain(target))))


@given(st.integers(1, 4).flatmap(lambda a: st.tuples(chain_epis(a), chain_epis(a))))
def test_amalgamate_commutes_and_is_minimal(pair):
    phi, psi = pair
    d, theta, rho = arc_amalgamate(phi, psi)
    assert is_chain(d)
    assert is_epimorphism(theta) and is_epimorphism(rho)
    assert compose_maps(theta.map, phi.map) == compose_maps(rho.map, psi.map)
    assert d.size == sum(max(phi.map.count(j), psi.map.count(j)) for j in range(phi.target.size))


def test_words():
    assert word(1, 3) == (0, 0, 1)
    assert word(6, 3) == (1, 1, 0)
    assert word_name((1, 0)) == "rho_10"
    assert word_name(()) == "rho_"


def test_dyadic_related_examples():
    assert dyadic_related((0, 1, 1), (1, 0, 0))
    assert dyadic_related((0, 1), (1, 0))
    assert not dyadic_related((0, 0), (1, 1))
    assert not dyadic_related((0, 0), (1, 0))
    assert dyadic_related((0, 1, 0), (0, 1, 0))


def test_cantor_level_two():
    s = cantor_level(dyadic_glue(2), 2)
    assert s.size == 4
    edges = sorted((i, j) for i, j in s["R"] if i < j)
    assert edges == [(0, 1), (1, 2), (2, 3)]
    assert s["rho_0"] == {(0,), (1,)}
    assert s["rho_11"] == {(3,)}
    assert s["rho_"] == {(i,) for i in range(4)}


def test_cantor_predicates_beyond_level():
    # a word longer than the level holds where its prefix holds
    s = cantor_level(dyadic_glue(3), 1)
    assert s["rho_011"] == {(0,)}
    with pytest.raises(ValueError):
        cantor_level(dyadic_glue(2), 3)


@pytest.mark.parametrize("n", range(7))
def test_cantor_relation_is_interval_overlap(n):
    s = cantor_level(dyadic_glue(n), n)
    w = Fraction(1, 2 ** n)
    closed = {(i, j) for i in range(2 ** n) for j in range(2 ** n)
              if max(i * w, j * w) <= min((i + 1) * w, (j + 1) * w)}
    assert s["R"] == closed


def test_cantor_bonds_are_epis():
    g = dyadic_glue(7)
    for n in range(7):
        assert is_epimorphism(Morphism(cantor_level(g, n + 1), cantor_level(g, n), cantor_bond_map(n)))
    assert cantor_bond_map(1) == (0, 0, 1, 1)


def test_cantor_unique_epimorphism():
    g = dyadic_glue(2)
    maps = enumerate_epimorphisms(cantor_level(g, 2), cantor_level(g, 1))
    assert [m.map for m in maps] == [(0, 0, 1, 1)]


def test_glue_system_checks():
    assert check_glue_system(dyadic_glue(5)) == []
    nothing = GlueSystem(4, lambda u, v: u == v, "discrete")
    assert check_glue_system(nothing) == []
    lopsided = GlueSystem(3, lambda u, v: u == v or (u[-1:], v[-1:]) == ((0,), (1,)))
    problems = check_glue_system(lopsided)
    assert any("not symmetric" in p for p in problems)
    with pytest.raises(ValueError):
        GlueSystem(-1)


def test_cantor_all_words_of_small_levels():
    g = dyadic_glue(3)
    for n in range(4):
        s = cantor_level(g, n)
        for k in range(4):
            for bits in product((0, 1), repeat=k):
                m = min(k, n)
                assert s[word_name(bits)] == {(i,) for i in range(2 ** n) if word(i, n)[:m] == bits[:m]}
