from itertools import product
from math import comb

import pytest
from hypothesis import given, settings

from fraisse.epi import (Morphism, SignatureMismatch, compose, enumerate_automorphisms, enumerate_epimorphisms,
                         find_epimorphism, identity, is_epimorphism, is_isomorphism, refines, unique_epimorphism)
from fraisse.families import chain
from fraisse.oracles import monotone_surjections, naive_epimorphisms
from fraisse.structure import Signature, Structure

from conftest import MIXED_SIG, image_pairs, structures


def test_is_epimorphism_examples(c2, c3):
    assert is_epimorphism(Morphism(c3, c2, [0, 0, 1]))
    assert not is_epimorphism(Morphism(c3, c2, [0, 1, 0]))
    assert is_epimorphism(identity(c2))


def test_signature_mismatch(c2):
    other = Structure(Signature((("R", 2),)), 2, {"R": c2["R"]})
    with pytest.raises(SignatureMismatch):
        Morphism(c2, other, [0, 1])
    with pytest.raises(SignatureMismatch):
        enumerate_epimorphisms(c2, other)


def test_morphism_range_checked(c2, c3):
    with pytest.raises(ValueError):
        Morphism(c3, c2, [0, 1, 2])
    with pytest.raises(ValueError):
        Morphism(c3, c2, [0, 1])


def test_enumerate_chain3_to_chain2(c2, c3):
    # frozen from naive_epimorphisms over all 8 maps
    assert [m.map for m in enumerate_epimorphisms(c3, c2)] == [(0, 0, 1), (0, 1, 1)]
    assert naive_epimorphisms(c3, c2) == [(0, 0, 1), (0, 1, 1)]


def test_no_epimorphism_onto_larger(c2, c3):
    assert enumerate_epimorphisms(c2, c3) == []


@pytest.mark.parametrize("n", range(1, 6))
def test_onto_singleton_is_constant(n):
    assert [m.map for m in enumerate_epimorphisms(chain(n), chain(1))] == [(0,) * n]


@pytest.mark.parametrize("m, n", [(m, n) for m in range(1, 7) for n in range(1, m + 1)])
def test_chain_epimorphisms_are_monotone_surjections(m, n):
    maps = [e.map for e in enumerate_epimorphisms(chain(m), chain(n))]
    assert all(all(f[i] <= f[i + 1] for i in range(m - 1)) for f in maps)
    assert len(maps) == monotone_surjections(m, n) == comb(m - 1, n - 1)


@settings(max_examples=150, deadline=None)
@given(image_pairs())
def test_search_matches_naive_filter(pair):
    a, b, f = pair
    found = [m.map for m in enumerate_epimorphisms(a, b)]
    assert found == naive_epimorphisms(a, b)
    assert f in found


@settings(max_examples=100, deadline=None)
@given(structures(MIXED_SIG), structures(MIXED_SIG))
def test_search_matches_naive_filter_unary(a, b):
    assert [m.map for m in enumerate_epimorphisms(a, b)] == naive_epimorphisms(a, b)


@settings(max_examples=60, deadline=None)
@given(image_pairs(max_size=5))
def test_search_matches_naive_filter_size5(pair):
    a, b, _ = pair
    assert [m.map for m in enumerate_epimorphisms(a, b)] == naive_epimorphisms(a, b)


def test_find_epimorphism_is_first(c3):
    assert find_epimorphism(chain(4), c3) == enumerate_epimorphisms(chain(4), c3)[0].map
    assert find_epimorphism(chain(2), c3) is None
    assert find_epimorphism(chain(4), c3, [[0], [1], [1], [2]]) == (0, 1, 1, 2)


def test_compose_examples(c2, c3):
    f = Morphism(c3, c2, [0, 0, 1])
    assert compose(f, identity(c2)).map == (0, 0, 1)
    g = Morphism(chain(4), c3, [0, 1, 2, 2])
    assert compose(g, f).map == (0, 0, 1, 1)
    with pytest.raises(ValueError):
        compose(f, g)


def test_composition_closed_exhaustive():
    for a, b, c in product(range(1, 5), repeat=3):
        for f in enumerate_epimorphisms(chain(a), chain(b)):
            for g in enumerate_epimorphisms(chain(b), chain(c)):
                assert is_epimorphism(compose(f, g))


@settings(max_examples=60, deadline=None)
@given(image_pairs(), image_pairs())
def test_composition_closed_random(p, q):
    a, b, _ = p
    for f in enumerate_epimorphisms(a, b):
        for g in enumerate_epimorphisms(b, b):
            assert is_epimorphism(compose(f, g))


def test_automorphisms(c3):
    assert is_isomorphism(identity(c3))
    assert [m.map for m in enumerate_automorphisms(c3)] == [(0, 1, 2)]
    # dropping the order leaves the path flip
    assert [m.map for m in enumerate_automorphisms(c3.reduct("leq"))] == [(0, 1, 2), (2, 1, 0)]
    assert not is_isomorphism(Morphism(c3, chain(2), [0, 0, 1]))


def test_unique_epimorphism(c2, c3):
    assert unique_epimorphism(c3, c2).kind == "multiple"
    assert unique_epimorphism(c3, c2).count == 2
    res = unique_epimorphism(c2, c2)
    assert res.is_unique and res.witness.map == (0, 1)
    assert unique_epimorphism(c2, c3).kind == "none"


@settings(max_examples=80, deadline=None)
@given(image_pairs())
def test_unique_agrees_with_enumeration(pair):
    a, b, _ = pair
    assert unique_epimorphism(a, b).count == len(enumerate_epimorphisms(a, b))


def test_modulo_automorphisms():
    path = chain(3).reduct("leq")
    two = chain(2).reduct("leq")
    full = enumerate_epimorphisms(path, two)
    reduced = enumerate_epimorphisms(path, two, modulo_automorphisms=True)
    assert len(full) == 2 * len(reduced)
    assert all(m in full for m in reduced)


def test_refines(c2, c3):
    m = Morphism(c3, c2, [0, 0, 1])
    assert refines(m, [[0, 1], [2]])
    assert not refines(m, [[0], [1, 2]])
    assert refines(identity(c3), [[0, 2], [1]])
    with pytest.raises(ValueError):
        refines(m, [[0, 1]])
    with pytest.raises(ValueError):
        refines(m, [[0, 1], [1, 2]])
