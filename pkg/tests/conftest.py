import pytest
from hypothesis import strategies as st

from fraisse.families import CHAIN_SIG, chain
from fraisse.structure import Signature, Structure

MIXED_SIG = Signature((("R", 2), ("U", 1)), "R")


@pytest.fixture
def c2():
    return chain(2)


@pytest.fixture
def c3():
    return chain(3)


@st.composite
def structures(draw, sig=CHAIN_SIG, max_size=4):
    """Random structures whose relations are arbitrary subsets."""
    n = draw(st.integers(1, max_size))
    interp = {}
    for name, k in sig.relations:
        pool = [tuple(t) for t in __import__("itertools").product(range(n), repeat=k)]
        interp[name] = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    return Structure(sig, n, interp)


@st.composite
def image_pairs(draw, sig=CHAIN_SIG, max_size=4):
    """A structure together with its image under a random map; at least
    one epimorphism links them."""
    a = draw(structures(sig, max_size))
    f = draw(st.lists(st.integers(0, a.size - 1), min_size=a.size, max_size=a.size))
    used = sorted(set(f))
    f = [used.index(y) for y in f]
    b = Structure(sig, len(used), {n: {tuple(f[x] for x in t) for t in a[n]} for n in sig.names})
    return a, b, tuple(f)
