"""
Sums and products of sequences
==============================

Disjoint sums and products act levelwise, and so do their epimorphisms.
"""

# %%
from fraisse import chain, enumerate_epimorphisms
from fraisse.constructions import decompose_oplus_epi, factorize_product_epi, oplus, otimes

src, dst = oplus(chain(3), chain(2)), oplus(chain(2), chain(2))
for e in enumerate_epimorphisms(src, dst):
    f1, f2 = decompose_oplus_epi(e)
    print(e.map, "=", f1.map, "+", f2.map)

# %%
# On products, the markers ``r1`` and ``r2`` force every epimorphism to
# be a product of two factor maps.
src, dst = otimes(chain(3), chain(2)), otimes(chain(2), chain(2))
for e in enumerate_epimorphisms(src, dst):
    psi, theta = factorize_product_epi(e)
    print(e.map, "=", psi.map, "x", theta.map)

# %%
# The product of two arc sequences has a king-move grid as quotient.
from fraisse import quotient_graph
from fraisse.constructions import otimes_family
from fraisse.families import arc_sequence

square = otimes_family(arc_sequence(), arc_sequence())
for n in range(3):
    g = quotient_graph(square, n)
    print(n, g.n_vertices, len(g.edges))

# %%
# Sums are never connected; certificates name the first failing level.
from fraisse import certify
from fraisse.constructions import oplus_family

print(certify(oplus_family(arc_sequence(), arc_sequence()), "R", "connected", 3))
print(certify(square, "R", "connected", 3).transfer)
