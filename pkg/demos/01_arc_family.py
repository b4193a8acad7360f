"""
Chains, their epimorphisms, and the arc sequence
================================================

Finite chains with the "neighbours" relation approximate an arc.
"""

# %%
# An epimorphism between chains is a monotone surjection, so there are
# C(m-1, n-1) of them from a chain of m points onto one of n points.
from math import comb

from fraisse import chain, enumerate_epimorphisms

for m, n in [(3, 2), (5, 3), (6, 4)]:
    maps = enumerate_epimorphisms(chain(m), chain(n))
    print(m, n, len(maps), comb(m - 1, n - 1), maps[0].map)

# %%
# Two epimorphisms onto the same chain close into a commuting square.
# The amalgam gives each target point as many points as the larger fiber.
from fraisse import Morphism
from fraisse.epi import compose_maps
from fraisse.families import arc_amalgamate

phi = Morphism(chain(3), chain(2), [0, 0, 1])
psi = Morphism(chain(3), chain(2), [0, 1, 1])
d, theta, rho = arc_amalgamate(phi, psi)
print(d.size, theta.map, rho.map)
print(compose_maps(theta.map, phi.map) == compose_maps(rho.map, psi.map))

# %%
# The arc sequence: level n is a chain of 2^n + 1 points.  The bond halves
# the chain, and alternates which end keeps a single preimage.  Fibers of
# long composites grow without bound:
from fraisse.families import arc_sequence

arc = arc_sequence()
for m in range(6):
    f = arc.composite_map(0, m)
    print(m, f.count(0), f.count(1))

# %%
# With plain halving the top point never gains a second preimage.  The
# bounded fundamental-sequence check then finds a square that no later
# level can close:
from fraisse import check_fundamental_sequence
from fraisse.families import chain_family

for rule in ("alternate", "floor"):
    report = check_fundamental_sequence(arc_sequence(rule), chain_family(), 2, 3)
    print(rule, report.status, len(report.counterexamples))
