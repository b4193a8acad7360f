"""
Dyadic words and a rigid sequence
=================================

Binary words of length n, with neighbouring dyadic intervals related,
form a sequence with exactly one epimorphism between any two levels.
"""

# %%
from fraisse.families import cantor_level, cantor_sequence, dyadic_glue, word

g = dyadic_glue(4)
s = cantor_level(g, 2)
for i in range(s.size):
    nbrs = sorted(j for x, j in s["R"] if x == i and j != i)
    print("".join(map(str, word(i, 2))), nbrs)

# %%
# Predicates ``rho_<word>`` pin down each point's prefix, so the only
# surjection preserving everything is restriction of words.
from fraisse import check_rigidity, unique_epimorphism

res = unique_epimorphism(cantor_level(g, 3), cantor_level(g, 1))
print(res.kind, res.witness.map)
report = check_rigidity(cantor_sequence(g), 4)
print(report.status, len(report.witnesses))
print(report.citation)

# %%
# The quotient approximant is a path: the same picture the arc gives,
# now reached from a totally disconnected side.
from fraisse import export_graph, quotient_graph

print(export_graph(quotient_graph(cantor_sequence(g), 3)))
