"""
Graphs from glued arcs
======================

Put one arc on each edge of a graph and glue the arc ends at shared
vertices.  Level n approximates the graph with each edge cut 2^n times.
"""

# %%
from fraisse import export_graph, quotient_graph
from fraisse.constructions import GlueSpec, graph_family, identify
from fraisse.families import arc_sequence

circle = identify(GlueSpec([arc_sequence()], [(0, "min"), (0, "max")], [(0, 1)]))
print(export_graph(quotient_graph(circle, 2)))

# %%
# A triangle and the theta graph (two vertices, three parallel edges).
from fraisse.limits import quotient_coherence

for name, v, edges in [("triangle", 3, [(0, 1), (1, 2), (2, 0)]), ("theta", 2, [(0, 1)] * 3)]:
    seq = graph_family(v, edges)
    for n in range(3):
        g = quotient_graph(seq, n)
        print(name, n, g.n_vertices, len(g.edges), quotient_coherence(seq, n, n + 1))

# %%
# Anchors must follow the bonds: gluing the middle of an arc is rejected.
try:
    identify(GlueSpec([arc_sequence(), arc_sequence()], [(0, lambda s, n: s.size // 2), (1, "min")], [(0, 1)]))
except ValueError as exc:
    print(exc)
