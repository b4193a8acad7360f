"""Slow, independent reference implementations used to cross-check the engine.

Nothing here shares code with the backtracking search or the
constructions: epimorphisms are found by filtering every map, graphs are
built from coordinates, and isomorphism is decided by exhaustive search.
"""
from __future__ import annotations

from itertools import combinations, product
from math import comb


def naive_is_epimorphism(a, b, f) -> bool:
    if set(f) != set(range(b.size)):
        return False
    for name in a.sig.names:
        img = set()
        for t in a.interp[name]:
            img.add(tuple(f[x] for x in t))
        if img != set(b.interp[name]):
            return False
    return True


def naive_epimorphisms(a, b) -> list[tuple[int, ...]]:
    """Filter all ``b.size ** a.size`` maps through the definition."""
    return [f for f in product(range(b.size), repeat=a.size) if naive_is_epimorphism(a, b, f)]


def monotone_surjections(m: int, n: int) -> int:
    """Count non-decreasing surjections {0..m-1} -> {0..n-1} by enumeration."""
    count = 0
    for f in product(range(n), repeat=m):
        if all(f[i] <= f[i + 1] for i in range(m - 1)) and set(f) == set(range(n)):
            count += 1
    return count


def binomial_count(m: int, n: int) -> int:
    return comb(m - 1, n - 1)


# reference graphs: (vertex count, set of frozenset edges)

def path_graph(k):
    return k, {frozenset((i, i + 1)) for i in range(k - 1)}


def cycle_graph(k):
    return k, {frozenset((i, (i + 1) % k)) for i in range(k)}


def king_grid(*sides):
    """Vertices are coordinate tuples; adjacent iff every coordinate differs by at most 1."""
    points = list(product(*(range(s) for s in sides)))
    index = {p: i for i, p in enumerate(points)}
    edges = set()
    for p, q in combinations(points, 2):
        if all(abs(x - y) <= 1 for x, y in zip(p, q)):
            edges.add(frozenset((index[p], index[q])))
    return len(points), edges


def subdivision(n_vertices, edge_list, k):
    """Replace each edge by a path with ``k`` edges; loops become ``k``-cycles.

    Returns the underlying simple graph, so parallel edges collapse when
    ``k == 1``.
    """
    edges = set()
    nxt = n_vertices
    for u, v in edge_list:
        chain = [u] + list(range(nxt, nxt + k - 1)) + [v]
        nxt += k - 1
        for x, y in zip(chain, chain[1:]):
            if x != y:
                edges.add(frozenset((x, y)))
    used = {x for e in edges for x in e} | set(range(n_vertices))
    relabel = {x: i for i, x in enumerate(sorted(used))}
    return len(relabel), {frozenset(relabel[x] for x in e) for e in edges}


def disjoint_union(*graphs):
    total, edges = 0, set()
    for n, es in graphs:
        edges |= {frozenset(x + total for x in e) for e in es}
        total += n
    return total, edges


def as_graph(g):
    """Accept a QuotientGraph or a ``(n, edges)`` pair."""
    if hasattr(g, "edges") and hasattr(g, "n_vertices"):
        return g.n_vertices, {frozenset(e) for e in g.edges}
    n, es = g
    return n, {frozenset(e) for e in es}


def graphs_isomorphic(g, h) -> bool:
    """Exhaustive backtracking isomorphism test.

    Vertices of ``g`` are placed in breadth-first order; a candidate image
    must have equal degree and agree on adjacency with every vertex placed
    so far.  Complete search, no invariants beyond degree.
    """
    n, eg = as_graph(g)
    m, eh = as_graph(h)
    if n != m or len(eg) != len(eh):
        return False
    adj_g = [set() for _ in range(n)]
    adj_h = [set() for _ in range(n)]
    for e in eg:
        x, y = tuple(e)
        adj_g[x].add(y)
        adj_g[y].add(x)
    for e in eh:
        x, y = tuple(e)
        adj_h[x].add(y)
        adj_h[y].add(x)
    if sorted(map(len, adj_g)) != sorted(map(len, adj_h)):
        return False

    order, seen = [], set()
    for start in range(n):
        if start in seen:
            continue
        seen.add(start)
        queue = [start]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(adj_g[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)

    phi = {}
    used = set()

    def extend(i):
        if i == n:
            return True
        x = order[i]
        for y in range(n):
            if y in used or len(adj_h[y]) != len(adj_g[x]):
                continue
            if all((phi[z] in adj_h[y]) == (z in adj_g[x]) for z in phi):
                phi[x] = y
                used.add(y)
                if extend(i + 1):
                    return True
                del phi[x]
                used.discard(y)
        return False

    return extend(0)
