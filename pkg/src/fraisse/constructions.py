"""Disjoint sums, products and anchor identification of structures and of
their fundamental sequences.

Fresh marker symbols (``P1``/``P2`` for sums, ``r1``/``r2`` for products,
``S`` for identification) get a ``_k`` suffix when the name is already in
use, so constructions can be iterated.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence, Union

from .epi import Morphism, is_epimorphism
from .families import ORDER, arc_sequence, singleton_sequence
from .family import FundamentalSequence
from .structure import Signature, Structure


def fresh_name(base: str, taken) -> str:
    if base not in taken:
        return base
    k = 1
    while f"{base}_{k}" in taken:
        k += 1
    return f"{base}_{k}"


def _merge(sig1: Signature, sig2: Signature):
    if sig1.distinguished != sig2.distinguished:
        raise ValueError(f"distinguished symbols differ: {sig1.distinguished!r} vs {sig2.distinguished!r}")
    a1, a2 = dict(sig1.relations), dict(sig2.relations)
    clash = sorted(n for n in a1.keys() & a2.keys() if a1[n] != a2[n])
    if clash:
        raise ValueError(f"symbols with the same name but different arity: {clash}")
    shared = (a1.keys() & a2.keys()) - {sig1.distinguished}
    return a1, a2, shared


# --- disjoint sum ----------------------------------------------------------

class SumStructure(Structure):
    """``A1 + A2`` with ``A2`` shifted by ``|A1|``; ``markers`` name the
    unary predicates holding each block."""

    __slots__ = ("components", "markers")

    @property
    def offset(self) -> int:
        return self.components[0].size


def oplus(a1: Structure, a2: Structure) -> SumStructure:
    """Disjoint sum.  Symbols other than the distinguished one that both
    sides share are interpreted as the union of the two blocks."""
    ar1, ar2, _ = _merge(a1.sig, a2.sig)
    taken = ar1.keys() | ar2.keys()
    p1 = fresh_name("P1", taken)
    p2 = fresh_name("P2", taken | {p1})
    sig = Signature(tuple({**ar1, **ar2}.items()) + ((p1, 1), (p2, 1)), a1.sig.distinguished)
    off = a1.size
    interp = {}
    for name in {**ar1, **ar2}:
        left = a1.interp.get(name, ())
        right = [tuple(x + off for x in t) for t in a2.interp.get(name, ())]
        interp[name] = list(left) + right
    interp[p1] = [(x,) for x in range(off)]
    interp[p2] = [(x + off,) for x in range(a2.size)]
    s = SumStructure(sig, off + a2.size, interp)
    s.components = (a1, a2)
    s.markers = (p1, p2)
    return s


def oplus_epi(f1: Morphism, f2: Morphism) -> Morphism:
    src = oplus(f1.source, f2.source)
    dst = oplus(f1.target, f2.target)
    off = f1.target.size
    return Morphism(src, dst, list(f1.map) + [y + off for y in f2.map])


def decompose_oplus_epi(f: Morphism) -> tuple[Morphism, Morphism]:
    """Split an epimorphism between sums into its two block maps."""
    src, dst = f.source, f.target
    if not (isinstance(src, SumStructure) and isinstance(dst, SumStructure)):
        raise ValueError("decomposition needs a map between sum structures")
    k, off = src.offset, dst.offset
    for x, y in enumerate(f.map):
        if (x < k) != (y < off):
            raise ValueError(f"element {x} of block {1 if x < k else 2} maps to {y} in the other block")
    if not is_epimorphism(f):
        raise ValueError("map is not an epimorphism")
    a1, a2 = src.components
    b1, b2 = dst.components
    return (Morphism(a1, b1, f.map[:k]), Morphism(a2, b2, [y - off for y in f.map[k:]]))


# --- product -----------------------------------------------------------------

class ProductStructure(Structure):
    """``A x B`` on pairs in row-major order: ``(a, b)`` is ``a * |B| + b``.

    ``renamed`` holds one dict per factor mapping each symbol that was
    qualified, because both factors used the name, to its new name.
    """

    __slots__ = ("factors", "markers", "renamed")

    def pair(self, x: int) -> tuple[int, int]:
        return divmod(x, self.factors[1].size)

    def index(self, a: int, b: int) -> int:
        return a * self.factors[1].size + b


def otimes(a: Structure, b: Structure) -> ProductStructure:
    """Product: ``R`` holds coordinatewise, other symbols look at one
    coordinate only, ``r1``/``r2`` relate pairs with equal first/second
    coordinate.  A non-distinguished name used by both factors becomes
    ``name@1`` and ``name@2``."""
    ar1, ar2, shared = _merge(a.sig, b.sig)
    rn = a.sig.distinguished
    names1 = {n: (f"{n}@1" if n in shared else n) for n in ar1 if n != rn}
    names2 = {n: (f"{n}@2" if n in shared else n) for n in ar2 if n != rn}
    taken = set(names1.values()) | set(names2.values()) | {rn}
    r1 = fresh_name("r1", taken)
    r2 = fresh_name("r2", taken | {r1})
    rels = [(rn, 2), (r1, 2), (r2, 2)]
    rels += [(names1[n], ar1[n]) for n in names1] + [(names2[n], ar2[n]) for n in names2]
    nb = b.size
    idx = lambda x, y: x * nb + y  # noqa: E731
    interp = {rn: [(idx(x, y), idx(x2, y2)) for x, x2 in a[rn] for y, y2 in b[rn]]}
    for n, new in names1.items():
        interp[new] = [tuple(idx(x, y) for x, y in zip(t, ys))
                       for t in a[n] for ys in product(range(nb), repeat=len(t))]
    for n, new in names2.items():
        interp[new] = [tuple(idx(x, y) for x, y in zip(xs, t))
                       for t in b[n] for xs in product(range(a.size), repeat=len(t))]
    interp[r1] = [(idx(x, y), idx(x, y2)) for x in range(a.size) for y in range(nb) for y2 in range(nb)]
    interp[r2] = [(idx(x, y), idx(x2, y)) for y in range(nb) for x in range(a.size) for x2 in range(a.size)]
    s = ProductStructure(Signature(tuple(rels), rn), a.size * nb, interp)
    s.factors = (a, b)
    s.markers = (r1, r2)
    s.renamed = ({n: v for n, v in names1.items() if v != n}, {n: v for n, v in names2.items() if v != n})
    return s


def product_map(psi: Sequence[int], theta: Sequence[int], target_width: int) -> tuple[int, ...]:
    return tuple(p * target_width + t for p in psi for t in theta)


def otimes_epi(psi: Morphism, theta: Morphism) -> Morphism:
    src = otimes(psi.source, theta.source)
    dst = otimes(psi.target, theta.target)
    return Morphism(src, dst, product_map(psi.map, theta.map, theta.target.size))


def factorize_product_epi(f: Morphism) -> tuple[Morphism, Morphism]:
    """Write an epimorphism between products as ``psi x theta``."""
    src, dst = f.source, f.target
    if not (isinstance(src, ProductStructure) and isinstance(dst, ProductStructure)):
        raise ValueError("factorization needs a map between product structures")
    (a, b), (c, d) = src.factors, dst.factors
    img = [dst.pair(y) for y in f.map]
    for x in range(a.size):
        for y in range(1, b.size):
            if img[src.index(x, y)][0] != img[src.index(x, 0)][0]:
                raise ValueError(f"not rectangular: {(x, 0)} and {(x, y)} are {src.markers[0]}-related "
                                 f"but their images {img[src.index(x, 0)]} and {img[src.index(x, y)]} are not")
    for y in range(b.size):
        for x in range(1, a.size):
            if img[src.index(x, y)][1] != img[src.index(0, y)][1]:
                raise ValueError(f"not rectangular: {(0, y)} and {(x, y)} are {src.markers[1]}-related "
                                 f"but their images {img[src.index(0, y)]} and {img[src.index(x, y)]} are not")
    if not is_epimorphism(f):
        raise ValueError("map is not an epimorphism")
    psi = [img[src.index(x, 0)][0] for x in range(a.size)]
    theta = [img[src.index(0, y)][1] for y in range(b.size)]
    return Morphism(a, c, psi), Morphism(b, d, theta)


# --- sequences ---------------------------------------------------------------

def _min_depth(*seqs):
    depths = [s.max_depth for s in seqs if s.max_depth is not None]
    return min(depths) if depths else None


def oplus_family(s1: FundamentalSequence, s2: FundamentalSequence) -> FundamentalSequence:
    def level(n):
        return oplus(s1.level(n), s2.level(n))

    def bond(n):
        off = s1.level(n).size
        return s1.bond_map(n) + tuple(y + off for y in s2.bond_map(n))

    def classes(n):
        off = s1.level(n).size
        return s1.classes(n) + [[x + off for x in c] for c in s2.classes(n)]

    sig = oplus(s1.level(0), s2.level(0)).sig
    glued = s1.has_classes or s2.has_classes
    return FundamentalSequence(f"({s1.name}+{s2.name})", sig, level, bond, _min_depth(s1, s2),
                               classes if glued else None)


def otimes_family(s1: FundamentalSequence, s2: FundamentalSequence) -> FundamentalSequence:
    def level(n):
        return otimes(s1.level(n), s2.level(n))

    def bond(n):
        return product_map(s1.bond_map(n), s2.bond_map(n), s2.level(n).size)

    def classes(n):
        w = s2.level(n).size
        return [[x * w + y for x in c1 for y in c2] for c1 in s1.classes(n) for c2 in s2.classes(n)]

    sig = otimes(s1.level(0), s2.level(0)).sig
    glued = s1.has_classes or s2.has_classes
    return FundamentalSequence(f"({s1.name}x{s2.name})", sig, level, bond, _min_depth(s1, s2),
                               classes if glued else None)


def sum_of(seqs: Sequence[FundamentalSequence]) -> FundamentalSequence:
    out = seqs[0]
    for s in seqs[1:]:
        out = oplus_family(out, s)
    return out


# --- identification -----------------------------------------------------------

def order_min(s: Structure, n: int = 0) -> int:
    leq = s[ORDER]
    return next(x for x in range(s.size) if all((x, y) in leq for y in range(s.size)))


def order_max(s: Structure, n: int = 0) -> int:
    leq = s[ORDER]
    return next(x for x in range(s.size) if all((y, x) in leq for y in range(s.size)))


Selector = Union[str, Callable[[Structure, int], int]]
_SELECTORS = {"min": order_min, "max": order_max}


@dataclass
class GlueSpec:
    """Which anchor points of which components get identified.

    ``anchors[i] = (component, selector)`` where the selector is ``"min"``,
    ``"max"`` or a callable ``(level_structure, n) -> element``; ``glue``
    lists pairs of anchor indices.  Anchors must be carried onto anchors by
    every bond; this is checked up to ``check_depth``.
    """

    components: Sequence[FundamentalSequence]
    anchors: Sequence[tuple[int, Selector]]
    glue: Sequence[tuple[int, int]] = ()
    symbol: str = "S"
    check_depth: int = 4


def _anchor_classes(n_anchors, glue):
    parent = list(range(n_anchors))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in glue:
        parent[find(i)] = find(j)
    groups = {}
    for i in range(n_anchors):
        groups.setdefault(find(i), []).append(i)
    return [g for g in groups.values() if len(g) > 1]


def _merge_blocks(size, blocks):
    parent = list(range(size))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for blk in blocks:
        for x in blk[1:]:
            parent[find(x)] = find(blk[0])
    groups = {}
    for x in range(size):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def identify(spec: GlueSpec) -> FundamentalSequence:
    """Expand the summed components by a fresh binary symbol ``S``: the
    distinguished relation plus all pairs of glued anchors.  ``S`` becomes
    the distinguished symbol, bonds are unchanged, and each glued class of
    anchors forms one vertex of the quotient approximant."""
    comps = list(spec.components)
    base = sum_of(comps)
    for i, (c, _) in enumerate(spec.anchors):
        if not 0 <= c < len(comps):
            raise ValueError(f"anchor {i} refers to missing component {c}")
    for i, j in spec.glue:
        if not (0 <= i < len(spec.anchors) and 0 <= j < len(spec.anchors)):
            raise ValueError(f"glue pair {(i, j)} refers to a missing anchor")
    selectors = [(c, _SELECTORS[s] if isinstance(s, str) else s) for c, s in spec.anchors]
    classes = _anchor_classes(len(selectors), spec.glue)
    s_name = fresh_name(spec.symbol, set(base.signature.names))
    sig = base.signature.with_relations([(s_name, 2)], distinguished=s_name)
    rn = base.signature.distinguished

    def anchor_points(n):
        offs, total = [], 0
        for comp in comps:
            offs.append(total)
            total += comp.level(n).size
        return [offs[c] + sel(comps[c].level(n), n) for c, sel in selectors]

    def level(n):
        s = base.level(n)
        pts = anchor_points(n)
        glued = {(pts[i], pts[j]) for cls in classes for i in cls for j in cls}
        return s.expand(sig, **{s_name: set(s[rn]) | glued})

    def glue_classes(n):
        pts = anchor_points(n)
        return _merge_blocks(base.level(n).size, base.classes(n) + [[pts[i] for i in cls] for cls in classes])

    limit = spec.check_depth if base.max_depth is None else min(spec.check_depth, base.max_depth)
    for n in range(limit):
        bond = base.bond_map(n)
        lower, upper = anchor_points(n), anchor_points(n + 1)
        for i, (x, y) in enumerate(zip(upper, lower)):
            if bond[x] != y:
                raise ValueError(f"anchor {i} is not bond-compatible at level {n + 1}: "
                                 f"element {x} maps to {bond[x]}, expected {y}")

    seq = FundamentalSequence(f"glue{base.name}", sig, level, base.bond_map, base.max_depth, glue_classes)
    for n in range(limit):
        if not is_epimorphism(seq.bond(n)):
            raise ValueError(f"bond out of level {n + 1} does not carry {s_name} onto {s_name}")
    return seq


def graph_family(n_vertices: int, edges: Sequence[tuple[int, int]], check_depth: int = 3) -> FundamentalSequence:
    """One arc per edge, summed, with arc endpoints glued according to the
    incidences of the graph.  Isolated vertices become singleton components.
    Loops and parallel edges are allowed."""
    edges = [tuple(e) for e in edges]
    if not edges:
        raise ValueError("graph needs at least one edge")
    if any(not 0 <= v < n_vertices for e in edges for v in e):
        raise ValueError("edge endpoint outside the vertex range")
    comps = [arc_sequence() for _ in edges]
    anchors, at_vertex = [], {v: [] for v in range(n_vertices)}
    for i, (u, v) in enumerate(edges):
        at_vertex[u].append(len(anchors))
        anchors.append((i, "min"))
        at_vertex[v].append(len(anchors))
        anchors.append((i, "max"))
    for v in range(n_vertices):
        if not at_vertex[v]:
            comps.append(singleton_sequence())
            at_vertex[v].append(len(anchors))
            anchors.append((len(comps) - 1, "min"))
    glue = [(ids[0], j) for ids in at_vertex.values() for j in ids[1:]]
    seq = identify(GlueSpec(comps, anchors, glue, check_depth=check_depth))
    seq.name = f"graph({n_vertices};{edges})"
    return seq
