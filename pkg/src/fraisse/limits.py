"""Finite-level shadows of the inverse limit: property certificates,
quotient approximants and their coherence along bonds."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .family import FundamentalSequence
from .structure import Structure

PROPERTIES = ("reflexive", "symmetric", "antisymmetric", "transitive", "total",
              "has-first", "has-last", "connected")

# what a certificate says about the limit once every level passes
TRANSFER = {
    "reflexive": "reflexive at every level, hence reflexive in the inverse limit",
    "symmetric": "symmetric at every level, hence symmetric in the inverse limit",
    "antisymmetric": "antisymmetric at every level, hence antisymmetric in the inverse limit",
    "transitive": "transitive at every level, hence transitive in the inverse limit",
    "total": "total at every level, hence total in the inverse limit",
    "has-first": "a first element at every level, hence a first element in the inverse limit",
    "has-last": "a last element at every level, hence a last element in the inverse limit",
    "connected": ("connected graph at every level checked; finite-level claim only: no level "
                  "admits a vertex partition without a crossing edge"),
}


def _pairs(s: Structure, rel: str):
    if rel not in s.interp:
        raise KeyError(f"no symbol {rel!r}")
    if s.sig.arity(rel) != 2:
        raise ValueError(f"symbol {rel!r} is not binary")
    return s[rel]


def _connected(n, pairs):
    adj = [set() for _ in range(n)]
    for x, y in pairs:
        adj[x].add(y)
        adj[y].add(x)
    seen, stack = {0}, [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def check_level_property(s: Structure, rel: str, prop: str) -> bool:
    r = _pairs(s, rel)
    u = range(s.size)
    if prop == "reflexive":
        return all((x, x) in r for x in u)
    if prop == "symmetric":
        return all((y, x) in r for x, y in r)
    if prop == "antisymmetric":
        return all(x == y or (y, x) not in r for x, y in r)
    if prop == "transitive":
        after = {}
        for x, y in r:
            after.setdefault(x, set()).add(y)
        return all((x, z) in r for x, y in r for z in after.get(y, ()))
    if prop == "total":
        return all((x, y) in r or (y, x) in r for x in u for y in u)
    if prop == "has-first":
        return any(all((x, y) in r for y in u) for x in u)
    if prop == "has-last":
        return any(all((y, x) in r for y in u) for x in u)
    if prop == "connected":
        return _connected(s.size, r)
    raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")


@dataclass(frozen=True)
class PropertyCertificate:
    property: str
    relation: str
    sequence: str
    depth: int
    holds: bool
    failing_level: int | None
    transfer: str

    def __bool__(self):
        return self.holds

    def to_dict(self):
        return {"property": self.property, "relation": self.relation, "sequence": self.sequence,
                "levels": [0, self.depth], "certified": self.holds,
                "failing_level": self.failing_level, "transfer": self.transfer if self.holds else None}


def certify(seq: FundamentalSequence, rel: str, prop: str, depth: int) -> PropertyCertificate:
    """Check ``prop`` of ``rel`` on levels ``0..depth``.

    The result is truthy only when every level passes; otherwise it names
    the first failing level.
    """
    if prop not in TRANSFER:
        raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    failing = next((n for n in range(depth + 1) if not check_level_property(seq.level(n), rel, prop)), None)
    return PropertyCertificate(prop, rel, seq.name, depth, failing is None, failing, TRANSFER[prop])


@dataclass(frozen=True)
class QuotientGraph:
    """Simple graph approximating the limit quotient at one level.

    Vertices are the level's elements, or blocks of them when the sequence
    identifies points (``classes``); edges are the symmetrized relation
    between distinct vertices; ``loops`` records whether every element is
    related to itself.
    """

    level: int
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    loops: bool
    classes: tuple[tuple[int, ...], ...] | None = None

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)


def structure_graph(s: Structure, rel: str | None = None, classes=None, level: int = 0) -> QuotientGraph:
    rel = rel or s.sig.distinguished
    r = _pairs(s, rel)
    if classes is None:
        vertex = list(range(s.size))
        n = s.size
    else:
        blocks = sorted(sorted(c) for c in classes)
        vertex = [0] * s.size
        for i, blk in enumerate(blocks):
            for x in blk:
                vertex[x] = i
        n = len(blocks)
    edges = sorted({tuple(sorted((vertex[x], vertex[y]))) for x, y in r if vertex[x] != vertex[y]})
    loops = all((x, x) in r for x in range(s.size))
    merged = None
    if classes is not None and n != s.size:
        merged = tuple(tuple(b) for b in blocks)
    return QuotientGraph(level, n, tuple(edges), loops, merged)


def quotient_graph(seq: FundamentalSequence, n: int) -> QuotientGraph:
    classes = seq.classes(n) if seq.has_classes else None
    return structure_graph(seq.level(n), seq.signature.distinguished, classes, level=n)


def _vertex_map(seq, n, m, gn, gm):
    f = seq.composite_map(n, m)
    if gn.classes is None and gm.classes is None:
        return list(f)
    cls_n = gn.classes or tuple((x,) for x in range(seq.level(n).size))
    cls_m = gm.classes or tuple((x,) for x in range(seq.level(m).size))
    where = {x: i for i, blk in enumerate(cls_n) for x in blk}
    out = []
    for blk in cls_m:
        targets = {where[f[x]] for x in blk}
        if len(targets) != 1:
            return None
        out.append(targets.pop())
    return out


def quotient_coherence(seq: FundamentalSequence, n: int, m: int) -> bool:
    """Does the composed bond ``D_m -> D_n`` induce a surjective graph map
    between the quotient approximants?  Edges must go to edges or collapse
    to a vertex, and every edge of the lower graph must be hit."""
    if n > m:
        raise ValueError("need n <= m")
    gn, gm = quotient_graph(seq, n), quotient_graph(seq, m)
    v = _vertex_map(seq, n, m, gn, gm)
    if v is None or set(v) != set(range(gn.n_vertices)):
        return False
    lower = set(gn.edges)
    hit = set()
    for x, y in gm.edges:
        a, b = sorted((v[x], v[y]))
        if a == b:
            continue
        if (a, b) not in lower:
            return False
        hit.add((a, b))
    return hit == lower


def export_graph(g: QuotientGraph, fmt: str = "dot") -> str:
    """Stable text rendering: vertices ascending, edges lexicographic."""
    fmt = fmt.lower()
    if fmt == "dot":
        lines = ["graph {"]
        lines += [f"  {v};" for v in range(g.n_vertices)]
        lines += [f"  {x} -- {y};" for x, y in g.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        d = {"level": g.level, "vertices": g.n_vertices, "edges": [list(e) for e in g.edges], "loops": g.loops}
        if g.classes is not None:
            d["classes"] = [list(c) for c in g.classes]
        return json.dumps(d) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected 'dot' or 'json'")
