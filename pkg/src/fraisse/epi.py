"""Epimorphisms between finite structures.

An epimorphism ``A -> B`` is a surjection of universes whose coordinatewise
image of every relation of ``A`` is exactly the matching relation of ``B``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .structure import Structure


class SignatureMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Morphism:
    source: Structure
    target: Structure
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(x) for x in self.map))
        if self.source.sig != self.target.sig:
            raise SignatureMismatch("source and target have different signatures")
        if len(self.map) != self.source.size:
            raise ValueError(f"map has length {len(self.map)}, source has {self.source.size} elements")
        bad = [x for x in self.map if not 0 <= x < self.target.size]
        if bad:
            raise ValueError(f"map entries {bad} outside target universe 0..{self.target.size - 1}")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def fibers(self) -> list[list[int]]:
        out = [[] for _ in range(self.target.size)]
        for x, y in enumerate(self.map):
            out[y].append(x)
        return out


def identity(a: Structure) -> Morphism:
    return Morphism(a, a, range(a.size))


def image(a: Structure, name: str, f: Sequence[int]) -> set[tuple[int, ...]]:
    return {tuple(f[x] for x in t) for t in a.interp[name]}


def _is_epi_map(a: Structure, b: Structure, f: Sequence[int]) -> bool:
    if len(set(f)) != b.size:
        return False
    return all(image(a, name, f) == b.interp[name] for name in a.sig.names)


def is_epimorphism(m: Morphism) -> bool:
    return _is_epi_map(m.source, m.target, m.map)


def is_isomorphism(m: Morphism) -> bool:
    return m.source.size == m.target.size and is_epimorphism(m)


def compose(f: Morphism, g: Morphism) -> Morphism:
    """``g`` after ``f``."""
    if f.target is not g.source and f.target != g.source:
        raise ValueError("cannot compose: target of the first map is not the source of the second")
    return Morphism(f.source, g.target, [g.map[y] for y in f.map])


def compose_maps(*maps: Sequence[int]) -> tuple[int, ...]:
    """Compose raw maps, first applied first."""
    out = tuple(maps[0])
    for g in maps[1:]:
        out = tuple(g[y] for y in out)
    return out


def _search(a: Structure, b: Structure, domains=None) -> Iterator[tuple[int, ...]]:
    # Backtrack over source elements in increasing order.  A tuple is checked
    # as soon as its largest entry is assigned; image exactness is settled at
    # the leaves, with cheap cover-count pruning for surjectivity and unary
    # relations along the way.
    if a.sig != b.sig:
        raise SignatureMismatch("source and target have different signatures")
    n, k = a.size, b.size
    if k == 0 or n < k:
        return
    names = a.sig.names
    checks = [[] for _ in range(n)]
    for name in names:
        target = b.interp[name]
        for t in a.interp[name]:
            checks[max(t)].append((t, target))
    cands = [tuple(range(k)) if domains is None else tuple(sorted(domains[x])) for x in range(n)]

    unary = []
    for name in names:
        if a.sig.arity(name) != 1:
            continue
        members = [x for (x,) in a.interp[name]]
        need = {y for (y,) in b.interp[name]}
        remaining = [0] * (n + 1)
        for x in members:
            remaining[x] += 1
        for i in range(n - 1, -1, -1):
            remaining[i] += remaining[i + 1]
        unary.append((frozenset(members), need, remaining, [0] * k))

    f = [0] * n
    hits = [0] * k
    state = {"uncovered": k}

    def unary_ok(i):
        for members, need, remaining, cover in unary:
            missing = sum(1 for y in need if cover[y] == 0)
            if missing > remaining[i]:
                return False
        return True

    def leaf_ok():
        return all(len(image(a, name, f)) == len(b.interp[name]) for name in names)

    def rec(i):
        if i == n:
            if leaf_ok():
                yield tuple(f)
            return
        for y in cands[i]:
            f[i] = y
            if not all(tuple(f[x] for x in t) in target for t, target in checks[i]):
                continue
            hits[y] += 1
            if hits[y] == 1:
                state["uncovered"] -= 1
            for members, _, _, cover in unary:
                if i in members:
                    cover[y] += 1
            if n - i - 1 >= state["uncovered"] and unary_ok(i + 1):
                yield from rec(i + 1)
            for members, _, _, cover in unary:
                if i in members:
                    cover[y] -= 1
            hits[y] -= 1
            if hits[y] == 0:
                state["uncovered"] += 1

    yield from rec(0)


@lru_cache(maxsize=4096)
def _epi_maps(a: Structure, b: Structure) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(_search(a, b)))


def epimorphism_maps(a: Structure, b: Structure, domains=None) -> tuple[tuple[int, ...], ...]:
    """Raw maps of all epimorphisms ``a -> b`` in lexicographic order.

    ``domains[x]``, when given, restricts the admissible images of ``x``.
    """
    if domains is None:
        return _epi_maps(a, b)
    return tuple(sorted(_search(a, b, domains)))


def find_epimorphism(a: Structure, b: Structure, domains=None) -> tuple[int, ...] | None:
    """The lexicographically first epimorphism map, or None."""
    # the search visits maps in lexicographic order already
    return next(_search(a, b, domains), None)


def enumerate_automorphisms(a: Structure) -> list[Morphism]:
    return [Morphism(a, a, f) for f in _epi_maps(a, a)]


def enumerate_epimorphisms(a: Structure, b: Structure, modulo_automorphisms: bool = False) -> list[Morphism]:
    """All epimorphisms ``a -> b``, lexicographic by map.

    With ``modulo_automorphisms`` only the lexicographically least map of
    each orbit under post-composition with automorphisms of ``b`` is kept.
    """
    maps = _epi_maps(a, b)
    if modulo_automorphisms:
        autos = _epi_maps(b, b)
        maps = [f for f in maps if all(tuple(g[y] for y in f) >= f for g in autos)]
    return [Morphism(a, b, f) for f in maps]


class Uniqueness(NamedTuple):
    """How many epimorphisms exist; ``witness`` is set only when exactly one."""

    count: int
    witness: Morphism | None = None

    @property
    def kind(self) -> str:
        return {0: "none", 1: "unique"}.get(self.count, "multiple")

    @property
    def is_unique(self) -> bool:
        return self.count == 1


def unique_epimorphism(a: Structure, b: Structure) -> Uniqueness:
    maps = _epi_maps(a, b)
    if len(maps) == 1:
        return Uniqueness(1, Morphism(a, b, maps[0]))
    return Uniqueness(len(maps))


def refines(m: Morphism, partition: Iterable[Iterable[int]]) -> bool:
    """True iff every fiber of ``m`` lies inside one block of ``partition``."""
    blocks = [set(b) for b in partition]
    seen = [x for blk in blocks for x in blk]
    if any(not blk for blk in blocks) or sorted(seen) != list(range(m.source.size)):
        raise ValueError("not a partition of the source universe")
    block_of = {x: i for i, blk in enumerate(blocks) for x in blk}
    return all(len({block_of[x] for x in fib}) <= 1 for fib in m.fibers())
