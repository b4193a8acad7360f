"""Concrete families: finite chains (approximating the arc), the dyadic
Cantor-side levels, and small helpers for test harnesses."""
from __future__ import annotations

from itertools import product
from typing import Callable

from .epi import Morphism, is_epimorphism
from .family import Family, FundamentalSequence
from .structure import Signature, Structure

ORDER = "leq"
CHAIN_SIG = Signature((("R", 2), (ORDER, 2)), "R")


def chain(k: int) -> Structure:
    """``k`` points in their natural order; ``R`` joins each point to
    itself and to its immediate neighbours."""
    leq = [(i, j) for i in range(k) for j in range(i, k)]
    r = [(i, j) for i in range(k) for j in range(k) if abs(i - j) <= 1]
    return Structure(CHAIN_SIG, k, {"R": r, ORDER: leq})


def is_chain(s: Structure) -> bool:
    return s.sig == CHAIN_SIG and s == chain(s.size)


def arc_level(n: int) -> Structure:
    if n < 0:
        raise ValueError("level must be >= 0")
    return chain(2 ** n + 1)


def _halve(n: int, halving: str) -> Callable[[int], int]:
    if halving == "floor" or (halving == "alternate" and n % 2 == 0):
        return lambda k: k // 2
    if halving in ("alternate", "ceil"):
        return lambda k: (k + 1) // 2
    raise ValueError(f"unknown halving rule {halving!r}")


def arc_bond_map(n: int, halving: str = "alternate") -> tuple[int, ...]:
    """Map from level ``n + 1`` onto level ``n``.

    Each point of level ``n`` receives two consecutive points, except one
    endpoint which receives one.  ``"alternate"`` switches which endpoint
    that is from one level to the next (floor on even ``n``, ceiling on
    odd ``n``) so every fiber of a long composite grows; with ``"floor"``
    the top point keeps a single preimage forever.
    """
    h = _halve(n, halving)
    return tuple(h(k) for k in range(2 ** (n + 1) + 1))


def arc_bond(n: int, halving: str = "alternate") -> Morphism:
    return Morphism(arc_level(n + 1), arc_level(n), arc_bond_map(n, halving))


def arc_sequence(halving: str = "alternate") -> FundamentalSequence:
    name = "arc" if halving == "alternate" else f"arc-{halving}"
    return FundamentalSequence(name, CHAIN_SIG, arc_level, lambda n: arc_bond_map(n, halving))


def singleton_sequence() -> FundamentalSequence:
    return FundamentalSequence("singleton", CHAIN_SIG, lambda n: chain(1), lambda n: (0,))


def chain_family() -> Family:
    return Family("chain", CHAIN_SIG, lambda k: [chain(k)])


def singleton_family() -> Family:
    return Family("singleton", CHAIN_SIG, lambda k: [chain(1)] if k == 1 else [], max_size=1)


def arc_amalgamate(phi: Morphism, psi: Morphism) -> tuple[Structure, Morphism, Morphism]:
    """Close ``phi: B -> A`` and ``psi: C -> A`` into a commuting square.

    Point ``j`` of ``A`` gets a block of ``max(|phi^-1(j)|, |psi^-1(j)|)``
    points in ``D``; each block runs up its two fibers in order, parking
    surplus points on the last fiber element.
    """
    if phi.target != psi.target:
        raise ValueError("phi and psi must share a target")
    for name, m in (("phi", phi), ("psi", psi)):
        if not (is_chain(m.source) and is_chain(m.target)):
            raise ValueError(f"{name} must map between chain structures")
        if not is_epimorphism(m):
            raise ValueError(f"{name} is not an epimorphism")
    theta, rho = [], []
    for fb, fc in zip(phi.fibers(), psi.fibers()):
        width = max(len(fb), len(fc))
        theta += [fb[min(i, len(fb) - 1)] for i in range(width)]
        rho += [fc[min(i, len(fc) - 1)] for i in range(width)]
    d = chain(len(theta))
    return d, Morphism(d, phi.source, theta), Morphism(d, psi.source, rho)


# --- dyadic Cantor-side levels -------------------------------------------

def word(i: int, n: int) -> tuple[int, ...]:
    """The length-``n`` binary word with value ``i`` (first letter most significant)."""
    return tuple((i >> (n - 1 - j)) & 1 for j in range(n))


def word_name(s) -> str:
    return "rho_" + "".join(map(str, s))


def dyadic_related(u, v) -> bool:
    """Do ``u`` and ``v`` extend to infinite words naming the same dyadic
    point, i.e. ``p0111...`` and ``p1000...``?"""
    if u == v:
        return True
    if u > v:
        u, v = v, u
    j = next(i for i in range(len(u)) if u[i] != v[i])
    return (u[j], v[j]) == (0, 1) and all(u[j + 1:]) and not any(v[j + 1:])


class GlueSystem:
    """An identification of infinite binary words, seen through finite levels.

    ``related(u, v)`` must decide whether two words of equal length extend
    to identified infinite words.  Predicates ``rho_s`` are generated for
    every word ``s`` of length at most ``depth``.
    """

    def __init__(self, depth: int, related: Callable = dyadic_related, name: str = "custom"):
        if depth < 0:
            raise ValueError("truncation depth must be >= 0")
        self.depth = depth
        self.related = related
        self.name = name

    def signature(self) -> Signature:
        preds = [(word_name(s), 1) for k in range(self.depth + 1) for s in product((0, 1), repeat=k)]
        return Signature((("R", 2),) + tuple(preds), "R")


def dyadic_glue(depth: int) -> GlueSystem:
    return GlueSystem(depth, dyadic_related, "dyadic")


def cantor_level(g: GlueSystem, n: int) -> Structure:
    if not 0 <= n <= g.depth:
        raise ValueError(f"level {n} outside the truncation range 0..{g.depth}")
    words = [word(i, n) for i in range(2 ** n)]
    r = [(i, j) for i, u in enumerate(words) for j, v in enumerate(words) if g.related(u, v)]
    interp = {"R": r}
    for k in range(g.depth + 1):
        for s in product((0, 1), repeat=k):
            m = min(k, n)
            interp[word_name(s)] = [(i,) for i, u in enumerate(words) if u[:m] == s[:m]]
    return Structure(g.signature(), 2 ** n, interp)


def cantor_bond_map(n: int) -> tuple[int, ...]:
    """Restriction of words of length ``n + 1`` to their first ``n`` letters."""
    return tuple(i >> 1 for i in range(2 ** (n + 1)))


def cantor_sequence(g: GlueSystem) -> FundamentalSequence:
    return FundamentalSequence(f"cantor-{g.name}", g.signature(), lambda n: cantor_level(g, n),
                               cantor_bond_map, max_depth=g.depth)


def cantor_family(g: GlueSystem) -> Family:
    def by_size(k):
        n = k.bit_length() - 1
        return [cantor_level(g, n)] if k == 2 ** n and n <= g.depth else []
    return Family(f"cantor-{g.name}", g.signature(), by_size, max_size=2 ** g.depth)


def check_glue_system(g: GlueSystem, depth: int | None = None) -> list[str]:
    """Symmetry, reflexivity and bond compatibility of a user glue hook."""
    depth = g.depth if depth is None else min(depth, g.depth)
    problems = []
    for n in range(depth + 1):
        r = cantor_level(g, n)["R"]
        if any((i, i) not in r for i in range(2 ** n)):
            problems.append(f"level {n}: R is not reflexive")
        if any((j, i) not in r for i, j in r):
            problems.append(f"level {n}: R is not symmetric")
        if n < depth:
            bond = Morphism(cantor_level(g, n + 1), cantor_level(g, n), cantor_bond_map(n))
            if not is_epimorphism(bond):
                problems.append(f"level {n + 1}: restriction to level {n} is not an epimorphism")
    return problems
