"""Finite relational structures over finite signatures.

Universes are always ``{0, ..., size - 1}``; relations are sets of integer
tuples.  Structures are immutable and hashable, so they can be used as
cache keys by the epimorphism search.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple


class ValidationError(ValueError):
    """Raised when a structure is used where a valid one is required."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid structure: {lines}")


@dataclass(frozen=True)
class Signature:
    """Relation symbols with arities plus a distinguished binary symbol.

    ``constants`` and ``functions`` are only meaningful before
    relationalization; a purely relational signature leaves them empty.
    """

    relations: tuple[tuple[str, int], ...]
    distinguished: str = "R"
    constants: tuple[str, ...] = ()
    functions: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        rels = tuple(sorted((str(n), int(k)) for n, k in self.relations))
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "constants", tuple(self.constants))
        object.__setattr__(self, "functions", tuple((str(n), int(k)) for n, k in self.functions))
        names = [n for n, _ in rels] + list(self.constants) + [n for n, _ in self.functions]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise ValueError(f"duplicate symbol names: {dupes}")
        for n, k in rels + self.functions:
            if k < 1:
                raise ValueError(f"symbol {n!r} must have positive arity, got {k}")
        if dict(rels).get(self.distinguished) != 2:
            raise ValueError(f"distinguished symbol {self.distinguished!r} must be a binary relation")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.relations)

    def arity(self, name: str) -> int:
        for n, k in self.relations:
            if n == name:
                return k
        raise KeyError(name)

    @property
    def is_relational(self) -> bool:
        return not self.constants and not self.functions

    def with_relations(self, extra: Iterable[tuple[str, int]], distinguished: str | None = None) -> Signature:
        return Signature(self.relations + tuple(extra), distinguished or self.distinguished)

    def without(self, *names: str) -> Signature:
        return Signature(tuple((n, k) for n, k in self.relations if n not in names), self.distinguished)


class Structure:
    """A finite structure: ``size`` elements and one tuple-set per symbol.

    Construction only normalizes; use :func:`validate` to check
    well-formedness.  Two structures are equal when signature, size and
    every interpretation coincide.
    """

    __slots__ = ("sig", "size", "interp", "_hash")

    def __init__(self, sig: Signature, size: int, interp: Mapping[str, Iterable[Iterable[int]]]):
        self.sig = sig
        self.size = int(size)
        self.interp = {name: frozenset(tuple(int(x) for x in t) for t in tuples)
                       for name, tuples in interp.items()}
        self._hash = None

    def __getitem__(self, name: str) -> frozenset:
        return self.interp[name]

    def tuples(self, name: str) -> list[tuple[int, ...]]:
        """The interpretation of ``name`` as a sorted list."""
        return sorted(self.interp[name])

    @property
    def universe(self) -> range:
        return range(self.size)

    def _key(self):
        return (self.sig, self.size, frozenset(self.interp.items()))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Structure):
            return NotImplemented
        return (self.size == other.size and self.sig == other.sig
                and self.interp == other.interp)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        rels = ", ".join(f"{n}:{len(self.interp.get(n, ()))}" for n in self.sig.names)
        return f"Structure(size={self.size}, {rels})"

    def expand(self, sig: Signature, **extra: Iterable[Iterable[int]]) -> Structure:
        """Same universe, extra interpretations added under a larger signature."""
        interp = dict(self.interp)
        interp.update(extra)
        return Structure(sig, self.size, interp)

    def reduct(self, *drop: str) -> Structure:
        """Forget the symbols in ``drop``."""
        return Structure(self.sig.without(*drop), self.size,
                         {n: t for n, t in self.interp.items() if n not in drop})


class Violation(NamedTuple):
    kind: str  # "empty" | "coverage" | "arity" | "range"
    symbol: str | None
    detail: str

    def __str__(self):
        where = f" [{self.symbol}]" if self.symbol else ""
        return f"{self.kind}{where}: {self.detail}"


def validate(s: Structure) -> list[Violation]:
    """Every arity, range and coverage violation of ``s``; empty iff valid."""
    out = []
    if s.size < 1:
        out.append(Violation("empty", None, f"universe size {s.size} < 1"))
    expected = set(s.sig.names)
    for name in sorted(expected - s.interp.keys()):
        out.append(Violation("coverage", name, "symbol has no interpretation"))
    for name in sorted(s.interp.keys() - expected):
        out.append(Violation("coverage", name, "interpretation for a symbol outside the signature"))
    for name in sorted(expected & s.interp.keys()):
        k = s.sig.arity(name)
        for t in sorted(s.interp[name]):
            if len(t) != k:
                out.append(Violation("arity", name, f"tuple {t} has length {len(t)}, expected {k}"))
            bad = [x for x in t if not 0 <= x < s.size]
            if bad:
                out.append(Violation("range", name, f"tuple {t} has entries {bad} outside 0..{s.size - 1}"))
    return out


def check(s: Structure) -> Structure:
    """Return ``s`` unchanged, raising :class:`ValidationError` if invalid."""
    problems = validate(s)
    if problems:
        raise ValidationError(problems)
    return s


def equal(s: Structure, t: Structure) -> bool:
    return s == t


@dataclass(frozen=True)
class PartialStructure:
    """A structure that may also carry constants and function tables.

    ``functions`` maps a name to its graph: a list of ``(x_1, ..., x_m, y)``
    tuples covering every argument tuple exactly once.
    """

    base: Structure
    constants: Mapping[str, int] = field(default_factory=dict)
    functions: Mapping[str, Iterable[Iterable[int]]] = field(default_factory=dict)

    def validate(self) -> list[Violation]:
        out = validate(self.base)
        n = self.base.size
        sig = self.base.sig
        if set(self.constants) != set(sig.constants):
            out.append(Violation("coverage", None, "constant assignments do not match signature"))
        for c, v in sorted(self.constants.items()):
            if not 0 <= v < n:
                out.append(Violation("range", c, f"constant value {v} outside 0..{n - 1}"))
        fsig = dict(sig.functions)
        if set(self.functions) != set(fsig):
            out.append(Violation("coverage", None, "function tables do not match signature"))
        for f, table in sorted(self.functions.items()):
            m = fsig.get(f)
            if m is None:
                continue
            rows = [tuple(r) for r in table]
            if any(len(r) != m + 1 for r in rows):
                out.append(Violation("arity", f, f"table rows must have length {m + 1}"))
                continue
            if any(not 0 <= x < n for r in rows for x in r):
                out.append(Violation("range", f, "table entry outside universe"))
            args = [r[:-1] for r in rows]
            if len(set(args)) != len(args):
                out.append(Violation("arity", f, "function table is not single-valued"))
            if len(set(args)) != n ** m:
                out.append(Violation("coverage", f, f"function table covers {len(set(args))} of {n ** m} argument tuples"))
        return out


def relational_name(symbol: str) -> str:
    return f"R_{symbol}"


def relationalize(p: PartialStructure | Structure) -> Structure:
    """Replace constants by unary relations and functions by their graphs.

    A constant ``c`` becomes ``R_c = {(c,)}`` and an ``m``-ary function
    ``f`` becomes the ``(m+1)``-ary relation ``R_f``.  The universe and all
    existing relations are untouched, so epimorphisms are the same maps
    before and after.
    """
    if isinstance(p, Structure):
        p = PartialStructure(p)
    problems = p.validate()
    if problems:
        raise ValidationError(problems)
    sig = p.base.sig
    if sig.is_relational:
        return p.base
    extra = [(relational_name(c), 1) for c in sig.constants]
    extra += [(relational_name(f), m + 1) for f, m in sig.functions]
    taken = set(sig.names)
    clash = [n for n, _ in extra if n in taken]
    if clash:
        raise ValueError(f"relationalized names collide with existing symbols: {clash}")
    new_sig = Signature(sig.relations + tuple(extra), sig.distinguished)
    interp = dict(p.base.interp)
    for c in sig.constants:
        interp[relational_name(c)] = {(p.constants[c],)}
    for f, _ in sig.functions:
        interp[relational_name(f)] = {tuple(r) for r in p.functions[f]}
    return Structure(new_sig, p.base.size, interp)
