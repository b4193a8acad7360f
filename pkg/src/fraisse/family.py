"""Bounded checks of the joint projection and amalgamation properties,
fundamental sequences and the rigidity criterion.

All checks are falsifiers: a pass means "no counterexample within the
stated bounds", never a proof.  Reports carry every witness needed to
re-check them with :func:`reverify`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count
from typing import Callable, Sequence

from .epi import Morphism, compose_maps, epimorphism_maps, find_epimorphism, is_epimorphism, unique_epimorphism
from .structure import Signature, Structure

VERIFIED = "verified-within-bounds"
COUNTEREXAMPLE = "counterexample"

BOUNDED_NOTE = ("Bounded evidence only: the property quantifies over an infinite family, "
                "so a pass means no counterexample exists within the stated bounds.")


class Family:
    """A deterministic, duplicate-free enumeration of structures by size.

    ``by_size(k)`` returns the members with ``k`` elements.
    """

    def __init__(self, name: str, signature: Signature, by_size: Callable[[int], Sequence[Structure]],
                 max_size: int | None = None):
        self.name = name
        self.signature = signature
        self._by_size = by_size
        self.max_size = max_size
        self._cache = {}

    @classmethod
    def from_structures(cls, name, structures):
        structures = list(dict.fromkeys(structures))
        sig = structures[0].sig
        groups = {}
        for s in structures:
            groups.setdefault(s.size, []).append(s)
        return cls(name, sig, lambda k: groups.get(k, []), max(groups))

    def of_size(self, k: int) -> list[Structure]:
        if k not in self._cache:
            members = list(dict.fromkeys(self._by_size(k))) if k >= 1 else []
            self._cache[k] = members
        return self._cache[k]

    def members_up_to(self, bound: int) -> list[Structure]:
        if self.max_size is not None:
            bound = min(bound, self.max_size)
        return [s for k in range(1, bound + 1) for s in self.of_size(k)]

    def member(self, i: int) -> Structure:
        seen = 0
        for k in count(1):
            if self.max_size is not None and k > self.max_size:
                break
            members = self.of_size(k)
            if i < seen + len(members):
                return members[i - seen]
            seen += len(members)
        raise IndexError(i)

    def __repr__(self):
        return f"Family({self.name!r})"


class FundamentalSequence:
    """Levels ``D_n`` with bonding maps ``D_{n+1} -> D_n``.

    ``level(n)`` returns a structure, ``bond(n)`` the raw map of the bond
    out of level ``n + 1``.  ``classes(n)``, when given, lists blocks of
    elements that are identified in the level's quotient approximant.
    """

    def __init__(self, name: str, signature: Signature, level: Callable[[int], Structure],
                 bond: Callable[[int], Sequence[int]], max_depth: int | None = None,
                 classes: Callable[[int], Sequence[Sequence[int]]] | None = None):
        self.name = name
        self.signature = signature
        self._level = level
        self._bond = bond
        self.max_depth = max_depth
        self._classes = classes
        self._levels = {}
        self._bonds = {}

    def _check_depth(self, n):
        if n < 0 or (self.max_depth is not None and n > self.max_depth):
            raise ValueError(f"level {n} outside 0..{self.max_depth} for sequence {self.name!r}")

    def level(self, n: int) -> Structure:
        self._check_depth(n)
        if n not in self._levels:
            self._levels[n] = self._level(n)
        return self._levels[n]

    def bond_map(self, n: int) -> tuple[int, ...]:
        self._check_depth(n + 1)
        if n not in self._bonds:
            self._bonds[n] = tuple(self._bond(n))
        return self._bonds[n]

    def bond(self, n: int) -> Morphism:
        return Morphism(self.level(n + 1), self.level(n), self.bond_map(n))

    def composite_map(self, n: int, m: int) -> tuple[int, ...]:
        """Raw map of the composed bond ``D_m -> D_n`` (identity when equal)."""
        if n > m:
            raise ValueError("composite bond needs n <= m")
        if n == m:
            return tuple(range(self.level(n).size))
        return compose_maps(*(self.bond_map(k) for k in range(m - 1, n - 1, -1)))

    def composite(self, n: int, m: int) -> Morphism:
        return Morphism(self.level(m), self.level(n), self.composite_map(n, m))

    def classes(self, n: int) -> list[list[int]]:
        if self._classes is None:
            return [[x] for x in range(self.level(n).size)]
        return [sorted(c) for c in self._classes(n)]

    @property
    def has_classes(self) -> bool:
        return self._classes is not None

    def __repr__(self):
        return f"FundamentalSequence({self.name!r})"


class _Table:
    """Interns structures so a report lists each one once."""

    def __init__(self):
        self.items = []
        self._index = {}

    def __call__(self, s: Structure) -> int:
        if s not in self._index:
            self._index[s] = len(self.items)
            self.items.append(s)
        return self._index[s]


@dataclass
class PropertyReport:
    property: str
    bounds: dict
    status: str = VERIFIED
    witnesses: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    structures: list = field(default_factory=list)
    note: str = BOUNDED_NOTE
    citation: str | None = None

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def to_dict(self) -> dict:
        from .io import structure_to_dict
        out = {
            "property": self.property,
            "bounds": dict(self.bounds),
            "status": self.status,
            "note": self.note,
        }
        if self.citation:
            out["citation"] = self.citation
        out["structures"] = [structure_to_dict(s) for s in self.structures]
        out["witnesses"] = self.witnesses
        out["counterexamples"] = self.counterexamples
        return out


def _report(prop, bounds, table, witnesses, failures, citation=None):
    return PropertyReport(prop, bounds, COUNTEREXAMPLE if failures else VERIFIED,
                          witnesses, failures, table.items, citation=citation)


def check_jpp(fam: Family, pair_bound: int, search_bound: int) -> PropertyReport:
    """Every pair of members up to ``pair_bound`` has a common preimage
    among members up to ``search_bound``; the smallest one is recorded."""
    if pair_bound < 1 or search_bound < 1:
        raise ValueError("bounds must be >= 1")
    table = _Table()
    witnesses, failures = [], []
    members = fam.members_up_to(pair_bound)
    candidates = fam.members_up_to(search_bound)
    for i, d in enumerate(members):
        for e in members[i:]:
            for f in candidates:
                m1 = find_epimorphism(f, d)
                m2 = find_epimorphism(f, e) if m1 is not None else None
                if m2 is not None:
                    witnesses.append({"D": table(d), "E": table(e), "F": table(f),
                                      "to_D": list(m1), "to_E": list(m2)})
                    break
            else:
                failures.append({"D": table(d), "E": table(e)})
    bounds = {"pair_bound": pair_bound, "search_bound": search_bound}
    return _report("jpp", bounds, table, witnesses, failures)


def _amalgam(f, d, e, phi1, phi2):
    # find psi1: f->d, psi2: f->e with phi1 psi1 == phi2 psi2
    for psi1 in epimorphism_maps(f, d):
        goal = [phi1[y] for y in psi1]
        domains = [[z for z in range(e.size) if phi2[z] == g] for g in goal]
        psi2 = find_epimorphism(f, e, domains)
        if psi2 is not None:
            return psi1, psi2
    return None


def check_ap(fam: Family, size_bound: int, search_bound: int) -> PropertyReport:
    """Every pair of epimorphisms ``D -> C``, ``E -> C`` between members up
    to ``size_bound`` closes to a commuting square through some member up
    to ``search_bound`` (smallest first)."""
    if size_bound < 1 or search_bound < 1:
        raise ValueError("bounds must be >= 1")
    table = _Table()
    witnesses, failures = [], []
    members = fam.members_up_to(size_bound)
    candidates = fam.members_up_to(search_bound)
    for c in members:
        for d in members:
            for phi1 in epimorphism_maps(d, c):
                for e in members:
                    for phi2 in epimorphism_maps(e, c):
                        square = {"C": table(c), "D": table(d), "E": table(e),
                                  "phi1": list(phi1), "phi2": list(phi2)}
                        for f in candidates:
                            found = _amalgam(f, d, e, phi1, phi2)
                            if found:
                                square.update(F=table(f), psi1=list(found[0]), psi2=list(found[1]))
                                witnesses.append(square)
                                break
                        else:
                            failures.append(square)
    bounds = {"size_bound": size_bound, "search_bound": search_bound}
    return _report("ap", bounds, table, witnesses, failures)


def check_fundamental_sequence(seq: FundamentalSequence, fam: Family, depth: int, member_bound: int,
                               factor_depth: int | None = None) -> PropertyReport:
    """Both fundamental-sequence conditions within bounds.

    Coverage: every member up to ``member_bound`` is an epimorphic image of
    some level ``<= depth``.  Factorization: for levels ``n <= depth`` and
    epimorphisms ``F -> E``, ``D_n -> E`` between members up to
    ``member_bound``, some ``D_m -> F`` with ``n <= m <= factor_depth``
    makes the square commute.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if factor_depth is None:
        factor_depth = depth + 3
    if seq.max_depth is not None:
        factor_depth = min(factor_depth, seq.max_depth)
        depth = min(depth, seq.max_depth)
    table = _Table()
    witnesses, failures = [], []
    members = fam.members_up_to(member_bound)

    for d in members:
        for n in range(depth + 1):
            f = find_epimorphism(seq.level(n), d)
            if f is not None:
                witnesses.append({"condition": "cover", "member": table(d), "n": n,
                                  "level": table(seq.level(n)), "map": list(f)})
                break
        else:
            failures.append({"condition": "cover", "member": table(d), "depth": depth})

    for n in range(depth + 1):
        dn = seq.level(n)
        for e in members:
            for f in members:
                for phi1 in epimorphism_maps(f, e):
                    for phi2 in epimorphism_maps(dn, e):
                        sq = {"condition": "factor", "n": n, "level_n": table(dn), "E": table(e),
                              "F": table(f), "phi1": list(phi1), "phi2": list(phi2)}
                        for m in range(n, factor_depth + 1):
                            bond = seq.composite_map(n, m)
                            goal = [phi2[x] for x in bond]
                            domains = [[z for z in range(f.size) if phi1[z] == g] for g in goal]
                            psi = find_epimorphism(seq.level(m), f, domains)
                            if psi is not None:
                                sq.update(m=m, level_m=table(seq.level(m)), bond=list(bond), psi=list(psi))
                                witnesses.append(sq)
                                break
                        else:
                            sq["factor_depth"] = factor_depth
                            failures.append(sq)
    bounds = {"depth": depth, "member_bound": member_bound, "factor_depth": factor_depth}
    return _report("fundamental-sequence", bounds, table, witnesses, failures)


RIGIDITY_CITATION = ("Exactly one epimorphism between every pair of comparable levels forces any "
                     "two epimorphisms onto a common level to agree after composing with bonds, "
                     "which yields the fundamental-sequence property for the levels' family.")


def check_rigidity(seq: FundamentalSequence, depth: int) -> PropertyReport:
    """For all ``n <= m <= depth`` there is exactly one epimorphism
    ``D_m -> D_n`` and it equals the composed bond."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    table = _Table()
    witnesses, failures = [], []
    for m in range(depth + 1):
        for n in range(m + 1):
            res = unique_epimorphism(seq.level(m), seq.level(n))
            bond = list(seq.composite_map(n, m))
            entry = {"n": n, "m": m, "source": table(seq.level(m)), "target": table(seq.level(n)),
                     "count": res.count, "bond": bond}
            if res.is_unique and list(res.witness.map) == bond:
                entry["map"] = bond
                witnesses.append(entry)
            else:
                if res.witness is not None:
                    entry["map"] = list(res.witness.map)
                failures.append(entry)
    citation = None if failures else RIGIDITY_CITATION
    return _report("rigidity", {"depth": depth}, table, witnesses, failures, citation)


def reverify(report) -> list[str]:
    """Re-check every morphism in a report (object or its dict form).

    Returns a list of problems; empty means every recorded witness and
    counterexample square holds up.
    """
    from .io import structure_from_dict
    data = report.to_dict() if isinstance(report, PropertyReport) else report
    structs = [structure_from_dict(s) for s in data["structures"]]
    problems = []

    def epi(src, dst, f, label):
        try:
            ok = is_epimorphism(Morphism(structs[src], structs[dst], f))
        except ValueError as exc:
            ok = False
            label = f"{label} ({exc})"
        if not ok:
            problems.append(f"{data['property']}: {label} is not an epimorphism")

    prop = data["property"]
    for w in data["witnesses"]:
        if prop == "jpp":
            epi(w["F"], w["D"], w["to_D"], "F->D")
            epi(w["F"], w["E"], w["to_E"], "F->E")
        elif prop == "ap":
            epi(w["D"], w["C"], w["phi1"], "phi1")
            epi(w["E"], w["C"], w["phi2"], "phi2")
            epi(w["F"], w["D"], w["psi1"], "psi1")
            epi(w["F"], w["E"], w["psi2"], "psi2")
            if compose_maps(w["psi1"], w["phi1"]) != compose_maps(w["psi2"], w["phi2"]):
                problems.append("ap: square does not commute")
        elif prop == "fundamental-sequence" and w["condition"] == "cover":
            epi(w["level"], w["member"], w["map"], "cover map")
        elif prop == "fundamental-sequence":
            epi(w["F"], w["E"], w["phi1"], "phi1")
            epi(w["level_n"], w["E"], w["phi2"], "phi2")
            epi(w["level_m"], w["level_n"], w["bond"], "composed bond")
            epi(w["level_m"], w["F"], w["psi"], "psi")
            if compose_maps(w["psi"], w["phi1"]) != compose_maps(w["bond"], w["phi2"]):
                problems.append("fundamental-sequence: square does not commute")
        elif prop == "rigidity":
            epi(w["source"], w["target"], w["map"], f"bond {w['m']}->{w['n']}")
    for c in data["counterexamples"]:
        if prop == "ap" or (prop == "fundamental-sequence" and c["condition"] == "factor"):
            e_key = "C" if prop == "ap" else "E"
            d_key = "D" if prop == "ap" else "F"
            src2 = "E" if prop == "ap" else "level_n"
            epi(c[d_key], c[e_key], c["phi1"], "counterexample phi1")
            epi(c[src2], c[e_key], c["phi2"], "counterexample phi2")
        elif prop == "rigidity" and "map" in c:
            epi(c["source"], c["target"], c["map"], "counterexample map")
    return problems
