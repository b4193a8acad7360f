"""JSON encodings for structures, morphisms and quotient graphs.

Structure files look like::

    {"signature": {"relations": [{"name": "R", "arity": 2}], "distinguished": "R"},
     "size": 2,
     "interp": {"R": [[0, 0], [0, 1], [1, 0], [1, 1]]}}

Constants and function symbols may appear as ``"constants": {"c": 1}`` and
``"functions": {"f": [[0, 1], [1, 1]]}`` (rows are argument tuples followed
by the value); such files must go through relationalization.
"""
from __future__ import annotations

import json
from pathlib import Path

from .epi import Morphism
from .structure import PartialStructure, Signature, Structure


def signature_to_dict(sig: Signature) -> dict:
    out = {"relations": [{"name": n, "arity": k} for n, k in sig.relations],
           "distinguished": sig.distinguished}
    if sig.constants:
        out["constants"] = list(sig.constants)
    if sig.functions:
        out["functions"] = [{"name": n, "arity": k} for n, k in sig.functions]
    return out


def signature_from_dict(d: dict) -> Signature:
    return Signature(
        tuple((r["name"], r["arity"]) for r in d["relations"]),
        d.get("distinguished", "R"),
        tuple(d.get("constants", ())),
        tuple((f["name"], f["arity"]) for f in d.get("functions", ())),
    )


def structure_to_dict(s: Structure) -> dict:
    return {
        "signature": signature_to_dict(s.sig),
        "size": s.size,
        "interp": {n: [list(t) for t in s.tuples(n)] for n in sorted(s.interp)},
    }


def structure_from_dict(d: dict) -> Structure:
    return Structure(signature_from_dict(d["signature"]), d["size"], d["interp"])


def partial_from_dict(d: dict) -> PartialStructure:
    """Read a structure that may carry constants and function tables.

    When the signature block does not declare them, constants and
    functions are inferred from the ``constants``/``functions`` entries.
    """
    sigd = dict(d["signature"])
    consts = d.get("constants", {})
    funcs = d.get("functions", {})
    sigd.setdefault("constants", sorted(consts))
    sigd.setdefault("functions", [{"name": f, "arity": len(rows[0]) - 1 if rows else 1}
                                  for f, rows in sorted(funcs.items())])
    base = Structure(signature_from_dict(sigd), d["size"], d["interp"])
    return PartialStructure(base, dict(consts), {f: [tuple(r) for r in rows] for f, rows in funcs.items()})


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


def load_structure(path) -> Structure:
    return structure_from_dict(json.loads(Path(path).read_text()))


def save_structure(s: Structure, path) -> None:
    Path(path).write_text(dumps(structure_to_dict(s)))


def morphism_to_dict(m: Morphism, source_ref=None, target_ref=None) -> dict:
    out = {"map": list(m.map)}
    if source_ref is not None:
        out["source"] = str(source_ref)
    if target_ref is not None:
        out["target"] = str(target_ref)
    return out
