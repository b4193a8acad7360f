"""Command-line front end.

Exit status: 0 on success or verification, 1 when a counterexample or
violation is found, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acceptance
from .constructions import GlueSpec, graph_family, identify, otimes_family, sum_of
from .epi import enumerate_epimorphisms, unique_epimorphism
from .families import (arc_sequence, cantor_family, cantor_level, cantor_sequence, chain, chain_family,
                       dyadic_glue, singleton_family, singleton_sequence, arc_level)
from .family import Family, check_ap, check_fundamental_sequence, check_jpp, check_rigidity
from .io import dumps, load_structure, partial_from_dict, structure_from_dict, structure_to_dict
from .limits import PROPERTIES, certify, export_graph, quotient_graph
from .structure import relationalize, validate

SEQUENCES = ("arc", "arc-floor", "cantor-dyadic", "singleton")


class InputError(Exception):
    pass


def named_sequence(name: str, depth: int | None = None):
    if name == "arc":
        return arc_sequence()
    if name == "arc-floor":
        return arc_sequence("floor")
    if name == "cantor-dyadic":
        return cantor_sequence(dyadic_glue(6 if depth is None else depth))
    if name == "singleton":
        return singleton_sequence()
    path = Path(name)
    if path.suffix == ".json" and path.exists():
        g = json.loads(path.read_text())
        return graph_family(g["vertices"], [tuple(e) for e in g["edges"]])
    raise InputError(f"unknown sequence {name!r}; expected one of {SEQUENCES} or a graph JSON file")


def named_family(name: str, depth: int | None = None):
    if name in ("chain", "arc"):
        return chain_family(), arc_sequence()
    if name == "cantor-dyadic":
        g = dyadic_glue(4 if depth is None else depth)
        return cantor_family(g), cantor_sequence(g)
    if name == "singleton":
        return singleton_family(), singleton_sequence()
    path = Path(name)
    if path.exists():
        data = json.loads(path.read_text())
        items = data["structures"] if isinstance(data, dict) else data
        return Family.from_structures(path.stem, [structure_from_dict(d) for d in items]), None
    raise InputError(f"unknown family {name!r}")


def _write(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    s = load_structure(args.file)
    problems = validate(s)
    _write(dumps({"valid": not problems, "violations": [str(v) for v in problems]}), None)
    return 1 if problems else 0


def cmd_relationalize(args):
    p = partial_from_dict(json.loads(Path(args.file).read_text()))
    _write(dumps(structure_to_dict(relationalize(p))), args.output)
    return 0


def cmd_epis(args):
    a, b = load_structure(args.source), load_structure(args.target)
    if args.unique:
        res = unique_epimorphism(a, b)
        out = {"kind": res.kind, "count": res.count}
        if res.witness is not None:
            out["map"] = list(res.witness.map)
        _write(dumps(out), None)
        return 0
    epis = enumerate_epimorphisms(a, b, modulo_automorphisms=args.modulo_automorphisms)
    if args.count_only:
        print(len(epis))
    else:
        _write(dumps([{"source": args.source, "target": args.target, "map": list(m.map)} for m in epis]), None)
    return 0


def _bounds(args, n, defaults):
    vals = list(args.bounds or [])
    if len(vals) > n:
        raise InputError(f"expected at most {n} bounds, got {len(vals)}")
    return vals + list(defaults[len(vals):])


def cmd_check_family(args):
    fam, seq = named_family(args.family, args.depth)
    if args.sequence:
        seq = named_sequence(args.sequence, args.depth)
    if args.jpp:
        report = check_jpp(fam, *_bounds(args, 2, (3, 9)))
    elif args.ap:
        report = check_ap(fam, *_bounds(args, 2, (4, 8)))
    else:
        if seq is None:
            raise InputError("this check needs a sequence; pass --sequence")
        if args.fundseq:
            d, mb, fd = _bounds(args, 3, (3, 4, None))
            report = check_fundamental_sequence(seq, fam, d, mb, fd)
        else:
            report = check_rigidity(seq, *_bounds(args, 1, (3,)))
    text = dumps(report.to_dict())
    _write(text, args.output)
    if not report.verified and args.witness:
        Path(args.witness).write_text(text)
    return 0 if report.verified else 1


def cmd_certify(args):
    seq = named_sequence(args.family, args.truncation)
    cert = certify(seq, args.rel, args.property, args.depth)
    _write(dumps(cert.to_dict()), None)
    return 0 if cert else 1


def cmd_gen(args):
    if args.family == "arc":
        s = arc_level(args.level)
    elif args.family == "chain":
        s = chain(args.level)
    else:
        s = cantor_level(dyadic_glue(args.level if args.depth is None else args.depth), args.level)
    _write(dumps(structure_to_dict(s)), args.output)
    return 0


def _parse_anchor(text):
    comp, _, sel = text.partition(":")
    if sel not in ("min", "max"):
        raise InputError(f"bad anchor {text!r}; expected COMPONENT:min or COMPONENT:max")
    return int(comp), sel


def cmd_construct(args):
    if args.kind == "graph":
        if len(args.inputs) != 1:
            raise InputError("graph takes one graph JSON file")
        seq = named_sequence(args.inputs[0])
    else:
        seqs = [named_sequence(name, args.truncation) for name in args.inputs]
        if args.kind == "sum":
            seq = sum_of(seqs)
        elif args.kind == "product":
            seq = seqs[0]
            for s in seqs[1:]:
                seq = otimes_family(seq, s)
        else:
            anchors, glue = [], []
            for spec in args.glue or []:
                left, _, right = spec.partition("=")
                ids = []
                for a in (left, right):
                    a = _parse_anchor(a)
                    if a not in anchors:
                        anchors.append(a)
                    ids.append(anchors.index(a))
                glue.append(tuple(ids))
            seq = identify(GlueSpec(seqs, anchors, glue))
    if args.quotient:
        _write(export_graph(quotient_graph(seq, args.level), args.quotient), args.output)
    else:
        _write(dumps(structure_to_dict(seq.level(args.level))), args.output)
    return 0


def cmd_quotient(args):
    seq = named_sequence(args.family, args.truncation)
    _write(export_graph(quotient_graph(seq, args.level), args.format), args.output)
    return 0


def cmd_accept(args):
    return 0 if acceptance.run_suite(args.suite) else 1


def build_parser():
    p = argparse.ArgumentParser(prog="fraisse", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("validate", help="report arity, range and coverage violations")
    s.add_argument("file")
    s.set_defaults(run=cmd_validate)

    s = sub.add_parser("relationalize", help="turn constants and functions into relations")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_relationalize)

    s = sub.add_parser("epis", help="enumerate epimorphisms between two structure files")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--unique", action="store_true", help="classify as none / unique / multiple")
    s.add_argument("--modulo-automorphisms", action="store_true")
    s.set_defaults(run=cmd_epis)

    s = sub.add_parser("check-family", help="bounded JPP / AP / fundamental-sequence / rigidity checks")
    s.add_argument("--family", required=True, help="chain, cantor-dyadic, singleton, or a JSON list of structures")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--jpp", action="store_true")
    g.add_argument("--ap", action="store_true")
    g.add_argument("--fundseq", action="store_true")
    g.add_argument("--rigidity", action="store_true")
    s.add_argument("--bounds", type=int, nargs="+",
                   help="jpp: PAIR SEARCH; ap: SIZE SEARCH; fundseq: DEPTH MEMBERS [FACTOR_DEPTH]; rigidity: DEPTH")
    s.add_argument("--sequence", help=f"sequence for --fundseq/--rigidity: {', '.join(SEQUENCES)}")
    s.add_argument("--depth", type=int, help="truncation depth for cantor-dyadic")
    s.add_argument("--witness", help="also write the report here when a counterexample is found")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_check_family)

    s = sub.add_parser("certify", help="certify a level property along a sequence")
    s.add_argument("--family", required=True)
    s.add_argument("--rel", default="R")
    s.add_argument("--property", required=True, choices=PROPERTIES)
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--truncation", type=int)
    s.set_defaults(run=cmd_certify)

    s = sub.add_parser("gen", help="write one family member as structure JSON")
    s.add_argument("--family", required=True, choices=("arc", "cantor-dyadic", "chain"))
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--depth", type=int, help="predicate truncation depth for cantor-dyadic")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_gen)

    s = sub.add_parser("construct", help="sum, product, glue or graph sequences")
    s.add_argument("kind", choices=("sum", "product", "glue", "graph"))
    s.add_argument("--inputs", nargs="+", required=True)
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--glue", nargs="*", help="pairs like 0:max=1:min")
    s.add_argument("--quotient", choices=("dot", "json"))
    s.add_argument("--truncation", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_construct)

    s = sub.add_parser("quotient", help="export a level's quotient approximant")
    s.add_argument("--family", required=True)
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--format", default="dot", choices=("dot", "json"))
    s.add_argument("--truncation", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_quotient)

    s = sub.add_parser("accept", help="run the acceptance suite")
    s.add_argument("--suite", default="core", choices=("core",))
    s.set_defaults(run=cmd_accept)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (InputError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"fraisse {args.verb}: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
