"""Command-line interface.

Exit codes: 0 on success, 1 on invalid input (parse/validation errors,
wrong functor, instance too large for ``--oracle``), 2 when an internal
consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .coalgebra import Homomorphism, PointedCoalgebra, _base
from .document import Document, dump_document, load_document
from .errors import CoalgMinError, ValidationError
from .finite import FiniteMap
from .functors import FunctorSpec
from .observability import behavioural_equivalence, congruence_oracle, simple_quotient
from .oracles import random_coalgebra
from .pipeline import is_well_pointed, orders_agree, well_pointed_minimize_traced
from .reachability import reachable_part, reachable_part_oracle
from .unravelling import unravel


class InternalCheckFailed(Exception):
    pass


def _read(path: str) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(None, f"cannot read {path}: {exc.strerror}") from None
    return load_document(text)


def _pointed(doc: Document, command: str) -> PointedCoalgebra:
    if not isinstance(doc.coalgebra, PointedCoalgebra):
        raise ValidationError(None, f"'{command}' needs a document with a 'point'")
    return doc.coalgebra


def _merge(doc: Document, groups) -> list[list[str]]:
    return [[name for x in group for name in doc.origin(x)] for group in groups]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _print_bool(value: bool) -> None:
    print("true" if value else "false")


def cmd_reach(args) -> int:
    doc = _read(args.file)
    c = _pointed(doc, "reach")
    r, incl = reachable_part(c)
    if args.oracle and set(incl.map.table) != reachable_part_oracle(c):
        raise InternalCheckFailed("reachable part disagrees with the subset oracle")
    _emit(dump_document(r, _merge(doc, [[x] for x in incl.map.table])), args.output)
    return 0


def cmd_simple(args) -> int:
    doc = _read(args.file)
    c = doc.coalgebra
    q, proj = simple_quotient(c)
    if args.oracle and congruence_oracle(c) != behavioural_equivalence(c):
        raise InternalCheckFailed("simple quotient disagrees with the congruence oracle")
    groups = [[] for _ in range(q.size)]
    for x, b in enumerate(proj.map.table):
        groups[b].append(x)
    _emit(dump_document(q, _merge(doc, groups)), args.output)
    return 0


def cmd_wellpointed(args) -> int:
    doc = _read(args.file)
    c = _pointed(doc, "wellpointed")
    order = args.order.replace("-", "_")
    result, groups = well_pointed_minimize_traced(c, order)
    if not is_well_pointed(result):
        print("warning: result is not well-pointed (it has unreachable states)", file=sys.stderr)
    _emit(dump_document(result, _merge(doc, groups)), args.output)
    return 0


def cmd_unravel(args) -> int:
    doc = _read(args.file)
    c = _pointed(doc, "unravel")
    res = unravel(c, args.depth)
    reach, incl = reachable_part(c)
    origin = [[incl.map(y)] for y in res.onto.map.table]
    if not res.complete:
        print(f"note: unravelling truncated at depth {args.depth}", file=sys.stderr)
    elif not res.onto.verified:
        raise InternalCheckFailed("complete unravelling does not project homomorphically")
    _emit(dump_document(res.tree, _merge(doc, origin)), args.output)
    return 0


def _load_map(arg: str) -> dict:
    path = Path(arg)
    text = path.read_text(encoding="utf-8") if path.exists() else arg
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(None, f"map is neither a file nor JSON: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise ValidationError(None, "map must be a JSON object {source state: target state}")
    return raw


def cmd_check_hom(args) -> int:
    src, tgt = _read(args.source), _read(args.target)
    raw = _load_map(args.map)
    s_names, t_names = src.names, tgt.names
    missing = [n for n in s_names if n not in raw]
    if missing:
        raise ValidationError(missing[0], "not assigned by the map")
    table = []
    for name in s_names:
        if raw[name] not in t_names:
            raise ValidationError(name, f"mapped to undeclared state {raw[name]!r}")
        table.append(t_names.index(raw[name]))
    a, b = src.coalgebra, tgt.coalgebra
    if isinstance(a, PointedCoalgebra) != isinstance(b, PointedCoalgebra):
        a, b = _base(a), _base(b)
    h = Homomorphism(FiniteMap(a.states, b.states, tuple(table)), a, b)
    _print_bool(h.verified)
    return 0


def cmd_equiv(args) -> int:
    doc = _read(args.file)
    c = doc.coalgebra
    names = doc.names
    for s in (args.s1, args.s2):
        if s not in names:
            raise ValidationError(s, "not a declared state")
    p = behavioural_equivalence(c)
    if args.oracle and congruence_oracle(c) != p:
        raise InternalCheckFailed("behavioural equivalence disagrees with the congruence oracle")
    _print_bool(p.block_of[names.index(args.s1)] == p.block_of[names.index(args.s2)])
    return 0


def cmd_orders_agree(args) -> int:
    doc = _read(args.file)
    _print_bool(orders_agree(_pointed(doc, "orders-agree")))
    return 0


def _functor_arg(text: str) -> FunctorSpec:
    kind, _, arg = text.partition(":")
    if kind == "dfa":
        return FunctorSpec.dfa(arg.split(",") if arg else ["a", "b"])
    if kind == "labelled":
        return FunctorSpec.labelled(arg.split(",") if arg else ["a", "b"])
    if kind == "powerset":
        return FunctorSpec.powerset()
    if kind == "bag":
        return FunctorSpec.bag()
    if kind in ("nat", "int", "rational"):
        return FunctorSpec.monoid_valued(kind)
    raise argparse.ArgumentTypeError(f"unknown functor {text!r}")


def cmd_gen(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("COALGMIN_SEED", "0"))
    c = random_coalgebra(args.functor, args.states, seed, args.density, reachable=args.reachable)
    _emit(dump_document(c), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coalgmin", description="Minimize finite coalgebras (reachability and observability)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True, oracle=False, output=False):
        p = sub.add_parser(name, help=help)
        if file:
            p.add_argument("file")
        if oracle:
            p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")
        if output:
            p.add_argument("-o", "--output", help="write the result here instead of stdout")
        p.set_defaults(func=func)
        return p

    add("reach", cmd_reach, "reachable part of a pointed coalgebra", oracle=True, output=True)
    add("simple", cmd_simple, "simple quotient (behavioural equivalence)", oracle=True, output=True)
    p = add("wellpointed", cmd_wellpointed, "reachable and simple minimization", output=True)
    p.add_argument("--order", choices=["simple-first", "reach-first"], default="simple-first")
    p = add("unravel", cmd_unravel, "tree unravelling of a bag coalgebra", output=True)
    p.add_argument("--depth", type=int, required=True)
    p = add("check-hom", cmd_check_hom, "check whether a state map is a homomorphism", file=False)
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map", help="JSON object {source state: target state}, inline or as a file")
    p = add("equiv", cmd_equiv, "are two states behaviourally equivalent?", oracle=True)
    p.add_argument("s1")
    p.add_argument("s2")
    add("orders-agree", cmd_orders_agree, "do both minimization orders give isomorphic results?")
    p = add("gen", cmd_gen, "generate a random coalgebra", file=False, output=True)
    p.add_argument("--functor", type=_functor_arg, default=FunctorSpec.dfa(["a", "b"]),
                   help="dfa[:a,b] | powerset | labelled[:a,b] | bag | int | rational")
    p.add_argument("--states", type=int, default=5)
    p.add_argument("--seed", type=int, default=None, help="defaults to $COALGMIN_SEED or 0")
    p.add_argument("--density", type=float, default=0.4)
    p.add_argument("--reachable", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InternalCheckFailed, AssertionError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2
    except CoalgMinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
