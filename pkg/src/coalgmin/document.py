"""JSON coalgebra documents.

A document looks like::

    {
      "functor": {"kind": "powerset"},
      "states": ["q0", "q1"],
      "point": "q0",
      "structure": {"q0": ["q1"], "q1": []},
      "provenance": {"q0": ["q0"], "q1": ["q1"]}
    }

``functor`` is one of ``{"kind": "dfa", "alphabet": [...]}``,
``{"kind": "powerset"}``, ``{"kind": "labelled", "labels": [...]}`` or
``{"kind": "monoid", "monoid": "nat" | "int" | "rational"}``.  Per-state
structure entries are ``{"accept": bool, "next": {symbol: state}}`` (dfa),
a list of states (powerset), a list of ``[label, state]`` pairs (labelled),
or a ``{state: weight}`` object (monoid) with integer weights or exact
rationals written as ``"p/q"`` strings.  ``point`` and ``provenance`` are
optional.

Printed documents are canonical: states are renamed ``s0, s1, ...`` in
carrier order and the original names go into ``provenance``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .coalgebra import AnyCoalgebra, Coalgebra, PointedCoalgebra, _base
from .errors import InvalidValue, ParseError, ValidationError
from .finite import FiniteSet
from .functors import DfaCell, FunctorSpec, Weights


@dataclass(frozen=True)
class Document:
    coalgebra: AnyCoalgebra
    provenance: Optional[tuple[tuple[str, ...], ...]] = None

    @property
    def names(self) -> tuple[str, ...]:
        states = self.coalgebra.states
        return tuple(states.label(i) for i in range(states.size))

    def origin(self, i: int) -> tuple[str, ...]:
        """Original names behind state ``i``."""
        if self.provenance is not None:
            return self.provenance[i]
        return (self.coalgebra.states.label(i),)


def _spec_from_json(raw) -> FunctorSpec:
    if not isinstance(raw, dict) or "kind" not in raw:
        raise ValidationError(None, "'functor' must be an object with a 'kind'")
    kind = raw["kind"]
    try:
        if kind == "dfa":
            return FunctorSpec.dfa(_str_list(raw.get("alphabet"), "alphabet"))
        if kind == "powerset":
            return FunctorSpec.powerset()
        if kind == "labelled":
            return FunctorSpec.labelled(_str_list(raw.get("labels"), "labels"))
        if kind == "monoid":
            return FunctorSpec.monoid_valued(raw.get("monoid"))
        if kind == "bag":
            return FunctorSpec.bag()
    except InvalidValue as exc:
        raise ValidationError(None, str(exc)) from None
    raise ValidationError(None, f"unknown functor kind {kind!r}")


def _spec_to_json(spec: FunctorSpec) -> dict:
    if spec.kind == "dfa":
        return {"kind": "dfa", "alphabet": list(spec.symbols)}
    if spec.kind == "labelled":
        return {"kind": "labelled", "labels": list(spec.symbols)}
    if spec.kind == "monoid":
        return {"kind": "monoid", "monoid": spec.monoid}
    return {"kind": spec.kind}


def _str_list(raw, what: str) -> list[str]:
    if not isinstance(raw, list) or not all(isinstance(s, str) for s in raw):
        raise ValidationError(None, f"'{what}' must be a list of strings")
    return raw


def _weight(raw, state: str) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise ValidationError(state, f"weight {raw!r} must be an integer or a 'p/q' string")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(state, f"malformed weight {raw!r}") from None


def _format_weight(w: Fraction):
    return w.numerator if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def _value_from_json(spec: FunctorSpec, raw, state: str, index: dict[str, int]):
    def target(name):
        if not isinstance(name, str) or name not in index:
            raise ValidationError(state, f"transition to undeclared state {name!r}")
        return index[name]

    if spec.kind == "dfa":
        if not isinstance(raw, dict) or not isinstance(raw.get("accept"), bool) or not isinstance(raw.get("next"), dict):
            raise ValidationError(state, "dfa entry needs a boolean 'accept' and a 'next' object")
        nxt = raw["next"]
        unknown = set(nxt) - set(spec.symbols)
        if unknown:
            raise ValidationError(state, f"symbols {sorted(unknown)} not in the alphabet")
        missing = [a for a in spec.symbols if a not in nxt]
        if missing:
            raise ValidationError(state, f"no transition for symbols {missing}")
        return DfaCell(raw["accept"], tuple(target(nxt[a]) for a in spec.symbols))
    if spec.kind == "powerset":
        if not isinstance(raw, list):
            raise ValidationError(state, "powerset entry must be a list of states")
        return frozenset(target(y) for y in raw)
    if spec.kind == "labelled":
        if not isinstance(raw, list) or not all(isinstance(p, list) and len(p) == 2 for p in raw):
            raise ValidationError(state, "labelled entry must be a list of [label, state] pairs")
        for label, _ in raw:
            if label not in spec.symbols:
                raise ValidationError(state, f"unknown label {label!r}")
        return frozenset((label, target(y)) for label, y in raw)
    if not isinstance(raw, dict):
        raise ValidationError(state, "monoid entry must be an object {state: weight}")
    return Weights((target(y), _weight(w, state)) for y, w in raw.items())


def _value_to_json(spec: FunctorSpec, v, names: Sequence[str]):
    if spec.kind == "dfa":
        return {"accept": v.accept, "next": {a: names[y] for a, y in zip(spec.symbols, v.next)}}
    if spec.kind == "powerset":
        return [names[y] for y in sorted(v)]
    if spec.kind == "labelled":
        order = sorted(v, key=lambda p: (spec.symbols.index(p[0]), p[1]))
        return [[a, names[y]] for a, y in order]
    return {names[y]: _format_weight(w) for y, w in v.items()}


def load_document(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.colno, exc.msg) from None
    if not isinstance(raw, dict):
        raise ParseError(1, 1, "top level must be a JSON object")
    for key in ("functor", "states", "structure"):
        if key not in raw:
            raise ValidationError(None, f"missing field '{key}'")
    spec = _spec_from_json(raw["functor"])
    names = _str_list(raw["states"], "states")
    if len(set(names)) != len(names):
        raise ValidationError(None, "state names are not distinct")
    index = {name: i for i, name in enumerate(names)}
    structure = raw["structure"]
    if not isinstance(structure, dict):
        raise ValidationError(None, "'structure' must be an object keyed by state")
    for name in structure:
        if name not in index:
            raise ValidationError(name, "structure given for an undeclared state")
    values = []
    for name in names:
        if name not in structure:
            raise ValidationError(name, "no structure entry")
        values.append(_value_from_json(spec, structure[name], name, index))
    try:
        c: AnyCoalgebra = Coalgebra(spec, FiniteSet(len(names), tuple(names)), tuple(values))
    except InvalidValue as exc:
        raise ValidationError(None, str(exc)) from None
    if raw.get("point") is not None:
        point = raw["point"]
        if point not in index:
            raise ValidationError(point, "point is not a declared state")
        c = PointedCoalgebra(c, index[point])
    provenance = None
    if "provenance" in raw:
        prov = raw["provenance"]
        if not isinstance(prov, dict) or set(prov) != set(names):
            raise ValidationError(None, "'provenance' must map every state to a list of names")
        provenance = tuple(tuple(_str_list(prov[name], "provenance")) for name in names)
    return Document(c, provenance)


def parse_coalgebra(text: str) -> AnyCoalgebra:
    return load_document(text).coalgebra


def dump_document(c: AnyCoalgebra, provenance: Optional[Sequence[Sequence[str]]] = None) -> str:
    """Canonical JSON text (states ``s0, s1, ...``), newline terminated."""
    base = _base(c)
    names = [f"s{i}" for i in range(base.size)]
    if provenance is None:
        provenance = [[base.states.label(i)] for i in range(base.size)]
    doc: dict = {"functor": _spec_to_json(base.spec), "states": names}
    if isinstance(c, PointedCoalgebra):
        doc["point"] = names[c.point]
    doc["structure"] = {
        name: _value_to_json(base.spec, v, names) for name, v in zip(names, base.structure)
    }
    doc["provenance"] = {name: list(p) for name, p in zip(names, provenance)}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def dump(doc: Document) -> str:
    return dump_document(doc.coalgebra, doc.provenance)
