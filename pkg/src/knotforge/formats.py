"""JSON file formats for arc presentations and lattice knots, plus OBJ/CSV export."""
from __future__ import annotations

import csv
import io
import json

from jsonschema import Draft202012Validator

from .grid import Arc, ArcPresentation, InvalidPresentationError, KnotMeta
from .lattice import LatticeKnot


class SchemaError(ValueError):
    """Input does not match a file schema; ``problems`` are ``path: message`` strings."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


_POSITIVE = {"type": "integer", "minimum": 1}

ARC_FILE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["name", "crossing_number", "class", "arcs"],
    "properties": {
        "name": {"type": "string"},
        "crossing_number": _POSITIVE,
        "class": {
            "oneOf": [
                {"enum": ["general", "nonalternating_prime"]},
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["torus"],
                    "properties": {"torus": {"type": "integer", "minimum": 2}},
                },
            ]
        },
        "arcs": {
            "type": "array",
            "minItems": 2,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["page", "binding"],
                "properties": {
                    "page": _POSITIVE,
                    "binding": {"type": "array", "items": _POSITIVE, "minItems": 2, "maxItems": 2},
                },
            },
        },
    },
}

KNOT_FILE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["vertices"],
    "properties": {
        "vertices": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3},
        }
    },
}


def _check(data, schema):
    errors = sorted(Draft202012Validator(schema).iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        raise SchemaError(
            f"{'.'.join(str(p) for p in e.absolute_path) or '<root>'}: {e.message}" for e in errors
        )


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError([f"<root>: malformed JSON ({exc})"]) from exc


def parse_presentation(text: str | bytes) -> tuple[ArcPresentation, KnotMeta]:
    data = _loads(text)
    _check(data, ARC_FILE_SCHEMA)
    cls = data["class"]
    try:
        if isinstance(cls, dict):
            meta = KnotMeta(data["name"], data["crossing_number"], "torus", cls["torus"])
        else:
            meta = KnotMeta(data["name"], data["crossing_number"], cls)
    except ValueError as exc:
        raise SchemaError([f"class: {exc}"]) from exc
    problems = []
    for i, a in enumerate(data["arcs"]):
        lo, hi = a["binding"]
        if lo >= hi:
            problems.append(f"arcs.{i}.binding: expected [lo, hi] with lo < hi, got {a['binding']}")
    if problems:
        raise SchemaError(problems)
    arcs = tuple(Arc(a["page"], *a["binding"]) for a in data["arcs"])
    try:
        ap = ArcPresentation(arcs)
    except InvalidPresentationError as exc:
        raise SchemaError([f"arcs: {p}" for p in exc.problems]) from exc
    return ap, meta


def serialize_presentation(ap: ArcPresentation, meta: KnotMeta) -> str:
    cls = {"torus": meta.torus_n} if meta.knot_class == "torus" else meta.knot_class
    lines = [
        "{",
        f'  "name": {json.dumps(meta.name)},',
        f'  "crossing_number": {meta.crossing_number},',
        f'  "class": {json.dumps(cls)},',
        '  "arcs": [',
    ]
    body = [f'    {{"page": {a.page}, "binding": [{a.lo}, {a.hi}]}}' for a in ap.arcs]
    lines.append(",\n".join(body))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def read_presentation(path) -> tuple[ArcPresentation, KnotMeta]:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def parse_knot(text: str | bytes) -> LatticeKnot:
    data = _loads(text)
    _check(data, KNOT_FILE_SCHEMA)
    return LatticeKnot(tuple(tuple(v) for v in data["vertices"]))


def serialize_knot(k: LatticeKnot) -> str:
    rows = ",\n".join(f"    [{x}, {y}, {z}]" for x, y, z in k.vertices)
    return '{\n  "vertices": [\n' + rows + "\n  ]\n}\n"


def read_knot(path) -> LatticeKnot:
    with open(path, encoding="utf-8") as fh:
        return parse_knot(fh.read())


def knot_to_obj(k: LatticeKnot) -> str:
    lines = [f"v {x} {y} {z}" for x, y, z in k.vertices]
    lines.append("l " + " ".join(str(i + 1) for i in range(len(k))) + " 1")
    return "\n".join(lines) + "\n"


def knot_to_csv(k: LatticeKnot) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "y", "z"])
    writer.writerows(k.vertices)
    return buf.getvalue()
