"""The on-disk triangulation format and canonical JSON emission.

A triangulation file is a JSON object with the ambient simplex vertices,
the vertices of Gamma with their carriers, the facet list, and optional
per-face carrier overrides.  All serialization is canonical: sorted
keys, exact integers (fractions as "p/q" strings), UTF-8 -- identical
inputs and seeds yield byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

import jsonschema

from .complexes import SimplicialComplex, canon_face
from .errors import SchemaError
from .triangulation import CarrierMap, Triangulation

_schema = None


def file_schema():
    global _schema
    if _schema is None:
        text = resources.files(__package__).joinpath("schema.json").read_text()
        _schema = json.loads(text)
    return _schema


def validate_data(data):
    """Schema plus cross-reference checks; raises SchemaError on failure."""
    try:
        jsonschema.validate(data, file_schema())
    except jsonschema.ValidationError as exc:
        raise SchemaError("invalid triangulation file: %s" % exc.message) from exc
    ambient = set(data["simplex_vertices"])
    ids = [v["id"] for v in data["vertices"]]
    if len(set(ids)) != len(ids):
        raise SchemaError("duplicate vertex id")
    declared = set(ids)
    for v in data["vertices"]:
        if not set(v["carrier"]) <= ambient:
            raise SchemaError("carrier of %r not inside simplex_vertices" % v["id"])
    for facet in data["facets"]:
        if not set(facet) <= declared:
            raise SchemaError("facet %r references undeclared vertices" % (facet,))
    for entry in data.get("face_carriers", []):
        if not set(entry["face"]) <= declared:
            raise SchemaError("face_carriers face references undeclared vertices")
        if not set(entry["carrier"]) <= ambient:
            raise SchemaError("face_carriers carrier not inside simplex_vertices")
    return data


def load_data(source):
    """Parse a triangulation file from a path, '-' (stdin), or file object."""
    if isinstance(source, dict):
        return validate_data(source)
    if source == "-":
        import sys
        text = sys.stdin.read()
    elif hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("not valid JSON: %s" % exc) from exc
    return validate_data(data)


def build_triangulation(data):
    """Construct the Triangulation from validated file data."""
    carriers = {v["id"]: frozenset(v["carrier"]) for v in data["vertices"]}
    overrides = {canon_face(entry["face"]): frozenset(entry["carrier"])
                 for entry in data.get("face_carriers", [])}
    complex = SimplicialComplex(data["facets"])
    try:
        return Triangulation(complex, data["simplex_vertices"],
                             CarrierMap(carriers, overrides))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def load_triangulation(source):
    return build_triangulation(load_data(source))


def jsonable(obj):
    """Recursively convert report values to canonical JSON-safe types."""
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return int(obj)
        return "%d/%d" % (obj.numerator, obj.denominator)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(v) for v in obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    raise TypeError("cannot serialize %r canonically" % type(obj).__name__)


def canonical_json(obj):
    """Deterministic JSON text: sorted keys, no floats, trailing newline."""
    return json.dumps(jsonable(obj), sort_keys=True, indent=2,
                      ensure_ascii=True) + "\n"
