"""Builtin triangulations and standalone face fixtures.

The corpus mixes tiny hand-checked triangulations (the triforce, the
trivial ones) with fixtures grown by stellar subdivision, which
preserves the homology-triangulation and quasi-geometric axioms.  Each
builtin carries its inclusion-exclusion local h-vector at E = empty as
metadata, computed at build time.
"""

from __future__ import annotations

import copy

from .errors import SchemaError
from .fileformat import build_triangulation, validate_data
from .localmodule import local_h_incexc


def triforce_data():
    """The 6-vertex triangulation of a triangle from the running example."""
    return {
        "name": "triforce",
        "simplex_vertices": ["u", "v", "w"],
        "vertices": [
            {"id": "a", "carrier": ["v", "w"]},
            {"id": "b", "carrier": ["u", "w"]},
            {"id": "c", "carrier": ["u", "v"]},
            {"id": "u", "carrier": ["u"]},
            {"id": "v", "carrier": ["v"]},
            {"id": "w", "carrier": ["w"]},
        ],
        "facets": [
            ["a", "b", "c"],
            ["u", "b", "c"],
            ["v", "a", "c"],
            ["w", "a", "b"],
        ],
    }


def trivial_data(n):
    """The trivial triangulation of the (n-1)-simplex by itself."""
    if n < 1:
        raise ValueError("n must be positive")
    ambient = ["v%d" % i for i in range(1, n + 1)]
    return {
        "name": "trivial-%d" % n,
        "simplex_vertices": ambient,
        "vertices": [{"id": "u%d" % i, "carrier": ["v%d" % i]}
                     for i in range(1, n + 1)],
        "facets": [["u%d" % i for i in range(1, n + 1)]],
    }


def stellar_subdivide(data, face, new_id, name=None):
    """Star the triangulation at `face`, adding `new_id` with carrier sigma(face).

    Every facet containing the face is replaced by the cones over its
    boundary with apex `new_id`.
    """
    data = copy.deepcopy(data)
    face = set(face)
    declared = {v["id"] for v in data["vertices"]}
    if not face <= declared or new_id in declared:
        raise ValueError("bad stellar subdivision data")
    carriers = {v["id"]: set(v["carrier"]) for v in data["vertices"]}
    face_carrier = set()
    for w in face:
        face_carrier |= carriers[w]
    for entry in data.get("face_carriers", []):
        if set(entry["face"]) == face:
            face_carrier = set(entry["carrier"])
    hit = [f for f in data["facets"] if face <= set(f)]
    if not hit:
        raise ValueError("%r is not a face of any facet" % (sorted(face),))
    new_facets = [f for f in data["facets"] if not face <= set(f)]
    for f in hit:
        for w in sorted(face):
            new_facets.append(sorted((set(f) - {w}) | {new_id}))
    data["vertices"].append({"id": new_id, "carrier": sorted(face_carrier)})
    data["facets"] = new_facets
    data["name"] = name or (data["name"] + "+star")
    data.pop("metadata", None)
    return data


def _nonqg_data():
    """A non-quasi-geometric carrier map: a 2-face squeezed into an edge."""
    return {
        "name": "nonqg-squeezed",
        "simplex_vertices": ["v1", "v2", "v3"],
        "vertices": [
            {"id": "x1", "carrier": ["v1", "v2"]},
            {"id": "x2", "carrier": ["v1", "v2"]},
            {"id": "x3", "carrier": ["v1", "v2"]},
            {"id": "p1", "carrier": ["v1"]},
            {"id": "p2", "carrier": ["v2"]},
            {"id": "p3", "carrier": ["v3"]},
        ],
        "facets": [["x1", "x2", "x3"], ["p1"], ["p2"], ["p3"]],
        "face_carriers": [
            {"face": ["x1", "x2", "x3"], "carrier": ["v1", "v2", "v3"]},
        ],
    }


_BUILDERS = {
    "triforce": triforce_data,
    "trivial-1": lambda: trivial_data(1),
    "trivial-2": lambda: trivial_data(2),
    "trivial-3": lambda: trivial_data(3),
    "trivial-4": lambda: trivial_data(4),
    "stellar-interior-2simplex": lambda: stellar_subdivide(
        trivial_data(3), ["u1", "u2", "u3"], "p", "stellar-interior-2simplex"),
    "stellar-edge-2simplex": lambda: stellar_subdivide(
        trivial_data(3), ["u1", "u2"], "p", "stellar-edge-2simplex"),
    "stellar-interior-3simplex": lambda: stellar_subdivide(
        trivial_data(4), ["u1", "u2", "u3", "u4"], "p", "stellar-interior-3simplex"),
    "stellar-edge-3simplex": lambda: stellar_subdivide(
        trivial_data(4), ["u1", "u2"], "p", "stellar-edge-3simplex"),
    "triforce-stellar": lambda: stellar_subdivide(
        triforce_data(), ["a", "b", "c"], "p", "triforce-stellar"),
    "stellar-twice-2simplex": lambda: stellar_subdivide(
        stellar_subdivide(trivial_data(3), ["u1", "u2", "u3"], "p"),
        ["p", "u1", "u2"], "q", "stellar-twice-2simplex"),
    "nonqg-squeezed": _nonqg_data,
}

# the valid corpus used by the property suites; nonqg-squeezed is only a
# negative fixture for the quasi-geometric check
CORPUS_NAMES = tuple(name for name in sorted(_BUILDERS) if name != "nonqg-squeezed")


def builtin_names():
    return tuple(sorted(_BUILDERS))


def builtin_corpus(name):
    """A builtin triangulation file by name, with ell metadata attached."""
    if name not in _BUILDERS:
        raise SchemaError("unknown builtin %r (known: %s)"
                          % (name, ", ".join(builtin_names())))
    data = validate_data(_BUILDERS[name]())
    if name != "nonqg-squeezed":
        t = build_triangulation(data)
        data["metadata"] = {"ell_empty": list(local_h_incexc(t, ()))}
    return data


def builtin_triangulation(name):
    return build_triangulation(builtin_corpus(name))


# ---------------------------------------------------------------------------
# standalone face fixtures for the restricted-module computation

_FACE_FIXTURES = {
    # a hexagonal face whose restricted module vanishes identically
    "hexface-vanishing": {
        "ambient": ["v1", "v2", "v3", "v4", "v5", "v6"],
        "face_carriers": {
            "w1": ["v1", "v3", "v6"],
            "w2": ["v1", "v4", "v5"],
            "w3": ["v2", "v3", "v5"],
            "w4": ["v2", "v4", "v6"],
            "w5": ["v3", "v4", "v5"],
            "w6": ["v3", "v5", "v6"],
        },
        "e_carrier": [],
    },
    # a hexagonal face whose restricted module is nonzero in degree 3
    "hexface-degree3": {
        "ambient": ["v1", "v2", "v3", "v4", "v5", "v6"],
        "face_carriers": {
            "w1": ["v1"],
            "w2": ["v2"],
            "w3": ["v3"],
            "w4": ["v1", "v4", "v5"],
            "w5": ["v2", "v4", "v6"],
            "w6": ["v3", "v5", "v6"],
        },
        "e_carrier": [],
    },
}


def face_fixture_names():
    return tuple(sorted(_FACE_FIXTURES))


def face_fixture(name):
    if name not in _FACE_FIXTURES:
        raise SchemaError("unknown face fixture %r (known: %s)"
                          % (name, ", ".join(face_fixture_names())))
    return copy.deepcopy(_FACE_FIXTURES[name])


def corpus_faces(t):
    """All faces E of a triangulation, small ones first."""
    from .complexes import face_key
    return sorted(t.complex.faces, key=face_key)
