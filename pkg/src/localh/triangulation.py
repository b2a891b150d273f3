"""Triangulations of a simplex: carrier maps and axiom validation.

A triangulation is a simplicial complex Gamma together with a carrier map
sigma into the subsets of the ambient vertex set V.  The carrier of a
non-vertex face defaults to the union of its vertex carriers; explicit
per-face overrides in the input take precedence.  A face G is *interior*
when sigma(G) = V.

Validation checks the homology-triangulation axioms (for every nonempty
U, the preimage complex Gamma_U is a homology ball of dimension |U| - 1
whose interior faces are exactly the faces with carrier U) and the
quasi-geometric condition.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .complexes import (SimplicialComplex, canon_face, face_key, link,
                        reduced_betti_all)

DEFAULT_FACE_CEILING = 5000


class ValidationBudgetError(RuntimeError):
    """Raised when a validation run exceeds the face-count ceiling."""


class CarrierMap:
    """Per-vertex carriers plus optional per-face overrides."""

    def __init__(self, vertex_carriers, overrides=None):
        self.vertex_carriers = {v: frozenset(c) for v, c in vertex_carriers.items()}
        for v, c in self.vertex_carriers.items():
            if not c:
                raise ValueError("empty carrier for vertex %r" % (v,))
        self.overrides = {}
        for face, c in (overrides or {}).items():
            self.overrides[canon_face(face)] = frozenset(c)

    def carrier(self, face):
        face = canon_face(face)
        if face in self.overrides:
            return self.overrides[face]
        out = set()
        for v in face:
            out |= self.vertex_carriers[v]
        return frozenset(out)


class Triangulation:
    """A simplicial complex with a carrier map into the simplex 2^V."""

    def __init__(self, complex, ambient_vertices, carrier_map):
        self.complex = complex
        self.ambient = tuple(ambient_vertices)
        if len(set(self.ambient)) != len(self.ambient):
            raise ValueError("duplicate ambient vertex")
        self.carrier_map = carrier_map
        self._check_invariants()
        self._lock = threading.Lock()
        self._restriction_cache = {}

    @property
    def n(self):
        return len(self.ambient)

    def carrier(self, face):
        face = canon_face(face)
        if face not in self.complex:
            raise ValueError("%r is not a face" % (face,))
        return self.carrier_map.carrier(face)

    def is_interior(self, face):
        return self.carrier(face) == frozenset(self.ambient)

    def _check_invariants(self):
        vset = frozenset(self.ambient)
        cm = self.carrier_map
        for v in self.complex.vertices:
            if v not in cm.vertex_carriers:
                raise ValueError("no carrier for vertex %r" % (v,))
        for face, c in list(cm.vertex_carriers.items()):
            if not c <= vset:
                raise ValueError("carrier of %r not inside the ambient simplex" % (face,))
        for face, c in cm.overrides.items():
            if face not in self.complex:
                raise ValueError("carrier override for non-face %r" % (face,))
            if not c <= vset:
                raise ValueError("override carrier of %r outside ambient simplex" % (face,))
            union = frozenset().union(*(cm.vertex_carriers[v] for v in face))
            if not union <= c:
                raise ValueError("override carrier of %r below vertex-carrier union" % (face,))
        # monotonicity: checking codimension-1 containments suffices
        for f in self.complex.faces:
            if not f:
                continue
            cf = cm.carrier(f)
            for j in range(len(f)):
                sub = f[:j] + f[j + 1:]
                if not cm.carrier(sub) <= cf:
                    raise ValueError("carrier map not monotone at %r < %r" % (sub, f))
        # each ambient vertex is the carrier of exactly one vertex of Gamma
        for v in self.ambient:
            hits = [w for w in self.complex.vertices
                    if cm.vertex_carriers[w] == frozenset([v])]
            if len(hits) != 1:
                raise ValueError(
                    "expected exactly one vertex with carrier {%r}, found %d" % (v, len(hits)))
        if self.complex.dim != self.n - 1:
            raise ValueError("dim Gamma = %d but |V| - 1 = %d"
                             % (self.complex.dim, self.n - 1))

    def restriction(self, u):
        """Gamma_U: the subcomplex of faces whose carrier lies inside U."""
        u = frozenset(u)
        if not u <= frozenset(self.ambient):
            raise ValueError("U must be a subset of the ambient vertex set")
        with self._lock:
            cached = self._restriction_cache.get(u)
        if cached is not None:
            return cached
        kept = [f for f in self.complex.faces if self.carrier_map.carrier(f) <= u]
        maximal = [f for f in kept
                   if not any(set(f) < set(g) for g in kept)]
        out = SimplicialComplex(maximal or [[]])
        with self._lock:
            self._restriction_cache.setdefault(u, out)
        return out


def carrier(t, face):
    return t.carrier(face)


def restriction_gamma_u(t, u):
    return t.restriction(u)


@dataclass(frozen=True)
class InteriorFaces:
    """Faces F of lk(E) with F u E interior, with the minimal ones flagged."""
    faces: tuple
    minimal: tuple


def interior_faces(t, e):
    e = canon_face(e)
    if e not in t.complex:
        raise ValueError("%r is not a face" % (e,))
    lk = link(t.complex, e)
    vfull = frozenset(t.ambient)
    interior = [f for f in sorted(lk.faces, key=face_key)
                if t.carrier(canon_face(set(f) | set(e))) == vfull]
    iset = set(interior)
    minimal = tuple(f for f in interior
                    if not any(set(g) < set(f) for g in iset))
    return InteriorFaces(tuple(interior), minimal)


# ---------------------------------------------------------------------------
# homology-ball / homology-sphere recursion

class _HomologyMemo:
    """Atomic get-or-insert cache for (complex, kind) homology verdicts."""

    def __init__(self, characteristic, ceiling=DEFAULT_FACE_CEILING):
        self.characteristic = characteristic
        self.ceiling = ceiling
        self._lock = threading.Lock()
        self._cache = {}
        self.faces_seen = 0

    def get_or_compute(self, key, fn):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = fn()
        with self._lock:
            self._cache.setdefault(key, value)
        return value

    def charge(self, complex):
        self.faces_seen += len(complex.faces)
        if self.faces_seen > self.ceiling:
            raise ValidationBudgetError(
                "validation exceeded the face-count ceiling (%d); "
                "raise it explicitly for larger inputs" % self.ceiling)


def is_homology_sphere(c, d, memo):
    """Recursive homology-sphere check over the memo's field."""
    if d < -1:
        return False
    if d == -1:
        return c.faces == frozenset([()])
    key = ("sphere", c.facets, d)

    def compute():
        if c.dim != d:
            return False
        memo.charge(c)
        betti = reduced_betti_all(c, memo.characteristic)
        if any(v != (1 if i == d else 0) for i, v in betti.items()):
            return False
        for f in sorted(c.faces, key=face_key):
            if not f:
                continue
            if not is_homology_sphere(link(c, f), d - len(f), memo):
                return False
        return True

    return memo.get_or_compute(key, compute)


def is_homology_ball(c, boundary, d, memo):
    """Recursive homology-ball check with an explicit boundary subcomplex."""
    if d < 0:
        return False
    key = ("ball", c.facets, boundary.facets, d)

    def compute():
        if c.dim != d:
            return False
        memo.charge(c)
        if not boundary.faces <= c.faces:
            return False
        betti = reduced_betti_all(c, memo.characteristic)
        if any(v != 0 for v in betti.values()):
            return False
        if not is_homology_sphere(boundary, d - 1, memo):
            return False
        for f in sorted(c.faces, key=face_key):
            if not f:
                continue
            lk_f = link(c, f)
            if f in boundary.faces:
                if not is_homology_ball(lk_f, link(boundary, f), d - len(f), memo):
                    return False
            else:
                if not is_homology_sphere(lk_f, d - len(f), memo):
                    return False
        return True

    return memo.get_or_compute(key, compute)


# ---------------------------------------------------------------------------
# triangulation-level validation

@dataclass
class Violation:
    subset: tuple
    kind: str
    detail: str
    face: tuple | None = None


@dataclass
class ValidationReport:
    ok: bool
    mode: str
    characteristic: int
    violations: list = field(default_factory=list)

    def as_dict(self):
        return {
            "ok": self.ok,
            "mode": self.mode,
            "characteristic": self.characteristic,
            "violations": [
                {"subset": list(v.subset), "kind": v.kind, "detail": v.detail,
                 "face": list(v.face) if v.face is not None else None}
                for v in self.violations
            ],
        }


def _boundary_subcomplex(t, gamma_u, u):
    kept = [f for f in gamma_u.faces if t.carrier_map.carrier(f) != u]
    maximal = [f for f in kept if not any(set(f) < set(g) for g in kept)]
    return SimplicialComplex(maximal or [[]])


def validate_homology_triangulation(t, mode="full", characteristic=0,
                                    ceiling=DEFAULT_FACE_CEILING):
    """Check the homology-triangulation axioms for every nonempty U <= V.

    fast: trivial reduced homology of Gamma_U, its sigma-defined boundary
    is a homology (|U|-2)-sphere, and every facet of Gamma_U is interior.
    full: additionally the recursive link conditions of the homology-ball
    definition, with memoized Betti computations.
    """
    if mode not in ("fast", "full"):
        raise ValueError("mode must be 'fast' or 'full'")
    memo = _HomologyMemo(characteristic, ceiling)
    violations = []
    ambient = list(t.ambient)
    for mask in range(1, 1 << len(ambient)):
        u = frozenset(v for i, v in enumerate(ambient) if mask >> i & 1)
        usorted = canon_face(u)
        gamma_u = t.restriction(u)
        d = len(u) - 1
        if gamma_u.dim != d:
            violations.append(Violation(usorted, "dimension",
                                        "dim Gamma_U = %d, expected %d" % (gamma_u.dim, d)))
            continue
        betti = reduced_betti_all(gamma_u, characteristic)
        bad = [i for i, v in betti.items() if v != 0]
        if bad:
            violations.append(Violation(
                usorted, "homology",
                "Gamma_U has nontrivial reduced homology in degrees %s" % bad))
            continue
        boundary = _boundary_subcomplex(t, gamma_u, u)
        if not is_homology_sphere(boundary, d - 1, memo):
            violations.append(Violation(
                usorted, "boundary-sphere",
                "sigma-boundary of Gamma_U is not a homology %d-sphere" % (d - 1)))
            continue
        # interior faces of the ball must be exactly sigma^{-1}(U);
        # with the sigma-defined boundary this amounts to every facet
        # being interior (checked here) plus the link conditions (full).
        for facet in gamma_u.facets:
            if t.carrier_map.carrier(facet) != u:
                violations.append(Violation(
                    usorted, "interior-facet",
                    "facet of Gamma_U is not interior", facet))
        if mode == "full":
            if not is_homology_ball(gamma_u, boundary, d, memo):
                violations.append(Violation(
                    usorted, "ball",
                    "Gamma_U fails the recursive homology-ball conditions"))
    return ValidationReport(not violations, mode, characteristic, violations)


def is_quasi_geometric(t):
    """True iff no face is squeezed into a lower-dimensional Gamma_U.

    Returns (ok, witness) where witness = (F, U_F) on failure.
    """
    for f in sorted(t.complex.faces, key=face_key):
        if not f:
            continue
        u_f = frozenset().union(*(t.carrier_map.vertex_carriers[v] for v in f))
        if t.restriction(u_f).dim < len(f) - 1:
            return False, (f, canon_face(u_f))
    return True, None
