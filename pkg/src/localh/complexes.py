"""Finite simplicial complexes: faces, links, stars, f/h-vectors, homology.

Faces are canonically sorted vertex-id tuples.  The empty tuple () is a
face of every complex, including the empty complex built from no facets.
Reduced simplicial homology is computed from boundary-matrix ranks over
an exact field (rationals by default, or a prime field).
"""

from __future__ import annotations

import math
from itertools import combinations

from .linalg import Echelon, field_for_characteristic


def _vkey(v):
    # total order on mixed-type vertex ids (ints before strings, etc.)
    return (type(v).__name__, v)


def canon_face(vertices):
    return tuple(sorted(vertices, key=_vkey))


def face_key(face):
    return (len(face), tuple(_vkey(v) for v in face))


class SimplicialComplex:
    """A finite simplicial complex given by its facets.

    The full (downward-closed) face set is enumerated eagerly and cached;
    instances are immutable and safe to share.
    """

    def __init__(self, facets):
        facet_set = set()
        for facet in facets:
            facet = list(facet)
            if len(set(facet)) != len(facet):
                raise ValueError("duplicate vertex id within facet %r" % (facet,))
            facet_set.add(canon_face(facet))
        # absorb non-maximal input facets
        maximal = set()
        for facet in facet_set:
            if not any(set(facet) < set(other) for other in facet_set):
                maximal.add(facet)
        self.facets = tuple(sorted(maximal, key=face_key))
        faces = {()}
        for facet in self.facets:
            for k in range(1, len(facet) + 1):
                faces.update(combinations(facet, k))
        self._faces = frozenset(faces)
        self._by_dim = {}
        for face in faces:
            self._by_dim.setdefault(len(face) - 1, []).append(face)
        for lst in self._by_dim.values():
            lst.sort(key=face_key)
        self._monomial_cache = {}

    @property
    def faces(self):
        return self._faces

    @property
    def vertices(self):
        return tuple(f[0] for f in self._by_dim.get(0, []))

    @property
    def dim(self):
        return max(self._by_dim)

    def faces_of_dim(self, i):
        return tuple(self._by_dim.get(i, ()))

    def __contains__(self, face):
        return canon_face(face) in self._faces

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return "SimplicialComplex(%d vertices, %d facets, dim %d)" % (
            len(self.vertices), len(self.facets), self.dim)

    def f_vector(self):
        """(f_-1, f_0, ..., f_dim)."""
        return tuple(len(self._by_dim.get(i, ())) for i in range(-1, self.dim + 1))

    def h_vector(self):
        """h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1}, with d = dim + 1."""
        f = self.f_vector()
        d = self.dim + 1
        return tuple(
            sum((-1) ** (j - i) * math.comb(d - i, j - i) * f[i]
                for i in range(j + 1))
            for j in range(d + 1)
        )


def build_complex(facets):
    return SimplicialComplex(facets)


def link(c, face):
    """The link {G : G disjoint from face, G u face in c}."""
    face = canon_face(face)
    if face not in c:
        raise ValueError("%r is not a face" % (face,))
    fset = set(face)
    maximal = []
    for facet in c.facets:
        if fset <= set(facet):
            maximal.append([v for v in facet if v not in fset])
    if not maximal:
        maximal = [[]]
    return SimplicialComplex(maximal)


def closed_star(c, face):
    """The closed star {G : G u face in c}."""
    face = canon_face(face)
    if face not in c:
        raise ValueError("%r is not a face" % (face,))
    fset = set(face)
    maximal = [facet for facet in c.facets if fset <= set(facet)]
    if not maximal:
        maximal = [face]
    return SimplicialComplex(maximal)


def boundary_matrix_ranks(c, characteristic=0):
    """Ranks of the reduced boundary maps d_i : C_i -> C_{i-1}, i = 0..dim.

    C_{-1} is spanned by the empty face, so d_0 is the augmentation map.
    """
    field = field_for_characteristic(characteristic)
    ranks = {}
    top = c.dim
    for i in range(0, top + 1):
        lower = {f: j for j, f in enumerate(c.faces_of_dim(i - 1))}
        ech = Echelon(len(lower), field)
        for face in c.faces_of_dim(i):
            col = {}
            for j in range(len(face)):
                sub = face[:j] + face[j + 1:]
                col[lower[sub]] = field.elem((-1) ** j)
            ech.add(col)
        ranks[i] = ech.rank
    return ranks


def reduced_betti_all(c, characteristic=0):
    """Reduced Betti numbers for degrees -1..dim as a dict."""
    ranks = boundary_matrix_ranks(c, characteristic)
    counts = {i: len(c.faces_of_dim(i)) for i in range(-1, c.dim + 1)}
    betti = {}
    for i in range(-1, c.dim + 1):
        betti[i] = counts[i] - ranks.get(i, 0) - ranks.get(i + 1, 0)
    return betti


def reduced_betti(c, characteristic=0):
    """Reduced Betti numbers (b_0, ..., b_dim); () for the empty complex."""
    betti = reduced_betti_all(c, characteristic)
    return tuple(betti[i] for i in range(0, c.dim + 1))


def has_trivial_reduced_homology(c, characteristic=0):
    betti = reduced_betti_all(c, characteristic)
    return all(v == 0 for v in betti.values())
