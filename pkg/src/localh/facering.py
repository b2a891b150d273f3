"""Graded pieces of face rings, linear forms, and special l.s.o.p.s.

Monomials are exponent tuples aligned with the sorted vertex list of a
complex; a monomial lives in the face ring iff its support is a face.
All ideal and quotient questions are answered degreewise by exact linear
algebra -- no Groebner machinery anywhere.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .complexes import canon_face, face_key, link
from .linalg import QQ, Echelon

DEFAULT_COEFF_BOUND = 997
DEFAULT_RETRIES = 32


def derive_seed(seed, *tags):
    """Deterministic named child seed for a splittable RNG stream."""
    h = hashlib.sha256(repr((int(seed),) + tags).encode()).digest()
    return int.from_bytes(h[:8], "big")


# ---------------------------------------------------------------------------
# monomial bases

def graded_basis(c, m):
    """All degree-m monomials of k[c] with support a face, in a fixed order.

    Returns a tuple of exponent tuples over c.vertices; cached per (c, m).
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    cached = c._monomial_cache.get(m)
    if cached is not None:
        return cached
    verts = c.vertices
    index = {v: i for i, v in enumerate(verts)}
    nv = len(verts)
    out = []
    if m == 0:
        out.append((0,) * nv)
    else:
        for dim in range(0, min(m, c.dim + 1)):
            for face in c.faces_of_dim(dim):
                idxs = [index[v] for v in face]
                for comp in _compositions(m, len(face)):
                    expo = [0] * nv
                    for i, e in zip(idxs, comp):
                        expo[i] = e
                    out.append(tuple(expo))
    out.sort()
    basis = tuple(out)
    c._monomial_cache.setdefault(m, basis)
    return basis


def _compositions(total, parts):
    """All positive integer compositions of `total` into `parts` parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def basis_index(c, m):
    basis = graded_basis(c, m)
    return {mono: i for i, mono in enumerate(basis)}


def monomial_support(c, mono):
    verts = c.vertices
    return tuple(verts[i] for i, e in enumerate(mono) if e)


# ---------------------------------------------------------------------------
# linear forms

@dataclass(frozen=True)
class LinearForm:
    """A degree-1 element sum_w coeffs[w] * x_w of a face ring."""
    coeffs: tuple  # ((vertex, value), ...) with nonzero values, sorted

    @classmethod
    def from_dict(cls, d, field=QQ):
        items = [(v, field.elem(a)) for v, a in d.items() if not field.is_zero(field.elem(a))]
        items.sort(key=lambda kv: face_key((kv[0],)))
        return cls(tuple(items))

    @property
    def support(self):
        return frozenset(v for v, _ in self.coeffs)

    def as_dict(self):
        return dict(self.coeffs)

    def restricted(self, vertices):
        """Drop coefficients outside the given vertex set."""
        vs = frozenset(vertices)
        return LinearForm(tuple((v, a) for v, a in self.coeffs if v in vs))

    def vector(self, c, field=QQ):
        """Sparse coordinates in the degree-1 monomial basis of k[c]."""
        idx = basis_index(c, 1)
        verts = c.vertices
        vpos = {v: i for i, v in enumerate(verts)}
        vec = {}
        for v, a in self.coeffs:
            if v in vpos:
                mono = tuple(1 if i == vpos[v] else 0 for i in range(len(verts)))
                vec[idx[mono]] = a
        return vec


def mult_map(c, form, m, field=QQ):
    """Sparse columns of multiplication by `form`: degree m -> degree m+1.

    Returns a list of sparse vectors (dicts over the degree-(m+1) basis
    index), one per degree-m basis monomial.  Products whose support is
    not a face are zero in the face ring and are dropped.
    """
    verts = c.vertices
    vpos = {v: i for i, v in enumerate(verts)}
    src = graded_basis(c, m)
    tgt_idx = basis_index(c, m + 1)
    cols = []
    for mono in src:
        col = {}
        for v, a in form.coeffs:
            i = vpos.get(v)
            if i is None:
                continue
            prod = list(mono)
            prod[i] += 1
            prod = tuple(prod)
            j = tgt_idx.get(prod)
            if j is not None:  # support of prod is a face
                col[j] = field.add(col.get(j, field.zero), a)
        cols.append({k: v for k, v in col.items() if not field.is_zero(v)})
    return cols


def mult_map_matrix(c, form, m, field=QQ):
    """The mult_map columns assembled into a Matrix (rows: degree m+1)."""
    from .linalg import Matrix
    cols = mult_map(c, form, m, field)
    nrows = len(graded_basis(c, m + 1))
    rows = [{} for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    return Matrix(nrows, len(cols), rows, field)


def theta_span(c, forms, m, field=QQ):
    """Sparse vectors spanning (theta_1, ..., theta_k)_m = sum theta_i R_{m-1}."""
    if m <= 0:
        return []
    vecs = []
    for form in forms:
        vecs.extend(col for col in mult_map(c, form, m - 1, field) if col)
    return vecs


# ---------------------------------------------------------------------------
# the distinguished ambient-vertex ordering and the ideals I_S

def relative_vertex_order(t, e):
    """(v_1, ..., v_n) with sigma(E)^c first; returns (order, b, d)."""
    e = canon_face(e)
    sigma_e = t.carrier(e)
    comp = canon_face(set(t.ambient) - sigma_e)
    rest = canon_face(sigma_e)
    order = comp + rest
    b = len(comp)
    d = t.n - len(e)
    if b > d:
        raise ValueError("carrier smaller than the face itself")
    return order, b, d


def monomial_in_IS(t, e, support, s):
    """Closed-form membership: x^alpha in I_S iff sigma(supp u E)^c <= S.

    Valid because carriers are monotone: enlarging the support enlarges
    the carrier and shrinks its complement.  (Unit-tested against
    generator-divisibility brute force.)
    """
    e = canon_face(e)
    face = canon_face(set(support) | set(e))
    comp = set(t.ambient) - t.carrier(face)
    return comp <= set(s)


@dataclass(frozen=True)
class IdealSlice:
    """Degree-m piece of a monomial ideal as membership flags over a basis."""
    label: tuple
    degree: int
    flags: tuple  # bool per graded_basis(link, degree) monomial

    @property
    def dim(self):
        return sum(self.flags)

    def indices(self):
        return tuple(i for i, f in enumerate(self.flags) if f)


def ideal_slice_IS(t, e, s, m):
    """The degree-m piece of I_S inside k[lk(E)]."""
    e = canon_face(e)
    order, b, d = relative_vertex_order(t, e)
    allowed = set(order[:d])
    if not set(s) <= allowed:
        raise ValueError("S must be a subset of {v_1, ..., v_d}")
    lk = link(t.complex, e)
    basis = graded_basis(lk, m)
    flags = tuple(
        monomial_in_IS(t, e, monomial_support(lk, mono), s) for mono in basis
    )
    return IdealSlice(canon_face(s), m, flags)


def interior_monomial_flags(t, e, lk, m):
    """Flags for the degree-m monomials generating I = I_emptyset."""
    vfull = frozenset(t.ambient)
    basis = graded_basis(lk, m)
    e = canon_face(e)
    return tuple(
        t.carrier(canon_face(set(monomial_support(lk, mono)) | set(e))) == vfull
        for mono in basis
    )


# ---------------------------------------------------------------------------
# special l.s.o.p.s

def special_supports(t, e):
    """The support sets S_1..S_d used to build a special l.s.o.p. for lk(E)."""
    e = canon_face(e)
    order, b, d = relative_vertex_order(t, e)
    lk = link(t.complex, e)
    lk_verts = lk.vertices
    supports = []
    for i in range(d):
        if i < b:
            vi = order[i]
            supports.append(frozenset(
                w for w in lk_verts if vi in t.carrier_map.vertex_carriers[w]))
        else:
            supports.append(frozenset(lk_verts))
    return supports


def marriage_check(supports, c):
    """Hall-type inequality: every face meets at least |F| of the supports.

    The existence argument for special l.s.o.p.s needs the inequality for
    every face, not just the facets; so does this check.  Returns
    (ok, witness face or None).
    """
    for face in sorted(c.faces, key=face_key):
        if not face:
            continue
        fset = set(face)
        meets = sum(1 for s in supports if s & fset)
        if meets < len(face):
            return False, face
    return True, None


@dataclass(frozen=True)
class SpecialLsop:
    """A verified special l.s.o.p. theta_1..theta_d for k[lk_Gamma(E)].

    theta_i is supported on {w : v_i in sigma(w)} for i <= b, where
    v_1..v_b enumerate the complement of sigma(E) in the fixed ordering.
    """
    forms: tuple  # d LinearForms
    v_order: tuple
    b: int
    d: int
    seed: int
    bound: int
    verified: bool

    def form_for_index(self, i):
        """theta_i, 1-based, matching v_order[i-1]."""
        return self.forms[i - 1]


class LsopSamplingError(RuntimeError):
    pass


def verify_lsop(forms, c, field=QQ):
    """Condition (*): restrictions to every facet span a space of dim |F|."""
    d = c.dim + 1
    if len(forms) != d:
        return False
    for facet in c.facets:
        ech = Echelon(len(facet), field)
        pos = {v: i for i, v in enumerate(facet)}
        for form in forms:
            vec = {pos[v]: a for v, a in form.coeffs if v in pos}
            ech.add(vec)
        if ech.rank != len(facet):
            return False
    return True


def sample_lsop(t, e, seed, bound=DEFAULT_COEFF_BOUND, retries=DEFAULT_RETRIES,
                field=QQ):
    """Draw a special l.s.o.p. with coefficients in [-bound, bound] \\ {0}.

    Deterministic in `seed`; verified against condition (*) on every
    facet, with fresh draws on failure up to the retry budget.
    """
    e = canon_face(e)
    order, b, d = relative_vertex_order(t, e)
    lk = link(t.complex, e)
    supports = special_supports(t, e)
    ok, witness = marriage_check(supports, lk)
    if not ok:
        raise LsopSamplingError(
            "support sets fail the marriage inequality at face %r" % (witness,))
    for attempt in range(retries):
        rng = random.Random(derive_seed(seed, "lsop", tuple(e), attempt))
        forms = []
        for s in supports:
            coeffs = {}
            for w in sorted(s, key=lambda v: face_key((v,))):
                a = rng.randint(1, 2 * bound)
                if a > bound:
                    a = bound - a  # maps to [-bound, -1]
                coeffs[w] = field.elem(a)
            forms.append(LinearForm.from_dict(coeffs, field))
        if verify_lsop(forms, lk, field):
            return SpecialLsop(tuple(forms), order, b, d, seed, bound, True)
    raise LsopSamplingError(
        "no verified l.s.o.p. within %d draws (bound %d, field %r); "
        "try a larger bound" % (retries, bound, field))


def quotient_dims(c, lsop, m_max, field=QQ):
    """dim (k[c]/(theta))_m for 0 <= m <= m_max."""
    forms = lsop.forms if isinstance(lsop, SpecialLsop) else tuple(lsop)
    dims = []
    for m in range(m_max + 1):
        total = len(graded_basis(c, m))
        ech = Echelon(total, field)
        for vec in theta_span(c, forms, m, field):
            ech.add(vec)
        dims.append(total - ech.rank)
    return tuple(dims)
