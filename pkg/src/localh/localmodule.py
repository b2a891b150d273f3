"""Local face modules, their Hilbert functions, and the ideal resolution.

The module L(Gamma, E) is the image of the interior-face ideal I inside
the Artinian reduction k[lk(E)]/(theta_1, ..., theta_d).  It is handled
implicitly: every question about it reduces to ranks of sparse matrices
over an exact field.  The local h-vector is computed by two independent
routes -- through the module, and through the inclusion-exclusion sum
over the restriction complexes Gamma_U -- which must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import canon_face, link
from .errors import VerificationError
from .facering import (Echelon, QQ, graded_basis, interior_monomial_flags,
                       monomial_support, mult_map, relative_vertex_order,
                       theta_span)
from .linalg import Matrix
from .linalg import rank as matrix_rank

DEFAULT_HORIZON_SLACK = 2  # test degrees up to d + 2 by default


def default_horizon(d):
    return d + DEFAULT_HORIZON_SLACK


# ---------------------------------------------------------------------------
# inclusion-exclusion route (purely combinatorial, no l.s.o.p.)

def local_h_incexc(t, e):
    """The local h-vector via the signed sum of h-vectors over Gamma_U."""
    e = canon_face(e)
    if e not in t.complex:
        raise ValueError("%r is not a face" % (e,))
    sigma_e = t.carrier(e)
    n = t.n
    d = n - len(e)
    rest = [v for v in t.ambient if v not in sigma_e]
    ell = [0] * (d + 1)
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            u = frozenset(sigma_e) | set(extra)
            gamma_u = t.restriction(u)
            h = link(gamma_u, e).h_vector()
            sign = (-1) ** (n - len(u))
            for i, hv in enumerate(h):
                ell[i] += sign * hv
    return tuple(ell)


# ---------------------------------------------------------------------------
# module route

@dataclass(frozen=True)
class LocalModule:
    """Per-degree data of L(Gamma, E) for one verified special l.s.o.p.

    dims[m] is the Hilbert function value; reps[m] are monomials of the
    interior ideal whose classes form a basis of the degree-m piece.
    """
    e: tuple
    d: int
    m_max: int
    dims: tuple
    reps: tuple  # per degree: tuple of exponent tuples over lk(E).vertices

    @property
    def local_h(self):
        return self.dims[: self.d + 1]


def local_module(t, e, lsop, m_max=None, field=QQ):
    """Compute per-degree dims (and representative monomials) of L(Gamma, E)."""
    e = canon_face(e)
    if e not in t.complex:
        raise ValueError("%r is not a face" % (e,))
    if not lsop.verified:
        raise ValueError("l.s.o.p. has not been verified")
    d = t.n - len(e)
    if m_max is None:
        m_max = default_horizon(d)
    lk = link(t.complex, e)
    dims = []
    reps = []
    for m in range(m_max + 1):
        basis = graded_basis(lk, m)
        ech = Echelon(len(basis), field)
        for vec in theta_span(lk, lsop.forms, m, field):
            ech.add(vec)
        base_rank = ech.rank
        iflags = interior_monomial_flags(t, e, lk, m)
        chosen = []
        for i, flag in enumerate(iflags):
            if flag and ech.add({i: field.one}):
                chosen.append(basis[i])
        dims.append(ech.rank - base_rank)
        reps.append(tuple(chosen))
    mod = LocalModule(e, d, m_max, tuple(dims), tuple(reps))
    for m in range(d + 1, m_max + 1):
        if mod.dims[m] != 0:
            raise VerificationError(
                "L(Gamma, E) nonzero in degree %d > d = %d" % (m, d))
    return mod


# ---------------------------------------------------------------------------
# the presentation I/J and its closed-form degreewise span

def classify_support(t, e, support, order, b):
    """('interior', None), ('codim1', j) with 1-based j <= b, or ('other', None)."""
    face = canon_face(set(support) | set(e))
    comp = frozenset(t.ambient) - t.carrier(face)
    if not comp:
        return "interior", None
    if len(comp) == 1:
        (v,) = comp
        j = order.index(v) + 1
        if j <= b:
            return "codim1", j
    return "other", None


def j_span_vectors(delta, forms, classify, m, field=QQ):
    """Degree-m spanning vectors of the presentation ideal J inside k[delta].

    J_m is spanned by theta_i * (interior monomials of degree m-1) for
    every i, together with theta_j * (monomials whose carrier misses
    exactly v_j) -- the closed form of the two generator families.
    """
    if m <= 0:
        return []
    basis = graded_basis(delta, m - 1)
    cols = [mult_map(delta, form, m - 1, field) for form in forms]
    vecs = []
    for q, mono in enumerate(basis):
        kind, j = classify(monomial_support(delta, mono))
        if kind == "interior":
            for cset in cols:
                if cset[q]:
                    vecs.append(cset[q])
        elif kind == "codim1":
            if cols[j - 1][q]:
                vecs.append(cols[j - 1][q])
    return vecs


def presentation_J(t, e, lsop, m_max=None, field=QQ):
    """Per-degree dims of J, asserting J_m = ker(I_m -> (R/theta R)_m)."""
    e = canon_face(e)
    d = t.n - len(e)
    if m_max is None:
        m_max = default_horizon(d)
    lk = link(t.complex, e)
    order, b = lsop.v_order, lsop.b

    def classify(support):
        return classify_support(t, e, support, order, b)

    dims = []
    for m in range(m_max + 1):
        basis = graded_basis(lk, m)
        iflags = interior_monomial_flags(t, e, lk, m)
        interior_idx = frozenset(i for i, f in enumerate(iflags) if f)
        vecs = j_span_vectors(lk, lsop.forms, classify, m, field)
        ech = Echelon(len(basis), field)
        for vec in vecs:
            if not set(vec) <= interior_idx:
                raise VerificationError(
                    "J spanning vector leaves the interior ideal in degree %d" % m)
            ech.add(vec)
        dim_j = ech.rank
        # dim ker(I_m -> (R/theta R)_m) = dim I_m + dim (theta R)_m - dim (I + theta R)_m
        full = Echelon(len(basis), field)
        for vec in theta_span(lk, lsop.forms, m, field):
            full.add(vec)
        theta_rank = full.rank
        for i in interior_idx:
            full.add({i: field.one})
        ker_dim = len(interior_idx) + theta_rank - full.rank
        if dim_j != ker_dim:
            raise VerificationError(
                "presentation kernel mismatch in degree %d: dim J = %d, "
                "dim ker = %d" % (m, dim_j, ker_dim))
        dims.append(dim_j)
    return tuple(dims)


# ---------------------------------------------------------------------------
# the resolution by the ideals I_S

@dataclass(frozen=True)
class ResolutionComplex:
    """Terms and signed differentials of the I_S resolution of L(Gamma, E).

    Position k (0 <= k <= d) is the direct sum of I_S[-k] over |S| = k,
    with summands ordered lexicographically by index tuple; position d is
    the full ring (S = {v_1..v_d}) and position 0 is I itself.
    """
    e: tuple
    d: int
    b: int
    v_order: tuple
    summands: tuple  # summands[k] = tuple of index tuples (1-based, sorted)


def build_resolution(t, e, lsop):
    e = canon_face(e)
    d = t.n - len(e)
    summands = tuple(
        tuple(sorted(combinations(range(1, d + 1), k)))
        for k in range(d + 1)
    )
    return ResolutionComplex(e, d, lsop.b, lsop.v_order, summands)


def _slice_indices(t, e, lk, m, s_idx, order, b):
    """Indices of degree-m basis monomials lying in I_S (S by 1-based indices)."""
    if m < 0:
        return ()
    s_vertices = set(order[i - 1] for i in s_idx)
    basis = graded_basis(lk, m)
    out = []
    vfull = set(t.ambient)
    for i, mono in enumerate(basis):
        supp = monomial_support(lk, mono)
        comp = vfull - t.carrier(canon_face(set(supp) | set(e)))
        if comp <= s_vertices:
            out.append(i)
    return tuple(out)


def resolution_term_dims(t, res, m, field=QQ):
    """Per-position dims of the degree-m piece of the resolution terms."""
    lk = link(t.complex, res.e)
    dims = []
    for k, ss in enumerate(res.summands):
        total = 0
        for s_idx in ss:
            total += len(_slice_indices(t, res.e, lk, m - k, s_idx, res.v_order, res.b))
        dims.append(total)
    return tuple(dims)


def resolution_differential(t, res, lsop, k, m, field=QQ):
    """Sparse matrix of the degree-m differential from position k to k-1.

    Rows and columns run over the summand slices in order; the block from
    I_S to I_{S minus v_{i_j}} is (-1)^j times multiplication by theta_{i_j}.
    """
    lk = link(t.complex, res.e)
    e, order, b = res.e, res.v_order, res.b
    src_summands = res.summands[k]
    tgt_summands = res.summands[k - 1]
    src_slices = [_slice_indices(t, e, lk, m - k, s, order, b) for s in src_summands]
    tgt_slices = [_slice_indices(t, e, lk, m - k + 1, s, order, b) for s in tgt_summands]
    src_offsets = {}
    off = 0
    for s, sl in zip(src_summands, src_slices):
        src_offsets[s] = (off, {mi: pos for pos, mi in enumerate(sl)})
        off += len(sl)
    ncols = off
    tgt_offsets = {}
    off = 0
    for s, sl in zip(tgt_summands, tgt_slices):
        tgt_offsets[s] = (off, {mi: pos for pos, mi in enumerate(sl)})
        off += len(sl)
    nrows = off
    rows = [{} for _ in range(nrows)]
    mm_cache = {}
    if m - k < 0:  # the source degree piece is empty
        return Matrix(nrows, ncols, rows, field)
    for s, sl in zip(src_summands, src_slices):
        src_off, src_pos = src_offsets[s]
        for j, i_j in enumerate(s):
            tgt = tuple(x for x in s if x != i_j)
            tgt_off, tgt_pos = tgt_offsets[tgt]
            form = lsop.form_for_index(i_j)
            if i_j not in mm_cache:
                mm_cache[i_j] = mult_map(lk, form, m - k, field)
            cols = mm_cache[i_j]
            sign = field.elem((-1) ** j)
            for mi, pos in src_pos.items():
                col = cols[mi]
                for ti, val in col.items():
                    if ti not in tgt_pos:
                        raise VerificationError(
                            "multiplication left the ideal slice I_S "
                            "(S=%r, degree %d)" % (tgt, m))
                    rows[tgt_off + tgt_pos[ti]][src_off + pos] = field.add(
                        rows[tgt_off + tgt_pos[ti]].get(src_off + pos, field.zero),
                        field.mul(sign, val))
    return Matrix(nrows, ncols, rows, field)


@dataclass
class ExactnessReport:
    ok: bool
    m_max: int
    failures: list  # (position, degree, message)
    degree_dims: dict  # m -> term dims incl. ell

    def as_dict(self):
        return {
            "ok": self.ok,
            "m_max": self.m_max,
            "failures": [
                {"position": p, "degree": m, "message": msg}
                for p, m, msg in self.failures
            ],
            "degrees": {
                str(m): {"term_dims": list(dims), "ell": ell}
                for m, (dims, ell) in sorted(self.degree_dims.items())
            },
        }


def verify_exactness(t, res, lsop, m_max=None, field=QQ, local=None):
    """Degreewise exactness of the resolution up to the horizon.

    Checks, for each degree m <= m_max: consecutive differentials compose
    to zero, the end map I -> L has kernel of the right rank, every
    interior position is exact (via rank-nullity), the leftmost map is
    injective, and the alternating dimension sum equals ell_m.
    """
    d = res.d
    if m_max is None:
        m_max = default_horizon(d)
    if local is None:
        local = local_module(t, res.e, lsop, m_max, field)
    failures = []
    degree_dims = {}
    for m in range(m_max + 1):
        dims = resolution_term_dims(t, res, m, field)
        ell_m = local.dims[m]
        degree_dims[m] = (dims, ell_m)
        mats = {k: resolution_differential(t, res, lsop, k, m, field)
                for k in range(1, d + 1)}
        ranks = {k: matrix_rank(mats[k]) for k in mats}
        for k in range(2, d + 1):
            if not (mats[k - 1] * mats[k]).is_zero():
                failures.append((k - 1, m, "d o d != 0 at position %d" % (k - 1)))
        if d >= 1:
            if ranks[d] != dims[d]:
                failures.append((d, m, "leftmost differential not injective"))
            for k in range(1, d):
                if dims[k] - ranks[k] != ranks[k + 1]:
                    failures.append((k, m, "homology at position %d nonzero" % k))
            if dims[0] - ell_m != ranks[1]:
                failures.append((0, m, "kernel of I -> L differs from image"))
        alt = sum((-1) ** k * dims[k] for k in range(d + 1))
        if alt != ell_m:
            failures.append((-1, m, "alternating dimension sum %d != ell_m %d"
                             % (alt, ell_m)))
    return ExactnessReport(not failures, m_max, failures, degree_dims)


# ---------------------------------------------------------------------------
# restrictions of L to subcomplexes, and standalone restricted modules

@dataclass(frozen=True)
class RestrictedModule:
    """Per-degree dims of I|_Delta / J|_Delta inside k[Delta]."""
    dims: tuple
    m_max: int
    seeds: tuple = ()


def _restricted_dims(delta, forms, classify, m_max, field=QQ):
    dims = []
    for m in range(m_max + 1):
        basis = graded_basis(delta, m)
        interior_idx = frozenset(
            i for i, mono in enumerate(basis)
            if classify(monomial_support(delta, mono))[0] == "interior")
        ech = Echelon(len(basis), field)
        for vec in j_span_vectors(delta, forms, classify, m, field):
            if not set(vec) <= interior_idx:
                raise VerificationError(
                    "restricted J leaves the restricted ideal in degree %d" % m)
            ech.add(vec)
        dims.append(len(interior_idx) - ech.rank)
    return tuple(dims)


def restrict_module(t, e, delta, lsop, m_max=None, field=QQ):
    """Dims of L(Gamma, E)|_Delta for a subcomplex Delta of lk(E)."""
    e = canon_face(e)
    lk = link(t.complex, e)
    if not delta.faces <= lk.faces:
        raise ValueError("Delta is not a subcomplex of lk(E)")
    d = t.n - len(e)
    if m_max is None:
        m_max = default_horizon(d)
    order, b = lsop.v_order, lsop.b

    def classify(support):
        return classify_support(t, e, support, order, b)

    forms = tuple(f.restricted(delta.vertices) for f in lsop.forms)
    dims = _restricted_dims(delta, forms, classify, m_max, field)
    return RestrictedModule(dims, m_max)


def restricted_standalone(ambient, face_carriers, e_carrier, seed,
                          m_max=None, extra_forms=0, bound=997, retries=8,
                          field=QQ):
    """Dims of a restricted module given only a face's vertex carriers.

    `face_carriers` maps each vertex of the standalone face F to its
    carrier inside the ambient vertex set; `e_carrier` is the carrier of
    the implicit face E (no ambient triangulation is needed).  Generic
    coefficients are drawn on the special supports and the computation is
    repeated with an independent seed; the two runs must agree.
    """
    from .complexes import SimplicialComplex
    from .facering import LinearForm, derive_seed
    import random as _random

    ambient = canon_face(ambient)
    vfull = frozenset(ambient)
    e_carrier = frozenset(e_carrier)
    if not e_carrier <= vfull:
        raise ValueError("E carrier not inside the ambient vertex set")
    carriers = {w: frozenset(c) for w, c in face_carriers.items()}
    for w, c in carriers.items():
        if not c <= vfull:
            raise ValueError("carrier of %r not inside the ambient vertex set" % (w,))
    delta = SimplicialComplex([list(carriers)])
    order = canon_face(vfull - e_carrier) + canon_face(e_carrier)
    b = len(vfull - e_carrier)
    d = b + extra_forms
    if m_max is None:
        m_max = d

    def classify(support):
        cov = set(e_carrier)
        for w in support:
            cov |= carriers[w]
        comp = vfull - cov
        if not comp:
            return "interior", None
        if len(comp) == 1:
            (v,) = comp
            j = order.index(v) + 1
            if j <= b:
                return "codim1", j
        return "other", None

    supports = []
    for i in range(d):
        if i < b:
            vi = order[i]
            supports.append([w for w in delta.vertices if vi in carriers[w]])
        else:
            supports.append(list(delta.vertices))

    def draw(run_seed):
        rng = _random.Random(run_seed)
        forms = []
        for s in supports:
            coeffs = {}
            for w in s:
                a = rng.randint(1, 2 * bound)
                if a > bound:
                    a = bound - a
                coeffs[w] = field.elem(a)
            forms.append(LinearForm.from_dict(coeffs, field))
        return _restricted_dims(delta, forms, classify, m_max, field)

    for attempt in range(retries):
        s1 = derive_seed(seed, "standalone", attempt, 1)
        s2 = derive_seed(seed, "standalone", attempt, 2)
        dims1 = draw(s1)
        dims2 = draw(s2)
        if dims1 == dims2:
            return RestrictedModule(dims1, m_max, (s1, s2))
    raise RuntimeError(
        "independent coefficient draws disagree after %d attempts; "
        "the coefficient bound is likely too small" % retries)
