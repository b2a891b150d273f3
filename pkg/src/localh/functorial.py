"""Maps between local face modules, and structure analysis of faces.

For E < E' the induced map is built exactly as in the two-step
construction: restrict the l.s.o.p. to the closed star of E' \\ E, then
intersect its degree-1 span with the face ring of lk(E') to obtain the
target l.s.o.p.  The map on module generators is the unique ring-algebra
substitution killing everything outside the star.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .complexes import SimplicialComplex, canon_face, closed_star, face_key, link
from .errors import VerificationError
from .facering import (Echelon, LinearForm, QQ, SpecialLsop, basis_index,
                       derive_seed, graded_basis, relative_vertex_order,
                       sample_lsop, theta_span, verify_lsop)
from .linalg import Matrix, TrackedEchelon, intersect_rowspaces, solve
from .linalg import rank as matrix_rank
from .localmodule import local_h_incexc, local_module, restrict_module
from .triangulation import interior_faces

MAX_PARTITION_VERTICES = 16


# ---------------------------------------------------------------------------
# degree-1 coordinate helpers (vectors over a fixed vertex list)

def _form_vec(form, vpos):
    return {vpos[v]: a for v, a in form.coeffs if v in vpos}


def _vec_form(vec, verts):
    return LinearForm(tuple((verts[i], a) for i, a in sorted(vec.items())))


def _expand_product(c, linear_dicts, field):
    """Product of degree-1 polynomials inside k[c]; non-face monomials die."""
    verts = c.vertices
    vpos = {v: i for i, v in enumerate(verts)}
    cur = {(0,) * len(verts): field.one}
    for poly in linear_dicts:
        nxt = {}
        for mono, coef in cur.items():
            for v, a in poly:
                i = vpos[v]
                lifted = list(mono)
                lifted[i] += 1
                lifted = tuple(lifted)
                supp = tuple(verts[j] for j, ex in enumerate(lifted) if ex)
                if supp not in c.faces:
                    continue
                nv = field.add(nxt.get(lifted, field.zero), field.mul(coef, a))
                if field.is_zero(nv):
                    nxt.pop(lifted, None)
                else:
                    nxt[lifted] = nv
        cur = nxt
        if not cur:
            break
    return cur


def minimal_nonfaces(c):
    """Minimal subsets of the vertex set that are not faces."""
    verts = c.vertices
    out = []
    for size in range(1, c.dim + 3):
        for cand in combinations(verts, size):
            if cand in c.faces:
                continue
            if all(cand[:j] + cand[j + 1:] in c.faces for j in range(size)):
                out.append(cand)
    return tuple(out)


# ---------------------------------------------------------------------------
# the induced map

@dataclass
class InducedMap:
    e: tuple
    e_prime: tuple
    sigma_e: frozenset
    sigma_e_prime: frozenset
    source_lsop: SpecialLsop
    target_lsop: SpecialLsop
    substitution: dict  # vertex of lk(E) -> LinearForm over lk(E') (possibly zero)
    source: object  # LocalModule
    target: object  # LocalModule
    matrices: dict  # degree -> Matrix (rows: target reps, cols: source reps)

    def degree_matrix(self, m):
        return self.matrices[m]


def induced_map(t, e, e_prime, lsop, seed=0, m_max=None, field=QQ):
    """The functorial map L(Gamma, E) -> L(Gamma, E') for faces E <= E'."""
    e = canon_face(e)
    e_prime = canon_face(e_prime)
    if not set(e) <= set(e_prime):
        raise ValueError("E must be contained in E'")
    if e_prime not in t.complex:
        raise ValueError("%r is not a face" % (e_prime,))
    lk_e = link(t.complex, e)
    diff = canon_face(set(e_prime) - set(e))
    star = closed_star(lk_e, diff)
    lk_ep = link(t.complex, e_prime)
    order_p, b_p, d_p = relative_vertex_order(t, e_prime)
    d = t.n - len(e)

    star_verts = star.vertices
    spos = {v: i for i, v in enumerate(star_verts)}
    lk_ep_verts = set(lk_ep.vertices)
    diff_set = set(diff)

    # restrictions of the source l.s.o.p. to the star
    theta_star = [f.restricted(star_verts) for f in lsop.forms]

    # zeta_j = theta_{i(j)} restricted to lk(E'), for the b' distinguished slots
    zetas = []
    for j in range(b_p):
        vj = order_p[j]
        try:
            i = lsop.v_order.index(vj)
        except ValueError:
            raise VerificationError("distinguished vertex %r missing from source order" % (vj,))
        if i >= lsop.b:
            raise VerificationError(
                "vertex %r outside the source's distinguished range" % (vj,))
        restricted = theta_star[i]
        if not restricted.support <= lk_ep_verts:
            raise VerificationError(
                "restricted special form %d is not supported on lk(E')" % (i + 1,))
        zetas.append(restricted.restricted(lk_ep.vertices))

    # W = k[lk(E')]_1 intersect (theta'_1, ..., theta'_d)_1, over star coords
    theta_rows = [_form_vec(f, spos) for f in theta_star]
    theta_mat = Matrix(len(theta_rows), len(star_verts), theta_rows, field)
    coord_rows = [{spos[v]: field.one} for v in star_verts if v in lk_ep_verts]
    coord_mat = Matrix(len(coord_rows), len(star_verts), coord_rows, field)
    w_mat = intersect_rowspaces(theta_mat, coord_mat)
    if w_mat.nrows != d_p:
        raise VerificationError(
            "degree-1 intersection has dimension %d, expected %d"
            % (w_mat.nrows, d_p))

    wech = _w_echelon(w_mat, field)
    ech = Echelon(len(star_verts), field)
    for z in zetas:
        if not ech.add(_form_vec(z, spos)):
            raise VerificationError("distinguished restrictions are dependent")
        if not wech.contains(_form_vec(z, spos)):
            raise VerificationError("distinguished restriction leaves the intersection")

    # extend to a basis of W with seeded random combinations
    rng = random.Random(derive_seed(seed, "zeta-extension", tuple(e), tuple(e_prime)))
    guard = 0
    while ech.rank < d_p:
        coeffs = [field.elem(rng.randint(-9, 9)) for _ in range(w_mat.nrows)]
        vec = {}
        for i, cf in enumerate(coeffs):
            for c, v in w_mat.rows[i].items():
                nv = field.add(vec.get(c, field.zero), field.mul(cf, v))
                if field.is_zero(nv):
                    vec.pop(c, None)
                else:
                    vec[c] = nv
        if ech.add(vec):
            zetas.append(_vec_form(vec, star_verts).restricted(lk_ep.vertices))
        guard += 1
        if guard > 200:
            raise RuntimeError("failed to extend to a basis of the intersection")

    if not verify_lsop(zetas, lk_ep, field):
        raise VerificationError("constructed target system fails condition (*)")
    target_lsop = SpecialLsop(tuple(zetas), order_p, b_p, d_p,
                              derive_seed(seed, "zeta", tuple(e_prime)),
                              lsop.bound, True)

    # substitution table: solve x^u = r_u mod (theta') for u in E' \ E
    substitution = {}
    diff_list = sorted(diff_set, key=lambda v: face_key((v,)))
    if diff_list:
        drows = {u: i for i, u in enumerate(diff_list)}
        a_rows = [{} for _ in range(len(diff_list))]
        for jcol, form in enumerate(theta_star):
            for v, a in form.coeffs:
                if v in drows:
                    a_rows[drows[v]][jcol] = a
        a_mat = Matrix(len(diff_list), len(theta_star), a_rows, field)
        for u in diff_list:
            rhs = {drows[u]: field.one}
            coeff = solve(a_mat, rhs)
            if coeff is None:
                raise VerificationError(
                    "no presentation of %r modulo the restricted system" % (u,))
            vec = {}
            for jcol, cf in enumerate(coeff):
                if field.is_zero(cf):
                    continue
                for v, a in theta_star[jcol].coeffs:
                    nv = field.sub(vec.get(v, field.zero), field.mul(cf, a))
                    if field.is_zero(nv):
                        vec.pop(v, None)
                    else:
                        vec[v] = nv
            vec[u] = field.add(vec.get(u, field.zero), field.one)
            if any(v in diff_set and not field.is_zero(a) for v, a in vec.items()):
                raise VerificationError("substitution for %r not supported on lk(E')" % (u,))
            substitution[u] = LinearForm.from_dict(
                {v: a for v, a in vec.items() if v in lk_ep_verts}, field)

    for u in lk_e.vertices:
        if u in lk_ep_verts:
            substitution[u] = LinearForm(((u, field.one),))
        elif u not in diff_set:
            substitution[u] = LinearForm(())

    source = local_module(t, e, lsop, m_max, field)
    target = local_module(t, e_prime, target_lsop, m_max, field)

    _check_well_defined(lk_e, lk_ep, substitution, lsop, target_lsop, field)

    matrices = {}
    top = min(source.m_max, target.m_max)
    for m in range(top + 1):
        matrices[m] = _phi_matrix(lk_e, lk_ep, substitution, source, target,
                                  target_lsop, m, field)
    return InducedMap(e, e_prime, t.carrier(e), t.carrier(e_prime),
                      lsop, target_lsop, substitution, source, target, matrices)


def _w_echelon(w_mat, field):
    ech = Echelon(w_mat.ncols, field)
    for row in w_mat.rows:
        ech.add(row)
    return ech


def _check_well_defined(lk_e, lk_ep, substitution, lsop, target_lsop, field):
    """phi must kill the face-ring relations and the source l.s.o.p. ideal."""
    verts_ep = lk_ep.vertices
    eppos = {v: i for i, v in enumerate(verts_ep)}
    zech = Echelon(len(verts_ep), field)
    for z in target_lsop.forms:
        zech.add(_form_vec(z, eppos))
    for i, theta in enumerate(lsop.forms):
        image = {}
        for u, a in theta.coeffs:
            phi_u = substitution.get(u)
            if phi_u is None:
                continue  # vertex outside lk(E): theta may touch E itself
            for v, c in phi_u.coeffs:
                nv = field.add(image.get(v, field.zero), field.mul(a, c))
                if field.is_zero(nv):
                    image.pop(v, None)
                else:
                    image[v] = nv
        vec = {eppos[v]: a for v, a in image.items()}
        if not zech.contains(vec):
            raise VerificationError(
                "image of theta_%d is not in the target l.s.o.p. ideal" % (i + 1,))
    for nonface in minimal_nonfaces(lk_e):
        factors = [substitution[u].coeffs for u in nonface]
        if any(not f for f in factors):
            continue
        poly = _expand_product(lk_ep, factors, field)
        if not poly:
            continue
        m = len(nonface)
        idx = basis_index(lk_ep, m)
        vec = {idx[mono]: coef for mono, coef in poly.items()}
        ech = Echelon(len(idx), field)
        for v in theta_span(lk_ep, target_lsop.forms, m, field):
            ech.add(v)
        if not ech.contains(vec):
            raise VerificationError(
                "image of non-face relation %r survives in the target" % (nonface,))


def _phi_matrix(lk_e, lk_ep, substitution, source, target, target_lsop, m, field):
    basis_tgt = graded_basis(lk_ep, m)
    idx_tgt = {mono: i for i, mono in enumerate(basis_tgt)}
    ech = TrackedEchelon(len(basis_tgt), field)
    for vec in theta_span(lk_ep, target_lsop.forms, m, field):
        ech.add(vec)
    n_theta = ech.count
    rep_slots = {}
    for r, mono in enumerate(target.reps[m] if m < len(target.reps) else ()):
        rep_slots[n_theta + len(rep_slots)] = r
        ech.add({idx_tgt[mono]: field.one})
    src_reps = source.reps[m] if m < len(source.reps) else ()
    verts_e = lk_e.vertices
    cols = []
    for mono in src_reps:
        factors = []
        for i, ex in enumerate(mono):
            factors.extend([substitution[verts_e[i]].coeffs] * ex)
        poly = _expand_product(lk_ep, factors, field)
        vec = {idx_tgt[mm]: cf for mm, cf in poly.items()}
        combo = ech.coordinates(vec)
        if combo is None:
            raise VerificationError(
                "image of a module generator leaves L(Gamma, E') in degree %d" % m)
        col = {}
        for ins, cf in combo.items():
            slot = rep_slots.get(ins)
            if slot is not None and not field.is_zero(cf):
                col[slot] = cf
        cols.append(col)
    nrows = len(target.reps[m]) if m < len(target.reps) else 0
    rows = [{} for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    return Matrix(nrows, len(cols), rows, field)


def check_monotonicity(phi):
    """Theorem-level check: with sigma(E) = sigma(E'), phi is surjective.

    Raises ValueError when the carriers differ.  Returns True iff every
    degree matrix of phi is surjective, in which case the entrywise
    inequality of the local h-vectors is additionally asserted.
    """
    if phi.sigma_e != phi.sigma_e_prime:
        raise ValueError(
            "sigma(E) != sigma(E'): monotonicity precondition violated")
    src, tgt = phi.source, phi.target
    d_p = tgt.d
    for m in range(d_p + 1):
        mat = phi.matrices[m]
        if matrix_rank(mat) != mat.nrows:
            return False
    for m in range(d_p + 1):
        if src.dims[m] < tgt.dims[m]:
            raise VerificationError("local h-vectors not monotone in degree %d" % m)
    return True


def _span_equal(forms_a, forms_b, verts, field):
    vpos = {v: i for i, v in enumerate(verts)}
    ea = Echelon(len(verts), field)
    for f in forms_a:
        ea.add(_form_vec(f, vpos))
    eb = Echelon(len(verts), field)
    for f in forms_b:
        eb.add(_form_vec(f, vpos))
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(_form_vec(f, vpos)) for f in forms_b)


def check_functor_composition(t, e, e1, e2, lsop, seed=0, field=QQ):
    """phi'' = phi' o phi along a chain E <= E' <= E'', all choices fixed.

    Also asserts that a second random basis extension for the middle step
    changes neither the generated degree-1 ideal nor the map matrices.
    """
    e, e1, e2 = canon_face(e), canon_face(e1), canon_face(e2)
    if not (set(e) <= set(e1) <= set(e2)):
        raise ValueError("faces must form a chain")
    phi = induced_map(t, e, e1, lsop, seed=seed, field=field)
    phi_alt = induced_map(t, e, e1, lsop, seed=derive_seed(seed, "alt"), field=field)
    lk_e1 = link(t.complex, e1)
    if not _span_equal(phi.target_lsop.forms, phi_alt.target_lsop.forms,
                       lk_e1.vertices, field):
        raise VerificationError("extension seed changed the generated ideal")
    for m in phi.matrices:
        if phi.matrices[m] != phi_alt.matrices[m]:
            raise VerificationError("extension seed changed the induced map")
    phi2 = induced_map(t, e1, e2, phi.target_lsop, seed=seed, field=field)
    phi12 = induced_map(t, e, e2, lsop, seed=seed, field=field)
    lk_e2 = link(t.complex, e2)
    if not _span_equal(phi2.target_lsop.forms, phi12.target_lsop.forms,
                       lk_e2.vertices, field):
        raise VerificationError("composite and direct target ideals differ")
    top = min(max(phi2.matrices), max(phi12.matrices), max(phi.matrices))
    for m in range(top + 1):
        if phi12.matrices[m] != phi2.matrices[m] * phi.matrices[m]:
            raise VerificationError("composition fails in degree %d" % m)
    return True


# ---------------------------------------------------------------------------
# pyramids, interior partitions, internal edge graphs

@dataclass(frozen=True)
class FaceStructure:
    face: tuple
    apexes: tuple
    base_directions: dict
    is_pyramid: bool
    is_u_pyramid: bool
    interior_partitions: tuple  # unordered pairs (F1, F2), canonically sorted

    def as_dict(self):
        return {
            "face": list(self.face),
            "apexes": list(self.apexes),
            "base_directions": {str(w): sorted(map(str, vw))
                                for w, vw in self.base_directions.items()},
            "is_pyramid": self.is_pyramid,
            "is_u_pyramid": self.is_u_pyramid,
            "interior_partitions": [[list(f1), list(f2)]
                                    for f1, f2 in self.interior_partitions],
        }


def face_structure(t, e, f):
    """Apexes, base directions, pyramid flags, and interior partitions of F."""
    e = canon_face(e)
    f = canon_face(f)
    union = canon_face(set(f) | set(e))
    if set(f) & set(e) or union not in t.complex:
        raise ValueError("%r is not a face of lk(E)" % (f,))
    vfull = frozenset(t.ambient)
    if t.carrier(union) != vfull:
        raise ValueError("F u E is not interior")
    apexes = []
    base = {}
    for w in f:
        rest = canon_face(set(union) - {w})
        comp = vfull - t.carrier(rest)
        if comp:
            apexes.append(w)
            base[w] = canon_face(comp)
    apexes = tuple(apexes)
    is_pyramid = bool(apexes)
    is_u = any(len(base[w]) == 1 for w in apexes)
    rest = [w for w in f if w not in apexes]
    if len(rest) > MAX_PARTITION_VERTICES:
        raise ValueError("face too large for interior-partition enumeration")
    partitions = set()
    aset = set(apexes) | set(e)
    for mask in range(1 << len(rest)):
        f1 = frozenset(rest[i] for i in range(len(rest)) if mask >> i & 1)
        f2 = frozenset(rest) - f1
        key = frozenset((f1, f2))
        if key in partitions:
            continue
        c1 = t.carrier(canon_face(set(f1) | aset))
        c2 = t.carrier(canon_face(set(f2) | aset))
        if c1 == vfull and c2 == vfull:
            partitions.add(key)
    canon_parts = []
    for key in partitions:
        pair = sorted((canon_face(p) for p in key), key=face_key)
        if len(pair) == 1:  # F1 = F2 only when both empty
            pair = [pair[0], pair[0]]
        canon_parts.append((pair[0], pair[1]))
    canon_parts.sort(key=lambda p: (face_key(p[0]), face_key(p[1])))
    return FaceStructure(f, apexes, base, is_pyramid, is_u, tuple(canon_parts))


@dataclass(frozen=True)
class InternalEdgeGraph:
    vertices: tuple
    edges: tuple
    carrier_codim: dict  # vertex -> codim of sigma({v} u E)
    components: tuple  # dicts: vertices, edges, shape, has_four_cycle

    def as_dict(self):
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "carrier_codim": {str(v): c for v, c in self.carrier_codim.items()},
            "components": [
                {"vertices": list(c["vertices"]),
                 "edges": [list(e) for e in c["edges"]],
                 "shape": c["shape"],
                 "has_four_cycle": c["has_four_cycle"]}
                for c in self.components
            ],
        }


def internal_edge_graph(t, e, delta):
    """Edges of Delta whose union with E is interior, with classification.

    Components are matched against the two admissible shapes: a tree with
    at most one vertex of carrier codimension > 1, or a unicyclic graph
    all of whose vertices have carrier codimension exactly 1.
    """
    e = canon_face(e)
    vfull = frozenset(t.ambient)
    n = t.n
    verts = delta.vertices
    codim = {v: n - len(t.carrier(canon_face({v} | set(e)))) for v in verts}
    edges = tuple(pair for pair in delta.faces_of_dim(1)
                  if t.carrier(canon_face(set(pair) | set(e))) == vfull)
    adj = {v: set() for v in verts}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = set()
    components = []
    for v in verts:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comp = canon_face(comp)
        comp_edges = tuple(ed for ed in edges if ed[0] in comp)
        nv, ne = len(comp), len(comp_edges)
        deep = sum(1 for x in comp if codim[x] > 1)
        if ne == nv - 1 and deep <= 1:
            shape = "tree"
        elif ne == nv and deep == 0:
            shape = "unicyclic-codim-1"
        else:
            shape = "violating"
        components.append({
            "vertices": comp,
            "edges": comp_edges,
            "shape": shape,
            "has_four_cycle": _has_four_cycle(comp, adj),
        })
    return InternalEdgeGraph(verts, edges, codim, tuple(components))


def _has_four_cycle(comp, adj):
    for i, u in enumerate(comp):
        for v in comp[i + 1:]:
            common = adj[u] & adj[v]
            if len(common) >= 2:
                return True
    return False


# ---------------------------------------------------------------------------
# the vanishing-structure audit

@dataclass(frozen=True)
class AnalysisReport:
    e: tuple
    ell: tuple
    verdict: str  # "vanishing" | "nonvanishing"
    audits: tuple  # per-face checks run on vanishing instances
    witnesses: tuple  # certified nonvanishing witnesses otherwise

    def as_dict(self):
        return {
            "verdict": self.verdict,
            "ell": list(self.ell),
            "witnesses": [dict(w) for w in self.witnesses],
            "audits": [dict(a) for a in self.audits],
        }


def vanishing_structure_audit(t, e, seed=0, field=QQ):
    """Run the necessary-condition battery for vanishing local h-vectors.

    If ell(Gamma, E) = 0: every interior face with an interior partition
    whose smaller part has at most two vertices must be a U-pyramid, and
    every internal edge graph must fall into the two admissible component
    shapes with no 4-cycle.  If ell != 0: certified witnesses are
    collected (nonzero interior monomial classes, nonvanishing restricted
    modules, and the codimension-1 degree-1 lower bound).  Contradictions
    with the predictions are raised as bug traps, never reported quietly.
    """
    e = canon_face(e)
    ell = local_h_incexc(t, e)
    vanishing = not any(ell)
    lk = link(t.complex, e)
    vfull = frozenset(t.ambient)
    codim_e = t.n - len(t.carrier(e))
    intf = interior_faces(t, e)
    structures = [(f, face_structure(t, e, f)) for f in intf.faces if f]
    audits = []
    witnesses = []
    lsop = None

    def get_lsop():
        nonlocal lsop
        if lsop is None:
            lsop = sample_lsop(t, e, seed, field=field)
        return lsop

    if vanishing:
        for f, fs in structures:
            small = [p for p in fs.interior_partitions
                     if min(len(p[0]), len(p[1])) <= 2]
            if small and not fs.is_u_pyramid:
                raise VerificationError(
                    "vanishing instance has a non-U-pyramid face %r with a "
                    "small interior partition" % (f,))
            audits.append({
                "face": list(f),
                "kind": "u-pyramid",
                "is_u_pyramid": fs.is_u_pyramid,
                "small_partitions": len(small),
                "ok": True,
            })
        if codim_e >= 2:
            for f in sorted(lk.faces, key=face_key):
                if len(f) < 2:
                    continue
                if any(t.carrier(canon_face({v} | set(e))) == vfull for v in f):
                    continue
                ieg = internal_edge_graph(t, e, SimplicialComplex([f]))
                bad = [c for c in ieg.components
                       if c["shape"] == "violating" or
                       (c["has_four_cycle"] and len(c["edges"]) > 0)]
                if bad:
                    raise VerificationError(
                        "vanishing instance violates the internal-edge-graph "
                        "shapes at face %r" % (f,))
                if ieg.edges:
                    audits.append({
                        "face": list(f),
                        "kind": "internal-edge-graph",
                        "components": sorted(c["shape"] for c in ieg.components
                                             if c["edges"]),
                        "ok": True,
                    })
    else:
        for f, fs in structures:
            if fs.is_u_pyramid:
                continue
            if fs.apexes == f:
                # interior monomial witness: the class of x^F is nonzero
                m = len(f)
                basis = graded_basis(lk, m)
                idx = basis_index(lk, m)
                verts = lk.vertices
                mono = tuple(1 if v in set(f) else 0 for v in verts)
                ech = Echelon(len(basis), field)
                for vec in theta_span(lk, get_lsop().forms, m, field):
                    ech.add(vec)
                if ech.contains({idx[mono]: field.one}):
                    raise VerificationError(
                        "predicted nonzero interior monomial class x^%r "
                        "vanishes" % (f,))
                witnesses.append({"face": list(f), "kind": "interior-monomial",
                                  "degree": m})
            elif fs.interior_partitions:
                f1 = min(min(len(p[0]), len(p[1]))
                         for p in fs.interior_partitions)
                if f1 > 2:
                    continue
                deg = f1 + len(fs.apexes)
                delta = SimplicialComplex([f])
                rest = restrict_module(t, e, delta, get_lsop(), deg, field)
                if rest.dims[deg] < 1:
                    raise VerificationError(
                        "predicted nonvanishing of the restriction to %r in "
                        "degree %d fails" % (f, deg))
                witnesses.append({"face": list(f),
                                  "kind": "restricted-nonvanishing",
                                  "degree": deg})
        if codim_e == 1:
            count = sum(1 for v in lk.vertices
                        if t.carrier(canon_face({v} | set(e))) == vfull)
            if count >= 2:
                if ell[1] < count - 1:
                    raise VerificationError(
                        "degree-1 lower bound %d fails against ell_1 = %d"
                        % (count - 1, ell[1]))
                witnesses.append({"face": [], "kind": "degree-1-lower-bound",
                                  "degree": 1, "bound": count - 1})
    verdict = "vanishing" if vanishing else "nonvanishing"
    return AnalysisReport(e, ell, verdict, tuple(audits), tuple(witnesses))
