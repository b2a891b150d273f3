"""Exact linear algebra over the rationals and prime fields.

Everything here is exact: rationals are `fractions.Fraction`, prime-field
elements are ints in [0, p).  Matrices are stored row-sparse (dict of
column -> value per row), which keeps the multiplication-map ranks cheap;
the graded pieces produced elsewhere in the package are very sparse.

Pivoting is deterministic (first nonzero column, rows in order), so all
outputs are reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    characteristic = 0

    def __repr__(self):
        return "QQ"

    def elem(self, n):
        return Fraction(n)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == 0


class PrimeField:
    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError("modulus must be prime: %r" % (p,))
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return "GF(%d)" % self.p

    def elem(self, n):
        return n % self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a % self.p == 0


QQ = RationalField()

_gf_cache = {}


def GF(p):
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_for_characteristic(char):
    return QQ if char == 0 else GF(char)


def _clean(vec, field):
    return {c: v for c, v in vec.items() if not field.is_zero(v)}


class Echelon:
    """Incremental row-echelon span with deterministic leading-entry pivots.

    Rows are sparse dicts; each stored row is normalized to leading
    coefficient 1.  `add` returns True iff the vector enlarged the span.
    """

    def __init__(self, ncols, field=QQ):
        self.ncols = ncols
        self.field = field
        self.pivots = {}  # pivot column -> normalized sparse row

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        """Residual of `vec` (sparse dict) after elimination against the span."""
        f = self.field
        vec = _clean(dict(vec), f)
        while vec:
            lead = min(vec)
            row = self.pivots.get(lead)
            if row is None:
                return vec
            coef = vec[lead]
            for c, v in row.items():
                nv = f.sub(vec.get(c, f.zero), f.mul(coef, v))
                if f.is_zero(nv):
                    vec.pop(c, None)
                else:
                    vec[c] = nv
        return vec

    def add(self, vec):
        res = self.reduce(vec)
        if not res:
            return False
        lead = min(res)
        inv = self.field.inv(res[lead])
        self.pivots[lead] = {c: self.field.mul(inv, v) for c, v in res.items()}
        return True

    def contains(self, vec):
        return not self.reduce(vec)


class TrackedEchelon:
    """Echelon span that remembers how each row combines the inserted vectors.

    `coordinates(v)` returns {insert index -> coefficient} expressing v as a
    combination of the inserted vectors, or None if v is outside the span.
    """

    def __init__(self, ncols, field=QQ):
        self.ncols = ncols
        self.field = field
        self.pivots = {}  # pivot column -> (row, combo)
        self.count = 0

    @property
    def rank(self):
        return len(self.pivots)

    def _reduce(self, vec, combo):
        f = self.field
        vec = _clean(dict(vec), f)
        combo = dict(combo)
        while vec:
            lead = min(vec)
            hit = self.pivots.get(lead)
            if hit is None:
                return vec, combo
            row, rcombo = hit
            coef = vec[lead]
            for c, v in row.items():
                nv = f.sub(vec.get(c, f.zero), f.mul(coef, v))
                if f.is_zero(nv):
                    vec.pop(c, None)
                else:
                    vec[c] = nv
            for i, v in rcombo.items():
                nv = f.sub(combo.get(i, f.zero), f.mul(coef, v))
                if f.is_zero(nv):
                    combo.pop(i, None)
                else:
                    combo[i] = nv
        return vec, combo

    def add(self, vec):
        """Insert a vector; returns True iff it increased the rank."""
        idx = self.count
        self.count += 1
        res, combo = self._reduce(vec, {idx: self.field.one})
        if not res:
            return False
        lead = min(res)
        inv = self.field.inv(res[lead])
        row = {c: self.field.mul(inv, v) for c, v in res.items()}
        comb = {i: self.field.mul(inv, v) for i, v in combo.items()}
        self.pivots[lead] = (row, comb)
        return True

    def coordinates(self, vec):
        res, combo = self._reduce(vec, {})
        if res:
            return None
        f = self.field
        return {i: f.neg(v) for i, v in combo.items()}


class Matrix:
    """Immutable exact matrix with row-sparse storage."""

    __slots__ = ("nrows", "ncols", "field", "rows")

    def __init__(self, nrows, ncols, rows=None, field=QQ):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        if rows is None:
            rows = [{} for _ in range(nrows)]
        self.rows = [_clean(r, field) for r in rows]
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")
        for r in self.rows:
            if r and (min(r) < 0 or max(r) >= ncols):
                raise ValueError("column index out of range")

    @classmethod
    def from_rows(cls, data, field=QQ):
        """Build from a list of dense row lists."""
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        rows = []
        for drow in data:
            if len(drow) != ncols:
                raise ValueError("ragged rows")
            rows.append({j: field.elem(v) for j, v in enumerate(drow)})
        return cls(nrows, ncols, rows, field)

    @classmethod
    def identity(cls, n, field=QQ):
        return cls(n, n, [{i: field.one} for i in range(n)], field)

    def entry(self, i, j):
        return self.rows[i].get(j, self.field.zero)

    def dense(self):
        return [[self.entry(i, j) for j in range(self.ncols)]
                for i in range(self.nrows)]

    def transpose(self):
        rows = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                rows[j][i] = v
        return Matrix(self.ncols, self.nrows, rows, self.field)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch: %dx%d times %dx%d"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        f = self.field
        rows = []
        for row in self.rows:
            acc = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    nv = f.add(acc.get(j, f.zero), f.mul(a, b))
                    if f.is_zero(nv):
                        acc.pop(j, None)
                    else:
                        acc[j] = nv
            rows.append(acc)
        return Matrix(self.nrows, other.ncols, rows, f)

    def is_zero(self):
        return all(not r for r in self.rows)

    def column(self, j):
        return {i: row[j] for i, row in enumerate(self.rows) if j in row}

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self):
        return "Matrix(%dx%d over %r)" % (self.nrows, self.ncols, self.field)


def rank(m):
    """Exact rank by sparse elimination."""
    ech = Echelon(m.ncols, m.field)
    for row in m.rows:
        ech.add(row)
    return ech.rank


def _rref(m):
    """Reduced row echelon form of the rows; returns (pivot row map, pivot cols)."""
    ech = Echelon(m.ncols, m.field)
    for row in m.rows:
        ech.add(row)
    f = m.field
    # back-substitute so each pivot column is cleared from the other rows
    pivot_cols = sorted(ech.pivots)
    for pc in reversed(pivot_cols):
        prow = ech.pivots[pc]
        for qc in pivot_cols:
            if qc >= pc:
                break
            qrow = ech.pivots[qc]
            coef = qrow.get(pc)
            if coef is None:
                continue
            for c, v in prow.items():
                nv = f.sub(qrow.get(c, f.zero), f.mul(coef, v))
                if f.is_zero(nv):
                    qrow.pop(c, None)
                else:
                    qrow[c] = nv
    return ech.pivots, pivot_cols


def kernel_basis(m):
    """Matrix whose columns form a basis of {v : m @ v = 0}."""
    f = m.field
    pivots, pivot_cols = _rref(m)
    free_cols = [c for c in range(m.ncols) if c not in pivots]
    cols = []
    for fc in free_cols:
        vec = {fc: f.one}
        for pc in pivot_cols:
            v = pivots[pc].get(fc)
            if v is not None:
                vec[pc] = f.neg(v)
        cols.append(vec)
    rows = [{} for _ in range(m.ncols)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    ker = Matrix(m.ncols, len(cols), rows, f)
    assert rank(m) + ker.ncols == m.ncols  # rank-nullity
    return ker


def image_basis(m):
    """Matrix whose columns (taken from m) span the column space."""
    tr = m.transpose()
    ech = Echelon(tr.ncols, tr.field)
    keep = []
    for j, row in enumerate(tr.rows):
        if ech.add(row):
            keep.append(j)
    rows = [{} for _ in range(m.nrows)]
    for out_j, j in enumerate(keep):
        for i, v in m.column(j).items():
            rows[i][out_j] = v
    return Matrix(m.nrows, len(keep), rows, m.field)


def solve(m, b):
    """Some x with m @ x = b (b a dense list or sparse dict), or None."""
    f = m.field
    if isinstance(b, dict):
        bvec = dict(b)
    else:
        if len(b) != m.nrows:
            raise ValueError("dimension mismatch")
        bvec = {i: f.elem(v) for i, v in enumerate(b) if not f.is_zero(f.elem(v))}
    # work on the transpose: find a combination of columns equal to b
    tr = m.transpose()
    ech = TrackedEchelon(m.nrows, f)
    for row in tr.rows:
        ech.add(row)
    combo = ech.coordinates(bvec)
    if combo is None:
        return None
    # `combo` is over inserted column indices, which are exactly 0..ncols-1
    return [combo.get(j, f.zero) for j in range(m.ncols)]


def intersect_rowspaces(a, b):
    """Matrix whose rows are a basis of rowspace(a) & rowspace(b)."""
    if a.ncols != b.ncols:
        raise ValueError("dimension mismatch")
    f = a.field
    # x*A = y*B  <=>  (x, y) in kernel of [A; -B]^T
    stacked_rows = list(a.rows) + [
        {c: f.neg(v) for c, v in row.items()} for row in b.rows
    ]
    stacked = Matrix(a.nrows + b.nrows, a.ncols, stacked_rows, f).transpose()
    ker = kernel_basis(stacked)
    ech = Echelon(a.ncols, f)
    rows = []
    for j in range(ker.ncols):
        coef = ker.column(j)
        vec = {}
        for i, c in coef.items():
            if i >= a.nrows:
                continue  # y-part of the kernel vector
            for col, v in a.rows[i].items():
                nv = f.add(vec.get(col, f.zero), f.mul(c, v))
                if f.is_zero(nv):
                    vec.pop(col, None)
                else:
                    vec[col] = nv
        if ech.add(vec):
            rows.append(vec)
    return Matrix(len(rows), a.ncols, rows, f)
