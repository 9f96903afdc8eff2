"""
Sparse exact matrices over a cyclotomic field, and Gaussian elimination.

A :class:`Matrix` stores only its nonzero entries, column-major:
``cols[c][r] = entry``.  Elimination is ordinary Gauss-Jordan over the field
with a fixed pivot rule: rows are consumed in order and each new pivot is the
first nonzero entry of the (reduced) row.  Results are therefore
deterministic.
"""

from __future__ import annotations


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "cols")

    def __init__(self, field, nrows, ncols, cols=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        clean = {}
        if cols:
            for c, col in cols.items():
                col = {r: v for r, v in col.items() if v}
                if col:
                    clean[c] = col
        self.cols = clean

    # -- constructors ----------------------------------------------------------
    @classmethod
    def identity(cls, field, n):
        one = field.one()
        return cls._raw(field, n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def zero(cls, field, nrows, ncols):
        return cls._raw(field, nrows, ncols, {})

    @classmethod
    def _raw(cls, field, nrows, ncols, cols):
        self = object.__new__(cls)
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols
        return self

    @classmethod
    def from_dense(cls, field, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = {}
        for r, row in enumerate(rows):
            assert len(row) == ncols
            for c, v in enumerate(row):
                v = field(v)
                if v:
                    cols.setdefault(c, {})[r] = v
        return cls._raw(field, nrows, ncols, cols)

    @classmethod
    def from_columns(cls, field, nrows, columns):
        """Columns given as a list of {row: value} dicts."""
        return cls(field, nrows, len(columns), dict(enumerate(columns)))

    # -- access ---------------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, rc):
        r, c = rc
        return self.cols.get(c, {}).get(r, self.field.zero())

    def column(self, c):
        return self.cols.get(c, {})

    def to_dense(self):
        z = self.field.zero()
        out = [[z] * self.ncols for _ in range(self.nrows)]
        for c, col in self.cols.items():
            for r, v in col.items():
                out[r][c] = v
        return out

    def rows(self):
        """Row-major view: list of {col: value} dicts."""
        rows = [dict() for _ in range(self.nrows)]
        for c in sorted(self.cols):
            for r, v in self.cols[c].items():
                rows[r][c] = v
        return rows

    def triplets(self):
        """Sorted (row, col, value) triplets of the nonzero entries."""
        out = []
        for c, col in self.cols.items():
            for r, v in col.items():
                out.append((r, c, v))
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def nnz(self):
        return sum(len(col) for col in self.cols.values())

    def is_zero(self):
        return not self.cols

    def __repr__(self):
        return "Matrix(%dx%d, nnz=%d)" % (self.nrows, self.ncols, self.nnz())

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.shape == other.shape and self.field is other.field
                and self.cols == other.cols)

    def __hash__(self):
        return hash((self.shape, tuple(self.triplets())))

    # -- algebra --------------------------------------------------------------
    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch: %s vs %s" % (self.shape, other.shape))

    def __add__(self, other):
        self._check_same_shape(other)
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            tgt = cols.setdefault(c, {})
            for r, v in col.items():
                s = tgt.get(r)
                s = v if s is None else s + v
                if s:
                    tgt[r] = s
                else:
                    tgt.pop(r, None)
            if not tgt:
                del cols[c]
        return Matrix._raw(self.field, self.nrows, self.ncols, cols)

    def __neg__(self):
        return Matrix._raw(self.field, self.nrows, self.ncols,
                           {c: {r: -v for r, v in col.items()}
                            for c, col in self.cols.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = self.field(s)
        if not s:
            return Matrix.zero(self.field, self.nrows, self.ncols)
        return Matrix._raw(self.field, self.nrows, self.ncols,
                           {c: {r: v * s for r, v in col.items()}
                            for c, col in self.cols.items()})

    def __matmul__(self, other):
        """Matrix product self * other."""
        if self.ncols != other.nrows:
            raise ValueError("cannot compose %s after %s" % (self.shape, other.shape))
        cols = {}
        mine = self.cols
        for c, col in other.cols.items():
            acc = {}
            for k, v in col.items():
                src = mine.get(k)
                if not src:
                    continue
                for r, w in src.items():
                    s = acc.get(r)
                    acc[r] = w * v if s is None else s + w * v
            acc = {r: v for r, v in acc.items() if v}
            if acc:
                cols[c] = acc
        return Matrix._raw(self.field, self.nrows, other.ncols, cols)

    def kron(self, other):
        """Kronecker product, left factor major."""
        nr, nc = other.nrows, other.ncols
        cols = {}
        for c1, col1 in self.cols.items():
            for c2, col2 in other.cols.items():
                out = {}
                for r1, v1 in col1.items():
                    base = r1 * nr
                    for r2, v2 in col2.items():
                        out[base + r2] = v1 * v2
                cols[c1 * nc + c2] = out
        return Matrix._raw(self.field, self.nrows * nr, self.ncols * nc, cols)

    def transpose(self):
        cols = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                cols.setdefault(r, {})[c] = v
        return Matrix._raw(self.field, self.ncols, self.nrows, cols)

    def apply(self, vec):
        """Apply to a sparse vector {index: value}."""
        out = {}
        for k, v in vec.items():
            for r, w in self.cols.get(k, {}).items():
                s = out.get(r)
                out[r] = w * v if s is None else s + w * v
        return {r: v for r, v in out.items() if v}

    def submatrix(self, rows, cols):
        rpos = {r: i for i, r in enumerate(rows)}
        out = {}
        for j, c in enumerate(cols):
            col = self.cols.get(c)
            if not col:
                continue
            sub = {rpos[r]: v for r, v in col.items() if r in rpos}
            if sub:
                out[j] = sub
        return Matrix._raw(self.field, len(rows), len(cols), out)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row mismatch in hstack")
        cols = dict(self.cols)
        for c, col in other.cols.items():
            cols[self.ncols + c] = col
        return Matrix._raw(self.field, self.nrows, self.ncols + other.ncols, cols)

    def power(self, k):
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        acc = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                acc = acc @ base
            base = base @ base
            k >>= 1
        return acc

    # -- elimination shortcuts --------------------------------------------------
    def rank(self):
        # column space rank = rank of the transpose's row space
        return len(Echelon(self.field, self.cols.values()).pivots)

    def nullspace(self):
        return nullspace(self)


class Echelon:
    """Incremental reduced row echelon form of a list of sparse rows.

    Rows are reduced in the order given; each new pivot is the leftmost
    nonzero entry of the reduced row, and the whole system is kept fully
    reduced (pivot entries 1, zeros above and below each pivot).
    """

    def __init__(self, field, rows=()):
        self.field = field
        self.pivot_rows = {}  # pivot column -> row dict
        self.pivots = []  # in insertion order
        for row in rows:
            self.add(row)

    def reduce(self, row):
        row = dict(row)
        for p in [c for c in row if c in self.pivot_rows]:
            f = row.get(p)
            if not f:
                continue
            for c, v in self.pivot_rows[p].items():
                s = row.get(c)
                s = -f * v if s is None else s - f * v
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
        return row

    def add(self, row):
        """Insert a row; return True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = row[p].inverse()
        row = {c: v * inv for c, v in row.items()}
        for q, prow in self.pivot_rows.items():
            f = prow.get(p)
            if f:
                for c, v in row.items():
                    s = prow.get(c)
                    s = -f * v if s is None else s - f * v
                    if s:
                        prow[c] = s
                    else:
                        prow.pop(c, None)
        self.pivot_rows[p] = row
        self.pivots.append(p)
        return True

    def contains(self, row):
        return not self.reduce(row)

    @property
    def rank(self):
        return len(self.pivots)


def rank(m):
    return m.rank()


def nullspace(m):
    """Basis of {x : m x = 0}, one vector per free column (ascending)."""
    ech = Echelon(m.field, m.rows())
    pivot_set = set(ech.pivot_rows)
    one = m.field.one()
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        vec = {f: one}
        for p, row in ech.pivot_rows.items():
            v = row.get(f)
            if v:
                vec[p] = -v
        basis.append(vec)
    return basis


def kernel_matrix(m):
    """Matrix whose columns are the nullspace basis of ``m``."""
    basis = nullspace(m)
    return Matrix(m.field, m.ncols, len(basis), dict(enumerate(basis)))


def image_basis(m):
    """RREF basis (as sparse vectors) of the column space of ``m``."""
    ech = Echelon(m.field, (m.cols[c] for c in sorted(m.cols)))
    return [ech.pivot_rows[p] for p in sorted(ech.pivot_rows)]


def cokernel(m):
    """Complement data for coker(m) = target / im(m).

    Returns ``(complement, projection)``: ``complement`` lists the target
    coordinates whose unit vectors form a basis of a complement of the image
    (the non-pivot coordinates of the RREF of the image), and ``projection``
    is the matrix of the quotient map in that basis.
    """
    ech = Echelon(m.field, (m.cols[c] for c in sorted(m.cols)))
    pivots = set(ech.pivot_rows)
    complement = [i for i in range(m.nrows) if i not in pivots]
    pos = {j: k for k, j in enumerate(complement)}
    one = m.field.one()
    cols = {}
    for i in range(m.nrows):
        if i in pos:
            cols[i] = {pos[i]: one}
        else:
            # e_i = row_i - (row_i - e_i) and row_i lies in the image
            col = {pos[j]: -v for j, v in ech.pivot_rows[i].items() if j != i}
            if col:
                cols[i] = col
    return complement, Matrix._raw(m.field, len(complement), m.nrows, cols)


def inverse(m):
    """Exact inverse of a square matrix; raises ValueError if singular."""
    if m.nrows != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    one = m.field.one()
    rows = m.rows()
    for i, row in enumerate(rows):
        row[n + i] = one
    ech = Echelon(m.field, rows)
    if not all(i in ech.pivot_rows for i in range(n)):
        raise ValueError("matrix is singular")
    cols = {}
    for i in range(n):
        for c, v in ech.pivot_rows[i].items():
            if c >= n:
                cols.setdefault(c - n, {})[i] = v
    return Matrix._raw(m.field, n, n, cols)


def solve(m, rhs):
    """Some x with m x = rhs (sparse vector), or None if inconsistent."""
    n = m.ncols
    rows = m.rows()
    for r in range(m.nrows):
        v = rhs.get(r)
        if v:
            rows[r][n] = v
    ech = Echelon(m.field, rows)
    if n in ech.pivot_rows:
        return None
    x = {}
    for p, row in ech.pivot_rows.items():
        v = row.get(n)
        if v:
            x[p] = v
    return x
