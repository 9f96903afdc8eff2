"""
Z_n-graded vector spaces over Q(zeta_n) with the anyonic braiding

    psi(v (x) w) = zeta^(|v||w|) w (x) v.

The monoidal structure is strict: k-fold tensor products are flattened
left-associated with the left factor major, so ``I (x) V`` and ``V (x) I`` are
literally ``V``.  A space records the degree of every basis vector; spaces
built from dimension vectors list their basis by (degree, index) but tensor
products keep the flattened order.

Passing ``symmetric=True`` to the braiding functions selects q = 1, i.e. the
plain flip on every pair of objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, Sequence

from .cyclo import CyclotomicField, FieldMismatchError
from .linalg import Matrix, cokernel as _cokernel, image_basis, nullspace as _nullspace


class DegreeError(ValueError):
    """A map has a nonzero entry between basis vectors of different degrees."""


class BasisVector(NamedTuple):
    degree: int
    index: int


@dataclass(frozen=True)
class GradedSpace:
    field: CyclotomicField
    degrees: tuple

    def __post_init__(self):
        n = self.field.n
        object.__setattr__(self, "degrees", tuple(self.degrees))
        for d in self.degrees:
            if not 0 <= d < n:
                raise ValueError("degree %r out of range for n=%d" % (d, n))

    @classmethod
    def from_dims(cls, field, dims):
        if len(dims) != field.n:
            raise ValueError("dims must have length n=%d, got %d" % (field.n, len(dims)))
        if any(d < 0 for d in dims):
            raise ValueError("negative dimension in %r" % (dims,))
        return cls(field, tuple(k for k, d in enumerate(dims) for _ in range(d)))

    @classmethod
    def unit(cls, field):
        return cls(field, (0,))

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @property
    def n(self):
        return self.field.n

    @property
    def dim(self):
        return len(self.degrees)

    total_dim = dim

    @property
    def dims(self):
        out = [0] * self.field.n
        for d in self.degrees:
            out[d] += 1
        return tuple(out)

    @property
    def support(self):
        return frozenset(self.degrees)

    def is_canonical(self):
        return list(self.degrees) == sorted(self.degrees)

    def basis(self):
        seen = [0] * self.field.n
        out = []
        for d in self.degrees:
            out.append(BasisVector(d, seen[d]))
            seen[d] += 1
        return out

    def indices_by_degree(self):
        out = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return out

    def __repr__(self):
        return "GradedSpace(n=%d, dims=%s)" % (self.field.n, list(self.dims))

    def to_json(self):
        out = {"n": self.field.n, "dims": list(self.dims)}
        if not self.is_canonical():
            out["degrees"] = list(self.degrees)
        return out


def _same_field(*spaces):
    f = spaces[0].field
    for s in spaces[1:]:
        if s.field is not f:
            raise FieldMismatchError("spaces over %r and %r" % (f, s.field))
    return f


def tensor_space(*spaces):
    if not spaces:
        raise ValueError("tensor_space needs at least one factor")
    field = _same_field(*spaces)
    n = field.n
    degs = (0,)
    for s in spaces:
        degs = tuple((a + b) % n for a in degs for b in s.degrees)
    return GradedSpace(field, degs)


def tensor_power(space, k):
    if k == 0:
        return GradedSpace.unit(space.field)
    return tensor_space(*([space] * k))


class GradedMap:
    """A degree-preserving linear map given by an exact sparse matrix."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix, check=True):
        _same_field(source, target)
        if matrix.shape != (target.dim, source.dim):
            raise ValueError("matrix shape %s does not match %d x %d"
                             % (matrix.shape, target.dim, source.dim))
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            bad = self.degree_violation()
            if bad is not None:
                r, c = bad
                raise DegreeError("entry (%d, %d) maps degree %d to degree %d"
                                  % (r, c, source.degrees[c], target.degrees[r]))

    @classmethod
    def identity(cls, space):
        return cls(space, space, Matrix.identity(space.field, space.dim), check=False)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, Matrix.zero(source.field, target.dim, source.dim),
                   check=False)

    @classmethod
    def from_triplets(cls, source, target, triplets):
        field = source.field
        cols = {}
        for r, c, v in triplets:
            if not (0 <= r < target.dim and 0 <= c < source.dim):
                raise ValueError("entry (%d, %d) outside %d x %d" % (r, c, target.dim, source.dim))
            v = field(v)
            col = cols.setdefault(c, {})
            col[r] = col[r] + v if r in col else v
        return cls(source, target, Matrix(field, target.dim, source.dim, cols))

    @classmethod
    def from_function(cls, source, target, fn):
        """Build from ``fn(col) -> {row: value}`` on source basis indices."""
        field = source.field
        cols = {}
        for c in range(source.dim):
            cols[c] = {r: field(v) for r, v in fn(c).items()}
        return cls(source, target, Matrix(field, target.dim, source.dim, cols))

    @property
    def field(self):
        return self.source.field

    def degree_violation(self):
        sd, td = self.source.degrees, self.target.degrees
        for c, col in self.matrix.cols.items():
            for r in col:
                if sd[c] != td[r]:
                    return (r, c)
        return None

    def is_degree_preserving(self):
        return self.degree_violation() is None

    def __matmul__(self, other):
        """Composition self o other."""
        if other.target != self.source:
            raise ValueError("cannot compose: %r -> %r after %r -> %r"
                             % (self.source, self.target, other.source, other.target))
        return GradedMap(other.source, self.target, self.matrix @ other.matrix, check=False)

    def __add__(self, other):
        self._check_parallel(other)
        return GradedMap(self.source, self.target, self.matrix + other.matrix, check=False)

    def __sub__(self, other):
        self._check_parallel(other)
        return GradedMap(self.source, self.target, self.matrix - other.matrix, check=False)

    def __neg__(self):
        return GradedMap(self.source, self.target, -self.matrix, check=False)

    def scale(self, s):
        return GradedMap(self.source, self.target, self.matrix.scale(s), check=False)

    def __rmul__(self, s):
        return self.scale(s)

    def _check_parallel(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("maps are not parallel")

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self):
        return "GradedMap(%d -> %d, nnz=%d)" % (self.source.dim, self.target.dim,
                                                self.matrix.nnz())

    def power(self, k):
        if self.source != self.target:
            raise ValueError("power of a non-endomorphism")
        return GradedMap(self.source, self.target, self.matrix.power(k), check=False)

    def is_zero(self):
        return self.matrix.is_zero()

    def column(self, c):
        return self.matrix.column(c)

    def triplets(self):
        return self.matrix.triplets()

    def to_json(self):
        return [[r, c, v.to_json()] for r, c, v in self.matrix.triplets()]


def tensor_map(*maps):
    """f (x) g (x) ... under the flattened indexer."""
    if not maps:
        raise ValueError("tensor_map needs at least one factor")
    _same_field(*(m.source for m in maps))
    mat = reduce(lambda a, b: a.kron(b), (m.matrix for m in maps))
    return GradedMap(tensor_space(*(m.source for m in maps)),
                     tensor_space(*(m.target for m in maps)), mat, check=False)


def identity(space):
    return GradedMap.identity(space)


def braiding(V, W, symmetric=False):
    """psi_{V,W}: V (x) W -> W (x) V."""
    field = _same_field(V, W)
    dV, dW = V.dim, W.dim
    cols = {}
    for v, a in enumerate(V.degrees):
        for w, b in enumerate(W.degrees):
            coef = field.one() if symmetric else field.zeta_power(a * b)
            cols[v * dW + w] = {w * dV + v: coef}
    return GradedMap(tensor_space(V, W), tensor_space(W, V),
                     Matrix._raw(field, dV * dW, dV * dW, cols), check=False)


def flip(V, W):
    """The coefficient-1 transposition V (x) W -> W (x) V."""
    return braiding(V, W, symmetric=True)


def permutation_map(factors: Sequence[GradedSpace], perm, symmetric=True):
    """Reorder tensor factors: output factor k is input factor ``perm[k]``.

    With ``symmetric=False`` each transposed pair of homogeneous basis vectors
    picks up the anyonic phase (valid for any braid lifting the permutation
    since the phase only depends on which pairs cross).
    """
    field = _same_field(*factors)
    k = len(factors)
    if sorted(perm) != list(range(k)):
        raise ValueError("not a permutation: %r" % (perm,))
    dims = [f.dim for f in factors]
    src = tensor_space(*factors)
    tgt = tensor_space(*[factors[p] for p in perm])
    out_strides = _strides([dims[p] for p in perm])
    cols = {}
    for idx, multi in enumerate(_multi_indices(dims)):
        r = sum(multi[perm[j]] * out_strides[j] for j in range(k))
        exp = 0
        if not symmetric:
            for x in range(k):
                for y in range(x + 1, k):
                    # x before y in output but after it in input
                    if perm[x] > perm[y]:
                        exp += (factors[perm[x]].degrees[multi[perm[x]]]
                                * factors[perm[y]].degrees[multi[perm[y]]])
        cols[idx] = {r: field.zeta_power(exp)}
    return GradedMap(src, tgt, Matrix._raw(field, tgt.dim, src.dim, cols), check=False)


def _strides(dims):
    out = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        out[i] = out[i + 1] * dims[i + 1]
    return out


def _multi_indices(dims):
    if not dims:
        yield ()
        return
    total = 1
    for d in dims:
        total *= d
    strides = _strides(dims)
    for idx in range(total):
        yield tuple((idx // s) % d for s, d in zip(strides, dims))


def braid_symmetry_check(V, W, symmetric=False):
    """(psi_{W,V} o psi_{V,W} == id, psi_{V,W} == flip) as exact matrix tests."""
    psi = braiding(V, W, symmetric)
    back = braiding(W, V, symmetric)
    return ((back @ psi) == GradedMap.identity(tensor_space(V, W)), psi == flip(V, W))


def support_criterion(n, support_a, support_b):
    """Degree-support test: (2ij = 0 mod n for all pairs, ij = 0 mod n for all pairs)."""
    for d in list(support_a) + list(support_b):
        if not 0 <= d < n:
            raise ValueError("degree %r outside [0, %d)" % (d, n))
    pairs = [(i, j) for i in support_a for j in support_b]
    return (all(2 * i * j % n == 0 for i, j in pairs),
            all(i * j % n == 0 for i, j in pairs))


# ---------------------------------------------------------------------------
# abelian structure, computed one degree block at a time

def _blocks(f):
    src = f.source.indices_by_degree()
    tgt = f.target.indices_by_degree()
    for d in sorted(set(src) | set(tgt)):
        yield d, src.get(d, []), tgt.get(d, [])


def rank(f):
    total = 0
    for _, s, t in _blocks(f):
        if s and t:
            total += f.matrix.submatrix(t, s).rank()
    return total


def kernel(f):
    """(K, inclusion K -> source) with K carrying a degree-ordered basis."""
    field = f.field
    degs, cols = [], {}
    for d, s, t in _blocks(f):
        if not s:
            continue
        for vec in _nullspace(f.matrix.submatrix(t, s)):
            cols[len(degs)] = {s[i]: v for i, v in vec.items()}
            degs.append(d)
    K = GradedSpace(field, degs)
    return K, GradedMap(K, f.source, Matrix(field, f.source.dim, len(degs), cols), check=False)


def image(f):
    """(Im, inclusion Im -> target) with a reduced echelon basis per degree."""
    field = f.field
    degs, cols = [], {}
    for d, s, t in _blocks(f):
        if not (s and t):
            continue
        for vec in image_basis(f.matrix.submatrix(t, s)):
            cols[len(degs)] = {t[i]: v for i, v in vec.items()}
            degs.append(d)
    Im = GradedSpace(field, degs)
    return Im, GradedMap(Im, f.target, Matrix(field, f.target.dim, len(degs), cols), check=False)


class Cokernel(NamedTuple):
    space: GradedSpace
    projection: GradedMap  # target -> space
    section: GradedMap  # space -> target, projection o section = id


def cokernel(f):
    field = f.field
    degs, proj_cols, sec_cols = [], {}, {}
    for d, s, t in _blocks(f):
        if not t:
            continue
        complement, proj = _cokernel(f.matrix.submatrix(t, s))
        offset = len(degs)
        for k, j in enumerate(complement):
            sec_cols[offset + k] = {t[j]: field.one()}
            degs.append(d)
        for c, col in proj.cols.items():
            proj_cols[t[c]] = {offset + r: v for r, v in col.items()}
    Q = GradedSpace(field, degs)
    projection = GradedMap(f.target, Q, Matrix(field, len(degs), f.target.dim, proj_cols),
                           check=False)
    section = GradedMap(Q, f.target, Matrix(field, f.target.dim, len(degs), sec_cols),
                        check=False)
    return Cokernel(Q, projection, section)
