from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from braidhc.cyclo import CyclotomicScalar, cyclotomic_field
from braidhc.linalg import (Echelon, Matrix, cokernel, image_basis, inverse, kernel_matrix,
                            nullspace, rank, solve)

from conftest import embed


@st.composite
def matrices(draw, max_dim=5):
    n = draw(st.sampled_from([1, 2, 3, 4, 5]))
    F = cyclotomic_field(n)
    r, c = draw(st.integers(0, max_dim)), draw(st.integers(0, max_dim))
    # low-rank structure shows up often enough with many zero entries
    entry = st.one_of(st.just(None), st.lists(st.integers(-2, 2), min_size=F.degree,
                                              max_size=F.degree))
    rows = []
    for _ in range(r):
        row = []
        for _ in range(c):
            e = draw(entry)
            row.append(F.zero() if e is None else CyclotomicScalar.from_coeffs(F, e))
        rows.append(row)
    return Matrix.from_dense(F, rows) if r else Matrix.zero(F, 0, c)


def numeric(m):
    out = np.zeros(m.shape, dtype=complex)
    for r, c, v in m.triplets():
        out[r, c] = embed(v)
    return out


@given(matrices())
def test_rank_matches_complex_embedding(m):
    expected = np.linalg.matrix_rank(numeric(m)) if min(m.shape) else 0
    assert rank(m) == expected


@given(matrices())
def test_rank_nullity_and_kernel(m):
    K = kernel_matrix(m)
    assert K.ncols + rank(m) == m.ncols
    assert (m @ K).is_zero()
    assert rank(K) == K.ncols


@given(matrices())
def test_cokernel_projection(m):
    idx, proj = cokernel(m)
    assert proj.nrows == m.nrows - rank(m)
    assert (proj @ m).is_zero()
    # the complement coordinates are sent to the standard basis
    for k, i in enumerate(idx):
        assert proj.column(i) == {k: m.field.one()}


@given(matrices())
def test_image_basis_spans_columns(m):
    basis = image_basis(m)
    assert len(basis) == rank(m)
    B = Matrix(m.field, m.nrows, len(basis), dict(enumerate(basis)))
    assert rank(B.hstack(m)) == len(basis)


@given(matrices(4))
def test_inverse(m):
    n = min(m.shape)
    sq = m.submatrix(range(n), range(n))
    if rank(sq) == n:
        inv = inverse(sq)
        assert sq @ inv == Matrix.identity(m.field, n)
        assert inv @ sq == Matrix.identity(m.field, n)
    else:
        with pytest.raises(ValueError):
            inverse(sq)


@given(matrices())
def test_solve(m):
    x = {c: m.field(c + 1) for c in range(m.ncols)}
    rhs = m.apply(x)
    y = solve(m, rhs)
    assert y is not None and m.apply(y) == rhs


def test_solve_inconsistent():
    F = cyclotomic_field(1)
    m = Matrix.from_dense(F, [[F(1)], [F(1)]])
    assert solve(m, {0: F(1)}) is None


def test_pivot_rule_is_leftmost_nonzero():
    F = cyclotomic_field(1)
    e = Echelon(F)
    e.add({2: F(3), 4: F(1)})
    e.add({1: F(1), 2: F(1)})
    assert e.pivots == [2, 1]
    # fully reduced: pivot entries are 1 and each pivot column is zero in the other row
    assert e.pivot_rows[2] == {2: 1, 4: Fraction(1, 3)}
    assert e.pivot_rows[1] == {1: 1, 4: Fraction(-1, 3)}
    assert e.contains({1: F(1), 2: F(7), 4: F(2)})
    assert not e.contains({4: F(1)})


def test_zero_and_identity():
    F = cyclotomic_field(3)
    assert rank(Matrix.zero(F, 3, 4)) == 0
    assert kernel_matrix(Matrix.zero(F, 3, 4)).ncols == 4
    assert rank(Matrix.identity(F, 5)) == 5
    assert nullspace(Matrix.identity(F, 5)) == []


def test_kron_is_left_major():
    F = cyclotomic_field(1)
    a = Matrix.from_dense(F, [[F(1), F(2)]])
    b = Matrix.from_dense(F, [[F(1)], [F(10)]])
    k = a.kron(b)
    assert k.shape == (2, 2)
    assert k.to_dense() == [[1, 2], [10, 20]]


def test_matmul_associative_with_numeric():
    F = cyclotomic_field(5)
    z = F.zeta()
    a = Matrix.from_dense(F, [[z, 1], [0, z ** 2]])
    b = Matrix.from_dense(F, [[1, z ** 3], [z, 0]])
    assert np.allclose(numeric(a @ b), numeric(a) @ numeric(b))
    assert (a @ b) @ a == a @ (b @ a)
