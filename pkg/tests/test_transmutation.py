import time
from fractions import Fraction

import pytest

from braidhc.cyclo import cyclotomic_field
from braidhc.graded import GradedMap, GradedSpace, braiding, identity, tensor_map, tensor_space
from braidhc.hopf import power_multiplication
from braidhc.io import parse_r, r_json
from braidhc.linalg import Matrix
from braidhc.transmutation import (NotInAnyonicCategoryError, QuasitriangularElement,
                                   TransmutationError, conjugation_action, czn_group_algebra,
                                   czn_r_matrix, element_product, grading_from_action,
                                   r_braiding_in_eigenbasis, r_inverse, regular_action,
                                   trivial_action, transmutation_triviality, transmute,
                                   verify_module_action, verify_quasitriangular)


def r_from_coefficients(H, coef):
    n = H.dim
    HH = GradedSpace(H.field, (0,) * (n * n))
    col = {a * n + b: H.field(v) for (a, b), v in coef.items()}
    return QuasitriangularElement(H, GradedMap(H.I, HH, Matrix(H.field, n * n, 1, {0: col})))


def test_r_matrix_examples():
    R1 = czn_r_matrix(1)
    assert R1.element.column(0) == {0: 1}
    R2 = czn_r_matrix(2)
    half = Fraction(1, 2)
    assert R2.element.column(0) == {0: half, 1: half, 2: half, 3: -half}
    R3 = czn_r_matrix(3)
    z = cyclotomic_field(3).zeta()
    assert R3.coefficient(1, 2) == z ** -2 * Fraction(1, 3)
    assert R3.coefficient(1, 2) == z * Fraction(1, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_r_matrix_axioms(n):
    H = czn_group_algebra(n)
    report = verify_quasitriangular(H, czn_r_matrix(n, H))
    assert report.passed, report.failures()
    assert len(report.results) == 4


def test_trivial_r_on_cocommutative():
    for n in (2, 3, 4):
        H = czn_group_algebra(n)
        assert verify_quasitriangular(H, r_from_coefficients(H, {(0, 0): 1})).passed


def test_bad_r_fails_first_axiom():
    H = czn_group_algebra(2)
    R = r_from_coefficients(H, {(0, 0): 1, (1, 1): 1})
    report = verify_quasitriangular(H, R)
    assert not report["(Delta x 1)R = R13 R23"].passed
    with pytest.raises(TransmutationError):
        transmute(H, R)


def test_r_inverse():
    for n in (2, 3, 5):
        H = czn_group_algebra(n)
        R = czn_r_matrix(n, H)
        inv = r_inverse(H, R)
        one = tensor_map(H.unit, H.unit)
        assert element_product(H, 2, R.element, inv) == one
        assert element_product(H, 2, inv, R.element) == one


def test_element_product_matches_matrix_route():
    H = czn_group_algebra(3)
    R = czn_r_matrix(3, H).element
    m2 = power_multiplication(H, 2, symmetric=True)
    assert element_product(H, 2, R, R) == m2 @ tensor_map(R, R)


def test_action_gradings():
    for n in range(1, 7):
        H = czn_group_algebra(n)
        assert verify_module_action(H, conjugation_action(H)).passed
        V, _ = grading_from_action(H, conjugation_action(H))
        assert V.dims == (n,) + (0,) * (n - 1)
        V, P = grading_from_action(H, regular_action(H))
        assert V.dims == (1,) * n
        W = GradedSpace.from_dims(H.field, [2] + [0] * (n - 1))
        V, _ = grading_from_action(H, trivial_action(H, W))
        assert V.dims == W.dims


def test_non_diagonalizable_action_is_rejected():
    # g acting by a Jordan block is not an object of the anyonic category
    H = czn_group_algebra(2)
    F = H.field
    V = GradedSpace.from_dims(F, [2, 0])
    HV = tensor_space(H.space, V)
    cols = {0: {0: F.one()}, 1: {1: F.one()}, 2: {0: F.one()}, 3: {0: F.one(), 1: F.one()}}
    act = GradedMap(HV, V, Matrix(F, 2, 4, cols))
    with pytest.raises(NotInAnyonicCategoryError):
        grading_from_action(H, act)


@pytest.mark.parametrize("n", range(1, 7))
def test_transmutation_is_trivial_for_group_algebras(n):
    H = czn_group_algebra(n)
    R = czn_r_matrix(n, H)
    Hbar = transmute(H, R)
    report = transmutation_triviality(H, R, Hbar)
    assert report.passed, [r.name for r in report.failures()]
    assert Hbar.comul == H.comul and Hbar.antipode == H.antipode
    assert Hbar.psi() == braiding(Hbar.space, Hbar.space, symmetric=True)
    assert not Hbar.symmetric


def test_transmutation_runtime():
    t = time.perf_counter()
    for n in range(2, 7):
        H = czn_group_algebra(n)
        assert transmutation_triviality(H, czn_r_matrix(n, H)).passed
    assert time.perf_counter() - t < 5


@pytest.mark.parametrize("n", range(1, 7))
def test_r_braiding_is_anyonic_on_regular_rep(n):
    H = czn_group_algebra(n)
    R = czn_r_matrix(n, H)
    act = regular_action(H)
    from_r, anyonic = r_braiding_in_eigenbasis(H, R, act, act)
    assert from_r == anyonic


def test_r_json_round_trip():
    H = czn_group_algebra(4)
    R = czn_r_matrix(4, H)
    assert parse_r(r_json(R), H).element == R.element


def test_conjugation_is_trivial_on_a_commutative_algebra():
    H = czn_group_algebra(3)
    # conjugation on a commutative algebra is eps (x) id
    assert conjugation_action(H) == tensor_map(H.counit, identity(H.space))
