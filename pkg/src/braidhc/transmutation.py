"""
Quasitriangular structures and transmutation.

An ordinary Hopf algebra is represented as a :class:`BraidedHopfAlgebra`
concentrated in degree 0, so every braiding it sees is the flip.  The group
algebra CZ_n carries the quasitriangular element

    R = (1/n) sum_{a,b} zeta^(-ab) g^a (x) g^b,

and transmutation turns (H, R) into a braided Hopf algebra in the category of
H-modules, graded by the eigenvalues zeta^k of the generator g.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import cyclotomic_field
from .graded import (GradedMap, GradedSpace, braiding, identity, permutation_map, tensor_map,
                     tensor_space)
from .hopf import (AxiomReport, AxiomResult, BraidedHopfAlgebra, change_basis, compare_maps,
                   power_multiplication, verify_hopf_axioms)
from .linalg import Matrix, inverse, kernel_matrix, solve


class TransmutationError(ValueError):
    pass


class NotInAnyonicCategoryError(ValueError):
    """The generator does not act diagonalizably with eigenvalues among the zeta^k."""


@dataclass(frozen=True)
class QuasitriangularElement:
    hopf: BraidedHopfAlgebra
    element: GradedMap  # I -> H (x) H

    def coefficient(self, a, b):
        return self.element.matrix[a * self.hopf.dim + b, 0]

    def to_json(self):
        return self.element.to_json()


def czn_group_algebra(n):
    """The group Hopf algebra of Z_n over Q(zeta_n), basis g^0 .. g^(n-1) in degree 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    field = cyclotomic_field(n)
    H = GradedSpace.from_dims(field, [n] + [0] * (n - 1))
    I = GradedSpace.unit(field)
    HH = GradedSpace(field, (0,) * (n * n))
    mul = GradedMap.from_function(HH, H, lambda c: {(c // n + c % n) % n: 1})
    unit = GradedMap.from_function(I, H, lambda c: {0: 1})
    comul = GradedMap.from_function(H, HH, lambda a: {a * n + a: 1})
    counit = GradedMap.from_function(H, I, lambda a: {0: 1})
    antipode = GradedMap.from_function(H, H, lambda a: {(-a) % n: 1})
    return BraidedHopfAlgebra(H, mul, unit, comul, counit, antipode, name="CZ_%d" % n)


def czn_r_matrix(n, H=None):
    H = H or czn_group_algebra(n)
    field = H.field
    HH = GradedSpace(field, (0,) * (n * n))
    coef = {a * n + b: field.zeta_power(-a * b) * Fraction(1, n)
            for a in range(n) for b in range(n)}
    elem = GradedMap(H.I, HH, Matrix(field, n * n, 1, {0: coef}))
    return QuasitriangularElement(H, elem)


def quasitriangular_from_element(H, elem):
    return QuasitriangularElement(H, elem)


# ---------------------------------------------------------------------------

def _ordinary_product(H, k):
    # componentwise product on H^k; H is ordinary, so the shuffle uses flips
    return power_multiplication(H, k, symmetric=True)


def element_product(H, k, x, y):
    """Componentwise product of two elements x, y: I -> H^k of the ordinary algebra H^k.

    Uses the structure constants of m directly; agrees with
    ``power_multiplication(H, k, symmetric=True) @ tensor_map(x, y)``.
    """
    d = H.dim
    mcols = H.mul.matrix.cols
    out = {}
    for i, xv in x.column(0).items():
        xi = _digits(i, d, k)
        for j, yv in y.column(0).items():
            yj = _digits(j, d, k)
            terms = {0: xv * yv}
            for a, b in zip(xi, yj):
                col = mcols.get(a * d + b, {})
                terms = {t * d + r: c * w for t, c in terms.items() for r, w in col.items()}
            for t, c in terms.items():
                s = out.get(t)
                out[t] = c if s is None else s + c
    target = x.target
    return GradedMap(x.source, target, Matrix(H.field, target.dim, 1, {0: out}), check=False)


def _digits(i, d, k):
    out = []
    for _ in range(k):
        out.append(i % d)
        i //= d
    return out[::-1]


def left_multiplication(H, x, k):
    """h |-> x * h on H^k, for x: I -> H^k."""
    return _ordinary_product(H, k) @ tensor_map(x, H.id(k))


def r_inverse(H, R):
    """The inverse of R in (H (x) H, m_2), or None."""
    L = left_multiplication(H, R.element, 2)
    one = tensor_map(H.unit, H.unit)
    x = solve(L.matrix, one.column(0))
    if x is None:
        return None
    return GradedMap(H.I, L.target, Matrix(H.field, L.target.dim, 1, {0: x}))


def verify_quasitriangular(H, R):
    """Checks (D x 1)R = R13 R23, (1 x D)R = R13 R12, R D(h) = D^op(h) R and invertibility."""
    if R.element.target.dim != H.dim ** 2:
        raise ValueError("R does not live in H (x) H")
    r = R.element
    one = H.id()
    eta = H.unit
    r13 = tensor_map(one, eta, one) @ r
    r23 = tensor_map(eta, r)
    r12 = tensor_map(r, eta)
    m2 = _ordinary_product(H, 2)
    comul_op = braiding(H.space, H.space, symmetric=True) @ H.comul
    results = [
        compare_maps("(Delta x 1)R = R13 R23", tensor_map(H.comul, one) @ r,
                     element_product(H, 3, r13, r23)),
        compare_maps("(1 x Delta)R = R13 R12", tensor_map(one, H.comul) @ r,
                     element_product(H, 3, r13, r12)),
        compare_maps("R Delta(h) = Delta^op(h) R", m2 @ tensor_map(r, H.comul),
                     m2 @ tensor_map(comul_op, r)),
    ]
    inv = r_inverse(H, R)
    results.append(AxiomResult("R invertible", inv is not None))
    return AxiomReport(results)


# ---------------------------------------------------------------------------

def regular_action(H):
    return H.mul


def trivial_action(H, V):
    """h |> v = eps(h) v."""
    return tensor_map(H.counit, identity(V))


def conjugation_action(H):
    """a |> h = a(1) h S(a(2)), compiled as m (m x 1)(1 x 1 x S)(1 x flip)(Delta x 1)."""
    one = H.id()
    flip = braiding(H.space, H.space, symmetric=True)
    return (H.mul @ tensor_map(H.mul, one) @ tensor_map(one, one, H.antipode)
            @ tensor_map(one, flip) @ tensor_map(H.comul, one))


def verify_module_action(H, act):
    V = act.target
    idV = identity(V)
    return AxiomReport([
        compare_maps("act(m x 1) = act(1 x act)", act @ tensor_map(H.mul, idV),
                     act @ tensor_map(H.id(), act)),
        compare_maps("act(eta x 1) = id", act @ tensor_map(H.unit, idV), idV),
    ])


def generator_index(H):
    return 1 if H.dim > 1 else 0


def grading_from_action(H, act, generator=None):
    """Degrees of V from the eigenvalues zeta^k of the generator's action.

    Returns (graded space, P) where the columns of P are the eigenvectors in
    the original basis, ordered by degree.
    """
    field = H.field
    n = field.n
    V = act.target
    g = H.basis_element(generator_index(H) if generator is None else generator)
    G = (act @ tensor_map(g, identity(V))).matrix
    Id = Matrix.identity(field, V.dim)
    degs, cols = [], {}
    for k in range(n):
        K = kernel_matrix(G - Id.scale(field.zeta_power(k)))
        for c in range(K.ncols):
            cols[len(degs)] = K.column(c)
            degs.append(k)
    if len(degs) != V.dim:
        raise NotInAnyonicCategoryError(
            "eigenspaces of the generator span %d of %d dimensions" % (len(degs), V.dim))
    return GradedSpace(field, degs), Matrix(field, V.dim, V.dim, cols)


def transmuted_comul(H, R):
    """Delta_(h) = h(1) S(R2) (x) R1 |> h(2).

    Chain: h -> h(1) (x) h(2) (x) S(R2) (x) R1      [Delta (x) R', R' = (S x 1) flip R]
           -> h(1) (x) S(R2) (x) R1 (x) h(2)        [factor permutation]
           -> h(1)S(R2) (x) R1 |> h(2)              [m (x) ad]
    """
    flip = braiding(H.space, H.space, symmetric=True)
    r_prime = tensor_map(H.antipode, H.id()) @ flip @ R.element
    step = tensor_map(H.comul, r_prime)
    step = permutation_map([H.space] * 4, (0, 2, 3, 1)) @ step
    return tensor_map(H.mul, conjugation_action(H)) @ step


def transmuted_antipode(H, R):
    """S_(h) = R2 S(R1 |> h).

    Chain: h -> R1 (x) R2 (x) h -> R2 (x) R1 (x) h -> R2 (x) R1 |> h
             -> R2 (x) S(R1 |> h) -> R2 S(R1 |> h)
    """
    one = H.id()
    step = tensor_map(R.element, one)
    step = permutation_map([H.space] * 3, (1, 0, 2)) @ step
    step = tensor_map(one, conjugation_action(H)) @ step
    return H.mul @ tensor_map(one, H.antipode) @ step


def transmute(H, R):
    """The braided Hopf algebra H_ in the anyonic category of H-modules."""
    report = verify_quasitriangular(H, R)
    if not report.passed:
        raise TransmutationError("R is not quasitriangular: %s"
                                 % ", ".join(r.name for r in report.failures()))
    space, P = grading_from_action(H, conjugation_action(H))
    ordinary = BraidedHopfAlgebra(H.space, H.mul, H.unit, transmuted_comul(H, R), H.counit,
                                  transmuted_antipode(H, R), symmetric=True,
                                  name=H.name + "_")
    out = change_basis(ordinary, P, space, name=H.name + "_")
    return BraidedHopfAlgebra(out.space, out.mul, out.unit, out.comul, out.counit,
                              out.antipode, symmetric=False, name=out.name)


def r_braiding(H, R, act_v, act_w):
    """psi(v (x) w) = R2 |> w (x) R1 |> v on ordinary modules V, W."""
    V, W = act_v.target, act_w.target
    step = tensor_map(R.element, identity(V), identity(W))
    step = permutation_map([H.space, H.space, V, W], (1, 3, 0, 2)) @ step
    return tensor_map(act_w, act_v) @ step


def r_braiding_in_eigenbasis(H, R, act_v, act_w):
    """The R-matrix braiding rewritten in the graded eigenbases of V and W.

    Returns (graded psi computed from R, anyonic braiding on the same spaces).
    """
    Vg, Pv = grading_from_action(H, act_v)
    Wg, Pw = grading_from_action(H, act_w)
    psi = r_braiding(H, R, act_v, act_w).matrix
    mat = inverse(Pw).kron(inverse(Pv)) @ psi @ Pv.kron(Pw)
    return (GradedMap(tensor_space(Vg, Wg), tensor_space(Wg, Vg), mat),
            braiding(Vg, Wg))


def transmutation_triviality(H, R, Hbar=None):
    """Checks that transmuting CZ_n changes nothing (coproduct, antipode, flip braiding)."""
    Hbar = Hbar or transmute(H, R)
    psi = Hbar.psi()
    flip = braiding(Hbar.space, Hbar.space, symmetric=True)
    same_space = Hbar.space == H.space
    results = [
        AxiomResult("concentrated in degree 0", set(Hbar.space.degrees) <= {0}),
        AxiomResult("Delta_ = Delta", same_space and Hbar.comul == H.comul),
        AxiomResult("S_ = S", same_space and Hbar.antipode == H.antipode),
        compare_maps("psi = flip", psi, flip),
        compare_maps("psi^2 = id", psi @ psi, Hbar.id(2)),
    ]
    results += [AxiomResult("transmuted " + r.name, r.passed, r.witness)
                for r in verify_hopf_axioms(Hbar).results]
    return AxiomReport(results)
