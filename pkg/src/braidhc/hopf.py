"""
Braided Hopf algebras in the graded category, their axiom suite, and the
derived maps used by the Connes-Moscovici cocyclic object:

* twisted antipode  S~ = (delta (x) S) o Delta
* iterated coproducts  Delta^k : H -> H^(k+1)
* the braided shuffle  F_n(psi) : H^n (x) H^n -> (H (x) H)^n
* the tensor-power product  m_n = m^(x)n o F_n(psi)
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .graded import (GradedMap, GradedSpace, braiding, identity, tensor_map,
                     tensor_power, tensor_space)
from .linalg import Matrix, inverse


class HopfStructureError(ValueError):
    pass


@dataclass(frozen=True)
class BraidedHopfAlgebra:
    space: GradedSpace
    mul: GradedMap
    unit: GradedMap
    comul: GradedMap
    counit: GradedMap
    antipode: GradedMap
    symmetric: bool = False
    name: str = "H"

    def __post_init__(self):
        H, I = self.space, GradedSpace.unit(self.space.field)
        HH = tensor_space(H, H)
        expected = {"mul": (HH, H), "unit": (I, H), "comul": (H, HH),
                    "counit": (H, I), "antipode": (H, H)}
        for attr, (src, tgt) in expected.items():
            f = getattr(self, attr)
            if f.source != src or f.target != tgt:
                raise HopfStructureError("%s has shape %r -> %r, expected %r -> %r"
                                         % (attr, f.source, f.target, src, tgt))
            if not f.is_degree_preserving():
                raise HopfStructureError("%s is not degree-preserving" % attr)

    @property
    def field(self):
        return self.space.field

    @property
    def I(self):
        return GradedSpace.unit(self.space.field)

    @property
    def dim(self):
        return self.space.dim

    def psi(self):
        return braiding(self.space, self.space, self.symmetric)

    def id(self, k=1):
        return identity(tensor_power(self.space, k))

    def element(self, vec):
        """The map I -> H picking out the vector ``vec`` ({index: value})."""
        f = self.field
        return GradedMap(self.I, self.space,
                         Matrix(f, self.dim, 1, {0: {i: f(v) for i, v in vec.items()}}))

    def basis_element(self, i):
        return self.element({i: 1})

    def __repr__(self):
        return "BraidedHopfAlgebra(%s, dims=%s)" % (self.name, list(self.space.dims))


@dataclass(frozen=True)
class ModularPair:
    delta: GradedMap  # character H -> I
    sigma: GradedMap  # group-like I -> H

    @classmethod
    def trivial(cls, H):
        return cls(H.counit, H.unit)


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: Optional[dict] = None

    def to_json(self):
        out = {"identity": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class AxiomReport:
    results: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name):
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self):
        return [r.to_json() for r in self.results]


def _scalars(col):
    return {str(r): v.to_json() for r, v in sorted(col.items())}


def compare_maps(name, lhs, rhs):
    """Exact equality test; the witness is the first differing source basis vector."""
    if lhs.source != rhs.source or lhs.target != rhs.target:
        return AxiomResult(name, False, {"reason": "shape mismatch"})
    diff = lhs.matrix - rhs.matrix
    if diff.is_zero():
        return AxiomResult(name, True)
    c = min(diff.cols)
    return AxiomResult(name, False, {"basis_vector": c, "lhs": _scalars(lhs.column(c)),
                                     "rhs": _scalars(rhs.column(c))})


def verify_hopf_axioms(H):
    """Run the braided Hopf axiom suite in a fixed order."""
    m, eta, D, eps, S = H.mul, H.unit, H.comul, H.counit, H.antipode
    one, I = H.id(), identity(H.I)
    psi = H.psi()
    checks = [
        ("associativity", m @ tensor_map(m, one), m @ tensor_map(one, m)),
        ("left unit", m @ tensor_map(eta, one), one),
        ("right unit", m @ tensor_map(one, eta), one),
        ("coassociativity", tensor_map(D, one) @ D, tensor_map(one, D) @ D),
        ("left counit", tensor_map(eps, one) @ D, one),
        ("right counit", tensor_map(one, eps) @ D, one),
        ("counit of unit", eps @ eta, I),
        ("braided bialgebra", D @ m,
         tensor_map(m, m) @ tensor_map(one, psi, one) @ tensor_map(D, D)),
        ("coproduct of unit", D @ eta, tensor_map(eta, eta)),
        ("counit of product", eps @ m, tensor_map(eps, eps)),
        ("left antipode", m @ tensor_map(S, one) @ D, eta @ eps),
        ("right antipode", m @ tensor_map(one, S) @ D, eta @ eps),
    ]
    return AxiomReport([compare_maps(name, a, b) for name, a, b in checks])


def verify_modular_pair(H, pair):
    delta, sigma = pair.delta, pair.sigma
    if delta.source != H.space or delta.target != H.I:
        raise HopfStructureError("delta must be a map H -> I")
    if sigma.source != H.I or sigma.target != H.space:
        raise HopfStructureError("sigma must be a map I -> H")
    I = identity(H.I)
    return AxiomReport([
        compare_maps("delta multiplicative", delta @ H.mul, tensor_map(delta, delta)),
        compare_maps("delta unital", delta @ H.unit, I),
        compare_maps("sigma group-like", H.comul @ sigma, tensor_map(sigma, sigma)),
        compare_maps("sigma counital", H.counit @ sigma, I),
    ])


def check_pair(H, pair):
    if pair is None:
        return ModularPair.trivial(H)
    report = verify_modular_pair(H, pair)
    if not report.passed:
        raise HopfStructureError("invalid modular pair: %s"
                                 % ", ".join(r.name for r in report.failures()))
    return pair


def twisted_antipode(H, pair=None):
    pair = check_pair(H, pair)
    return tensor_map(pair.delta, H.antipode) @ H.comul


def involution_defect(H, pair=None):
    """Diagnostic S~^2 - Ad_sigma, with Ad_sigma(h) = sigma h sigma^-1 (not enforced)."""
    pair = check_pair(H, pair)
    St = twisted_antipode(H, pair)
    # sigma^-1 = S(sigma) for a group-like element
    sigma_inv = H.antipode @ pair.sigma
    ad = H.mul @ tensor_map(H.mul @ tensor_map(pair.sigma, H.id()), sigma_inv)
    return St @ St - ad


def iterated_coproduct(H, k):
    """Delta^k = (Delta (x) 1^(k-1)) o Delta^(k-1), Delta^0 = id."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = H.id()
    for j in range(1, k + 1):
        out = tensor_map(H.comul, H.id(j - 1)) @ out
    return out


def iterated_coproduct_right(H, k):
    """The other bracketing, (1^(k-1) (x) Delta) o ..., used for coassociativity checks."""
    out = H.id()
    for j in range(1, k + 1):
        out = tensor_map(H.id(j - 1), H.comul) @ out
    return out


def shuffle_map(A, B, k, symmetric=False):
    """A^k (x) B^k -> (A (x) B)^k, built from layers of braidings psi_{A,B}.

    Layer j (j = 1..k-1) is 1_{A^j} (x) psi^(k-j) (x) 1_{B^j}; the layer j = k-1
    acts first and j = 1 acts last.
    """
    field = A.field
    factors = [A] * k + [B] * k
    src = tensor_space(*factors) if factors else GradedSpace.unit(field)
    out = identity(src)
    psi = braiding(A, B, symmetric)
    for j in range(k - 1, 0, -1):
        middle = [psi] * (k - j)
        left = [identity(f) for f in factors[:j]]
        right = [identity(f) for f in factors[len(factors) - j:]]
        out = tensor_map(*(left + middle + right)) @ out
        # the middle pairs are now (B, A) in order
        mid = []
        for _ in range(k - j):
            mid += [B, A]
        factors = factors[:j] + mid + factors[len(factors) - j:]
    return out


def braided_shuffle(H, n, symmetric=None):
    """F_n(psi) on H^(2n); F_1 is the identity."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sym = H.symmetric if symmetric is None else symmetric
    return shuffle_map(H.space, H.space, n, sym)


def power_multiplication(H, n, symmetric=None):
    """m_n : H^n (x) H^n -> H^n, with m_1 = m."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return H.mul
    return tensor_map(*([H.mul] * n)) @ braided_shuffle(H, n, symmetric)


def power_unit(H, n):
    return tensor_map(*([H.unit] * n))


def change_basis(H, P, new_space, name=None):
    """Transport the structure of H along P: new_space -> H.space (columns = new basis).

    Every structure map f becomes P^-1 o f o P in the appropriate tensor powers.
    """
    Pinv = inverse(P)
    field = H.field

    def conj(f, k_in, k_out):
        src = tensor_power(new_space, k_in)
        tgt = tensor_power(new_space, k_out)
        left = _kron_power(Pinv, k_out, field)
        right = _kron_power(P, k_in, field)
        return GradedMap(src, tgt, left @ f.matrix @ right)

    return BraidedHopfAlgebra(
        new_space,
        conj(H.mul, 2, 1), conj(H.unit, 0, 1), conj(H.comul, 1, 2),
        conj(H.counit, 1, 0), conj(H.antipode, 1, 1),
        symmetric=H.symmetric, name=name or H.name)


def _kron_power(P, k, field):
    out = Matrix.identity(field, 1)
    for _ in range(k):
        out = out.kron(P)
    return out
