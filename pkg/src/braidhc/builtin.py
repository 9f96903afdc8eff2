"""
Builtin structures beyond the group algebras in :mod:`braidhc.transmutation`.

``quantum_line(n, degree)`` is the braided line spanned by x^k (0 <= k < N)
with x in the given degree, q = zeta^(degree^2) and N the order of q.  Its
coproduct uses q-binomials, so for q != 1 it is a genuinely braided Hopf
algebra.  When q = -1 (e.g. n=2, degree 1, or n=18, degree 9) it is the
exterior algebra on one generator and psi_{H,H}^2 = id even though the
ambient category for n=18 is not symmetric.
"""

from __future__ import annotations

from math import gcd

from .cyclo import cyclotomic_field
from .graded import GradedMap, GradedSpace, tensor_space
from .hopf import BraidedHopfAlgebra, ModularPair


def _q_binomials(q, N):
    """table[k][j] = [k choose j]_q for 0 <= j <= k < N."""
    one = q.field.one()
    table = [[one]]
    for k in range(1, N):
        row = [one]
        for j in range(1, k):
            row.append(table[k - 1][j - 1] + q ** j * table[k - 1][j])
        row.append(one)
        table.append(row)
    return table


def quantum_line(n, degree=1):
    field = cyclotomic_field(n)
    q = field.zeta_power(degree * degree)
    N = n // gcd(n, degree * degree)  # multiplicative order of q
    if N < 2:
        raise ValueError("q = zeta^(%d^2) = 1: the braided line is not finite" % degree)
    H = GradedSpace(field, tuple(k * degree % n for k in range(N)))
    I = GradedSpace.unit(field)
    HH = tensor_space(H, H)
    binom = _q_binomials(q, N)

    def mul(c):
        a, b = divmod(c, N)
        return {a + b: 1} if a + b < N else {}

    def comul(k):
        return {j * N + (k - j): binom[k][j] for j in range(k + 1)}

    def antipode(k):
        return {k: (-1) ** k * q ** (k * (k - 1) // 2)}

    return BraidedHopfAlgebra(
        H,
        GradedMap.from_function(HH, H, mul),
        GradedMap.from_function(I, H, lambda c: {0: 1}),
        GradedMap.from_function(H, HH, comul),
        GradedMap.from_function(H, I, lambda k: {0: 1} if k == 0 else {}),
        GradedMap.from_function(H, H, antipode),
        name="line_%d_%d" % (n, degree))


def group_character_pair(H, power, sigma_index=0):
    """(delta, sigma) on CZ_n with delta(g^a) = zeta^(power*a) and sigma = g^sigma_index."""
    field = H.field
    delta = GradedMap.from_function(H.space, H.I,
                                    lambda a: {0: field.zeta_power(power * a)})
    return ModularPair(delta, H.basis_element(sigma_index))
