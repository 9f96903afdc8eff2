"""
Hochschild and cyclic cohomology of a cocyclic module.

b_n = sum_i (-1)^i d_i : C^(n-1) -> C^n, and cyclic cohomology is computed on
Connes' subcomplex of lambda-invariant cochains, lambda_n = (-1)^n tau_n,
which is valid because the scalars have characteristic zero.  Computing
degree k needs operators up to level k + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cocyclic import CocyclicModule, para_defect
from .graded import GradedMap, identity, kernel, rank

# Q(zeta_n) has characteristic zero; the lambda-complex relies on it
CHARACTERISTIC = 0


class CohomologyError(ValueError):
    pass


@dataclass
class CohomologyReport:
    level: int
    degrees: list
    cochain_dims: list
    lambda_dims: list
    hh: list
    hc: list
    ranks: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "level": self.level,
            "degrees": self.degrees,
            "rows": [{"degree": k, "dim_C": c, "dim_lambda": l, "HH": h, "HC": y}
                     for k, c, l, h, y in zip(self.degrees, self.cochain_dims,
                                              self.lambda_dims, self.hh, self.hc)],
            "ranks": {k: v for k, v in sorted(self.ranks.items())},
        }

    def table(self):
        lines = ["degree | dim C^n | dim lambda | HH^n | HC^n"]
        for k, c, l, h, y in zip(self.degrees, self.cochain_dims, self.lambda_dims,
                                 self.hh, self.hc):
            lines.append("%6d | %7d | %10d | %4d | %4d" % (k, c, l, h, y))
        return "\n".join(lines)


def hochschild_differential(cm: CocyclicModule, n):
    """b_n : C^(n-1) -> C^n."""
    if not 1 <= n <= cm.level:
        raise CohomologyError("b_%d needs level >= %d (have %d)" % (n, n, cm.level))
    out = GradedMap.zero(cm.spaces[n - 1], cm.spaces[n])
    for i in range(n + 1):
        f = cm.face(n, i)
        out = out + f if i % 2 == 0 else out - f
    return out


def cyclic_operator(cm, n):
    """lambda_n = (-1)^n tau_n."""
    t = cm.tau(n)
    return t if n % 2 == 0 else -t


def cyclic_subcomplex(cm: CocyclicModule, n, check=True):
    """(Lambda^n, inclusion) with Lambda^n = ker(id - lambda_n)."""
    if n > cm.level:
        raise CohomologyError("level %d not built" % n)
    if check and para_defect(cm, n) != 0:
        raise CohomologyError("tau_%d^%d != id: cyclic cohomology undefined for "
                              "para-cocyclic data" % (n, n + 1))
    return kernel(identity(cm.spaces[n]) - cyclic_operator(cm, n))


def lambda_closed(cm, n, incl_prev=None):
    """b_n maps Lambda^(n-1) into Lambda^n: (id - lambda_n) b_n incl = 0."""
    incl_prev = incl_prev or cyclic_subcomplex(cm, n - 1)[1]
    b = hochschild_differential(cm, n)
    return ((identity(cm.spaces[n]) - cyclic_operator(cm, n)) @ b @ incl_prev).is_zero()


def hc_dimensions(cm: CocyclicModule, up_to=None):
    """HH^k and HC^k for k = 0..up_to (default level - 1)."""
    if up_to is None:
        up_to = cm.level - 1
    if up_to > cm.level - 1:
        raise CohomologyError("degree %d needs operators up to level %d (have %d)"
                              % (up_to, up_to + 1, cm.level))
    assert CHARACTERISTIC == 0
    for n in range(up_to + 2):
        if para_defect(cm, n) != 0:
            raise CohomologyError("tau_%d^%d != id: data is only para-cocyclic" % (n, n + 1))
    incl = [cyclic_subcomplex(cm, n, check=False) for n in range(up_to + 2)]
    b = {n: hochschild_differential(cm, n) for n in range(1, up_to + 2)}
    rb, rlam = {0: 0}, {0: 0}
    for n in range(1, up_to + 2):
        rb[n] = rank(b[n])
        rlam[n] = rank(b[n] @ incl[n - 1][1])
        if not lambda_closed(cm, n, incl[n - 1][1]):
            raise CohomologyError("b_%d does not preserve the lambda-subcomplex" % n)
    degrees = list(range(up_to + 1))
    cdims = [cm.spaces[k].dim for k in degrees]
    ldims = [incl[k][0].dim for k in degrees]
    hh = [cdims[k] - rb[k + 1] - rb[k] for k in degrees]
    hc = [ldims[k] - rlam[k + 1] - rlam[k] for k in degrees]
    ranks = {"b_%d" % n: rb[n] for n in range(1, up_to + 2)}
    ranks.update({"b_%d|lambda" % n: rlam[n] for n in range(1, up_to + 2)})
    return CohomologyReport(cm.level, degrees, cdims, ldims, hh, hc, ranks)


def b_squared_zero(cm, n):
    """b_(n+1) o b_n == 0."""
    return (hochschild_differential(cm, n + 1) @ hochschild_differential(cm, n)).is_zero()
