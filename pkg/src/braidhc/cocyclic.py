"""
Cocyclic objects as explicit operator families.

Two constructions live here:

* :func:`build_cm_cocyclic`: C^0 = I, C^n = H^n with faces, degeneracies and
  cyclic maps built from (H, delta, sigma).
* :func:`build_triple_paracocyclic` / :func:`build_triple_cocyclic`: the
  operators on M (x) C^(n+1) for a triple (H, C, M), and the family induced
  on the balanced tensor products M (x)_H C^(n+1).

Operator indexing: ``face(n, i): C^(n-1) -> C^n`` (0 <= i <= n),
``degeneracy(n, i): C^(n+1) -> C^n`` (0 <= i <= n), ``tau(n): C^n -> C^n``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .graded import (GradedMap, GradedSpace, braid_symmetry_check, braiding, cokernel,
                     identity, rank, tensor_map, tensor_power, tensor_space)
from .hopf import (AxiomReport, BraidedHopfAlgebra, HopfStructureError, check_pair,
                   compare_maps, iterated_coproduct, power_multiplication, shuffle_map,
                   twisted_antipode, verify_hopf_axioms)

log = logging.getLogger(__name__)

DEFAULT_CAP = 10 ** 6


class SizeCapExceeded(ValueError):
    pass


def _guard(dim, cap, what):
    if dim * dim > cap:
        raise SizeCapExceeded("%s needs %d x %d matrices, over the cap of %d entries"
                              % (what, dim, dim, cap))


@dataclass
class CocyclicModule:
    level: int
    spaces: list
    faces: dict = dc_field(default_factory=dict)
    degeneracies: dict = dc_field(default_factory=dict)
    cyclic: dict = dc_field(default_factory=dict)
    name: str = ""

    def face(self, n, i):
        return self.faces[n, i]

    def degeneracy(self, n, i):
        return self.degeneracies[n, i]

    def tau(self, n):
        return self.cyclic[n]

    def dims(self):
        return [s.dim for s in self.spaces]


@dataclass
class IdentityCheck:
    identity: str
    level: int
    passed: bool
    indices: tuple = ()
    witness: Optional[dict] = None
    defect_rank: Optional[int] = None

    def to_json(self):
        out = {"identity": self.identity, "level": self.level,
               "indices": list(self.indices), "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.defect_rank is not None:
            out["defect_rank"] = self.defect_rank
        return out


@dataclass
class CocyclicReport:
    level: int
    checks: list
    para_defects: dict

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json(self):
        return {"level": self.level, "pass": self.passed,
                "para_defects": {str(k): v for k, v in sorted(self.para_defects.items())},
                "checks": [c.to_json() for c in self.checks]}


# ---------------------------------------------------------------------------
# Connes-Moscovici object

def build_cm_cocyclic(H: BraidedHopfAlgebra, pair=None, level=3, cap=DEFAULT_CAP):
    if level < 0:
        raise ValueError("level must be non-negative")
    report = verify_hopf_axioms(H)
    if not report.passed:
        raise HopfStructureError("H fails the Hopf axioms: %s"
                                 % ", ".join(r.name for r in report.failures()))
    pair = check_pair(H, pair)
    _guard(H.dim ** level, cap, "level %d" % level)

    spaces = [tensor_power(H.space, n) for n in range(level + 1)]
    ids = [identity(s) for s in spaces]
    cm = CocyclicModule(level, spaces, name=H.name)
    for n in range(1, level + 1):
        cm.faces[n, 0] = tensor_map(H.unit, ids[n - 1])
        for i in range(1, n):
            cm.faces[n, i] = tensor_map(ids[i - 1], H.comul, ids[n - 1 - i])
        cm.faces[n, n] = tensor_map(ids[n - 1], pair.sigma)
    for n in range(level):
        for i in range(n + 1):
            cm.degeneracies[n, i] = tensor_map(ids[i], H.counit, ids[n - i])
    cm.cyclic[0] = ids[0]
    if level >= 1:
        st = twisted_antipode(H, pair)
        for n in range(1, level + 1):
            first = iterated_coproduct(H, n - 1) @ st
            cm.cyclic[n] = (power_multiplication(H, n)
                            @ tensor_map(first, ids[n - 1], pair.sigma))
    return cm


# ---------------------------------------------------------------------------
# verification

def _compare(name, level, indices, lhs, rhs):
    res = compare_maps(name, lhs, rhs)
    return IdentityCheck(name, level, res.passed, tuple(indices), res.witness)


def para_defect(cm, n):
    """rank(tau_n^(n+1) - id); zero iff cyclicity holds at level n."""
    t = cm.tau(n)
    return rank(t.power(n + 1) - identity(cm.spaces[n]))


def verify_cocyclic_identities(cm: CocyclicModule):
    """Check every cocyclic relation available up to ``cm.level``, in a fixed order."""
    N = cm.level
    d, s, t = cm.face, cm.degeneracy, cm.tau
    checks = []
    # d_j d_i = d_i d_{j-1}, i < j, landing in C^(n+1)
    for n in range(1, N):
        for j in range(n + 2):
            for i in range(j):
                checks.append(_compare("d_j d_i = d_i d_(j-1)", n + 1, (i, j),
                                       d(n + 1, j) @ d(n, i), d(n + 1, i) @ d(n, j - 1)))
    # s_j s_i = s_i s_(j+1), i <= j, from C^(n+2)
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                checks.append(_compare("s_j s_i = s_i s_(j+1)", n, (i, j),
                                       s(n, j) @ s(n + 1, i), s(n, i) @ s(n + 1, j + 1)))
    # s_j d_i on C^n, through C^(n+1)
    for n in range(N):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = s(n, j) @ d(n + 1, i)
                if i < j:
                    checks.append(_compare("s_j d_i = d_i s_(j-1)", n, (i, j), lhs,
                                           d(n, i) @ s(n - 1, j - 1)))
                elif i in (j, j + 1):
                    checks.append(_compare("s_j d_i = id", n, (i, j), lhs,
                                           identity(cm.spaces[n])))
                else:
                    checks.append(_compare("s_j d_i = d_(i-1) s_j", n, (i, j), lhs,
                                           d(n, i - 1) @ s(n - 1, j)))
    # tau_n d_i
    for n in range(1, N + 1):
        checks.append(_compare("tau_n d_0 = d_n", n, (0,), t(n) @ d(n, 0), d(n, n)))
        for i in range(1, n + 1):
            checks.append(_compare("tau_n d_i = d_(i-1) tau_(n-1)", n, (i,),
                                   t(n) @ d(n, i), d(n, i - 1) @ t(n - 1)))
    # tau_n s_i
    for n in range(N):
        checks.append(_compare("tau_n s_0 = s_n tau_(n+1)^2", n, (0,),
                               t(n) @ s(n, 0), s(n, n) @ t(n + 1) @ t(n + 1)))
        for i in range(1, n + 1):
            checks.append(_compare("tau_n s_i = s_(i-1) tau_(n+1)", n, (i,),
                                   t(n) @ s(n, i), s(n, i - 1) @ t(n + 1)))
    # cyclicity
    defects = {}
    for n in range(N + 1):
        c = _compare("tau_n^(n+1) = id", n, (), t(n).power(n + 1), identity(cm.spaces[n]))
        defects[n] = 0 if c.passed else para_defect(cm, n)
        if not c.passed:
            c.defect_rank = defects[n]
        checks.append(c)
    return CocyclicReport(N, checks, defects)


# ---------------------------------------------------------------------------
# triples (H, C, M)

@dataclass(frozen=True)
class ModuleCoalgebra:
    space: GradedSpace
    comul: GradedMap  # C -> C (x) C
    counit: GradedMap  # C -> I
    action: GradedMap  # H (x) C -> C


@dataclass(frozen=True)
class CoefficientModule:
    space: GradedSpace
    action: GradedMap  # H (x) M -> M
    coaction: GradedMap  # M -> H (x) M
    right_action: Optional[GradedMap] = None  # M (x) H -> M, used for balancing


@dataclass(frozen=True)
class TripleData:
    hopf: BraidedHopfAlgebra
    coalgebra: ModuleCoalgebra
    module: CoefficientModule

    def balancing_action(self):
        """The right action on M; defaults to m <| h = S(h) |> m."""
        M = self.module
        if M.right_action is not None:
            return M.right_action
        H = self.hopf
        return (M.action @ tensor_map(H.antipode, identity(M.space))
                @ braiding(M.space, H.space, H.symmetric))


def regular_coalgebra(H):
    """H as a module coalgebra over itself (left multiplication)."""
    return ModuleCoalgebra(H.space, H.comul, H.counit, H.mul)


def unit_module(H, pair=None):
    """M = I with action delta and coaction sigma (x) 1."""
    pair = check_pair(H, pair)
    return CoefficientModule(H.I, pair.delta, pair.sigma)


def verify_triple(T: TripleData):
    H, C, M = T.hopf, T.coalgebra, T.module
    sym = H.symmetric
    one, idC, idM = H.id(), identity(C.space), identity(M.space)
    phi, DC, eC = C.action, C.comul, C.counit
    rho, act = M.coaction, M.action
    right = T.balancing_action()
    checks = [
        ("C coassociative", tensor_map(DC, idC) @ DC, tensor_map(idC, DC) @ DC),
        ("C left counit", tensor_map(eC, idC) @ DC, idC),
        ("C right counit", tensor_map(idC, eC) @ DC, idC),
        ("C action associative", phi @ tensor_map(H.mul, idC), phi @ tensor_map(one, phi)),
        ("C action unital", phi @ tensor_map(H.unit, idC), idC),
        ("C action comultiplicative", DC @ phi,
         tensor_map(phi, phi) @ tensor_map(one, braiding(H.space, C.space, sym), idC)
         @ tensor_map(H.comul, DC)),
        ("C action counital", eC @ phi, tensor_map(H.counit, eC)),
        ("M action associative", act @ tensor_map(H.mul, idM), act @ tensor_map(one, act)),
        ("M action unital", act @ tensor_map(H.unit, idM), idM),
        ("M coaction counital", tensor_map(H.counit, idM) @ rho, idM),
        ("M coaction coassociative", tensor_map(H.comul, idM) @ rho,
         tensor_map(one, rho) @ rho),
        ("M right action associative", right @ tensor_map(right, one),
         right @ tensor_map(idM, H.mul)),
        ("M right action unital", right @ tensor_map(idM, H.unit), idM),
    ]
    return AxiomReport([compare_maps(name, a, b) for name, a, b in checks])


def triple_hypotheses(T: TripleData):
    """The four psi psi = id conditions, each evaluated in both composite orders."""
    H, C, M = T.hopf.space, T.coalgebra.space, T.module.space
    sym = T.hopf.symmetric
    out = []
    for label, A, B in (("H,M", H, M), ("H,H", H, H), ("H,C", H, C), ("M,C", M, C)):
        ab = braid_symmetry_check(A, B, sym)
        ba = braid_symmetry_check(B, A, sym)
        out.append({"pair": label, "symmetric_pair": ab[0] and ba[0],
                    "forward": ab[0], "reverse": ba[0], "flip": ab[1] and ba[1]})
    return out


def iterated_braiding(X, factors, symmetric=False):
    """psi_{X, Y1 (x) ... (x) Yk} as a product of pairwise braidings."""
    if not factors:
        return identity(X)
    out = identity(tensor_space(X, *factors))
    for k, Y in enumerate(factors):
        before = [identity(f) for f in factors[:k]]
        after = [identity(f) for f in factors[k + 1:]]
        out = tensor_map(*(before + [braiding(X, Y, symmetric)] + after)) @ out
    return out


def _tail_maps(T, n):
    """(1_M, psi_{C,C^n})(1_M, phi_C, 1_{C^n})(psi_{H,M}, 1_{C^(n+1)}) on H (x) M (x) C^(n+1)."""
    H, C, M = T.hopf, T.coalgebra, T.module
    sym = H.symmetric
    idM = identity(M.space)
    idCn = identity(tensor_power(C.space, n))
    idCn1 = identity(tensor_power(C.space, n + 1))
    rot = tensor_map(idM, iterated_braiding(C.space, [C.space] * n, sym))
    act = tensor_map(idM, C.action, idCn)
    swap = tensor_map(braiding(H.space, M.space, sym), idCn1)
    return rot @ act @ swap


def build_triple_paracocyclic(T: TripleData, level=3, cap=DEFAULT_CAP):
    """Operators on C^n = M (x) C^(n+1) before passing to the balanced quotient."""
    if level < 0:
        raise ValueError("level must be non-negative")
    report = verify_triple(T)
    if not report.passed:
        raise HopfStructureError("triple fails structure checks: %s"
                                 % ", ".join(r.name for r in report.failures()))
    hyp = triple_hypotheses(T)
    for h in hyp:
        if not h["symmetric_pair"]:
            log.warning("psi psi != id for (%s); expect para-cocyclic data only", h["pair"])
    C, M = T.coalgebra, T.module
    _guard(M.space.dim * C.space.dim ** (level + 1), cap, "level %d" % level)
    idM = identity(M.space)
    cpow = [identity(tensor_power(C.space, k)) for k in range(level + 2)]
    spaces = [tensor_space(M.space, tensor_power(C.space, n + 1)) for n in range(level + 1)]
    cm = CocyclicModule(level, spaces, name="triple")
    for n in range(1, level + 1):
        for i in range(n):
            cm.faces[n, i] = tensor_map(idM, cpow[i], C.comul, cpow[n - i - 1])
        head = tensor_map(M.coaction, C.comul, cpow[n - 1])
        cm.faces[n, n] = _tail_maps(T, n) @ head
    for n in range(level):
        for i in range(n + 1):
            cm.degeneracies[n, i] = tensor_map(idM, cpow[i + 1], C.counit, cpow[n - i])
    for n in range(level + 1):
        cm.cyclic[n] = _tail_maps(T, n) @ tensor_map(M.coaction, cpow[n + 1])
    return cm


def diagonal_action(T: TripleData, k):
    """H (x) C^k -> C^k: (phi^(x)k) o shuffle(H, C, k) o (Delta^(k-1) (x) 1)."""
    H, C = T.hopf, T.coalgebra
    spread = tensor_map(iterated_coproduct(H, k - 1), identity(tensor_power(C.space, k)))
    return (tensor_map(*([C.action] * k)) @ shuffle_map(H.space, C.space, k, H.symmetric)
            @ spread)


@dataclass
class BalancedQuotient:
    ambient: GradedSpace
    beta: GradedMap  # M (x) H (x) C^(n+1) -> ambient, image = relations
    space: GradedSpace
    projection: GradedMap
    section: GradedMap
    relation_rank: int


def balanced_quotient(T: TripleData, n):
    """M (x)_H C^(n+1) as the cokernel of (right action (x) 1) - (1 (x) diagonal action)."""
    M = T.module
    k = n + 1
    idCk = identity(tensor_power(T.coalgebra.space, k))
    beta = (tensor_map(T.balancing_action(), idCk)
            - tensor_map(identity(M.space), diagonal_action(T, k)))
    q = cokernel(beta)
    return BalancedQuotient(beta.target, beta, q.space, q.projection, q.section,
                            beta.target.dim - q.space.dim)


@dataclass
class Induced:
    map: Optional[GradedMap]
    well_defined: bool
    witness: Optional[dict] = None


def induce_on_quotient(op: GradedMap, src: BalancedQuotient, tgt: BalancedQuotient):
    """Induced map on quotients, if op maps relations into relations."""
    leak = tgt.projection @ op @ src.beta
    if not leak.is_zero():
        c = min(leak.matrix.cols)
        return Induced(None, False, {"relation_vector": c,
                                     "image_in_quotient": {str(r): v.to_json() for r, v in
                                                           sorted(leak.column(c).items())}})
    return Induced(tgt.projection @ op @ src.section, True)


@dataclass
class TripleBuild:
    paracocyclic: CocyclicModule
    quotients: list
    induced: Optional[CocyclicModule]
    inductions: list
    hypotheses: list

    @property
    def well_defined(self):
        return all(x["well_defined"] for x in self.inductions)


def build_triple_cocyclic(T: TripleData, level=3, cap=DEFAULT_CAP):
    para = build_triple_paracocyclic(T, level, cap)
    quotients = [balanced_quotient(T, n) for n in range(level + 1)]
    induced = CocyclicModule(level, [q.space for q in quotients], name="triple/H")
    inductions = []

    def run(kind, key, op, s, t):
        res = induce_on_quotient(op, quotients[s], quotients[t])
        entry = {"operator": kind, "index": list(key) if isinstance(key, tuple) else [key],
                 "well_defined": res.well_defined}
        if res.witness:
            entry["witness"] = res.witness
        inductions.append(entry)
        return res.map

    for (n, i), op in sorted(para.faces.items()):
        induced.faces[n, i] = run("face", (n, i), op, n - 1, n)
    for (n, i), op in sorted(para.degeneracies.items()):
        induced.degeneracies[n, i] = run("degeneracy", (n, i), op, n + 1, n)
    for n, op in sorted(para.cyclic.items()):
        induced.cyclic[n] = run("tau", n, op, n, n)
    ok = all(e["well_defined"] for e in inductions)
    return TripleBuild(para, quotients, induced if ok else None, inductions,
                       triple_hypotheses(T))
