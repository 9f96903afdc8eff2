"""
JSON interchange.

Scalars are arrays of "p/q" strings in the power basis of Q(zeta_n), maps
are sparse triplet lists [row, col, scalar] over global basis indices, and
spaces are {"n": int, "dims": [...]} with an optional "degrees" list when the
basis is not sorted by degree.  Every parser reports the offending field.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

from .cocyclic import CoefficientModule, ModuleCoalgebra
from .cyclo import CyclotomicScalar, cyclotomic_field
from .graded import DegreeError, GradedMap, GradedSpace, tensor_power, tensor_space
from .hopf import BraidedHopfAlgebra, HopfStructureError, ModularPair
from .linalg import Matrix
from .transmutation import QuasitriangularElement


class ParseError(ValueError):
    """Malformed input; ``context`` names the field (and line, for JSON syntax errors)."""

    def __init__(self, context, message):
        super().__init__("%s: %s" % (context, message))
        self.context = context


# ---------------------------------------------------------------------------
# writing

def dump(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def space_json(space):
    return space.to_json()


def map_json(f):
    return f.to_json()


def hopf_json(H, pair=None):
    out = dict(space_json(H.space))
    out.update({"m": map_json(H.mul), "eta": map_json(H.unit),
                "delta_comul": map_json(H.comul), "epsilon": map_json(H.counit),
                "antipode": map_json(H.antipode)})
    if pair is not None:
        out["modular_pair"] = {"delta": map_json(pair.delta), "sigma": map_json(pair.sigma)}
    out["symmetric"] = H.symmetric
    out["name"] = H.name
    return out


def pair_json(pair, n):
    return {"n": n, "delta": map_json(pair.delta), "sigma": map_json(pair.sigma)}


def r_json(R):
    out = dict(space_json(R.hopf.space))
    out["r"] = map_json(R.element)
    return out


def coalgebra_json(C):
    out = dict(space_json(C.space))
    out.update({"comul": map_json(C.comul), "counit": map_json(C.counit),
                "action": map_json(C.action)})
    return out


def module_json(M):
    out = dict(space_json(M.space))
    out.update({"action": map_json(M.action), "coaction": map_json(M.coaction)})
    if M.right_action is not None:
        out["right_action"] = map_json(M.right_action)
    return out


# ---------------------------------------------------------------------------
# reading

def loads(text, source="<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("%s line %d column %d" % (source, e.lineno, e.colno), e.msg) from None


def _require(obj, key, ctx):
    if not isinstance(obj, dict):
        raise ParseError(ctx, "expected a JSON object")
    if key not in obj:
        raise ParseError(ctx, "missing field %r" % key)
    return obj[key]


def _int(value, ctx):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(ctx, "expected an integer, got %r" % (value,))
    return value


def parse_scalar(field, data, ctx="scalar"):
    if isinstance(data, (int, str)) and not isinstance(data, bool):
        data = [data]
    if not isinstance(data, list) or not data:
        raise ParseError(ctx, "expected a list of rational strings")
    if len(data) > field.degree:
        raise ParseError(ctx, "%d coefficients for a field of degree %d"
                         % (len(data), field.degree))
    coeffs = []
    for k, c in enumerate(data):
        if isinstance(c, bool) or not isinstance(c, (int, str)):
            raise ParseError("%s[%d]" % (ctx, k), "expected a rational string, got %r" % (c,))
        try:
            coeffs.append(Fraction(c))
        except (ValueError, ZeroDivisionError):
            raise ParseError("%s[%d]" % (ctx, k), "bad rational %r" % (c,)) from None
    return CyclotomicScalar.from_coeffs(field, coeffs)


def parse_space(obj, ctx="space"):
    n = _int(_require(obj, "n", ctx), ctx + ".n")
    if n < 1:
        raise ParseError(ctx + ".n", "n must be >= 1")
    field = cyclotomic_field(n)
    dims = _require(obj, "dims", ctx)
    if not isinstance(dims, list) or len(dims) != n:
        raise ParseError(ctx + ".dims", "expected a list of %d dimensions" % n)
    for k, d in enumerate(dims):
        if _int(d, "%s.dims[%d]" % (ctx, k)) < 0:
            raise ParseError("%s.dims[%d]" % (ctx, k), "negative dimension")
    if "degrees" in obj:
        degs = obj["degrees"]
        if not isinstance(degs, list):
            raise ParseError(ctx + ".degrees", "expected a list")
        for k, d in enumerate(degs):
            if not 0 <= _int(d, "%s.degrees[%d]" % (ctx, k)) < n:
                raise ParseError("%s.degrees[%d]" % (ctx, k), "degree %d outside [0, %d)" % (d, n))
        space = GradedSpace(field, tuple(degs))
        if list(space.dims) != dims:
            raise ParseError(ctx + ".degrees", "inconsistent with dims")
        return space
    return GradedSpace.from_dims(field, dims)


def parse_map(data, source, target, ctx="map"):
    field = source.field
    if not isinstance(data, list):
        raise ParseError(ctx, "expected a list of [row, col, scalar] triplets")
    cols = {}
    for k, t in enumerate(data):
        tctx = "%s[%d]" % (ctx, k)
        if not isinstance(t, list) or len(t) != 3:
            raise ParseError(tctx, "expected [row, col, scalar]")
        r, c = _int(t[0], tctx + ".row"), _int(t[1], tctx + ".col")
        if not 0 <= r < target.dim:
            raise ParseError(tctx, "row %d outside [0, %d)" % (r, target.dim))
        if not 0 <= c < source.dim:
            raise ParseError(tctx, "col %d outside [0, %d)" % (c, source.dim))
        if r in cols.get(c, {}):
            raise ParseError(tctx, "duplicate entry (%d, %d)" % (r, c))
        cols.setdefault(c, {})[r] = parse_scalar(field, t[2], tctx + ".scalar")
    try:
        return GradedMap(source, target, Matrix(field, target.dim, source.dim, cols))
    except DegreeError as e:
        raise ParseError(ctx, str(e)) from None


def _structure_map(obj, key, src, tgt):
    return parse_map(_require(obj, key, key), src, tgt, key)


def parse_pair(obj, H, ctx="modular_pair"):
    delta = parse_map(_require(obj, "delta", ctx), H.space, H.I, ctx + ".delta")
    sigma = parse_map(_require(obj, "sigma", ctx), H.I, H.space, ctx + ".sigma")
    return ModularPair(delta, sigma)


def parse_hopf(obj):
    """Returns (H, pair or None)."""
    H = parse_space(obj, "hopf")
    I = GradedSpace.unit(H.field)
    HH = tensor_power(H, 2)
    sym = obj.get("symmetric", False)
    if not isinstance(sym, bool):
        raise ParseError("symmetric", "expected true or false")
    name = obj.get("name", "H")
    if not isinstance(name, str):
        raise ParseError("name", "expected a string")
    try:
        alg = BraidedHopfAlgebra(
            H,
            _structure_map(obj, "m", HH, H),
            _structure_map(obj, "eta", I, H),
            _structure_map(obj, "delta_comul", H, HH),
            _structure_map(obj, "epsilon", H, I),
            _structure_map(obj, "antipode", H, H),
            symmetric=sym, name=name)
    except HopfStructureError as e:
        raise ParseError("hopf", str(e)) from None
    pair = parse_pair(obj["modular_pair"], alg) if "modular_pair" in obj else None
    return alg, pair


def parse_r(obj, H):
    space = parse_space(obj, "r")
    if space != H.space:
        raise ParseError("r", "R file space %r does not match the Hopf algebra" % (space,))
    elem = parse_map(_require(obj, "r", "r"), H.I, tensor_power(H.space, 2), "r")
    return QuasitriangularElement(H, elem)


def parse_coalgebra(obj, H):
    C = parse_space(obj, "coalgebra")
    if C.field is not H.field:
        raise ParseError("coalgebra.n", "does not match the Hopf algebra")
    I = GradedSpace.unit(H.field)
    return ModuleCoalgebra(
        C,
        _structure_map(obj, "comul", C, tensor_power(C, 2)),
        _structure_map(obj, "counit", C, I),
        parse_map(_require(obj, "action", "coalgebra"), tensor_space(H.space, C), C, "action"))


def parse_module(obj, H):
    M = parse_space(obj, "module")
    if M.field is not H.field:
        raise ParseError("module.n", "does not match the Hopf algebra")
    right = None
    if "right_action" in obj:
        right = parse_map(obj["right_action"], tensor_space(M, H.space), M, "right_action")
    return CoefficientModule(
        M,
        parse_map(_require(obj, "action", "module"), tensor_space(H.space, M), M, "action"),
        parse_map(_require(obj, "coaction", "module"), M, tensor_space(H.space, M), "coaction"),
        right)


def read_text(path, stdin=None):
    """Contents of ``path``; "-" reads standard input."""
    if path == "-":
        return (stdin or sys.stdin).read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(path, e.strerror or str(e)) from None
