"""
Command-line interface.

Exit codes: 0 when every requested check passes, 1 when a mathematical check
fails, 2 for malformed input or usage errors.  JSON reports contain no timing
so that identical inputs give byte-identical output; text reports print the
elapsed time on their last line.

Relative ``--out`` paths and emitted operator files are placed under
$BRAIDHC_OUTPUT_DIR when it is set.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from . import io
from .builtin import group_character_pair, quantum_line
from .cocyclic import (DEFAULT_CAP, SizeCapExceeded, TripleData, build_cm_cocyclic,
                       build_triple_cocyclic, regular_coalgebra, unit_module,
                       verify_cocyclic_identities, verify_triple)
from .cohomology import CohomologyError, hc_dimensions
from .graded import GradedSpace, braid_symmetry_check, support_criterion
from .hopf import HopfStructureError, check_pair, verify_hopf_axioms, verify_modular_pair
from .cyclo import cyclotomic_field
from .transmutation import (NotInAnyonicCategoryError, TransmutationError, czn_group_algebra,
                            czn_r_matrix, transmutation_triviality, transmute,
                            verify_quasitriangular)

OUTPUT_DIR_ENV = "BRAIDHC_OUTPUT_DIR"

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

log = logging.getLogger("braidhc")


class UsageError(ValueError):
    pass


class Report:
    """Accumulates sections of a run; ``ok`` is false once any check fails."""

    def __init__(self, argv):
        self.command = list(argv)
        self.sections = []
        self.ok = True
        self.started = time.perf_counter()

    def add(self, name, passed, data, text=None):
        if passed is not None:
            self.ok = self.ok and bool(passed)
        self.sections.append((name, passed, data, text))

    def to_json(self):
        return {"command": self.command,
                "status": "pass" if self.ok else "fail",
                "sections": [{"name": n, "pass": p, "result": d}
                             for n, p, d, _ in self.sections]}

    def to_text(self):
        lines = ["$ braidhc " + " ".join(self.command)]
        for name, passed, _, text in self.sections:
            tag = "----" if passed is None else ("PASS" if passed else "FAIL")
            lines.append("[%s] %s" % (tag, name))
            if text:
                lines.extend("    " + t for t in text.splitlines())
        lines.append("status: %s (%.2f s)" % ("pass" if self.ok else "fail",
                                              time.perf_counter() - self.started))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# helpers

def _output_path(path):
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        os.makedirs(base, exist_ok=True)
        return os.path.join(base, path)
    return path


def _emit(obj, out):
    text = io.dump(obj)
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        path = _output_path(out)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        log.info("wrote %s", path)


def _load(path):
    return io.loads(io.read_text(path), source=path)


def _load_hopf(path, pair_path=None):
    H, pair = io.parse_hopf(_load(path))
    if pair_path:
        pair = io.parse_pair(_load(pair_path), H, "pair")
    return H, pair


def _failure_text(report):
    return "\n".join("%s: witness %s" % (r.name, r.witness) for r in report.failures())


def _axiom_section(rep, name, report):
    text = "%d/%d identities hold" % (sum(r.passed for r in report.results), len(report.results))
    if not report.passed:
        text += "\n" + _failure_text(report)
    rep.add(name, report.passed, report.to_json(), text)


def _cocyclic_section(rep, name, creport):
    fails = creport.failures()
    text = "%d/%d relations hold up to level %d" % (
        len(creport.checks) - len(fails), len(creport.checks), creport.level)
    defects = sorted(creport.para_defects.items())
    text += "\npara_defect: " + ", ".join("%d:%d" % kv for kv in defects)
    for c in fails[:5]:
        text += "\n%s at level %d %s" % (c.identity, c.level, list(c.indices))
    if len(fails) > 5:
        text += "\n... %d more failures" % (len(fails) - 5)
    rep.add(name, creport.passed, creport.to_json(), text)


def _hypotheses_section(rep, hyp):
    text = "\n".join("psi psi = id for (%s): %s%s" % (
        h["pair"], "yes" if h["symmetric_pair"] else "no", " (flip)" if h["flip"] else "")
        for h in hyp)
    rep.add("braiding hypotheses", None, hyp, text)


def _parse_support(text, n, flag):
    try:
        degs = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError("%s: expected comma-separated integers, got %r" % (flag, text)) from None
    for d in degs:
        if not 0 <= d < n:
            raise UsageError("%s: degree %d outside [0, %d)" % (flag, d, n))
    return sorted(set(degs))


def _space_from_support(n, support):
    dims = [0] * n
    for d in support:
        dims[d] = 1
    return GradedSpace.from_dims(cyclotomic_field(n), dims)


def _emit_operators(cm, prefix):
    for (n, i), f in sorted(cm.faces.items()):
        _emit(io.map_json(f), "%s_face_%d_%d.json" % (prefix, n, i))
    for (n, i), f in sorted(cm.degeneracies.items()):
        _emit(io.map_json(f), "%s_degeneracy_%d_%d.json" % (prefix, n, i))
    for n, f in sorted(cm.cyclic.items()):
        _emit(io.map_json(f), "%s_tau_%d.json" % (prefix, n))


# ---------------------------------------------------------------------------
# commands

def cmd_builtin(args, rep):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    kind = args.structure
    if kind == "czn":
        obj = io.hopf_json(czn_group_algebra(args.n))
    elif kind == "czn-r":
        obj = io.r_json(czn_r_matrix(args.n))
    elif kind == "line":
        try:
            obj = io.hopf_json(quantum_line(args.n, args.degree))
        except ValueError as e:
            raise UsageError(str(e)) from None
    elif kind == "czn-coalgebra":
        obj = io.coalgebra_json(regular_coalgebra(czn_group_algebra(args.n)))
    elif kind == "unit-module":
        obj = io.module_json(unit_module(czn_group_algebra(args.n)))
    elif kind == "character-pair":
        H = czn_group_algebra(args.n)
        if not 0 <= args.sigma < args.n:
            raise UsageError("--sigma must lie in [0, %d)" % args.n)
        obj = io.pair_json(group_character_pair(H, args.power, args.sigma), args.n)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    _emit(obj, args.out)
    return None


def cmd_verify(args, rep):
    if args.what == "hopf":
        path = args.file or args.hopf
        if not path:
            raise UsageError("verify hopf needs a file (or - for stdin)")
        H, pair = _load_hopf(path, args.pair)
        _axiom_section(rep, "braided Hopf axioms (%s, dim %d)" % (H.name, H.dim),
                       verify_hopf_axioms(H))
        if pair is not None:
            _axiom_section(rep, "modular pair", verify_modular_pair(H, pair))
    else:
        if not args.hopf or not args.r:
            raise UsageError("verify quasitriangular needs --hopf and --r")
        H, _ = _load_hopf(args.hopf)
        R = io.parse_r(_load(args.r), H)
        _axiom_section(rep, "quasitriangular axioms", verify_quasitriangular(H, R))
    return rep


def cmd_braid_check(args, rep):
    n = args.n
    if n < 1:
        raise UsageError("--n must be >= 1")
    if args.support is None and not args.object:
        raise UsageError("braid-check needs --support or --object files")
    objects = [io.parse_space(_load(p), "object %s" % p) for p in (args.object or [])]
    if len(objects) > 2:
        raise UsageError("at most two --object files")
    for o in objects:
        if o.n != n:
            raise UsageError("object grading Z_%d does not match --n %d" % (o.n, n))
    if objects:
        if args.support is not None:
            raise UsageError("give either --support or --object files, not both")
        V = objects[0]
        W = objects[1] if len(objects) > 1 else V
        a, b = list(V.support), list(W.support)
    else:
        a = _parse_support(args.support, n, "--support")
        b = _parse_support(args.support_b, n, "--support-b") if args.support_b else a
        V, W = _space_from_support(n, a), _space_from_support(n, b)
    crit = support_criterion(n, a, b)
    forward = braid_symmetry_check(V, W)
    reverse = braid_symmetry_check(W, V)
    exact = (forward[0] and reverse[0], forward[1] and reverse[1])
    agree = crit == exact
    data = {"n": n, "support_a": a, "support_b": b,
            "criterion": {"symmetric_pair": crit[0], "flip": crit[1]},
            "matrix_check": {"symmetric_pair": exact[0], "flip": exact[1]},
            "agree": agree}
    yes = {True: "yes", False: "no"}
    text = ("supports %s x %s in Z_%d\n" % (a, b, n)
            + "criterion:    symmetric pair %s, flip %s\n" % (yes[crit[0]], yes[crit[1]])
            + "matrix check: symmetric pair %s, flip %s" % (yes[exact[0]], yes[exact[1]]))
    rep.add("braid support check", agree, data, text)
    return rep


def cmd_transmute(args, rep):
    if args.report and args.out in (None, "-"):
        raise UsageError("--report needs --out so the structure file is not mixed with the report")
    H, _ = _load_hopf(args.hopf)
    R = io.parse_r(_load(args.r), H)
    Hbar = transmute(H, R)
    if args.report:
        _axiom_section(rep, "transmutation", transmutation_triviality(H, R, Hbar))
    _emit(io.hopf_json(Hbar), args.out)
    return rep if args.report else None


def _precheck(rep, H, pair):
    """Axiom and modular-pair sections; False if the input cannot be built on."""
    _axiom_section(rep, "braided Hopf axioms (%s, dim %d)" % (H.name, H.dim),
                   verify_hopf_axioms(H))
    if pair is not None:
        _axiom_section(rep, "modular pair", verify_modular_pair(H, pair))
    return rep.ok


def cmd_cocyclic(args, rep):
    H, pair = _load_hopf(args.hopf, args.pair)
    if not _precheck(rep, H, pair):
        return rep
    pair = check_pair(H, pair)
    cm = build_cm_cocyclic(H, pair, args.level, args.cap)
    rep.add("build", True, {"level": args.level, "dims": cm.dims()},
            "dim C^n for n = 0..%d: %s" % (args.level, cm.dims()))
    hh = braid_symmetry_check(H.space, H.space, H.symmetric)
    _hypotheses_section(rep, [{"pair": "H,H", "symmetric_pair": hh[0], "forward": hh[0],
                               "reverse": hh[0], "flip": hh[1]}])
    if args.verify:
        _cocyclic_section(rep, "cocyclic identities", verify_cocyclic_identities(cm))
    if args.emit_operators:
        _emit_operators(cm, "cm")
    return rep


def cmd_triple(args, rep):
    H, _ = _load_hopf(args.hopf)
    if not _precheck(rep, H, None):
        return rep
    C = io.parse_coalgebra(_load(args.coalgebra), H)
    M = io.parse_module(_load(args.module), H)
    T = TripleData(H, C, M)
    _axiom_section(rep, "triple structure", verify_triple(T))
    if not rep.ok:
        return rep
    build = build_triple_cocyclic(T, args.level, args.cap)
    _hypotheses_section(rep, build.hypotheses)
    rep.add("balanced quotients", None,
            [{"level": k, "ambient": q.ambient.dim, "quotient": q.space.dim}
             for k, q in enumerate(build.quotients)],
            "dim M (x)_H C^(n+1) for n = 0..%d: %s"
            % (args.level, [q.space.dim for q in build.quotients]))
    bad = [e for e in build.inductions if not e["well_defined"]]
    rep.add("induced operators well-defined", not bad, build.inductions,
            "%d/%d operators descend" % (len(build.inductions) - len(bad),
                                         len(build.inductions)))
    if args.verify:
        if build.induced is not None:
            _cocyclic_section(rep, "cocyclic identities on the quotient",
                              verify_cocyclic_identities(build.induced))
        _cocyclic_section(rep, "identities before the quotient",
                          verify_cocyclic_identities(build.paracocyclic))
    if args.emit_operators and build.induced is not None:
        _emit_operators(build.induced, "triple")
    return rep


def _cohomology_section(rep, cm, up_to):
    try:
        res = hc_dimensions(cm, up_to)
    except CohomologyError as e:
        rep.add("cohomology", False, {"error": str(e)}, str(e))
        return None
    rep.add("cohomology", True, res.to_json(), res.table())
    return res


def cmd_cohomology(args, rep):
    if args.level < 1:
        raise UsageError("--level must be >= 1 (degree k needs operators up to level k+1)")
    H, pair = _load_hopf(args.hopf, args.pair)
    if not _precheck(rep, H, pair):
        return rep
    pair = check_pair(H, pair)
    cm = build_cm_cocyclic(H, pair, args.level, args.cap)
    _cohomology_section(rep, cm, args.level - 1)
    return rep


def cmd_pipeline(args, rep):
    n, level = args.n, args.level
    if n < 1:
        raise UsageError("--n must be >= 1")
    if level < 0:
        raise UsageError("--level must be >= 0")
    H = czn_group_algebra(n)
    R = czn_r_matrix(n, H)
    _axiom_section(rep, "quasitriangular axioms for CZ_%d" % n, verify_quasitriangular(H, R))
    if not rep.ok:
        return rep
    Hbar = transmute(H, R)
    _axiom_section(rep, "transmutation of CZ_%d" % n, transmutation_triviality(H, R, Hbar))
    if not rep.ok:
        return rep
    sym, is_flip = braid_symmetry_check(Hbar.space, Hbar.space)
    rep.add("psi = flip on the transmuted algebra", sym and is_flip,
            {"psi_squared_id": sym, "flip": is_flip},
            "psi^2 = id: %s, psi = flip: %s" % (sym, is_flip))
    # degree k needs level k + 1, so a level-0 run still builds level 1 for HC^0
    build_level = max(level, 1)
    cm = build_cm_cocyclic(Hbar, None, build_level, args.cap)
    _cocyclic_section(rep, "cocyclic identities", verify_cocyclic_identities(cm))
    if not rep.ok:
        return rep
    _cohomology_section(rep, cm, max(level - 1, 0))
    return rep


# ---------------------------------------------------------------------------
# parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="maximum matrix entries per operator (default %(default)s)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="braidhc",
                                description="Braided Hopf cyclic cohomology over Q(zeta_n).")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("builtin", parents=[common], help="emit a builtin structure file")
    b.add_argument("structure", choices=["czn", "czn-r", "line", "czn-coalgebra",
                                         "unit-module", "character-pair"])
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--degree", type=int, default=1, help="degree of x for 'line'")
    b.add_argument("--power", type=int, default=0, help="delta(g) = zeta^power")
    b.add_argument("--sigma", type=int, default=0, help="sigma = g^sigma")
    b.add_argument("--out", help="output file (default stdout)")
    b.set_defaults(func=cmd_builtin)

    v = sub.add_parser("verify", parents=[common], help="check axioms")
    v.add_argument("what", choices=["hopf", "quasitriangular"])
    v.add_argument("file", nargs="?", help="Hopf file, or - for stdin")
    v.add_argument("--hopf")
    v.add_argument("--r")
    v.add_argument("--pair")
    v.set_defaults(func=cmd_verify)

    bc = sub.add_parser("braid-check", parents=[common],
                        help="symmetric-pair and flip tests for graded supports")
    bc.add_argument("--n", type=int, required=True)
    bc.add_argument("--support", help="comma-separated degrees of the first object")
    bc.add_argument("--support-b", help="degrees of the second object (default: same)")
    bc.add_argument("--object", action="append", help="space file {n, dims}; up to two")
    bc.set_defaults(func=cmd_braid_check)

    t = sub.add_parser("transmute", parents=[common], help="transmute (H, R)")
    t.add_argument("--hopf", required=True)
    t.add_argument("--r", required=True)
    t.add_argument("--out", help="output file (default stdout)")
    t.add_argument("--report", action="store_true",
                   help="also print the triviality report (use with --out)")
    t.set_defaults(func=cmd_transmute)

    c = sub.add_parser("cocyclic", parents=[common], help="cocyclic object of (H, delta, sigma)")
    c.add_argument("action", choices=["build"])
    c.add_argument("--hopf", required=True)
    c.add_argument("--pair")
    c.add_argument("--level", type=int, required=True)
    c.add_argument("--verify", action="store_true")
    c.add_argument("--emit-operators", action="store_true")
    c.set_defaults(func=cmd_cocyclic)

    tr = sub.add_parser("triple", parents=[common], help="cocyclic object of a triple (H, C, M)")
    tr.add_argument("action", choices=["build"])
    tr.add_argument("--hopf", required=True)
    tr.add_argument("--coalgebra", required=True)
    tr.add_argument("--module", required=True)
    tr.add_argument("--level", type=int, required=True)
    tr.add_argument("--verify", action="store_true")
    tr.add_argument("--emit-operators", action="store_true")
    tr.set_defaults(func=cmd_triple)

    h = sub.add_parser("cohomology", parents=[common], help="HH and HC dimensions")
    h.add_argument("--hopf", required=True)
    h.add_argument("--pair")
    h.add_argument("--level", type=int, required=True)
    h.set_defaults(func=cmd_cohomology)

    pl = sub.add_parser("pipeline", parents=[common],
                        help="CZ_n end to end: transmute, cocyclic suite, cohomology")
    pl.add_argument("--n", type=int, required=True)
    pl.add_argument("--level", type=int, required=True)
    pl.set_defaults(func=cmd_pipeline)
    return p


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    if getattr(args, "level", None) is not None and args.level < 0:
        parser.error("--level must be >= 0")
    if args.cap <= 0:
        parser.error("--cap must be positive")
    rep = Report(argv)
    try:
        out = args.func(args, rep)
    except (io.ParseError, UsageError, SizeCapExceeded, NotInAnyonicCategoryError) as e:
        print("braidhc: error: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    except (TransmutationError, HopfStructureError) as e:
        print("braidhc: %s" % e, file=sys.stderr)
        return EXIT_FAIL
    if out is None:
        return EXIT_PASS
    sys.stdout.write(io.dump(out.to_json()) if args.json else out.to_text())
    return EXIT_PASS if out.ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
