"""Batch command-line front end.

Verbs: verify, construct, decompose, manin, catalog, forms.  Exit code 0
means every requested check passed, 1 means some check or procedure
failed, 2 means a usage or parse error.  Reports are deterministic; with
--quiet only machine-parseable PASS/FAIL lines are printed.  Styling is
controlled by SUPERALG_COLOR in {auto, never, always}.
"""

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import _linalg as la
from .core import (
    EVEN,
    ODD,
    center,
    graded_jacobi_check,
    is_nilpotent,
    lower_central_series,
)
from .errors import ParseError, InvariantViolation, SuperalgError
from .forms import classify_form, exists_nondegenerate, invariant_form_space
from .maps import LinearMap, zero_map, symplectic_derivation
from .constructions import (
    Ext1Data,
    Ext2Data,
    central_extension,
    gde_2d,
    gde_2d_symplectic,
    gode_1d,
    gode_1d_symplectic,
    lift_derivation,
    symplectic_double_extension,
    tensor_odd_symmetric,
    trivial_double_extension,
)
from .decompositions import split_quadratic_symplectic, split_symplectic
from .manin import manin_split
from . import catalog as _catalog
from .io import Document, document_for_entry, load, parse_rat, rat_str, save

DEFAULT_SEED = 13

CONSTRUCT_KINDS = (
    "trivial_double_extension",
    "lift_derivation",
    "central_extension",
    "symplectic_double_extension",
    "gode_1d",
    "gode_1d_symplectic",
    "gde_2d",
    "gde_2d_symplectic",
    "tensor_odd_symmetric",
)


class _Style:
    def __init__(self, quiet):
        mode = os.environ.get("SUPERALG_COLOR", "auto")
        if mode not in ("auto", "never", "always"):
            mode = "auto"
        self.color = mode == "always" or (mode == "auto" and sys.stdout.isatty())
        self.quiet = quiet

    def line(self, ok, name, detail=""):
        tag = "PASS" if ok else "FAIL"
        if self.color:
            tag = f"\033[32m{tag}\033[0m" if ok else f"\033[31m{tag}\033[0m"
        if self.quiet or not detail:
            print(f"{tag} {name}")
        else:
            print(f"{tag} {name}  {detail}")

    def info(self, text):
        if not self.quiet:
            print(text)


def _read_doc(path):
    try:
        with open(path, "rb") as fh:
            return load(fh.read())
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}")


def _write(path, data):
    with open(path, "wb") as fh:
        fh.write(data)


def _need_form(doc, name):
    if name not in doc.forms:
        raise ParseError(f"document has no form named {name!r}")
    return doc.forms[name]


def _need_map(doc, name):
    if name not in doc.maps:
        raise ParseError(f"document has no map named {name!r}")
    return doc.maps[name]


def _param_map(doc, spec, what):
    if isinstance(spec, str):
        return _need_map(doc, spec)
    if isinstance(spec, dict) and set(spec) == {"degree", "matrix"}:
        degree = EVEN if spec["degree"] == "even" else ODD
        n = doc.algebra.basis.dim
        matrix = tuple(tuple(parse_rat(c) for c in row) for row in spec["matrix"])
        if len(matrix) != n or any(len(r) != n for r in matrix):
            raise ParseError(f"{what}: matrix must be {n}x{n}")
        return LinearMap(matrix, degree)
    raise ParseError(f"{what}: expected a map name or inline degree/matrix object")


def _param_vec(doc, spec, what):
    n = doc.algebra.basis.dim
    if spec is None:
        return la.zero_vec(n)
    if not isinstance(spec, list) or len(spec) != n:
        raise ParseError(f"{what}: expected a list of {n} rationals")
    return tuple(parse_rat(c) for c in spec)


def _param_scalar(spec, what, default=None):
    if spec is None:
        if default is not None:
            return default
        raise ParseError(f"{what}: missing scalar")
    return parse_rat(spec)


def cmd_verify(args, style):
    doc = _read_doc(args.file)
    g = doc.algebra
    checks = [c for c in args.check.split(",") if c] if args.check else []
    failures = 0
    for chk in checks:
        parts = chk.split(":")
        if parts[0] == "jacobi":
            rep = graded_jacobi_check(g)
            style.line(rep.ok, "jacobi", "" if rep.ok else f"witness {rep.witness}")
            failures += not rep.ok
        elif parts[0] == "nilpotent":
            dims = [s.dim for s in lower_central_series(g)]
            ok = dims[-1] == 0
            style.line(ok, "nilpotent", f"series dims {dims}")
            failures += not ok
        elif parts[0] == "center":
            dim = center(g).dim
            ok = dim > 0
            style.line(ok, "center", f"dimension {dim}")
            failures += not ok
        elif parts[0] in ("quadratic", "symplectic") and len(parts) == 2:
            rep = classify_form(g, _need_form(doc, parts[1]))
            ok = rep.is_quadratic() if parts[0] == "quadratic" else rep.is_symplectic()
            wit = "" if ok else f"witnesses {rep.witnesses}"
            style.line(ok, chk, wit)
            failures += not ok
        else:
            raise ParseError(f"unknown check {chk!r}")
    if args.fuzz:
        failures += _fuzz(doc, args, style)
    return 1 if failures else 0


def _fuzz(doc, args, style):
    """Seeded sweep: random one-dimensional symplectic double extensions
    over the named symplectic form, each output re-verified."""
    if not args.symplectic:
        raise ParseError("--fuzz needs --symplectic NAME")
    g = doc.algebra
    omega = _need_form(doc, args.symplectic)
    parity = "odd" if omega.parity == ODD else "even"
    rng = random.Random(args.seed)
    bad = 0
    for trial in range(args.fuzz):
        d = zero_map(g.basis.dim, rng.choice((EVEN, ODD)))
        mode = "generalized" if d.degree == ODD else "double"
        data = Ext1Data(D=d, mode=mode, x0=la.zero_vec(g.basis.dim))
        try:
            out = symplectic_double_extension(g, omega, data, parity)
            ok = bool(graded_jacobi_check(out.algebra))
        except SuperalgError:
            ok = False
        bad += not ok
    style.line(bad == 0, f"fuzz[{args.fuzz} seed={args.seed}]")
    return 1 if bad else 0


def _construct(kind, doc, params):
    g = doc.algebra
    if kind == "trivial_double_extension":
        out = trivial_double_extension(g, params["variant"])
        return Document(out.algebra, {"B": out.quadratic}, {}, {"construct": kind})
    if kind == "lift_derivation":
        name = params["map"]
        lift = lift_derivation(
            g,
            _param_map(doc, name, "map"),
            params["variant"],
            require_invertible=params.get("require_invertible", True),
        )
        ext = trivial_double_extension(g, params["variant"])
        label = (name if isinstance(name, str) else "D") + "_lift"
        return Document(
            ext.algebra, {"B": ext.quadratic}, {label: lift}, {"construct": kind}
        )
    if kind == "central_extension":
        out = central_extension(
            g,
            _need_form(doc, params["omega"]),
            _param_map(doc, params["D"], "D"),
            params["variant"],
        )
        return Document(out, {}, {}, {"construct": kind})
    if kind == "symplectic_double_extension":
        data = Ext1Data(
            D=_param_map(doc, params["D"], "D"),
            mode=params["mode"],
            x0=_param_vec(doc, params.get("x0"), "x0"),
            b0=_param_vec(doc, params["b0"], "b0") if params.get("b0") is not None else None,
        )
        out = symplectic_double_extension(
            g, _need_form(doc, params["omega"]), data, params["omega_parity"]
        )
        return Document(
            out.algebra, {"omega": out.symplectic}, {}, {"construct": kind}
        )
    if kind in ("gode_1d", "gode_1d_symplectic"):
        data = Ext1Data(
            D=_param_map(doc, params["Dbar"], "Dbar"),
            mode="generalized",
            x0=_param_vec(doc, params.get("x0"), "x0"),
            k=_param_scalar(params.get("k"), "k", Fraction(0)),
            c1=_param_vec(doc, params.get("c1"), "c1"),
            lam=parse_rat(params["lambda"]) if params.get("lambda") else None,
        )
        bform = _need_form(doc, params["B"])
        if kind == "gode_1d":
            out = gode_1d(g, bform, data)
            return Document(
                out.algebra, {"B": out.quadratic}, {}, {"construct": kind}
            )
        out = gode_1d_symplectic(g, bform, _need_form(doc, params["omega"]), data)
        return Document(
            out.algebra,
            {"B": out.quadratic, "omega": out.symplectic},
            {"Delta": out.derivation},
            {"construct": kind},
        )
    if kind in ("gde_2d", "gde_2d_symplectic"):
        data = Ext2Data(
            D=_param_map(doc, params["D"], "D"),
            Dbar=_param_map(doc, params["Dbar"], "Dbar"),
            x0=_param_vec(doc, params.get("x0"), "x0"),
            x1=_param_vec(doc, params.get("x1"), "x1"),
            k=_param_scalar(params.get("k"), "k", Fraction(0)),
            c0=_param_vec(doc, params.get("c0"), "c0"),
            c1=_param_vec(doc, params.get("c1"), "c1"),
            lam=parse_rat(params["lambda"]) if params.get("lambda") else None,
            alpha=_param_scalar(params.get("alpha"), "alpha", Fraction(0)),
        )
        bform = _need_form(doc, params["B"])
        if kind == "gde_2d":
            out = gde_2d(g, bform, params["parity"], data)
            return Document(
                out.algebra, {"B": out.quadratic}, {}, {"construct": kind}
            )
        out = gde_2d_symplectic(
            g, bform, _need_form(doc, params["omega"]), params["parity"], data
        )
        return Document(
            out.algebra,
            {"B": out.quadratic, "omega": out.symplectic},
            {"Delta": out.derivation},
            {"construct": kind},
        )
    if kind == "tensor_odd_symmetric":
        other = _read_doc(params["assoc_file"])
        out = tensor_odd_symmetric(
            g,
            _need_form(doc, params["omega"]),
            other.algebra,
            _need_form(other, params["assoc_form"]),
        )
        return Document(
            out.algebra, {"Omega": out.symplectic}, {}, {"construct": kind}
        )
    raise ParseError(f"unknown construct kind {kind!r}")


def cmd_construct(args, style):
    doc = _read_doc(args.base)
    with open(args.params, "r", encoding="utf-8") as fh:
        params = json.load(fh)
    out = _construct(args.kind, doc, params)
    _write(args.output, save(out))
    style.info(f"wrote {args.output}")
    return 0


def _vec_payload(v):
    return [rat_str(c) for c in v]


def _map_payload(m):
    return {
        "degree": "even" if m.degree == EVEN else "odd",
        "matrix": [[rat_str(c) for c in row] for row in m.matrix],
    }


def _params_payload(result, quad_name, symp_name):
    p = result.params
    if isinstance(p, Ext1Data):
        if quad_name is None:
            out = {
                "omega": symp_name,
                "omega_parity": "odd" if result.kind == "odd_symp_1d" else "even",
                "mode": p.mode,
                "D": _map_payload(p.D),
            }
            if p.mode == "generalized":
                out["x0"] = _vec_payload(p.x0)
            else:
                out["b0"] = _vec_payload(p.b0)
            return out
        return {
            "B": quad_name,
            "omega": symp_name,
            "Dbar": _map_payload(p.D),
            "x0": _vec_payload(p.x0),
            "k": rat_str(p.k),
            "c1": _vec_payload(p.c1),
            "lambda": rat_str(p.lam),
        }
    if isinstance(p, Ext2Data):
        parity = "odd" if result.kind == "oddquad_evensymp_2d" else "even"
        return {
            "B": quad_name,
            "omega": symp_name,
            "parity": parity,
            "D": _map_payload(p.D),
            "Dbar": _map_payload(p.Dbar),
            "x0": _vec_payload(p.x0),
            "x1": _vec_payload(p.x1),
            "k": rat_str(p.k),
            "c0": _vec_payload(p.c0),
            "c1": _vec_payload(p.c1),
            "lambda": rat_str(p.lam),
            "alpha": rat_str(p.alpha),
        }
    return {
        "kind": "direct_sum",
        "ideal_vector": _vec_payload(p.ideal_vector),
        "pairing": rat_str(p.pairing),
    }


def cmd_decompose(args, style):
    doc = _read_doc(args.file)
    g = doc.algebra
    symp = _need_form(doc, args.symplectic)
    if args.quadratic:
        quad = _need_form(doc, args.quadratic)
        result = split_quadratic_symplectic(g, quad, symp)
        forms = {
            args.quadratic: result.base.quadratic,
            args.symplectic: result.base.symplectic,
        }
    else:
        result = split_symplectic(g, symp)
        forms = {args.symplectic: result.base.symplectic}
    style.line(True, f"decompose:{result.kind}", f"base dim {result.base.dim}")
    base_doc = Document(result.base.algebra, forms, {}, {"decomposed_from": result.kind})
    _write(args.output, save(base_doc))
    payload = _params_payload(result, args.quadratic, args.symplectic)
    payload["kind"] = result.kind
    with open(args.params_out, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    style.info(f"wrote {args.output} and {args.params_out}")
    return 0


def cmd_manin(args, style):
    if args.action != "split":
        raise ParseError(f"unknown manin action {args.action!r}")
    doc = _read_doc(args.file)
    split = manin_split(
        doc.algebra, _need_form(doc, args.quadratic), _need_form(doc, args.symplectic)
    )
    evs = {rat_str(ev): space.dim for ev, space in split.spectrum.pairs}
    style.line(True, "manin:split", f"eigenvalues {evs}")
    style.info(f"a: dim {split.a.dim}, b: dim {split.b.dim}")
    style.info(f"center meets a: {split.center_in_a}, b: {split.center_in_b}")
    if args.output:
        payload = {
            "eigenvalues": {rat_str(ev): s.dim for ev, s in split.spectrum.pairs},
            "positive_set": [rat_str(ev) for ev in split.positive_set],
            "a": [[rat_str(c) for c in row] for row in split.a.rows],
            "b": [[rat_str(c) for c in row] for row in split.b.rows],
        }
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        style.info(f"wrote {args.output}")
    return 0


def cmd_catalog(args, style):
    entry = _catalog.build(args.name, n=args.n)
    doc = document_for_entry(entry)
    _write(args.output, save(doc))
    rep = _catalog.expected_report(entry)
    bad = [k for k, v in rep.items() if not v]
    for k in sorted(rep):
        style.line(rep[k], f"catalog:{k}")
    style.info(f"wrote {args.output}")
    return 1 if bad else 0


def cmd_forms(args, style):
    doc = _read_doc(args.file)
    parity = EVEN if args.parity == "even" else ODD
    symmetry = (
        "skew_supersymmetric_cocycle" if args.cocycle else "supersymmetric"
    )
    space = invariant_form_space(doc.algebra, parity, symmetry)
    style.info(f"solution space dimension: {space.dim}")
    code = 0
    if args.exists_nondegenerate:
        ans = exists_nondegenerate(space, seed=args.seed)
        detail = ""
        if ans.status == "yes":
            detail = "coefficients " + ",".join(rat_str(c) for c in ans.coefficients)
        style.line(ans.status == "yes", f"exists-nondegenerate:{ans.status}", detail)
        code = 0 if ans.status == "yes" else 1
    return code


def build_parser():
    ap = argparse.ArgumentParser(
        prog="superalg",
        description="exact verifier and constructor for Lie superalgebras with homogeneous structures",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--quiet", action="store_true", help="machine-parseable output only"
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="run checks against a document", parents=[common])
    p.add_argument("file")
    p.add_argument("--check", default="", help="comma list: jacobi,nilpotent,center,quadratic:NAME,symplectic:NAME")
    p.add_argument("--fuzz", type=int, default=0, help="random extension sweeps")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--symplectic", help="form name used by --fuzz")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", parents=[common], help="run a construction")
    p.add_argument("kind", choices=CONSTRUCT_KINDS)
    p.add_argument("--base", required=True)
    p.add_argument("--params", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", parents=[common], help="split off a central extension layer")
    p.add_argument("file")
    p.add_argument("--quadratic")
    p.add_argument("--symplectic", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--params-out", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("manin", parents=[common], help="manin operations")
    p.add_argument("action", choices=["split"])
    p.add_argument("file")
    p.add_argument("--quadratic", required=True)
    p.add_argument("--symplectic", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_manin)

    p = sub.add_parser("catalog", parents=[common], help="emit a worked example")
    p.add_argument("name", choices=_catalog.NAMES)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("forms", parents=[common], help="solve for invariant form spaces")
    p.add_argument("file")
    p.add_argument("--parity", required=True, choices=["even", "odd"])
    p.add_argument("--invariant", action="store_true", help="supersymmetric + invariance")
    p.add_argument("--cocycle", action="store_true", help="skew-supersymmetric + cocycle")
    p.add_argument("--exists-nondegenerate", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_forms)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    style = _Style(args.quiet)
    try:
        return args.func(args, style)
    except (ParseError, InvariantViolation) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except SuperalgError as ex:
        print(f"failure: {type(ex).__name__}: {ex}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
