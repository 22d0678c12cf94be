"""Command-line surface: every checker, generator and diagram emitter.

One subcommand per operation, JSON in/out for scripting.  Exit codes:
0 for success or Accept, 2 for Reject (with the witness JSON on stdout),
1 for usage or I/O errors.  Polynomial arguments are inline JSON or
@filename; rationals are strings like "-3/2" so nothing is parsed as float.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import atlas as atlas_mod
from . import jsonio
from .errors import PwError
from .poly import Poly
from .rationals import rat
from .render import box_ascii, box_dot
from .sl2c import (
    WeightedDiagMap,
    c_quotient_c,
    diamond,
    extend_interpolate,
    free_module_decompose,
    level2_functional_check_c,
    level3_check_c,
    q_nm_c,
    reducibility_c,
    synthesize,
)
from .sl2r import (
    SigmaR,
    box_picture_r,
    c_quotient_r,
    composition_series_r,
    level2_check_r,
    level3_check_r,
    q_poly_r,
)
from .sl2r_product import level3_check_product, q_product


class _UsageError(Exception):
    def __init__(self, message: str = "") -> None:
        super().__init__(message)
        self.message = message


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; remap to 1 (2 means Reject here).

    Values like "-3/2" (rationals) and "-3,1" (K-type vectors) must parse as
    option values, so the negative-number matcher is widened accordingly
    (argparse sets it per instance, hence the override in __init__).
    """

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+([,/.]-?\d+)*$")

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _load_json_arg(value: str):
    """Inline JSON, or @file to read from disk."""
    if value.startswith("@"):
        with open(value[1:], "r", encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(value)


def _emit(payload, out: str | None, raw: bool = False) -> None:
    text = payload if raw else json.dumps(payload, indent=2, sort_keys=True)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _ktype_vec(value: str) -> tuple[int, ...]:
    return tuple(int(x) for x in value.split(","))


def _sigma_r(value: str) -> SigmaR:
    if value in ("+", "plus", "Plus"):
        return SigmaR.PLUS
    if value in ("-", "minus", "Minus"):
        return SigmaR.MINUS
    raise argparse.ArgumentTypeError(f"sigma for sl2r must be + or -, got {value!r}")


def _psi_map(data: dict) -> dict[int, Poly]:
    return {int(k): jsonio.poly_from_json(v) for k, v in data.items()}


def build_parser() -> _Parser:
    parser = _Parser(prog="pw", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--out", default=None, help="write output to FILE instead of stdout")
        return p

    p = add("q", "intertwining polynomial q_{n,m}")
    p.add_argument("--group", required=True, choices=["sl2r", "sl2r-product", "sl2c"])
    p.add_argument("-n", required=True)
    p.add_argument("-m", required=True)

    p = add("cquot", "c-function quotient c_n / c_m")
    p.add_argument("--group", required=True, choices=["sl2r", "sl2c"])
    p.add_argument("-n", required=True, type=int)
    p.add_argument("-m", required=True, type=int)

    p = add("check3", "spherical-function (Level-3) membership check")
    p.add_argument("--group", required=True, choices=["sl2r", "sl2c"])
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("--phi", required=True, help="polynomial JSON (sl2r) or weighted map JSON (sl2c); @file allowed")

    p = add("check3-product", "Level-3 check for SL(2,R)^d")
    p.add_argument("-n", required=True, help="comma-separated K-type vector")
    p.add_argument("-m", required=True, help="comma-separated K-type vector")
    p.add_argument("--phi", required=True, help="multivariate polynomial JSON; @file allowed")

    p = add("check2", "K-picture (Level-2) membership check")
    p.add_argument("--group", required=True, choices=["sl2r", "sl2c"])
    p.add_argument("-n", type=int, default=None, help="K-type (sl2c)")
    p.add_argument("-m", type=int, default=None, help="bundle K-type (sl2r)")
    p.add_argument("--truncation", type=int, default=None, help="K-type bound N (sl2r)")
    p.add_argument("--psi", required=True, help="JSON map K-type/weight -> polynomial; @file allowed")

    p = add("classify", "composition series / reducibility at (sigma, lambda)")
    p.add_argument("--group", required=True, choices=["sl2r", "sl2c"])
    p.add_argument("--sigma", required=True)
    p.add_argument("--lambda", dest="lam", required=True, help='rational string, e.g. "-3/2"')
    p.add_argument("--diamond", action="store_true", help="include the intertwiner diamond (sl2c)")

    p = add("box", "box picture with the minimal submodule highlighted (sl2r)")
    p.add_argument("-m", required=True, type=int)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--format", choices=["json", "dot", "ascii"], default="json")

    p = add("atlas", "classification atlas over a parameter grid")
    p.add_argument("--group", required=True, choices=["sl2r", "sl2c"])
    p.add_argument("--sigma-max", type=int, default=5)
    p.add_argument("--lambda-max", default="5")
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = add("decompose", "generator coordinates of a diagonal-algebra element (sl2c)")
    p.add_argument("--phi", required=True, help="weighted map JSON with n = m; @file allowed")

    p = add("synthesize", "assemble a diagonal-algebra element from coordinates (sl2c)")
    p.add_argument("--coords", required=True, help="generator coordinates JSON; @file allowed")

    p = add("extend", "interpolation extension of an algebra element (sl2c)")
    p.add_argument("--h", required=True, help="weighted map JSON with n = m; @file allowed")
    p.add_argument("--target", required=True, type=int)

    p = add("verify-numeric", "numeric cross-validation of the exact formulas")
    p.add_argument("--seed", type=int, default=20240801)
    return parser


def _cmd_q(args) -> int:
    if args.group == "sl2r":
        _emit(jsonio.poly_to_json(q_poly_r(int(args.n), int(args.m))), args.out)
    elif args.group == "sl2r-product":
        _emit(jsonio.mpoly_to_json(q_product(_ktype_vec(args.n), _ktype_vec(args.m))), args.out)
    else:
        _emit(jsonio.diag_map_to_json(q_nm_c(int(args.n), int(args.m))), args.out)
    return 0


def _cmd_cquot(args) -> int:
    quotient = c_quotient_r(args.n, args.m) if args.group == "sl2r" else c_quotient_c(args.n, args.m)
    _emit(jsonio.ratfunc_to_json(quotient), args.out)
    return 0


def _cmd_check3(args) -> int:
    if args.group == "sl2r":
        if args.n is None or args.m is None:
            raise _UsageError("check3 --group sl2r needs -n and -m")
        phi = jsonio.poly_from_json(_load_json_arg(args.phi))
        result = level3_check_r(phi, args.n, args.m)
        if result.accepted:
            _emit({"accept": True, "h": jsonio.poly_to_json(result.h)}, args.out)
            return 0
        _emit({"accept": False, "witness": jsonio.witness_to_json(result.witness)}, args.out)
        return 2
    phi_map = jsonio.diag_map_from_json(_load_json_arg(args.phi))
    if args.n is not None and phi_map.src != args.n:
        raise _UsageError(f"-n {args.n} does not match phi (n = {phi_map.src})")
    if args.m is not None and phi_map.dst != args.m:
        raise _UsageError(f"-m {args.m} does not match phi (m = {phi_map.dst})")
    result = level3_check_c(phi_map)
    if result.accepted:
        _emit({"accept": True, "h": jsonio.diag_map_to_json(result.h),
               "coords": jsonio.coords_to_json(result.coords)}, args.out)
        return 0
    _emit({"accept": False, "witness": jsonio.witness_to_json(result.witness)}, args.out)
    return 2


def _cmd_check3_product(args) -> int:
    phi = jsonio.mpoly_from_json(_load_json_arg(args.phi))
    result = level3_check_product(phi, _ktype_vec(args.n), _ktype_vec(args.m))
    if result.accepted:
        _emit({"accept": True, "h": jsonio.mpoly_to_json(result.h)}, args.out)
        return 0
    _emit({"accept": False, "witness": jsonio.witness_to_json(result.witness)}, args.out)
    return 2


def _cmd_check2(args) -> int:
    psi = _psi_map(_load_json_arg(args.psi))
    if args.group == "sl2r":
        if args.m is None or args.truncation is None:
            raise _UsageError("check2 --group sl2r needs -m and --truncation")
        report = level2_check_r(psi, args.m, args.truncation)
        _emit(jsonio.level2_report_r_to_json(report), args.out)
        return 0 if report.passed else 2
    if args.n is None:
        raise _UsageError("check2 --group sl2c needs -n")
    report_c = level2_functional_check_c(psi, args.n)
    _emit(jsonio.level2_report_c_to_json(report_c), args.out)
    return 0 if report_c.passed else 2


def _cmd_classify(args) -> int:
    lam = rat(args.lam)
    if args.group == "sl2r":
        series = composition_series_r(_sigma_r(args.sigma), lam)
        _emit(jsonio.composition_series_to_json(series), args.out)
        return 0
    verdict = reducibility_c(int(args.sigma), lam)
    payload = jsonio.reducibility_to_json(verdict)
    if args.diamond and verdict.reducible:
        payload["diamond"] = jsonio.diamond_to_json(diamond(int(args.sigma), lam))
    _emit(payload, args.out)
    return 0


def _cmd_box(args) -> int:
    picture = box_picture_r(args.m, rat(args.lam))
    if args.format == "json":
        _emit(jsonio.box_picture_to_json(picture), args.out)
    elif args.format == "dot":
        _emit(box_dot(picture), args.out, raw=True)
    else:
        _emit(box_ascii(picture), args.out, raw=True)
    return 0


def _cmd_atlas(args) -> int:
    lam_max = rat(args.lambda_max)
    if args.group == "sl2r":
        if args.format == "json":
            _emit(atlas_mod.atlas_sl2r_json(lam_max), args.out)
        else:
            _emit(atlas_mod.atlas_sl2r_dot(lam_max), args.out, raw=True)
        return 0
    if lam_max.denominator != 1:
        raise _UsageError("sl2c atlas needs an integer --lambda-max")
    if args.format == "json":
        _emit(atlas_mod.atlas_sl2c_json(args.sigma_max, int(lam_max)), args.out)
    else:
        _emit(atlas_mod.atlas_sl2c_dot(args.sigma_max, int(lam_max)), args.out, raw=True)
    return 0


def _cmd_decompose(args) -> int:
    phi = jsonio.diag_map_from_json(_load_json_arg(args.phi))
    coords = free_module_decompose(phi)
    _emit(jsonio.coords_to_json(coords), args.out)
    return 0


def _cmd_synthesize(args) -> int:
    coords = jsonio.coords_from_json(_load_json_arg(args.coords))
    _emit(jsonio.diag_map_to_json(synthesize(coords)), args.out)
    return 0


def _cmd_extend(args) -> int:
    h = jsonio.diag_map_from_json(_load_json_arg(args.h))
    _emit(jsonio.diag_map_to_json(extend_interpolate(h, args.target)), args.out)
    return 0


_VERIFY_THRESHOLDS = {
    "gamma-recurrence": 1e-11,
    "sl2r-c-quotient": 1e-9,
    "sl2c-c-quotient": 1e-9,
    "sl2r-c-integral-ratio": 1e-6,
}


def _cmd_verify_numeric(args) -> int:
    from .numeric import verification_report

    report = verification_report(seed=args.seed)
    for check in report["checks"]:
        check["threshold"] = _VERIFY_THRESHOLDS[check["formula"]]
        check["passed"] = check["max_relative_error"] < check["threshold"]
    report["passed"] = all(c["passed"] for c in report["checks"])
    _emit(report, args.out)
    return 0 if report["passed"] else 2


_COMMANDS = {
    "q": _cmd_q,
    "cquot": _cmd_cquot,
    "check3": _cmd_check3,
    "check3-product": _cmd_check3_product,
    "check2": _cmd_check2,
    "classify": _cmd_classify,
    "box": _cmd_box,
    "atlas": _cmd_atlas,
    "decompose": _cmd_decompose,
    "synthesize": _cmd_synthesize,
    "extend": _cmd_extend,
    "verify-numeric": _cmd_verify_numeric,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return 1
    except (PwError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"pw: error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
