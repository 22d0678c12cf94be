"""JSON encodings for every value that crosses the CLI boundary.

Rationals are strings ("p/q", or "p" when the denominator is 1) so that no
reader is tempted to parse them as floats.  Polynomial coefficients are
ascending.  All emitters sort keys, so serialized output is deterministic.
"""

from __future__ import annotations

from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any

from .multipoly import MultiPoly
from .poly import Poly
from .ratfunc import RationalFunction
from .rationals import rat, rat_str
from .sl2c import (
    GeneratorCoords,
    IntertwinerDiamond,
    Level2ReportC,
    ReducibilityC,
    WeightedDiagMap,
)
from .sl2r import BoxPictureR, CompositionSeriesR, IrreducibleR, Level2ReportR


def poly_to_json(p: Poly) -> dict:
    return {"coeffs": [rat_str(c) for c in p.coeffs]}


def poly_from_json(data: dict) -> Poly:
    if not isinstance(data, dict) or "coeffs" not in data:
        raise ValueError("polynomial JSON needs a 'coeffs' list")
    return Poly([rat(c) for c in data["coeffs"]])


def mpoly_to_json(p: MultiPoly) -> dict:
    return {
        "arity": p.arity,
        "terms": [
            {"exps": list(exps), "coeff": rat_str(c)} for exps, c in p.sorted_terms()
        ],
    }


def mpoly_from_json(data: dict) -> MultiPoly:
    if not isinstance(data, dict) or "arity" not in data or "terms" not in data:
        raise ValueError("multivariate polynomial JSON needs 'arity' and 'terms'")
    terms = {tuple(t["exps"]): rat(t["coeff"]) for t in data["terms"]}
    return MultiPoly(int(data["arity"]), terms)


def ratfunc_to_json(f: RationalFunction) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfunc_from_json(data: dict) -> RationalFunction:
    return RationalFunction(poly_from_json(data["num"]), poly_from_json(data["den"]))


def diag_map_to_json(m: WeightedDiagMap) -> dict:
    return {
        "n": m.src,
        "m": m.dst,
        "components": {str(k): poly_to_json(p) for k, p in sorted(m.components.items())},
    }


def diag_map_from_json(data: dict) -> WeightedDiagMap:
    comps = {int(k): poly_from_json(v) for k, v in data["components"].items()}
    return WeightedDiagMap(int(data["n"]), int(data["m"]), comps)


def coords_to_json(c: GeneratorCoords) -> dict:
    # Coordinate polynomials are in the Casimir variable mu = lambda^2 + k^2.
    return {"m": c.m, "h": [poly_to_json(h) for h in c.h]}


def coords_from_json(data: dict) -> GeneratorCoords:
    return GeneratorCoords(int(data["m"]), tuple(poly_from_json(h) for h in data["h"]))


def ktype_vec_to_json(v: tuple[int, ...]) -> dict:
    return {"ktypes": list(v)}


def ktype_vec_from_json(data: dict | list | str) -> tuple[int, ...]:
    if isinstance(data, dict):
        return tuple(int(x) for x in data["ktypes"])
    if isinstance(data, str):
        return tuple(int(x) for x in data.split(","))
    return tuple(int(x) for x in data)


def composition_series_to_json(s: CompositionSeriesR | IrreducibleR) -> dict:
    if isinstance(s, IrreducibleR):
        return {"sigma": s.sigma.value, "lambda": rat_str(s.lam), "reducible": False}
    return {
        "sigma": s.sigma.value,
        "lambda": rat_str(s.lam),
        "reducible": True,
        "layers": [[f.label for f in layer] for layer in s.layers],
        "proper_submodules": [w.label for w in s.proper_submodules],
    }


def reducibility_to_json(r: ReducibilityC) -> dict:
    out: dict[str, Any] = {
        "sigma": r.sigma,
        "lambda": rat_str(r.lam),
        "reducible": r.reducible,
    }
    if r.reducible:
        out.update(
            fm=r.fm,
            fn=r.fn,
            socle_is_R=r.socle_is_R,
            finite_dim_ktypes=list(r.finite_dim_ktypes),
            r_ktype_min=abs(int(r.lam)),
        )
    return out


def diamond_to_json(d: IntertwinerDiamond) -> dict:
    return {
        "vertices": {
            "right": list(d.right),
            "left": list(d.left),
            "top": list(d.top),
            "bottom": list(d.bottom),
        },
        "arrows": [
            {"name": a.name, "src": list(a.src), "dst": list(a.dst)} for a in d.arrows
        ],
    }


def box_picture_to_json(b: BoxPictureR) -> dict:
    return {
        "m": b.m,
        "lambda": rat_str(b.lam),
        "full": b.full,
        "layers": [
            [{"label": box.label, "highlighted": box.highlighted} for box in layer]
            for layer in b.layers
        ],
    }


def level2_report_r_to_json(r: Level2ReportR) -> dict:
    return {
        "m": r.m,
        "truncation": r.truncation,
        "passed": r.passed,
        "vanishing": [
            {
                "lambda": rat_str(c.lam),
                "ktype": c.ktype,
                "submodule": c.submodule,
                "value": rat_str(c.value),
                "ok": c.ok,
            }
            for c in r.vanishing
        ],
        "functional": [
            {"ktype": c.ktype, "sign": c.sign, "ok": c.ok} for c in r.functional
        ],
    }


def level2_report_c_to_json(r: Level2ReportC) -> dict:
    return {
        "n": r.n,
        "passed": r.passed,
        "partner": r.partner,
        "checks": [
            {"weight": c.weight, "ok": c.ok, "reason": c.reason} for c in r.checks
        ],
    }


def witness_to_json(witness: Any) -> dict:
    """Generic structured-witness encoder for Reject values."""
    if is_dataclass(witness):
        raw = asdict(witness)
        out = {"kind": type(witness).__name__}
        for key, value in raw.items():
            if isinstance(value, Fraction):
                out[key] = rat_str(value)
            else:
                out[key] = value
        return out
    raise TypeError(f"cannot encode witness {witness!r}")
