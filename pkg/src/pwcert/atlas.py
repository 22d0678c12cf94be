"""Classification atlases over parameter grids.

For SL(2,R): verdicts over the half-integer lambda grid for both parities.
For SL(2,C): verdicts over the integer (sigma, lambda) grid, with every
reducible point's four-vertex intertwiner orbit {(s,l), (-s,-l), (l,s),
(-l,-s)} collected into a group; vertices sharing an orbit share a group id
(the color classes of the reducibility picture).  DOT output is sorted and
therefore byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import rat_str
from .sl2c import diamond_orbit, reducibility_c
from .sl2r import IrreducibleR, SigmaR, composition_series_r

_PALETTE = (
    "blue", "green", "orange", "red", "purple", "cyan",
    "gold", "magenta", "brown", "darkgreen", "navy", "salmon",
)


@dataclass(frozen=True)
class AtlasPointR:
    sigma: SigmaR
    lam: Fraction
    reducible: bool
    layers: tuple[tuple[str, ...], ...]


def atlas_sl2r(lambda_max: Fraction) -> list[AtlasPointR]:
    """Verdicts on the half-integer grid |lambda| <= lambda_max, both parities."""
    points = []
    for sigma in (SigmaR.PLUS, SigmaR.MINUS):
        lam = -lambda_max
        while lam <= lambda_max:
            series = composition_series_r(sigma, lam)
            if isinstance(series, IrreducibleR):
                points.append(AtlasPointR(sigma, lam, False, ()))
            else:
                layers = tuple(tuple(f.label for f in layer) for layer in series.layers)
                points.append(AtlasPointR(sigma, lam, True, layers))
            lam += Fraction(1, 2)
    return points


def atlas_sl2r_json(lambda_max: Fraction) -> dict:
    return {
        "group": "sl2r",
        "lambda_max": rat_str(lambda_max),
        "points": [
            {
                "sigma": p.sigma.value,
                "lambda": rat_str(p.lam),
                "reducible": p.reducible,
                "layers": [list(layer) for layer in p.layers],
            }
            for p in atlas_sl2r(lambda_max)
        ],
    }


@dataclass(frozen=True)
class AtlasPointC:
    sigma: int
    lam: int
    reducible: bool
    orbit: str | None  # shared id of the intertwiner orbit, if any


def _orbit_id(orbit: frozenset[tuple[int, int]]) -> str:
    s, l = min(orbit)
    return f"{s},{l}"


def atlas_sl2c(sigma_max: int, lambda_max: int) -> list[AtlasPointC]:
    """Verdicts and orbit grouping on the integer grid |sigma|, |lambda| <= bounds."""
    orbit_of: dict[tuple[int, int], str] = {}
    for sigma in range(-sigma_max, sigma_max + 1):
        for lam in range(-lambda_max, lambda_max + 1):
            if reducibility_c(sigma, Fraction(lam)).reducible:
                orbit = diamond_orbit(sigma, lam)
                oid = _orbit_id(orbit)
                for vertex in orbit:
                    orbit_of.setdefault(vertex, oid)
    points = []
    for sigma in range(-sigma_max, sigma_max + 1):
        for lam in range(-lambda_max, lambda_max + 1):
            reducible = reducibility_c(sigma, Fraction(lam)).reducible
            points.append(
                AtlasPointC(sigma, lam, reducible, orbit_of.get((sigma, lam)))
            )
    return points


def atlas_sl2c_json(sigma_max: int, lambda_max: int) -> dict:
    points = atlas_sl2c(sigma_max, lambda_max)
    orbits: dict[str, list[list[int]]] = {}
    for p in points:
        if p.orbit is not None:
            orbits.setdefault(p.orbit, []).append([p.sigma, p.lam])
    return {
        "group": "sl2c",
        "sigma_max": sigma_max,
        "lambda_max": lambda_max,
        "points": [
            {
                "sigma": p.sigma,
                "lambda": p.lam,
                "reducible": p.reducible,
                "orbit": p.orbit,
            }
            for p in points
        ],
        "orbits": {k: sorted(v) for k, v in sorted(orbits.items())},
    }


def atlas_sl2c_dot(sigma_max: int, lambda_max: int) -> str:
    """DOT graph of the grid; orbit members share a fill color."""
    points = atlas_sl2c(sigma_max, lambda_max)
    orbit_ids = sorted({p.orbit for p in points if p.orbit is not None})
    color = {oid: _PALETTE[i % len(_PALETTE)] for i, oid in enumerate(orbit_ids)}
    lines = [
        "graph atlas {",
        f'  label="sl2c atlas |sigma|<={sigma_max}, |lambda|<={lambda_max}";',
        "  node [shape=circle];",
    ]
    for p in sorted(points, key=lambda p: (p.sigma, p.lam)):
        name = f"v_{p.sigma}_{p.lam}".replace("-", "m")
        attrs = [f'label="H({p.sigma},{p.lam})"']
        if p.orbit is not None:
            attrs.append(f'style=filled, fillcolor={color[p.orbit]}, group="{p.orbit}"')
        elif p.reducible:
            attrs.append("style=filled, fillcolor=black, fontcolor=white")
        lines.append(f"  {name} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def atlas_sl2r_dot(lambda_max: Fraction) -> str:
    """DOT graph of the SL(2,R) grid, reducible points filled."""
    lines = [
        "graph atlas {",
        f'  label="sl2r atlas |lambda|<={rat_str(lambda_max)}";',
        "  node [shape=box];",
    ]
    for p in atlas_sl2r(lambda_max):
        tag = "p" if p.sigma is SigmaR.PLUS else "m"
        name = f"v_{tag}_{rat_str(p.lam)}".replace("-", "m").replace("/", "_")
        attrs = [f'label="H({p.sigma.value},{rat_str(p.lam)})"']
        if p.reducible:
            attrs.append("style=filled, fillcolor=lightblue")
        lines.append(f"  {name} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
