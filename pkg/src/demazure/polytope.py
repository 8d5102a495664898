"""Three-variable polynomials as weighted lattice clouds in the degree plane.

>>> from demazure.poly import Polynomial, pi
>>> c = cloud_of(pi(1, Polynomial.monomial((3, 1, 0))))
>>> sorted(c.points.items())
[((1, 3, 0), 1), ((2, 2, 0), 1), ((3, 1, 0), 1)]
>>> sorted(region_of((1, 3, 0)))
['R3']
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .poly import Polynomial

Point = tuple[int, int, int]

# each region is a chain a_i >= a_j >= a_k given by the 0-based index order (i, j, k)
REGIONS: dict[str, tuple[int, int, int]] = {
    "R1": (0, 1, 2),
    "R2": (0, 2, 1),
    "R3": (1, 0, 2),
    "R4": (2, 0, 1),
    "R5": (1, 2, 0),
    "R6": (2, 1, 0),
}

CSV_HEADER = ["a1", "a2", "a3", "u", "v", "multiplicity", "regions"]


class NegativeCoefficient(ValueError):
    """Signed polynomials have no lattice cloud."""


@dataclass(frozen=True)
class LatticeCloud:
    points: Mapping[Point, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(p): int(m) for p, m in self.points.items() if m}
        if any(m < 0 for m in clean.values()):
            raise NegativeCoefficient("multiplicities must be positive")
        object.__setattr__(self, "points", clean)

    def __len__(self) -> int:
        return len(self.points)

    def __add__(self, other: LatticeCloud) -> LatticeCloud:
        merged = dict(self.points)
        for p, m in other.points.items():
            merged[p] = merged.get(p, 0) + m
        return LatticeCloud(merged)

    def max_multiplicity(self) -> int:
        return max(self.points.values(), default=0)

    def ordered(self) -> list[tuple[Point, int]]:
        return sorted(self.points.items(), key=lambda pm: (-sum(pm[0]), tuple(-a for a in pm[0])))

    def touches(self, regions: Iterable[str]) -> bool:
        wanted = set(regions)
        return any(region_of(p) & wanted for p in self.points)


def cloud_of(f: Polynomial) -> LatticeCloud:
    points: dict[Point, int] = {}
    for exp, c in f.items():
        if any(exp[3:]):
            raise ValueError("lattice clouds are drawn for three variables")
        if c < 0:
            raise NegativeCoefficient(f"coefficient {c} at {exp}")
        points[tuple((exp + (0, 0, 0))[:3])] = c
    return LatticeCloud(points)


def region_of(point: Point) -> set[str]:
    return {tag for tag, (i, j, k) in REGIONS.items() if point[i] >= point[j] >= point[k]}


def project(point: Point) -> tuple[int, int]:
    a1, a2, a3 = point
    return a1 - a2, a1 + a2 - 2 * a3


def to_csv(cloud: LatticeCloud) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for p, m in cloud.ordered():
        u, v = project(p)
        writer.writerow([*p, u, v, m, " ".join(sorted(region_of(p)))])
    return buf.getvalue()


def to_svg(cloud: LatticeCloud, size: int = 480) -> str:
    """A fixed-canvas SVG 1.1 picture; identical clouds give identical bytes."""
    half = size / 2
    pts = [(project(p), p, m) for p, m in cloud.ordered()]
    # the drawing uses u * sqrt(3) so the sector lines meet at 60 degrees
    reach = max((max(abs(u) * math.sqrt(3), abs(v)) for (u, v), _, _ in pts), default=1.0) or 1.0
    scale = (half - 40) / reach

    def xy(u: float, v: float) -> tuple[str, str]:
        return f"{half + u * math.sqrt(3) * scale:.2f}", f"{half - v * scale:.2f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    # walls a1=a2, a1=a3, a2=a3 in (u, v) coordinates, drawn as full lines through the origin
    for du, dv in ((0, 1), (1, -1), (1, 1)):
        x1, y1 = xy(du * 2 * reach, dv * 2 * reach)
        x2, y2 = xy(-du * 2 * reach, -dv * 2 * reach)
        lines.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#999" stroke-width="1"/>')
    for (u, v), p, m in pts:
        cx, cy = xy(u, v)
        r = 3 + 2 * m
        lines.append(f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="#1f77b4" fill-opacity="0.7">'
                     f'<title>{p[0]},{p[1]},{p[2]} x{m}</title></circle>')
        if m > 1:
            lines.append(f'<text x="{cx}" y="{cy}" font-size="10" text-anchor="middle" '
                         f'dominant-baseline="central" fill="white">{m}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit(cloud: LatticeCloud, fmt: str, path: str) -> None:
    if fmt == "csv":
        text = to_csv(cloud)
    elif fmt == "svg":
        text = to_svg(cloud)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w", newline="") as fh:
        fh.write(text)


def format_for(path: str) -> str:
    return "svg" if path.lower().endswith(".svg") else "csv"
