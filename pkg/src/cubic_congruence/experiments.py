"""Measurement drivers shared by the CLI, scripts/ and the acceptance suite."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .cubic_ring import cofactor
from .parametrization import GammaData, RationalPoint, approximations, enumerate_gamma_data
from .root_finder import RootPair
from .torus_geometry import TorsionPoint, TorusPoint, disc_count_stats, min_line_norm, root_points

__all__ = [
    "ApproxDiagnostics",
    "approx_diagnostics",
    "DyadApproxStats",
    "dyad_approx_stats",
    "DyadSpacingStats",
    "dyad_spacing_stats",
    "approximation_collisions",
]


def _wrap(d: Fraction) -> Fraction:
    d = d % 1
    return min(d, 1 - d)


@dataclass(frozen=True)
class ApproxDiagnostics:
    point: RationalPoint
    torus: tuple[Fraction, Fraction]
    m_sup_dist: Fraction
    m_dist: float


def approx_diagnostics(g: GammaData) -> list[ApproxDiagnostics]:
    """Each approximation with m times its distance to (nu/m, nu^2/m)."""
    target = (Fraction(g.nu, g.m), Fraction(g.nu * g.nu, g.m))
    out = []
    for p in approximations(g):
        x, y = p.torus()
        dx, dy = _wrap(x - target[0]), _wrap(y - target[1])
        out.append(ApproxDiagnostics(p, (x, y), g.m * max(dx, dy), g.m * math.hypot(dx, dy)))
    return out


@dataclass(frozen=True)
class DyadApproxStats:
    M: int
    pair_count: int
    max_m_sup_dist: float
    min_den_ratio: float
    max_den_ratio: float
    max_coeff_ratio: float


def dyad_approx_stats(M: int, data: list[GammaData] | None = None) -> DyadApproxStats:
    """Approximation quality and size of denominators/coefficients over a dyad."""
    data = enumerate_gamma_data(M) if data is None else data
    worst = Fraction(0)
    lo, hi, coeff = math.inf, 0.0, 0.0
    for g in data:
        worst = max(worst, max(d.m_sup_dist for d in approx_diagnostics(g)))
        scale = g.m ** (2.0 / 3.0)
        for den in cofactor(g.generator):
            lo, hi = min(lo, den / scale), max(hi, den / scale)
        coeff = max(coeff, max(abs(g.a), abs(g.b), abs(g.c)) / g.m ** (1.0 / 3.0))
    return DyadApproxStats(M, len(data), float(worst), lo, hi, coeff)


@dataclass(frozen=True)
class DyadSpacingStats:
    M: int
    radius: float
    point_count: int
    max_disc_count: int
    histogram: dict[int, int]
    min_line_norm_scaled: float


def dyad_spacing_stats(
    M: int, radius_scale: float = 1.0, data: list[GammaData] | None = None
) -> DyadSpacingStats:
    """Disc counts of S at radius radius_scale/M, and the smallest integral
    line through any approximation, scaled by m^(1/3)."""
    data = enumerate_gamma_data(M) if data is None else data
    radius = radius_scale / M
    points = root_points([g.root for g in data])
    stats = disc_count_stats(points, radius)
    c0 = math.inf
    for g in data:
        for p in approximations(g):
            c0 = min(c0, min_line_norm(TorsionPoint.from_rational(p)) / g.m ** (1.0 / 3.0))
    return DyadSpacingStats(M, radius, len(points), stats.max_count, stats.histogram, c0)


def approximation_collisions(M: int) -> dict[str, int]:
    """How often one approximation point serves more than one root pair.

    Reported only: whether single points determine the root is open.
    """
    owners: dict[tuple[Fraction, Fraction], set[RootPair]] = {}
    for g in enumerate_gamma_data(M):
        for p in approximations(g):
            owners.setdefault(p.torus(), set()).add(g.root)
    shared = Counter(len(v) for v in owners.values())
    return {
        "distinct_points": len(owners),
        "shared_points": sum(n for k, n in shared.items() if k > 1),
        "max_sharing": max(shared) if shared else 0,
    }


def torus_points_of(pairs: list[RootPair]) -> list[TorusPoint]:
    return root_points(pairs)
