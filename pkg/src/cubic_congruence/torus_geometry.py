"""Geometry on R^2/Z^2: torsion points, the lattice of integral lines
through them, 2D lattice reduction, and disc-count statistics."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .parametrization import GammaData, RationalPoint

__all__ = [
    "TorusPoint",
    "TorsionPoint",
    "Lattice2",
    "torus_distance",
    "torus_distance_sup",
    "torsion_distance_sq",
    "line_lattice",
    "in_line_lattice",
    "gauss_reduce",
    "min_line_norm",
    "min_line_norm_sq",
    "torsion_spacing_bound",
    "approx_lattices",
    "disc_count_stats",
    "max_disc_count_exact",
    "DiscStats",
    "root_points",
]

Number = float | Fraction


@dataclass(frozen=True, slots=True)
class TorusPoint:
    x: Number
    y: Number

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", self.x % 1)
        object.__setattr__(self, "y", self.y % 1)


@dataclass(frozen=True, slots=True)
class TorsionPoint:
    """(r/q, s/q) mod 1, normalised so gcd(r, s, q) = 1 and 0 <= r, s < q."""

    r: int
    s: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError("torsion must be positive")
        g = math.gcd(self.r, self.s, self.q)
        q = self.q // g
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", (self.r // g) % q)
        object.__setattr__(self, "s", (self.s // g) % q)

    @classmethod
    def from_rational(cls, p: RationalPoint) -> TorsionPoint:
        n1, n2, den = p.n1, p.n2, p.den
        if den < 0:
            n1, n2, den = -n1, -n2, -den
        return cls(n1, n2, den)

    def torus(self) -> TorusPoint:
        return TorusPoint(Fraction(self.r, self.q), Fraction(self.s, self.q))


@dataclass(frozen=True, slots=True)
class Lattice2:
    v1: tuple[int, int]
    v2: tuple[int, int]

    def __post_init__(self) -> None:
        if self.det() == 0:
            raise ValueError("degenerate lattice basis")

    def det(self) -> int:
        return self.v1[0] * self.v2[1] - self.v1[1] * self.v2[0]

    def contains(self, vec: tuple[int, int]) -> bool:
        d = self.det()
        # Cramer: coordinates must be integral
        i = vec[0] * self.v2[1] - vec[1] * self.v2[0]
        j = self.v1[0] * vec[1] - self.v1[1] * vec[0]
        return i % d == 0 and j % d == 0


def _wrap(d: Number) -> Number:
    d = d % 1
    return min(d, 1 - d)


def torus_distance(p: TorusPoint, q: TorusPoint) -> float:
    return math.hypot(_wrap(p.x - q.x), _wrap(p.y - q.y))


def torus_distance_sup(p: TorusPoint, q: TorusPoint) -> Number:
    return max(_wrap(p.x - q.x), _wrap(p.y - q.y))


def torsion_distance_sq(t: TorsionPoint, u: TorsionPoint) -> Fraction:
    """Exact squared Euclidean torus distance between torsion points."""
    den = t.q * u.q
    dx = (t.r * u.q - u.r * t.q) % den
    dy = (t.s * u.q - u.s * t.q) % den
    dx, dy = min(dx, den - dx), min(dy, den - dy)
    return Fraction(dx * dx + dy * dy, den * den)


def line_lattice(t: TorsionPoint) -> Lattice2:
    """Basis of {(A, B) : A r + B s = 0 (mod q)}, an index-q sublattice."""
    r, s, q = t.r, t.s, t.q
    g = math.gcd(r, q)
    # (q/g, 0) spans the B = 0 slice; (x, g) is the shortest step in B
    q_r = q // g
    x = 0 if q_r == 1 else (-(s) * pow(r // g, -1, q_r)) % q_r
    return Lattice2((q_r, 0), (x, g))


def in_line_lattice(t: TorsionPoint, vec: tuple[int, int]) -> bool:
    return (vec[0] * t.r + vec[1] * t.s) % t.q == 0


def _sq(v: tuple[int, int]) -> int:
    return v[0] * v[0] + v[1] * v[1]


def gauss_reduce(lattice: Lattice2) -> tuple[tuple[int, int], tuple[tuple[int, int], tuple[int, int]]]:
    """Lagrange-Gauss reduction; returns (shortest vector, reduced basis)."""
    u, v = lattice.v1, lattice.v2
    if _sq(u) > _sq(v):
        u, v = v, u
    while True:
        dot = u[0] * v[0] + u[1] * v[1]
        nu = _sq(u)
        # nearest integer to dot / nu, exact
        k = (2 * dot + nu) // (2 * nu)
        v = (v[0] - k * u[0], v[1] - k * u[1])
        if _sq(v) >= nu:
            return u, (u, v)
        u, v = v, u


def min_line_norm_sq(t: TorsionPoint) -> int:
    return _sq(gauss_reduce(line_lattice(t))[0])


def min_line_norm(t: TorsionPoint) -> float:
    return math.sqrt(min_line_norm_sq(t))


def torsion_spacing_bound(t: TorsionPoint, Q: int) -> float:
    """Lower bound on the distance from t to any other torsion point of
    torsion <= Q: shortest integral line through t over q*Q."""
    if Q < 1:
        raise ValueError("Q must be positive")
    return min_line_norm(t) / (t.q * Q)


def approx_lattices(g: GammaData) -> tuple[Lattice2, Lattice2, Lattice2]:
    """Integral-line lattices through the three approximations, in order."""
    a, b, c = g.a, g.b, g.c
    return (
        Lattice2((b, c), (a, b)),
        Lattice2((2 * c, a), (b, c)),
        Lattice2((a, b), (2 * c, a)),
    )


@dataclass(frozen=True)
class DiscStats:
    max_count: int
    histogram: dict[int, int]


def _as_array(points: Sequence[TorusPoint]) -> np.ndarray:
    return np.array([[float(p.x), float(p.y)] for p in points], dtype=float).reshape(-1, 2)


def disc_count_stats(points: Sequence[TorusPoint], radius: float) -> DiscStats:
    """Dominating disc statistic: for each point, the number of points within
    2*radius of it (itself included).

    Any disc of the given radius holding k points holds them pairwise within
    2*radius, so max_count bounds every disc count from above.  The histogram
    maps neighbourhood size to how many points have it.
    """
    if not 0 < radius <= 0.5:
        raise ValueError(f"radius {radius} outside (0, 1/2]")
    xy = _as_array(points)
    n = len(xy)
    if n == 0:
        return DiscStats(0, {})
    reach = 2.0 * radius
    cells = max(1, int(1.0 / reach))
    cell_of = np.floor(xy * cells).astype(int) % cells
    buckets: dict[tuple[int, int], list[int]] = {}
    for idx, (cx, cy) in enumerate(cell_of):
        buckets.setdefault((int(cx), int(cy)), []).append(idx)
    span = range(-1, 2) if cells >= 3 else range(cells)
    counts = np.zeros(n, dtype=int)
    for (cx, cy), members in buckets.items():
        neigh: list[int] = []
        seen = set()
        for dx in span:
            for dy in span:
                key = ((cx + dx) % cells, (cy + dy) % cells) if cells >= 3 else (dx, dy)
                if key in seen:
                    continue
                seen.add(key)
                neigh.extend(buckets.get(key, ()))
        other = xy[neigh]
        for i in members:
            d = np.abs(other - xy[i])
            d = np.minimum(d, 1.0 - d)
            counts[i] = int(np.count_nonzero(np.hypot(d[:, 0], d[:, 1]) <= reach * (1 + 1e-12)))
    hist = Counter(int(c) for c in counts)
    return DiscStats(int(counts.max()), dict(sorted(hist.items())))


def max_disc_count_exact(points: Sequence[TorusPoint], radius: float) -> int:
    """Largest number of points in one closed disc of the given radius.

    O(n^3): an optimal disc can be moved until two points sit on its
    boundary (or it is centred on a point), so those centres suffice.
    For small instances only.
    """
    if not 0 < radius <= 0.25:
        raise ValueError("exact disc enumeration needs radius <= 1/4")
    xy = _as_array(points)
    n = len(xy)
    if n == 0:
        return 0
    tol = 1e-9 * radius
    centres = [tuple(p) for p in xy]
    for i, j in combinations(range(n), 2):
        d = xy[j] - xy[i]
        d = d - np.round(d)
        dist = math.hypot(*d)
        if dist > 2 * radius + tol or dist == 0:
            continue
        mid = xy[i] + d / 2
        h = math.sqrt(max(radius * radius - dist * dist / 4, 0.0))
        perp = np.array([-d[1], d[0]]) / dist
        centres.append(tuple(mid + h * perp))
        centres.append(tuple(mid - h * perp))
    best = 0
    for cx, cy in centres:
        d = np.abs(xy - np.array([cx, cy]))
        d = d % 1.0
        d = np.minimum(d, 1.0 - d)
        best = max(best, int(np.count_nonzero(np.hypot(d[:, 0], d[:, 1]) <= radius + tol)))
    return best


def root_points(pairs: Iterable) -> list[TorusPoint]:
    """(nu/m, nu^2/m) for each root pair."""
    return [TorusPoint(Fraction(p.nu, p.m), Fraction(p.nu * p.nu % p.m, p.m)) for p in pairs]
