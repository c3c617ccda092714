"""Generators of primitive ideals, unit reduction, and the rational
approximations to (nu/m, nu^2/m) they produce.

A root pair (m, nu) corresponds to a principal primitive ideal (alpha),
alpha = a + b*t + c*t^2 with t = 2^(1/3).  Picking alpha in a fixed
fundamental domain for the units makes the choice canonical; completing
the columns (b, a, 2c), (c, b, a) to a unimodular matrix with a first
column (u, v, w) recovers nu and yields three torsion points that lie
within O(1/m) of (nu/m, nu^2/m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cubic_ring import (
    EPSILON,
    EPSILON_INV,
    EPSILON_REAL,
    CubicInt,
    cofactor,
    compare_real_cube,
    log_embed_real,
    mul,
    norm,
    power,
)
from .ideal_correspondence import membership, root_to_ideal
from .root_finder import DomainError, RootPair

__all__ = [
    "NotPrimitive",
    "NotUnimodular",
    "InternalError",
    "GammaData",
    "RationalPoint",
    "COEFF_BOUND",
    "DOMAIN_COEFF_BOUNDS",
    "is_primitive_generator",
    "in_domain",
    "reduce_to_domain",
    "solve_uvw",
    "root_from_generator",
    "generator_from_root",
    "domain_generators_in_box",
    "gamma_data",
    "gamma_matrix",
    "inverse_matrix",
    "hnf_with_representatives",
    "check_gamma_identity",
    "enumerate_generators",
    "enumerate_gamma_data",
    "approximations",
    "shift_uvw",
    "inverse_columns",
    "columns_from_points",
    "recover_root",
    "recover_from_points",
]


class NotPrimitive(DomainError):
    pass


class NotUnimodular(DomainError):
    pass


class InternalError(AssertionError):
    """A search that is proven to succeed did not."""


# |a|,|b|,|c| <= COEFF_BOUND * m^(1/3) for every domain generator (generous)
COEFF_BOUND = 20

# Tight bounds for the domain: alpha^(1) < m^(1/3)/2 and
# |alpha^(2)|^2 = m / alpha^(1) <= 2*eps*m^(2/3), so with
# a = Tr(alpha)/3, b = Tr(alpha t^2)/6, c = Tr(alpha t)/6:
_SPREAD = 0.5 + 2.0 * math.sqrt(2.0 * EPSILON_REAL)
DOMAIN_COEFF_BOUNDS = (
    _SPREAD / 3.0,
    _SPREAD * 2.0 ** (2.0 / 3.0) / 6.0,
    _SPREAD * 2.0 ** (1.0 / 3.0) / 6.0,
)


@dataclass(frozen=True, slots=True)
class GammaData:
    """The unimodular matrix ((u, b, c), (v, a, b), (w, 2c, a)) plus (m, nu)."""

    a: int
    b: int
    c: int
    u: int
    v: int
    w: int
    m: int
    nu: int

    @property
    def generator(self) -> CubicInt:
        return CubicInt(self.a, self.b, self.c)

    @property
    def root(self) -> RootPair:
        return RootPair(self.m, self.nu)


@dataclass(frozen=True, slots=True)
class RationalPoint:
    """(n1/den, n2/den), kept unreduced."""

    n1: int
    n2: int
    den: int

    def __post_init__(self) -> None:
        if self.den == 0:
            raise ZeroDivisionError("rational point with zero denominator")

    def torus(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.n1, self.den) % 1, Fraction(self.n2, self.den) % 1

    def same_torus_point(self, other: RationalPoint) -> bool:
        return self.torus() == other.torus()


def is_primitive_generator(x: CubicInt) -> bool:
    g = cofactor(x)
    return math.gcd(g.g1, g.g2, g.g3) == 1


def _nonzero_norm(x: CubicInt) -> int:
    n = norm(x)
    if n == 0:
        raise ValueError("zero element has no fundamental-domain position")
    return n


def in_domain(x: CubicInt) -> bool:
    """N(x) > 0 and m^(1/3)/(2 eps) <= x^(1) < m^(1/3)/2, m = N(x)."""
    m = _nonzero_norm(x)
    if m < 0:
        return False
    # x^(1) < m^(1/3)/2  <=>  8 (x^(1))^3 < m, and the lower end is the
    # same test applied to eps*x
    return compare_real_cube(x, 8, m) < 0 and compare_real_cube(mul(EPSILON, x), 8, m) >= 0


def reduce_to_domain(x: CubicInt) -> CubicInt:
    m = _nonzero_norm(x)
    if m < 0:
        x, m = -x, -m
    # aim for the geometric centre of [m^(1/3)/(2 eps), m^(1/3)/2)
    centre = math.log(m) / 3.0 - math.log(2.0) - 0.5 * math.log(EPSILON_REAL)
    k = round((log_embed_real(x) - centre) / math.log(EPSILON_REAL))
    if k:
        x = mul(x, power(EPSILON_INV, k) if k > 0 else power(EPSILON, -k))
    while True:
        if compare_real_cube(x, 8, m) >= 0:
            x = mul(x, EPSILON_INV)
        elif compare_real_cube(mul(EPSILON, x), 8, m) < 0:
            x = mul(x, EPSILON)
        else:
            return x


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def solve_uvw(x: CubicInt) -> tuple[int, int, int]:
    """Deterministic (u, v, w) with u*g1 + v*g2 + w*g3 = 1.

    Extended Euclid on (g1, g2), then on (gcd(g1, g2), g3).
    """
    g1, g2, g3 = cofactor(x)
    d12, x1, y1 = _egcd(g1, g2)
    d, s, t = _egcd(d12, g3)
    if d != 1:
        raise NotPrimitive(f"{x} generates a non-primitive ideal (gcd {d})")
    return s * x1, s * y1, t


def _minus_nu_rep(a: int, b: int, c: int, u: int, v: int, w: int) -> int:
    return a * (b * w - a * v) + 2 * c * (a * u - c * w) + 2 * b * (c * v - b * u)


def _minus_nu2_rep(a: int, b: int, c: int, u: int, v: int, w: int) -> int:
    # third row of gamma^-1 against the first column (a, 2c, 2b)
    return a * (2 * c * v - a * w) + 2 * c * (b * w - 2 * c * u) + 2 * b * (a * u - b * v)


def gamma_data(x: CubicInt, uvw: tuple[int, int, int] | None = None) -> GammaData:
    m = norm(x)
    if m <= 0:
        raise DomainError(f"generator {x} has non-positive norm {m}")
    if uvw is None:
        uvw = solve_uvw(x)
    else:
        g = cofactor(x)
        if uvw[0] * g.g1 + uvw[1] * g.g2 + uvw[2] * g.g3 != 1:
            raise NotPrimitive(f"{uvw} does not satisfy the Bezout relation for {x}")
    u, v, w = uvw
    a, b, c = x
    nu = (-_minus_nu_rep(a, b, c, u, v, w)) % m
    return GammaData(a, b, c, u, v, w, m, nu)


def root_from_generator(x: CubicInt) -> RootPair:
    if not is_primitive_generator(x):
        raise NotPrimitive(f"{x} generates a non-primitive ideal")
    return gamma_data(x).root


def gamma_matrix(g: GammaData) -> tuple[tuple[int, int, int], ...]:
    return ((g.u, g.b, g.c), (g.v, g.a, g.b), (g.w, 2 * g.c, g.a))


def inverse_matrix(g: GammaData) -> tuple[tuple[int, int, int], ...]:
    a, b, c, u, v, w = g.a, g.b, g.c, g.u, g.v, g.w
    return (
        (a * a - 2 * b * c, 2 * c * c - a * b, b * b - a * c),
        (b * w - a * v, a * u - c * w, c * v - b * u),
        (2 * c * v - a * w, b * w - 2 * c * u, a * u - b * v),
    )


def hnf_with_representatives(g: GammaData) -> tuple[tuple[int, int, int], ...]:
    """((m,0,0), (-nu,1,0), (-nu^2,0,1)) with the integer representatives
    of -nu, -nu^2 that this particular (u, v, w) produces."""
    args = (g.a, g.b, g.c, g.u, g.v, g.w)
    return ((g.m, 0, 0), (_minus_nu_rep(*args), 1, 0), (_minus_nu2_rep(*args), 0, 1))


def _mat3(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )


def _det3(x) -> int:
    return (
        x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1])
        - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0])
        + x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0])
    )


def check_gamma_identity(g: GammaData) -> bool:
    """gamma times the HNF basis equals the multiplication-by-alpha matrix."""
    a, b, c = g.a, g.b, g.c
    mult = ((a, b, c), (2 * c, a, b), (2 * b, 2 * c, a))
    lhs = _mat3(gamma_matrix(g), hnf_with_representatives(g))
    reps = hnf_with_representatives(g)
    return (
        lhs == mult
        and _det3(gamma_matrix(g)) == 1
        and (reps[1][0] + g.nu) % g.m == 0
        and (reps[2][0] + g.nu * g.nu) % g.m == 0
    )


def _ideal_elements_with_norm(p: RootPair, bound: int, stop_at_first: bool) -> list[CubicInt]:
    """Elements x of the ideal of p with |x_i| <= bound and |N(x)| = m."""
    m, nu = p.m, p.nu
    nu2 = nu * nu % m
    # int64 holds 6 * bound^3 and bound * m comfortably below these sizes
    dtype = np.int64 if bound <= 10**5 and bound * m < 2**62 else object
    bs = np.arange(-bound, bound + 1).astype(dtype)
    shifts = range(-(bound // m) - 1, bound // m + 2)
    found = []
    for c in sorted(range(-bound, bound + 1), key=abs):
        # members satisfy a = -b*nu - c*nu^2 (mod m)
        base = (-(bs * nu) - c * nu2) % m
        for j in shifts:
            a = base + j * m
            ok = np.abs(a) <= bound
            if not ok.any():
                continue
            aa, bb = a[ok], bs[ok]
            n = aa**3 + 2 * bb**3 + 4 * c**3 - 6 * aa * bb * c
            for i in np.nonzero(np.abs(n) == m)[0]:
                found.append(CubicInt(int(aa[i]), int(bb[i]), c))
                if stop_at_first:
                    return found
    return found


def generator_from_root(p: RootPair) -> CubicInt:
    """The unique generator in the fundamental domain of the ideal of p."""
    p = RootPair(p.m, p.nu)
    m = p.m
    cbrt_m = m ** (1.0 / 3.0)
    tight = math.ceil(max(DOMAIN_COEFF_BOUNDS) * cbrt_m) + 1
    full = math.ceil(COEFF_BOUND * cbrt_m)
    for bound in (tight, full, 2 * full):
        hits = _ideal_elements_with_norm(p, bound, stop_at_first=True)
        if hits:
            x = reduce_to_domain(hits[0])
            if not (
                is_primitive_generator(x)
                and membership(x, root_to_ideal(p))
                and root_from_generator(x) == p
            ):
                raise InternalError(f"generator {x} does not reproduce {p}")
            return x
    raise InternalError(f"no generator of norm {m} found for {p}")


def domain_generators_in_box(p: RootPair, coeff_bound: float = COEFF_BOUND) -> list[CubicInt]:
    """Every domain generator of the ideal of p with |coeffs| <= coeff_bound * m^(1/3)."""
    bound = math.ceil(coeff_bound * p.m ** (1.0 / 3.0))
    hits = _ideal_elements_with_norm(p, bound, stop_at_first=False)
    return sorted((x for x in hits if norm(x) > 0 and in_domain(x)), key=tuple)


def enumerate_generators(M: int) -> list[tuple[CubicInt, RootPair]]:
    """One domain generator per root pair with M < m <= 2M, ordered by (m, nu).

    Scans the box that provably contains the domain for norms up to 2M,
    so the result is an independent check on the root finder.
    """
    if M < 1:
        raise ValueError("M must be positive")
    top = (2 * M) ** (1.0 / 3.0)
    ba, bb, bc = (math.floor(k * top * (1 + 1e-9)) + 1 for k in DOMAIN_COEFF_BOUNDS)
    t1, t2 = 2.0 ** (1.0 / 3.0), 2.0 ** (2.0 / 3.0)
    A = np.arange(-ba, ba + 1, dtype=np.int64)[:, None]
    B = np.arange(-bb, bb + 1, dtype=np.int64)[None, :]
    out = []
    for c in range(-bc, bc + 1):
        n = A**3 + 2 * B**3 + 4 * c**3 - 6 * A * B * c
        real = A + B * t1 + c * t2
        mask = (n > M) & (n <= 2 * M) & (real > 0)
        cube = 8.0 * real**3
        # float prefilter with slack, exact test below
        mask &= cube < n * (1 + 1e-9)
        mask &= cube * EPSILON_REAL**3 >= n * (1 - 1e-9)
        for i, j in zip(*np.nonzero(mask)):
            x = CubicInt(int(A[i, 0]), int(B[0, j]), c)
            if in_domain(x) and is_primitive_generator(x):
                out.append((x, root_from_generator(x)))
    out.sort(key=lambda item: (item[1].m, item[1].nu))
    return out


def enumerate_gamma_data(M: int) -> list[GammaData]:
    return [gamma_data(x) for x, _ in enumerate_generators(M)]


def approximations(g: GammaData) -> tuple[RationalPoint, RationalPoint, RationalPoint]:
    """Pairwise intersections of the lines bX + cY = u, aX + bY = v and
    2cX + aY = w, near which (nu/m, nu^2/m) lies.

    Point 1 meets the u- and v-lines (denominator b^2 - ac), point 2 the
    u- and w-lines (2c^2 - ab), point 3 the v- and w-lines (a^2 - 2bc).
    Numerators are exactly minus the entries of the matching column of
    gamma^-1.
    """
    a, b, c, u, v, w = g.a, g.b, g.c, g.u, g.v, g.w
    g1, g2, g3 = cofactor(g.generator)
    if 0 in (g1, g2, g3):
        raise ZeroDivisionError(f"degenerate cofactor for {g.generator}")
    return (
        RationalPoint(b * u - c * v, b * v - a * u, g3),
        RationalPoint(c * w - a * u, 2 * c * u - b * w, g2),
        RationalPoint(a * v - b * w, a * w - 2 * c * v, g1),
    )


def shift_uvw(g: GammaData, k: int, l: int) -> GammaData:
    """Another valid (u, v, w): gamma times a lower unipotent matrix."""
    return GammaData(
        g.a, g.b, g.c,
        g.u + k * g.b + l * g.c,
        g.v + k * g.a + l * g.b,
        g.w + 2 * k * g.c + l * g.a,
        g.m, g.nu,
    )


def inverse_columns(g: GammaData) -> tuple[tuple[int, int, int], ...]:
    """Columns of gamma^-1."""
    inv = inverse_matrix(g)
    return tuple(tuple(inv[i][j] for i in range(3)) for j in range(3))


def columns_from_points(
    points: Sequence[RationalPoint],
) -> tuple[tuple[int, int, int], ...]:
    """Reassemble gamma^-1 from the approximations (points 3, 2, 1 give
    columns 1, 2, 3 as (den, -n1, -n2))."""
    p1, p2, p3 = points
    return tuple((p.den, -p.n1, -p.n2) for p in (p3, p2, p1))


def recover_root(cols: Sequence[Sequence[int]]) -> GammaData:
    """Invert the matrix with the given columns and read off gamma."""
    if len(cols) != 3 or any(len(col) != 3 for col in cols):
        raise ValueError("expected three integer triples")
    x = tuple(tuple(int(cols[j][i]) for j in range(3)) for i in range(3))
    if _det3(x) != 1:
        raise NotUnimodular(f"determinant {_det3(x)} != 1")
    # adjugate = inverse for determinant 1
    adj = tuple(
        tuple(
            (x[(j + 1) % 3][(i + 1) % 3] * x[(j + 2) % 3][(i + 2) % 3]
             - x[(j + 1) % 3][(i + 2) % 3] * x[(j + 2) % 3][(i + 1) % 3])
            for j in range(3)
        )
        for i in range(3)
    )
    (u, b, c), (v, a, b2), (w, c2, a2) = adj
    if b2 != b or a2 != a or c2 != 2 * c:
        raise DomainError("inverse does not have the (u,b,c),(v,a,b),(w,2c,a) shape")
    return gamma_data(CubicInt(a, b, c), (u, v, w))


def recover_from_points(points: Sequence[RationalPoint]) -> GammaData:
    """Rebuild gamma from the three approximations alone.

    The denominators are the cofactor triple of alpha, which determines
    alpha (apply the cofactor map again and divide by m); the numerators
    of the first point then fix (u, v).
    """
    p1, p2, p3 = points
    g = CubicInt(p3.den, p2.den, p1.den)
    m_sq = norm(g)
    m = math.isqrt(m_sq) if m_sq > 0 else 0
    if m == 0 or m * m != m_sq:
        raise DomainError("denominators are not a cofactor triple")
    h = cofactor(g)
    if h.g1 % m or h.g2 % m or h.g3 % m:
        raise DomainError("denominators are not a cofactor triple")
    a, b, c = h.g1 // m, h.g2 // m, h.g3 // m
    # [[b, -c], [-a, b]] (u, v) = (n1, n2), determinant b^2 - ac = p1.den
    det = b * b - a * c
    u_num = b * p1.n1 + c * p1.n2
    v_num = a * p1.n1 + b * p1.n2
    if u_num % det or v_num % det:
        raise DomainError("first point is not an approximation of this generator")
    u, v = u_num // det, v_num // det
    g1, g2, g3 = cofactor(CubicInt(a, b, c))
    w_num = 1 - u * g1 - v * g2
    if w_num % g3:
        raise DomainError("numerators incompatible with a unimodular completion")
    return gamma_data(CubicInt(a, b, c), (u, v, w_num // g3))
