"""Exact arithmetic in Z[2^(1/3)].

Elements are integer triples (a, b, c) standing for a + b*t + c*t^2 with
t = 2^(1/3).  Python integers are unbounded, so nothing here can overflow.

Real embeddings are evaluated from fixed-point integer approximations of
t and t^2 whose precision is raised until the answer is certain; this is
what lets ``compare_real_cube`` (and through it the fundamental-domain
test) decide inequalities exactly instead of trusting a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

__all__ = [
    "CubicInt",
    "CofactorTriple",
    "ONE",
    "CBRT2",
    "EPSILON",
    "EPSILON_INV",
    "EPSILON_REAL",
    "mul",
    "power",
    "norm",
    "cofactor",
    "trace",
    "trace_rational",
    "inverse",
    "mul_rational",
    "embed_real",
    "embed_complex_abs",
    "log_embed_real",
    "compare_real_cube",
    "icbrt",
]


@dataclass(frozen=True, slots=True)
class CubicInt:
    a: int
    b: int
    c: int

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b
        yield self.c

    def __mul__(self, other: CubicInt) -> CubicInt:
        return mul(self, other)

    def __neg__(self) -> CubicInt:
        return CubicInt(-self.a, -self.b, -self.c)

    def __add__(self, other: CubicInt) -> CubicInt:
        return CubicInt(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: CubicInt) -> CubicInt:
        return CubicInt(self.a - other.a, self.b - other.b, self.c - other.c)

    def scale(self, k: int) -> CubicInt:
        return CubicInt(k * self.a, k * self.b, k * self.c)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0


@dataclass(frozen=True, slots=True)
class CofactorTriple:
    """Coefficients of N(x)/x, i.e. (a^2 - 2bc, 2c^2 - ab, b^2 - ac)."""

    g1: int
    g2: int
    g3: int

    def __iter__(self) -> Iterator[int]:
        yield self.g1
        yield self.g2
        yield self.g3

    def as_cubic(self) -> CubicInt:
        return CubicInt(self.g1, self.g2, self.g3)


ONE = CubicInt(1, 0, 0)
CBRT2 = CubicInt(0, 1, 0)
EPSILON = CubicInt(1, 1, 1)
EPSILON_INV = CubicInt(-1, 1, 0)


def mul(x: CubicInt, y: CubicInt) -> CubicInt:
    a, b, c = x.a, x.b, x.c
    d, e, f = y.a, y.b, y.c
    # t^3 = 2, t^4 = 2t
    return CubicInt(
        a * d + 2 * (b * f + c * e),
        a * e + b * d + 2 * c * f,
        a * f + b * e + c * d,
    )


def power(x: CubicInt, k: int) -> CubicInt:
    """x**k for k >= 0; negative k is only allowed for the units +-eps^j."""
    if k < 0:
        if norm(x) not in (1, -1):
            raise ValueError("negative powers need a unit")
        inv = cofactor(x).as_cubic()
        if norm(x) == -1:
            inv = -inv
        x, k = inv, -k
    result = ONE
    base = x
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def norm(x: CubicInt) -> int:
    a, b, c = x.a, x.b, x.c
    return a**3 + 2 * b**3 + 4 * c**3 - 6 * a * b * c


def cofactor(x: CubicInt) -> CofactorTriple:
    a, b, c = x.a, x.b, x.c
    return CofactorTriple(a * a - 2 * b * c, 2 * c * c - a * b, b * b - a * c)


def trace(x: CubicInt) -> int:
    # Tr(t) = Tr(t^2) = 0
    return 3 * x.a


def trace_rational(coeffs: tuple[Fraction, Fraction, Fraction]) -> Fraction:
    """Trace of a rational combination r0 + r1*t + r2*t^2."""
    return 3 * Fraction(coeffs[0])


def inverse(x: CubicInt) -> tuple[Fraction, Fraction, Fraction]:
    """x^-1 as exact rational coefficients, cofactor(x) / N(x)."""
    n = norm(x)
    if n == 0:
        raise ZeroDivisionError("zero element is not invertible")
    return tuple(Fraction(g, n) for g in cofactor(x))  # type: ignore[return-value]


def mul_rational(
    x: tuple[Fraction, Fraction, Fraction], y: CubicInt
) -> tuple[Fraction, Fraction, Fraction]:
    a, b, c = x
    d, e, f = y
    return (a * d + 2 * (b * f + c * e), a * e + b * d + 2 * c * f, a * f + b * e + c * d)


def icbrt(n: int) -> int:
    """floor(n ** (1/3)) for n >= 0, exact."""
    if n < 0:
        raise ValueError("icbrt needs n >= 0")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x**3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


@lru_cache(maxsize=64)
def _fixed_point_basis(prec: int) -> tuple[int, int]:
    """floor(2^(1/3) * 2^prec) and floor(2^(2/3) * 2^prec)."""
    return icbrt(2 << (3 * prec)), icbrt(4 << (3 * prec))


def _fixed_point(x: CubicInt, prec: int) -> tuple[int, int]:
    """Return (s, err) with |x^(1) * 2^prec - s| <= err."""
    t1, t2 = _fixed_point_basis(prec)
    s = (x.a << prec) + x.b * t1 + x.c * t2
    return s, abs(x.b) + abs(x.c) + 1


def _certain_fixed_point(x: CubicInt, guard_bits: int) -> tuple[int, int]:
    """Fixed-point value whose error is below 2^-guard_bits relatively."""
    if x.is_zero():
        return 0, 0
    prec = 64 + max(abs(x.a).bit_length(), abs(x.b).bit_length(), abs(x.c).bit_length())
    while True:
        s, err = _fixed_point(x, prec)
        if abs(s) > (err << guard_bits):
            return s, prec
        prec *= 2


def embed_real(x: CubicInt) -> float:
    """The real embedding a + b*2^(1/3) + c*2^(2/3), correctly rounded to ~1 ulp."""
    s, prec = _certain_fixed_point(x, 60)
    if s == 0:
        return 0.0
    return s / (1 << prec)


def log_embed_real(x: CubicInt) -> float:
    """log |x^(1)|, usable when the embedding itself would overflow a float."""
    s, prec = _certain_fixed_point(x, 60)
    if s == 0:
        raise ValueError("log of zero element")
    return math.log(abs(s)) - prec * math.log(2.0)


def embed_complex_abs(x: CubicInt) -> float:
    """|x^(2)| = |x^(3)| = sqrt(|N(x)| / |x^(1)|)."""
    r = embed_real(x)
    if r == 0.0:
        raise ValueError("zero element has no complex-embedding modulus")
    return math.sqrt(abs(norm(x)) / abs(r))


def compare_real_cube(x: CubicInt, scale: int, n: int) -> int:
    """Sign of scale * (x^(1))^3 - n, decided exactly.

    Equality is impossible unless x^(1) is a rational multiple of a power
    of 2^(1/3); callers that can hit it get 0 back after the precision
    check settles the question algebraically.
    """
    if x.is_zero():
        return (0 > n) - (0 < n)
    prec = 64 + max(abs(x.a).bit_length(), abs(x.b).bit_length(), abs(x.c).bit_length())
    prec += n.bit_length() // 3
    while True:
        s, err = _fixed_point(x, prec)
        target = n << (3 * prec)
        lo, hi = s - err, s + err
        if scale * lo**3 > target:
            return 1
        if scale * hi**3 < target:
            return -1
        # x^(1) may equal (n/scale)^(1/3) exactly only if x^3 is rational
        x3 = power(x, 3)
        if x3.b == 0 and x3.c == 0:
            lhs = scale * x3.a
            return (lhs > n) - (lhs < n)
        prec *= 2


EPSILON_REAL = embed_real(EPSILON)
