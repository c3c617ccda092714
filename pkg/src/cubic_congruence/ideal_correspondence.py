"""Root pairs <-> primitive ideals of Z[2^(1/3)] in Hermite normal form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cubic_ring import CubicInt
from .root_finder import DomainError, RootPair

__all__ = [
    "NotAnIdeal",
    "IdealHNF",
    "root_to_ideal",
    "ideal_to_root",
    "is_ideal_lattice",
    "membership",
    "CBRT2_ACTION",
]


class NotAnIdeal(DomainError):
    pass


# multiplication by 2^(1/3) on the basis (1, t, t^2)
CBRT2_ACTION = ((0, 1, 0), (0, 0, 1), (2, 0, 0))


@dataclass(frozen=True, slots=True)
class IdealHNF:
    """Basis rows (m,0,0), (t21,1,0), (t31,0,1) against (1, t, t^2)."""

    m: int
    t21: int
    t31: int

    def matrix(self) -> tuple[tuple[int, int, int], ...]:
        return ((self.m, 0, 0), (self.t21, 1, 0), (self.t31, 0, 1))


def root_to_ideal(p: RootPair) -> IdealHNF:
    # rebuilding validates duck-typed (m, nu) carriers too
    p = RootPair(p.m, p.nu)
    return IdealHNF(p.m, (-p.nu) % p.m, (-p.nu * p.nu) % p.m)


def ideal_to_root(ideal: IdealHNF) -> RootPair:
    m, t21, t31 = ideal.m, ideal.t21, ideal.t31
    if m < 1 or not (0 <= t21 < m and 0 <= t31 < m):
        raise NotAnIdeal(f"{ideal} is not in Hermite normal form")
    if (t31 + t21 * t21) % m or (t21 * t31 - 2) % m:
        raise NotAnIdeal(f"{ideal} violates the integrality congruences")
    return RootPair(m, (-t21) % m)


def _check_hnf(h: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if len(h) != 3 or any(len(row) != 3 for row in h):
        raise ValueError("expected a 3x3 matrix")
    h = tuple(tuple(int(v) for v in row) for row in h)
    if h[0][1] or h[0][2] or h[1][2]:
        raise ValueError("matrix is not lower triangular")
    d1, d2, d3 = h[0][0], h[1][1], h[2][2]
    if min(d1, d2, d3) <= 0:
        raise ValueError("diagonal must be positive")
    if not (0 <= h[1][0] < d1 and 0 <= h[2][0] < d1 and 0 <= h[2][1] < d2):
        raise ValueError("off-diagonal entries not reduced")
    return h


def is_ideal_lattice(h: Sequence[Sequence[int]]) -> bool:
    """True iff the rows of h (against 1, t, t^2) span an ideal.

    Checks that A * T * A^-1 is integral, T being multiplication by t,
    via A^-1 = adj(A) / det(A) and exact divisibility of all nine entries.
    """
    h = _check_hnf(h)
    d1, d2, d3 = h[0][0], h[1][1], h[2][2]
    a21, a31, a32 = h[1][0], h[2][0], h[2][1]
    det = d1 * d2 * d3
    # adjugate of a lower-triangular matrix
    j11, j21, j22 = d2 * d3, -a21 * d3, d1 * d3
    j31, j32, j33 = a21 * a32 - d2 * a31, -d1 * a32, d1 * d2
    # rows of A*T are (0, d1, 0), (0, a21, d2), (2*d3, a31, a32); the
    # (1,3) entry of the product is identically zero
    entries = (
        d1 * j21,
        d1 * j22,
        a21 * j21 + d2 * j31,
        a21 * j22 + d2 * j32,
        d2 * j33,
        2 * d3 * j11 + a31 * j21 + a32 * j31,
        a31 * j22 + a32 * j32,
        a32 * j33,
    )
    return all(v % det == 0 for v in entries)


def membership(x: CubicInt, ideal: IdealHNF) -> bool:
    """x in I, via O/I = Z/mZ sending 2^(1/3) to nu."""
    nu = ideal_to_root(ideal).nu
    return (x.a + x.b * nu + x.c * nu * nu) % ideal.m == 0
