"""Roots of X^3 = 2 (mod m).

``roots_bruteforce`` scans every residue and serves as the oracle.
``roots_fast`` factors m by trial division, solves modulo each prime,
Hensel-lifts to prime powers and glues the pieces by CRT.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from sympy.ntheory.residue_ntheory import nthroot_mod

__all__ = [
    "DomainError",
    "NotARoot",
    "RootPair",
    "roots_bruteforce",
    "roots_fast",
    "factorize",
    "enumerate_root_pairs",
]


class DomainError(ValueError):
    """An input is well-formed but outside the mathematical domain."""


class NotARoot(DomainError):
    pass


@dataclass(frozen=True, slots=True, order=True)
class RootPair:
    m: int
    nu: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise NotARoot(f"modulus must be positive, got {self.m}")
        if not 0 <= self.nu < self.m:
            raise NotARoot(f"residue {self.nu} not reduced mod {self.m}")
        if (self.nu**3 - 2) % self.m:
            raise NotARoot(f"{self.nu}^3 != 2 mod {self.m}")


def _check_modulus(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"modulus must be a positive integer, got {m!r}")


def roots_bruteforce(m: int) -> list[int]:
    _check_modulus(m)
    return [nu for nu in range(m) if (nu * nu * nu - 2) % m == 0]


def factorize(m: int) -> list[tuple[int, int]]:
    """Trial division; returns [(p, e), ...] with p ascending."""
    _check_modulus(m)
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


@lru_cache(maxsize=None)
def _roots_mod_prime(p: int) -> tuple[int, ...]:
    return tuple(sorted(nthroot_mod(2, 3, p, all_roots=True) or ()))


@lru_cache(maxsize=None)
def _roots_mod_prime_power(p: int, e: int) -> tuple[int, ...]:
    q = p**e
    if p in (2, 3):
        # derivative 3*nu^2 vanishes mod p here, so Hensel does not apply;
        # every root mod p^(k+1) reduces to one mod p^k, so try all p lifts
        roots, pk = [0], 1
        for _ in range(e):
            nxt = pk * p
            roots = [r + j * pk for r in roots for j in range(p) if ((r + j * pk) ** 3 - 2) % nxt == 0]
            pk = nxt
        return tuple(sorted(roots))
    roots = list(_roots_mod_prime(p))
    pk = p
    for _ in range(e - 1):
        pk *= p
        lifted = []
        for nu in roots:
            f = nu**3 - 2
            df_inv = pow(3 * nu * nu, -1, pk)
            lifted.append((nu - f * df_inv) % pk)
        roots = lifted
    return tuple(sorted(roots))


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    # m1, m2 coprime
    return (r1 + m1 * ((r2 - r1) * pow(m1, -1, m2) % m2)) % (m1 * m2)


def roots_fast(m: int) -> list[int]:
    _check_modulus(m)
    if m == 1:
        return [0]
    parts = []
    for p, e in factorize(m):
        rs = _roots_mod_prime_power(p, e)
        if not rs:
            return []
        parts.append((p**e, rs))
    out = []
    for combo in product(*(rs for _, rs in parts)):
        r, mod = 0, 1
        for (q, _), x in zip(parts, combo):
            r = _crt(r, mod, x, q)
            mod *= q
        out.append(r)
    return sorted(out)


def enumerate_root_pairs(M: int) -> list[RootPair]:
    """All (m, nu) with M < m <= 2M, ordered by (m, nu)."""
    _check_modulus(M)
    return [RootPair(m, nu) for m in range(M + 1, 2 * M + 1) for nu in roots_fast(m)]
