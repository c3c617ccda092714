"""Direct evaluation of both sides of the large sieve inequality over the
points (nu/m, nu^2/m), M < m <= 2M.

Phases e((k nu + l nu^2)/m) are reduced modulo m in integer arithmetic
before the conversion to floating point, so large k, l lose nothing.
The inner double sum for all root pairs at once is one matrix product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .root_finder import NotARoot, RootPair, enumerate_root_pairs

__all__ = [
    "CoeffSeq",
    "SieveReport",
    "make_ones",
    "make_spike",
    "make_random",
    "sieve_lhs",
    "sieve_lhs_reference",
    "sieve_rhs",
    "sieve_ratio",
    "dual_lhs",
    "dual_rhs",
]


@dataclass(frozen=True)
class CoeffSeq:
    """Coefficients a[k-1, l-1] for 1 <= k <= K, 1 <= l <= L."""

    values: np.ndarray
    descriptor: str = "custom"
    seed: int | None = None

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=complex)
        if v.ndim != 2 or min(v.shape) < 1:
            raise ValueError("coefficients must form a non-empty K x L array")
        object.__setattr__(self, "values", v)

    @property
    def K(self) -> int:
        return self.values.shape[0]

    @property
    def L(self) -> int:
        return self.values.shape[1]

    def energy(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2))


@dataclass(frozen=True)
class SieveReport:
    M: int
    K: int
    L: int
    lhs: float
    rhs: float
    ratio: float
    pair_count: int
    seq_descriptor: str
    seed: int | None
    # Cauchy-Schwarz bound K*L*pairs*sum|a|^2; reported, never asserted
    trivial_bound: float = field(default=0.0)


def make_ones(K: int, L: int) -> CoeffSeq:
    return CoeffSeq(np.ones((K, L), dtype=complex), "ones")


def _phases(k: np.ndarray, residues: np.ndarray, moduli: np.ndarray) -> np.ndarray:
    """e(k * residue / modulus) as a len(k) x len(residues) array."""
    frac = (np.outer(k, residues) % moduli) / moduli
    return np.exp(2j * np.pi * frac)


def make_spike(m0: int, nu0: int, K: int, L: int) -> CoeffSeq:
    """a[k, l] = e(-(k nu0 + l nu0^2) / m0), aligned with one sample point."""
    p = RootPair(m0, nu0)
    k = np.arange(1, K + 1, dtype=np.int64)
    l = np.arange(1, L + 1, dtype=np.int64)
    ek = (-(k * p.nu)) % p.m
    el = (-(l * (p.nu * p.nu % p.m))) % p.m
    phase = (ek[:, None] + el[None, :]) % p.m
    return CoeffSeq(np.exp(2j * np.pi * phase / p.m), f"spike({p.m},{p.nu})")


def make_random(K: int, L: int, seed: int) -> CoeffSeq:
    """i.i.d. +-1 from a counter-based (Philox) generator."""
    rng = np.random.Generator(np.random.Philox(seed))
    signs = rng.integers(0, 2, size=(K, L)) * 2 - 1
    return CoeffSeq(signs.astype(complex), "random", seed)


def _pair_arrays(pairs: list[RootPair]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    m = np.array([p.m for p in pairs], dtype=np.int64)
    nu = np.array([p.nu for p in pairs], dtype=np.int64)
    nu2 = np.array([p.nu * p.nu % p.m for p in pairs], dtype=np.int64)
    return m, nu, nu2


def _check_M(M: int) -> None:
    if M < 1:
        raise ValueError("M must be a positive integer")


def _inner_sums(pairs: list[RootPair], s: CoeffSeq, block: int = 256) -> np.ndarray:
    """sum_k sum_l a[k,l] e((k nu + l nu^2)/m) for every pair."""
    out = np.empty(len(pairs), dtype=complex)
    k = np.arange(1, s.K + 1, dtype=np.int64)
    l = np.arange(1, s.L + 1, dtype=np.int64)
    for start in range(0, len(pairs), block):
        m, nu, nu2 = _pair_arrays(pairs[start:start + block])
        U = _phases(k, nu, m)  # K x P
        W = _phases(l, nu2, m)  # L x P
        out[start:start + block] = np.sum(U * (s.values @ W), axis=0)
    return out


def sieve_lhs(M: int, s: CoeffSeq) -> float:
    _check_M(M)
    pairs = enumerate_root_pairs(M)
    if not pairs:
        return 0.0
    return float(np.sum(np.abs(_inner_sums(pairs, s)) ** 2))


def sieve_lhs_reference(M: int, s: CoeffSeq) -> float:
    """Plain loops in (m, nu, k, l) order; slow, for cross-checking."""
    _check_M(M)
    total = 0.0
    for p in enumerate_root_pairs(M):
        inner = 0j
        for k in range(1, s.K + 1):
            for l in range(1, s.L + 1):
                r = (k * p.nu + l * p.nu * p.nu) % p.m
                inner += s.values[k - 1, l - 1] * np.exp(2j * np.pi * r / p.m)
        total += abs(inner) ** 2
    return total


def sieve_rhs(M: int, s: CoeffSeq) -> float:
    _check_M(M)
    return float((M + s.K) * (M + s.L)) * s.energy()


def sieve_ratio(M: int, s: CoeffSeq) -> SieveReport:
    rhs = sieve_rhs(M, s)
    if rhs == 0.0:
        raise ValueError("degenerate sequence: sum |a|^2 = 0")
    lhs = sieve_lhs(M, s)
    count = len(enumerate_root_pairs(M))
    return SieveReport(
        M=M, K=s.K, L=s.L, lhs=lhs, rhs=rhs, ratio=lhs / rhs,
        pair_count=count, seq_descriptor=s.descriptor, seed=s.seed,
        trivial_bound=float(s.K * s.L * count) * s.energy(),
    )


def dual_lhs(M: int, K: int, L: int, b: Mapping[RootPair, complex]) -> float:
    """sum_{k<=K} sum_{l<=L} |sum_{m,nu} b[m,nu] e((k nu + l nu^2)/m)|^2."""
    _check_M(M)
    for p in b:
        RootPair(p.m, p.nu)
        if not M < p.m <= 2 * M:
            raise NotARoot(f"{p} outside the range ({M}, {2 * M}]")
    if not b:
        return 0.0
    pairs = sorted(b)
    coeff = np.array([b[p] for p in pairs], dtype=complex)
    m, nu, nu2 = _pair_arrays(pairs)
    U = _phases(np.arange(1, K + 1, dtype=np.int64), nu, m)  # K x P
    W = _phases(np.arange(1, L + 1, dtype=np.int64), nu2, m)  # L x P
    S = (U * coeff) @ W.T
    return float(np.sum(np.abs(S) ** 2))


def dual_rhs(M: int, K: int, L: int, b: Mapping[RootPair, complex]) -> float:
    _check_M(M)
    return float((M + K) * (M + L)) * float(sum(abs(v) ** 2 for v in b.values()))
