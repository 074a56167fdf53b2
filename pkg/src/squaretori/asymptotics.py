"""Asymptotics of the cyclic proportion among square-tiled tori.

The proportion rho(n) = psi(n)/sigma(n) always lies in [6/pi^2, 1], is 1
exactly on the square-free integers, and dips toward 6/pi^2 = 1/zeta(2)
along powered primorials. In the mean the cyclic count is 1/zeta(4) of
the total: sum(psi)/sum(sigma) -> 90/pi^4. This module holds the zeta
constants, the ratio in exact and factored form, the extremal sequence,
and partial-sum sweeps backed by the linear sieve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .arith import (
    DEFAULT_MAX_SIEVE,
    MultiplicativeSieve,
    PrimeFactorization,
    dedekind_psi,
    sieve_multiplicative,
    sigma,
)


@dataclass(frozen=True)
class ZetaConstants:
    """zeta(2), zeta(4) and the derived ratios the asymptotic checks use."""

    zeta2: float
    zeta4: float
    inv_zeta2: float
    inv_zeta4: float
    ratio_z2_z4: float


def zeta_constants() -> ZetaConstants:
    """Closed forms: zeta(2) = pi^2/6 and zeta(4) = pi^4/90."""
    z2 = math.pi**2 / 6
    z4 = math.pi**4 / 90
    return ZetaConstants(z2, z4, 1 / z2, 1 / z4, z2 / z4)


ZETA = zeta_constants()


def zeta_series(s: int, terms: int = 50) -> float:
    """Direct series for zeta(s), s >= 2, with an Euler-Maclaurin tail.

    Sums 1/k^s for k < M = terms + 1 and estimates the rest by
    M^(1-s)/(s-1) + M^-s/2 + s M^(-s-1)/12 - s(s+1)(s+2) M^(-s-3)/720;
    the first omitted correction is below 3e-14 for terms >= 50. Used to
    cross-validate the closed-form constants.
    """
    if s < 2:
        raise ValueError("series evaluation requires s >= 2")
    m = terms + 1
    head = sum(1.0 / k**s for k in range(1, m))
    tail = (
        m ** (1 - s) / (s - 1)
        + m**-s / 2
        + s * m ** (-s - 1) / 12
        - s * (s + 1) * (s + 2) * m ** (-s - 3) / 720
    )
    return head + tail


@dataclass(frozen=True)
class RatioValue:
    """psi(n)/sigma(n) with its exact integer numerator and denominator."""

    psi: int
    sigma: int
    value: float

    def __post_init__(self) -> None:
        if self.psi < 1 or self.sigma < self.psi:
            raise ValueError("need 1 <= psi <= sigma")
        if self.value != self.psi / self.sigma:
            raise ValueError("value must equal psi/sigma in binary64")


def rho(f: PrimeFactorization) -> RatioValue:
    """Cyclic proportion at n from exact psi and sigma."""
    p = dedekind_psi(f)
    s = sigma(f)
    return RatioValue(p, s, p / s)


def rho_factored(factors: Sequence[tuple[int, int]]) -> float:
    """Cyclic proportion from a factor list alone; n is never materialized.

    A prime q with exponent a contributes (1 - q^-2) / (1 - q^-(a+1)).
    When q^(a+1) would pass 2^63 the second factor is within 2^-63 of 1
    and is treated as 1, so arbitrarily large implied n stays cheap.
    """
    seen = set()
    value = 1.0
    for q, a in factors:
        if q < 2:
            raise ValueError(f"{q} is not a valid prime factor")
        if a < 1:
            raise ValueError("exponents must be >= 1")
        if q in seen:
            raise ValueError(f"duplicate prime {q}")
        seen.add(q)
        value *= 1.0 - 1.0 / (q * q)
        if (a + 1) * math.log2(q) <= 63:
            value /= 1.0 - 1.0 / float(q) ** (a + 1)
    return value


_PRIMES = [2, 3, 5, 7, 11, 13]


def first_primes(k: int) -> list[int]:
    """The first k primes, grown on demand by trial division."""
    while len(_PRIMES) < k:
        c = _PRIMES[-1] + 2
        while any(c % p == 0 for p in _PRIMES if p * p <= c):
            c += 2
        _PRIMES.append(c)
    return _PRIMES[:k]


def extremal_sequence_rho(k: int) -> float:
    """rho along the extremal sequence: first k primes, each to the k-th power.

    These are the k-th powers of primorials; their ratio decreases toward
    1/zeta(2) as k grows. The underlying integer overflows 64 bits from
    k = 6 on, so only the factored evaluation is ever used.
    """
    if not 1 <= k <= 50:
        raise ValueError(f"k must be in [1, 50], got {k}")
    return rho_factored([(p, k) for p in first_primes(k)])


@dataclass(frozen=True)
class SweepRecord:
    """Census row at n: exact counts, their ratio, and running totals."""

    n: int
    psi: int
    sigma: int
    rho: float
    cum_psi: int
    cum_sigma: int
    cum_ratio: float


def _sieve_for(
    limit: int, sieve: MultiplicativeSieve | None, max_sieve: int
) -> MultiplicativeSieve:
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if sieve is not None and sieve.limit >= limit:
        return sieve
    return sieve_multiplicative(limit, max_sieve)


def partial_sums(
    limit: int,
    sieve: MultiplicativeSieve | None = None,
    max_sieve: int = DEFAULT_MAX_SIEVE,
) -> SweepRecord:
    """Final census row at `limit` from exact integer cumulative sums.

    cum_psi/cum_sigma converges to 1/zeta(4) with an O(log(limit)/limit)
    error. Pass a precomputed sieve (of any length >= limit) to avoid
    re-sieving; the result is identical either way.
    """
    sv = _sieve_for(limit, sieve, max_sieve)
    psi = sv.psi[: limit + 1]
    sig = sv.sigma[: limit + 1]
    cum_psi = int(psi.sum())
    cum_sigma = int(sig.sum())
    return SweepRecord(
        limit,
        int(psi[limit]),
        int(sig[limit]),
        int(psi[limit]) / int(sig[limit]),
        cum_psi,
        cum_sigma,
        cum_psi / cum_sigma,
    )


def sweep_stream(
    limit: int,
    sieve: MultiplicativeSieve | None = None,
    max_sieve: int = DEFAULT_MAX_SIEVE,
) -> Iterator[SweepRecord]:
    """All census rows 1..limit in order, from one sieve pass."""
    sv = _sieve_for(limit, sieve, max_sieve)
    psi = sv.psi[: limit + 1].tolist()
    sig = sv.sigma[: limit + 1].tolist()
    cum_psi = 0
    cum_sigma = 0
    for n in range(1, limit + 1):
        cum_psi += psi[n]
        cum_sigma += sig[n]
        yield SweepRecord(
            n, psi[n], sig[n], psi[n] / sig[n], cum_psi, cum_sigma,
            cum_psi / cum_sigma,
        )


def qd2_partial_sum(
    limit: int,
    sieve: MultiplicativeSieve | None = None,
    max_sieve: int = DEFAULT_MAX_SIEVE,
) -> float:
    """Partial sum of 1/d^2 over square-free d <= limit.

    Converges to zeta(2)/zeta(4) = 15/pi^2; the omitted tail is below
    1/limit.
    """
    sv = _sieve_for(limit, sieve, max_sieve)
    d = np.arange(limit + 1, dtype=np.float64)
    d[0] = 1.0  # avoid 0/0; index 0 is padding and excluded below
    terms = sv.squarefree[: limit + 1].astype(np.float64) / (d * d)
    return float(terms[1:].sum())
