"""Exact multiplicative arithmetic functions on prime factorizations.

Euler phi, Dedekind psi, and the sum-of-divisors function, evaluated
exactly in integer arithmetic from a prime factorization. Dedekind psi
gets two additional, independent evaluation routes (a divisor-pair sum
over cylinder shapes and a square-free divisor sum) so the closed form
can be cross-checked, plus a linear-sieve batch path for whole ranges.

All values live in the signed 64-bit range; a result that would leave it
raises OverflowError instead of wrapping or drifting through floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

# Largest admissible input and output value. Results above this raise.
WORD_BOUND = 2**63 - 1

# The sieve holds six Python lists before handing back numpy arrays;
# this cap keeps the transient footprint around a few hundred MB.
DEFAULT_MAX_SIEVE = 2_000_000


class BudgetError(RuntimeError):
    """An operation would exceed a declared resource budget."""


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test (exact for all n below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        # no factor among the witnesses and below their square
        return True
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeFactorization:
    """A positive integer together with its ordered prime decomposition.

    ``factors`` holds (prime, exponent) pairs with strictly increasing
    primes and exponents >= 1; the empty tuple encodes n = 1. Instances
    are validated on construction, so holding one is proof that the
    decomposition is genuine.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "factors", tuple((int(p), int(a)) for p, a in self.factors)
        )
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        product = 1
        previous = 1
        for p, a in self.factors:
            if p <= previous:
                raise ValueError("primes must be strictly increasing")
            if a < 1:
                raise ValueError("exponents must be >= 1")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            product *= p**a
            previous = p
        if product != self.n:
            raise ValueError(f"factors multiply to {product}, not {self.n}")

    @property
    def distinct_prime_count(self) -> int:
        """Number of distinct primes dividing n."""
        return len(self.factors)


def factorize(n: int) -> PrimeFactorization:
    """Factor n by deterministic trial division up to sqrt(n).

    Accepts 1 <= n <= 2**63 - 1; factorize(1) has an empty factor list.
    """
    if not 1 <= n <= WORD_BOUND:
        raise ValueError(f"n must be in [1, {WORD_BOUND}], got {n}")
    factors = []
    m = n
    if m % 2 == 0:
        a = 0
        while m % 2 == 0:
            m //= 2
            a += 1
        factors.append((2, a))
    d = 3
    while d * d <= m:
        if m % d == 0:
            a = 0
            while m % d == 0:
                m //= d
                a += 1
            factors.append((d, a))
        d += 2
    if m > 1:
        factors.append((m, 1))
    return PrimeFactorization(n, tuple(factors))


def euler_phi(f: PrimeFactorization) -> int:
    """Count of 0 <= k < n coprime to n, via the product formula.

    Evaluated as n with each prime divided out once and replaced by
    (p - 1), so every intermediate stays integral.
    """
    value = f.n
    for p, _ in f.factors:
        value = value // p * (p - 1)
    return value


def dedekind_psi(f: PrimeFactorization) -> int:
    """n * prod(1 + 1/p) over the distinct primes p | n, exactly.

    This counts the sublattices of Z^2 of index n with cyclic quotient,
    i.e. the cyclic n-square-tiled tori.
    """
    value = f.n
    for p, _ in f.factors:
        value = value * (p + 1) // p
    if value > WORD_BOUND:
        raise OverflowError(f"psi({f.n}) exceeds the 64-bit bound")
    return value


def sigma(f: PrimeFactorization) -> int:
    """Sum of all divisors of n (geometric series per prime power)."""
    value = 1
    for p, a in f.factors:
        value *= (p ** (a + 1) - 1) // (p - 1)
    if value > WORD_BOUND:
        raise OverflowError(f"sigma({f.n}) exceeds the 64-bit bound")
    return value


def squarefree_indicator(f: PrimeFactorization) -> int:
    """1 if no prime divides n twice, else 0."""
    return 1 if all(a == 1 for _, a in f.factors) else 0


def divisors(f: PrimeFactorization) -> list[int]:
    """All divisors of n, strictly ascending (length = prod(a_i + 1))."""
    divs = [1]
    for p, a in f.factors:
        block = []
        pk = 1
        for _ in range(a):
            pk *= p
            block.extend(d * pk for d in divs)
        divs.extend(block)
    divs.sort()
    return divs


@lru_cache(maxsize=8192)
def _phi_of(m: int) -> int:
    # gcd(w, n/w) values repeat heavily across a sweep; cache the totients
    return euler_phi(factorize(m))


def psi_via_cylinders(n: int) -> int:
    """Cyclic-torus count as a sum over horizontal cylinder shapes.

    Each factorization n = w*h contributes (w / gcd(w,h)) * phi(gcd(w,h))
    twists whose quotient is cyclic; summing over all divisor pairs must
    reproduce dedekind_psi.
    """
    f = factorize(n)
    total = 0
    for w in divisors(f):
        g = gcd(w, n // w)
        total += w // g * _phi_of(g)
    if total > WORD_BOUND:
        raise OverflowError(f"psi({n}) exceeds the 64-bit bound")
    return total


def psi_prime(n: int) -> int:
    """Square-free divisor sum: n * sum of q(d)/d over divisors d of n.

    q is the square-free indicator; the sum is evaluated literally over
    every divisor (as n//d for the square-free ones), giving a third
    independent route to dedekind_psi.
    """
    f = factorize(n)
    terms = [(1, True)]
    for p, a in f.factors:
        terms = [
            (d * p**k, squarefree and k <= 1)
            for d, squarefree in terms
            for k in range(a + 1)
        ]
    total = sum(n // d for d, squarefree in terms if squarefree)
    if total > WORD_BOUND:
        raise OverflowError(f"psi({n}) exceeds the 64-bit bound")
    return total


@dataclass(frozen=True)
class MultiplicativeSieve:
    """Batch values psi[n], sigma[n], phi[n], squarefree[n] for n <= limit.

    Arrays have length limit + 1 with index 0 left as zero padding, so
    array[n] is the value at n. psi/sigma/phi are int64, squarefree uint8.
    """

    limit: int
    psi: np.ndarray
    sigma: np.ndarray
    phi: np.ndarray
    squarefree: np.ndarray


def sieve_multiplicative(
    limit: int, max_sieve: int = DEFAULT_MAX_SIEVE
) -> MultiplicativeSieve:
    """One smallest-prime-factor linear sieve pass over [1, limit].

    Every composite is struck exactly once (O(limit) work). Multiplicative
    values extend along the sieve by tracking the power of the smallest
    prime factor, so the arrays agree entrywise with the single-value
    functions. Deterministic; raises BudgetError when limit > max_sieve.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if limit > max_sieve:
        raise BudgetError(
            f"sieve of {limit} exceeds the budget of {max_sieve}; "
            "raise max_sieve to allow it"
        )
    spf = [0] * (limit + 1)
    low = [0] * (limit + 1)  # p^v where p = spf(n) and p^v || n
    psi = [0] * (limit + 1)
    sig = [0] * (limit + 1)
    phi = [0] * (limit + 1)
    sqf = [0] * (limit + 1)
    psi[1] = sig[1] = phi[1] = sqf[1] = low[1] = 1
    primes: list[int] = []
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            primes.append(i)
            psi[i] = i + 1
            sig[i] = i + 1
            phi[i] = i - 1
            sqf[i] = 1
            low[i] = i
        for p in primes:
            ip = i * p
            if p > spf[i] or ip > limit:
                break
            spf[ip] = p
            if i % p == 0:
                low[ip] = low[i] * p
                psi[ip] = psi[i] * p
                phi[ip] = phi[i] * p
                # peel the p-power part: sigma(i*p) = p*sigma(i) + sigma(i/p^v)
                sig[ip] = sig[i] * p + sig[i // low[i]]
                sqf[ip] = 0
            else:
                low[ip] = p
                psi[ip] = psi[i] * (p + 1)
                phi[ip] = phi[i] * (p - 1)
                sig[ip] = sig[i] * (p + 1)
                sqf[ip] = sqf[i]
    return MultiplicativeSieve(
        limit,
        np.array(psi, dtype=np.int64),
        np.array(sig, dtype=np.int64),
        np.array(phi, dtype=np.int64),
        np.array(sqf, dtype=np.uint8),
    )
