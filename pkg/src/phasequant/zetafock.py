"""Prime Fock space: integers as occupation states over prime modes.

The state |n> has occupation n_p equal to the exponent of p in the
factorization of n; the number operator is diagonal with eigenvalue n and
the logarithmic Hamiltonian H = ln N makes the partition function the
Riemann zeta function, with the Euler product as cross-check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

FACTOR_LIMIT = 10**9

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization by trial division with a 2-3-5-7 wheel; n <= 10^9."""
    if n < 1:
        raise ValueError("need a positive integer")
    if n > FACTOR_LIMIT:
        raise ValueError(f"factorization guard: n must be <= {FACTOR_LIMIT}")
    factors: Dict[int, int] = {}
    for p in (2, 3, 5, 7):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d, idx = 11, 0
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += _WHEEL[idx]
        idx = (idx + 1) % len(_WHEEL)
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


class FockInteger:
    """State |n> with cached occupation numbers (prime exponents)."""

    __slots__ = ("n", "factors")

    def __init__(self, n: int):
        factors = factorize(n)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("FockInteger is immutable")

    def occupation(self) -> List[Tuple[int, int]]:
        """Sorted (prime, occupation) pairs; empty for the vacuum |1>."""
        return sorted(self.factors.items())

    def particle_number(self) -> int:
        return sum(self.factors.values())

    def number_eigenvalue(self) -> int:
        """Eigenvalue of N = prod_p p^(a_p* a_p); equals n by multiplicativity."""
        value = 1
        for p, k in self.factors.items():
            value *= p**k
        return value

    def log_energy(self) -> float:
        """H|n> = (sum_p n_p ln p)|n> = ln(n) |n>."""
        return sum(k * math.log(p) for p, k in self.factors.items())

    def normalization_factor(self) -> Fraction:
        """Squared norm factor prod n_p! from the ladder construction (recorded, unused)."""
        out = 1
        for k in self.factors.values():
            out *= math.factorial(k)
        return Fraction(out)

    def __repr__(self):
        return f"FockInteger({self.n})"


def primes_up_to(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0]


def partition_function(beta: float, cutoff: int) -> Tuple[float, Tuple[float, float]]:
    """Partial sum of zeta(beta) with a rigorous integral tail bracket.

    Returns (partial_sum, (tail_low, tail_high)) where
    partial + tail_low <= zeta(beta) <= partial + tail_high.
    """
    if beta <= 1:
        raise ValueError("the series diverges for beta <= 1")
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    n = np.arange(1, cutoff + 1, dtype=np.float64)
    partial = float(np.sum(n ** (-beta)))
    tail_high = cutoff ** (1.0 - beta) / (beta - 1.0)
    tail_low = (cutoff + 1) ** (1.0 - beta) / (beta - 1.0)
    return partial, (tail_low, tail_high)


def zeta_bracket(beta: float, cutoff: int) -> Tuple[float, float]:
    """[low, high] interval guaranteed to contain zeta(beta)."""
    partial, (lo, hi) = partition_function(beta, cutoff)
    return partial + lo, partial + hi


def euler_product(beta: float, prime_cutoff: int) -> float:
    """Truncated product prod_{p <= P} (1 - p^-beta)^-1; increases to zeta(beta)."""
    if beta <= 1:
        raise ValueError("the product diverges for beta <= 1")
    ps = primes_up_to(prime_cutoff).astype(np.float64)
    if len(ps) == 0:
        return 1.0
    return float(np.prod(1.0 / (1.0 - ps ** (-beta))))


def euler_product_tail_factor(beta: float, prime_cutoff: int) -> float:
    """Upper bound on zeta(beta)/product_P: exp of the neglected log-sum.

    log(zeta) - log(prod_P) = sum_{p > P} -log(1 - p^-beta)
    <= sum_{n > P} 2*n^-beta <= 2*P^(1-beta)/(beta-1) for p^-beta <= 1/2.
    """
    if prime_cutoff < 2:
        raise ValueError("prime cutoff must be >= 2")
    return math.exp(2.0 * prime_cutoff ** (1.0 - beta) / (beta - 1.0))


def smooth_sum_exact(beta: int, prime_cutoff: int) -> Fraction:
    """Exact rational sum over P-smooth integers of n^-beta vs the finite product.

    For integer beta the finite Euler product over p <= P equals the sum of
    n^-beta over all P-smooth n; both sides are computed in exact rationals
    (the geometric series per prime is summed in closed form).
    """
    if beta < 2:
        raise ValueError("need integer beta >= 2")
    product = Fraction(1)
    for p in primes_up_to(prime_cutoff):
        p = int(p)
        product *= 1 / (Fraction(1) - Fraction(1, p**beta))
    return product


def smooth_sum_bruteforce(beta: int, prime_cutoff: int, depth: int) -> Fraction:
    """Sum of n^-beta over P-smooth n with all prime exponents < depth (oracle)."""
    ps = [int(p) for p in primes_up_to(prime_cutoff)]
    totals = [Fraction(1)]
    for p in ps:
        nxt = []
        for t in totals:
            for e in range(depth):
                nxt.append(t / Fraction(p ** (beta * e)))
        totals = nxt
    return sum(totals)
