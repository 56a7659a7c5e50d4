"""Prime and twin-prime relations between b, gamma, n and q, plus a sieve.

The formulas are evaluated as written; the sieve is the ground truth every
primality statement is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CapabilityError, DomainError

SIEVE_CAP = 10**8
_FLAT_LIMIT = 10**6
_SEGMENT = 10**6
CONSISTENCY_TOL = 1e-12


def _flat_sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit - 1) + 1):
        if flags[p]:
            flags[p * p::p] = False
    return flags


def _segmented(limit: int) -> list[int]:
    root = math.isqrt(limit - 1) + 1
    base = np.flatnonzero(_flat_sieve(root + 1))
    out = [base[base < limit]]
    for lo in range(root + 1, limit, _SEGMENT):
        hi = min(lo + _SEGMENT, limit)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, -(-lo // p) * p)
            seg[start - lo::p] = False
        out.append(np.flatnonzero(seg) + lo)
    return np.concatenate(out).tolist()


def sieve_primes(limit: int) -> list[int]:
    """All primes p < limit in ascending order (Eratosthenes)."""
    if limit > SIEVE_CAP:
        raise CapabilityError(f"sieve limit {limit} above cap {SIEVE_CAP}")
    if limit <= 2:
        return []
    if limit <= _FLAT_LIMIT:
        return np.flatnonzero(_flat_sieve(limit)).tolist()
    return _segmented(limit)


@lru_cache(maxsize=8)
def _prime_set(limit: int) -> frozenset[int]:
    return frozenset(sieve_primes(limit))


def is_prime(n: int) -> bool:
    """Sieve-backed primality for n below the cap."""
    if n < 2:
        return False
    limit = max(1024, 1 << (n + 1).bit_length())
    return n in _prime_set(limit)


def twin_pairs(limit: int) -> list[tuple[int, int]]:
    """Pairs (p, p + 2) with both members prime and below ``limit``."""
    primes = sieve_primes(limit)
    pset = set(primes)
    return [(p, p + 2) for p in primes if p + 2 in pset]


def b_of(n: int, gamma: int) -> float:
    """b = 2 pi gamma / ln n."""
    if n < 2:
        raise DomainError("b_of needs n >= 2")
    return 2.0 * math.pi * gamma / math.log(n)


def b_of_prime(n: int, q: int) -> float:
    """b = 2 pi n / ln q, the prime-indexed form."""
    if q < 2:
        raise DomainError("b_of_prime needs q >= 2")
    return 2.0 * math.pi * n / math.log(q)


def q_of(n: int, gamma: int) -> float:
    """q = n^(n / gamma); inf when it overflows."""
    if n < 2 or gamma < 1:
        raise DomainError("q_of needs n >= 2 and gamma >= 1")
    try:
        return math.exp(n * math.log(n) / gamma)
    except OverflowError:
        return math.inf


def log_q_of_b(b: float, gamma: float) -> float:
    """ln q = (2 pi / b) e^(2 pi gamma / b)."""
    if b <= 0:
        raise DomainError("q_of_b needs b > 0")
    return (2.0 * math.pi / b) * math.exp(2.0 * math.pi * gamma / b)


def q_of_b(b: float, gamma: float) -> float:
    """q = exp((2 pi / b) exp(2 pi gamma / b)); inf when it overflows."""
    try:
        return math.exp(log_q_of_b(b, gamma))
    except OverflowError:
        return math.inf


def gamma_of(n: int, q: int) -> float:
    """gamma = n ln n / ln q."""
    if n < 2 or q < 2:
        raise DomainError("gamma_of needs n >= 2 and q >= 2")
    return n * math.log(n) / math.log(q)


@dataclass(frozen=True)
class PrimeRelationRow:
    q: int
    n: int
    gamma: int
    delta_n: int = 0
    delta_gamma: int = 0
    delta_q: int = 0
    b: float = 0.0
    consistent: bool = False


def make_row(q: int, n: int, gamma: int, delta_n: int = 0, delta_gamma: int = 0, delta_q: int = 0) -> PrimeRelationRow:
    if not is_prime(q):
        raise DomainError(f"{q} is not prime")
    b = b_of(n, gamma) if n >= 2 else 0.0
    row = PrimeRelationRow(q, n, gamma, delta_n, delta_gamma, delta_q, b)
    consistent = delta_q_relation(row) <= CONSISTENCY_TOL * max(1.0, abs(delta_q / q))
    return PrimeRelationRow(q, n, gamma, delta_n, delta_gamma, delta_q, b, consistent)


def log_q_residual(q: int, n: int, gamma: int) -> float:
    """|ln q - (n / gamma) ln n|."""
    return abs(math.log(q) - n / gamma * math.log(n))


def delta_q_rhs(n: int, gamma: int, delta_n: int, delta_gamma: int) -> float:
    ln_n = math.log(n)
    return ((ln_n + 1.0) * delta_n - n * ln_n / gamma * delta_gamma) / gamma


def delta_q_relation(row: PrimeRelationRow) -> float:
    """|dq/q - (1/gamma)((ln n + 1) dn - (n ln n / gamma) dgamma)|."""
    if row.gamma == 0 or row.n < 2:
        raise DomainError("delta_q_relation needs gamma != 0 and n >= 2")
    return abs(row.delta_q / row.q - delta_q_rhs(row.n, row.gamma, row.delta_n, row.delta_gamma))


def twin_rhs(n: int, gamma: int, delta_n: int, delta_gamma: int) -> float:
    return (delta_n / gamma - n * delta_gamma / gamma**2) * math.log(n) + delta_n / gamma


def twin_relation_residual(q: int, n: int, gamma: int, delta_n: int, delta_gamma: int, sign: int) -> float:
    """|sign * 2/q - ((dn/gamma - n dgamma/gamma^2) ln n + dn/gamma)|."""
    if gamma == 0:
        raise DomainError("gamma must be nonzero")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    return abs(sign * 2.0 / q - twin_rhs(n, gamma, delta_n, delta_gamma))


def delta_gamma_of(n: int, q: int, delta_n: int, delta_q: int) -> float:
    """dgamma = (n ln n / q) dq + (ln n / ln q) dn + dn / ln q, as written."""
    ln_n, ln_q = math.log(n), math.log(q)
    return n * ln_n / q * delta_q + ln_n / ln_q * delta_n + delta_n / ln_q


def delta_gamma_relation(n: int, q: int, delta_n: int, delta_gamma: int, delta_q: int) -> float:
    """|tabulated dgamma - formula dgamma| for the twin specialisations dq = +-2."""
    return abs(delta_gamma - delta_gamma_of(n, q, delta_n, delta_q))


@dataclass(frozen=True)
class TwinPairRow:
    gamma: int
    delta_n: int
    delta: Fraction
    chi: Fraction
    lam: Fraction
    lower: int | None
    upper: int | None
    is_twin: bool

    @property
    def candidate(self) -> bool:
        return self.lower is not None


def chi_model(gamma: int, delta_n: int) -> TwinPairRow:
    """chi = (2/6) delta + 1/6 with delta = gamma / dn; pair (6 chi - 1, 6 chi + 1).

    Only positive-integer chi yields a pair; is_twin comes from the sieve.
    """
    if delta_n == 0:
        raise DomainError("delta_n must be nonzero")
    delta = Fraction(gamma, delta_n)
    chi = Fraction(2, 6) * delta + Fraction(1, 6)
    lam = 2 * delta
    if chi.denominator != 1 or chi <= 0:
        return TwinPairRow(gamma, delta_n, delta, chi, lam, None, None, False)
    c = chi.numerator
    lower, upper = 6 * c - 1, 6 * c + 1
    return TwinPairRow(gamma, delta_n, delta, chi, lam, lower, upper, is_prime(lower) and is_prime(upper))
