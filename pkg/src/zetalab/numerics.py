"""Scalar building blocks: Bernoulli numbers, complex log-gamma, n**-s."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .errors import CapabilityError, DomainError, PoleError

#: complex is the value type for s = sigma + i b everywhere in the package.
ComplexValue = complex

BERNOULLI_MAX_INDEX = 60

LOG_PI = math.log(math.pi)
HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# Lanczos coefficients, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


@lru_cache(maxsize=1)
def _bernoulli_table() -> tuple[Fraction, ...]:
    table = [Fraction(1)]
    for m in range(1, BERNOULLI_MAX_INDEX + 1):
        acc = sum(math.comb(m + 1, j) * table[j] for j in range(m))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number B_k (convention B_1 = -1/2)."""
    if k < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    if k > BERNOULLI_MAX_INDEX:
        raise CapabilityError(f"Bernoulli index {k} above ceiling {BERNOULLI_MAX_INDEX}")
    return _bernoulli_table()[k]


@lru_cache(maxsize=None)
def em_coefficients(K: int) -> tuple[float, ...]:
    """B_{2k} / (2k)! for k = 1..K as floats."""
    if 2 * K > BERNOULLI_MAX_INDEX:
        raise CapabilityError(f"correction order {K} needs B_{2 * K}, above ceiling")
    return tuple(float(bernoulli(2 * k) / math.factorial(2 * k)) for k in range(1, K + 1))


def sincos_pi(x: float) -> tuple[float, float]:
    """(sin(pi x), cos(pi x)) with exact zeros at integers and half-integers."""
    r = math.fmod(x, 2.0)
    quarter = round(2.0 * r)
    f = r - 0.5 * quarter
    s, c = math.sin(math.pi * f), math.cos(math.pi * f)
    q = quarter % 4
    if q == 0:
        return s, c
    if q == 1:
        return c, -s
    if q == 2:
        return -s, -c
    return -c, s


def sin_pi(z: complex) -> complex:
    """sin(pi z) with the real part reduced exactly."""
    z = complex(z)
    s, c = sincos_pi(z.real)
    y = math.pi * z.imag
    return complex(s * math.cosh(y), c * math.sinh(y))


def _is_pole(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _log_gamma_lanczos(z: complex) -> complex:
    z = z - 1.0
    x = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        x += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def log_gamma(z: complex) -> complex:
    """Principal branch of ln Gamma(z), continuous off the negative real axis.

    Lanczos approximation for Re z >= 0.5, reflection formula below that.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("log_gamma argument must be finite")
    if _is_pole(z):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if z.real >= 0.5:
        return _log_gamma_lanczos(z)
    # ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z), branch fixed by the
    # number of sign changes of sin(pi x) crossed going left from x = 1/2.
    value = LOG_PI - cmath.log(sin_pi(z)) - _log_gamma_lanczos(1.0 - z)
    # On the cut itself the value is the limit from above.
    turns = math.floor(0.5 * z.real + 0.25)
    if z.imag >= 0:
        value += 2j * math.pi * turns
    else:
        value -= 2j * math.pi * turns
    return value


def complex_pow_neg(n: int, s: complex) -> complex:
    """n**(-s) = exp(-s ln n) for a positive integer n."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    if n == 1:
        return 1.0 + 0.0j
    s = complex(s)
    ln_n = math.log(n)
    mag = math.exp(-s.real * ln_n)
    phase = -s.imag * ln_n
    return complex(mag * math.cos(phase), mag * math.sin(phase))
