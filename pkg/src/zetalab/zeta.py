"""Riemann zeta evaluation and zero counting.

Three independent routes are provided:

* :func:`zeta_em` - Euler-Maclaurin summation, valid for Re(s) > -(2K - 1);
* :func:`zeta_eta` - accelerated alternating (Dirichlet eta) series, Re(s) > 0;
* :func:`zeta_functional` - the functional equation, reflecting Re(s) < 1/2
  onto zeta_em.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import BoundaryError, CapabilityError, DomainError, PoleError, ToleranceError
from .numerics import LOG_PI, em_coefficients, log_gamma, sin_pi
from .parallel import ordered_map
from .quadrature import gauss_kronrod

LN2 = math.log(2.0)
_BORWEIN_RATE = math.log(3.0 + math.sqrt(8.0))


@dataclass(frozen=True)
class ZeroCountResult:
    count: int
    contour_integral: complex
    rectangle: tuple[float, float, float, float]

    @property
    def raw_count(self) -> float:
        return (self.contour_integral / (2j * math.pi)).real


def truncation_length(t_abs: float, cfg: EvalConfig = DEFAULT_CONFIG) -> int:
    if cfg.truncation_N is not None:
        return cfg.truncation_N
    return max(20, math.ceil(1.3 * t_abs) + 10)


def _check_em_domain(s: np.ndarray, K: int) -> None:
    if np.any((s.real == 1.0) & (s.imag == 0.0)):
        raise PoleError("zeta has a pole at s = 1")
    if np.any(s.real <= -(2 * K - 1)):
        raise CapabilityError(
            f"Re(s) <= {-(2 * K - 1)} needs more than K = {K} Bernoulli corrections"
        )


def _em_core(
    s: np.ndarray, N: int, K: int, derivative: bool, drop_pole: bool = False
) -> tuple[np.ndarray, np.ndarray | None]:
    s = np.asarray(s, dtype=complex).reshape(-1)
    ln_n = np.log(np.arange(1, N, dtype=float))
    powers = np.exp(-np.outer(s, ln_n))
    zeta = powers.sum(axis=1)
    dzeta = -(powers * ln_n).sum(axis=1) if derivative else None

    ln_N = math.log(N)
    n_neg_s = np.exp(-s * ln_N)
    n_one_minus_s = N * n_neg_s
    sm1 = s - 1.0
    if drop_pole:
        # N^(1-s)/(s-1) - 1/(s-1) without cancellation near s = 1.
        with np.errstate(invalid="ignore", divide="ignore"):
            tail = np.where(sm1 == 0, -ln_N, np.expm1(-sm1 * ln_N) / np.where(sm1 == 0, 1.0, sm1))
        zeta = zeta + tail + 0.5 * n_neg_s
    else:
        zeta = zeta + n_one_minus_s / sm1 + 0.5 * n_neg_s
    if derivative:
        dzeta = dzeta - ln_N * n_one_minus_s / sm1 - n_one_minus_s / (sm1 * sm1) - 0.5 * ln_N * n_neg_s

    # Correction k: c_k * s(s+1)...(s+2k-2) * N^(-s-2k+1).
    poch = s.copy()
    dpoch = np.ones_like(s)
    scale = n_neg_s / N
    inv_N2 = 1.0 / (N * N)
    for k, c in enumerate(em_coefficients(K), start=1):
        zeta = zeta + c * poch * scale
        if derivative:
            dzeta = dzeta + c * scale * (dpoch - ln_N * poch)
        if k < K:
            a = s + (2 * k - 1)
            b = s + 2 * k
            dpoch = dpoch * a * b + poch * (a + b)
            poch = poch * a * b
            scale = scale * inv_N2
    return zeta, dzeta


def zeta_em_array(s, cfg: EvalConfig = DEFAULT_CONFIG, derivative: bool = False):
    """Vectorised Euler-Maclaurin zeta; returns (zeta, zeta') arrays."""
    s = np.asarray(s, dtype=complex).reshape(-1)
    _check_em_domain(s, cfg.correction_K)
    N = truncation_length(float(np.max(np.abs(s.imag))) if s.size else 0.0, cfg)
    return _em_core(s, N, cfg.correction_K, derivative)


def zeta_regular_array(s, cfg: EvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """zeta(s) - 1/(s - 1), finite and cancellation-free near s = 1."""
    s = np.asarray(s, dtype=complex).reshape(-1)
    if np.any(s.real <= -(2 * cfg.correction_K - 1)):
        raise CapabilityError("Re(s) too negative for the configured Bernoulli corrections")
    N = truncation_length(float(np.max(np.abs(s.imag))) if s.size else 0.0, cfg)
    return _em_core(s, N, cfg.correction_K, False, drop_pole=True)[0]


def zeta_em(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(s) by Euler-Maclaurin summation with Bernoulli corrections."""
    value, _ = zeta_em_array([complex(s)], cfg)
    return complex(value[0])


def zeta_derivative(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta'(s) from the term-differentiated Euler-Maclaurin expansion."""
    _, d = zeta_em_array([complex(s)], cfg, derivative=True)
    return complex(d[0])


def zeta_derivative_fd(s: complex, cfg: EvalConfig = DEFAULT_CONFIG, h: float = 1e-5) -> complex:
    """Central finite difference of zeta_em along the real direction."""
    s = complex(s)
    return (zeta_em(s + h, cfg) - zeta_em(s - h, cfg)) / (2.0 * h)


def zeta_functional(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(s) on the whole plane minus s = 1.

    Re(s) >= 1/2 goes straight to zeta_em; otherwise
    zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s).
    """
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if s.real >= 0.5:
        return zeta_em(s, cfg)
    sine = sin_pi(0.5 * s)
    if sine == 0:
        return 0j
    log_factor = s * LN2 + (s - 1.0) * LOG_PI + log_gamma(1.0 - s)
    try:
        factor = cmath.exp(log_factor)
    except OverflowError:
        raise CapabilityError(f"functional-equation factor overflows at s = {s}") from None
    return factor * sine * zeta_em(1.0 - s, cfg)


@lru_cache(maxsize=64)
def _borwein_weights(n: int) -> np.ndarray:
    # d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), kept exact.
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i * n, math.factorial(n - i) * math.factorial(2 * i))
        d.append(acc)
    dn = d[n]
    return np.array([(-1) ** k * float((dn - d[k]) / dn) for k in range(n)])


def eta_terms_for(s: complex) -> int:
    """Terms needed for ~1e-13 accuracy of the accelerated eta series."""
    t = abs(s.imag)
    need = math.pi * t + math.log(3.0 * (1.0 + 2.0 * t)) + 0.5 * math.log1p(t) + 32.0
    return max(30, math.ceil(need / _BORWEIN_RATE))


def zeta_eta(s: complex, terms: int | None = None) -> complex:
    """zeta(s) = eta(s) / (1 - 2^(1-s)) with Borwein-accelerated eta, Re(s) > 0."""
    s = complex(s)
    if s.real <= 0:
        raise DomainError("zeta_eta requires Re(s) > 0")
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    denom = 1.0 - cmath.exp((1.0 - s) * LN2)
    if abs(denom) < 1e-14:
        raise DomainError("1 - 2^(1-s) vanishes on the lattice 1 + 2 pi i k / ln 2")
    n = eta_terms_for(s) if terms is None else terms
    if n < 1:
        raise DomainError("terms must be positive")
    w = _borwein_weights(n)
    ln_k = np.log(np.arange(1, n + 1, dtype=float))
    eta = complex(np.dot(w, np.exp(-s * ln_k)))
    return eta / denom


def _edge_integral(a: complex, b: complex, cfg: EvalConfig) -> tuple[complex, float]:
    delta = b - a

    def integrand(u: np.ndarray) -> np.ndarray:
        z, dz = zeta_em_array(a + delta * u, cfg, derivative=True)
        return dz / z * delta

    res = gauss_kronrod(
        integrand, 0.0, 1.0, abs_tol=cfg.contour_abs_tol, rel_tol=1e-15, max_panels=4000
    )
    return res.value, res.error


def _check_boundary(corners: list[complex], cfg: EvalConfig, min_distance: float = 1e-3) -> None:
    for a, b in zip(corners[:-1], corners[1:]):
        samples = max(64, math.ceil(abs(b - a) / 0.01) + 1)
        s = a + (b - a) * np.linspace(0.0, 1.0, samples)
        z, dz = zeta_em_array(s, cfg, derivative=True)
        # |zeta / zeta'| estimates the distance to the nearest zero.
        close = np.abs(z) < min_distance * np.abs(dz)
        if np.any(close):
            where = s[np.argmax(close)]
            raise BoundaryError(f"zero within {min_distance:g} of the contour near {where}; shift rectangle")


def count_zeros_rectangle(
    rect: tuple[float, float, float, float], cfg: EvalConfig = DEFAULT_CONFIG
) -> ZeroCountResult:
    """Number of zeros inside rect = (sigma_lo, sigma_hi, t_lo, t_hi) by the argument principle."""
    s_lo, s_hi, t_lo, t_hi = (float(v) for v in rect)
    if not (s_lo < s_hi and t_lo < t_hi):
        raise DomainError("rectangle must have sigma_lo < sigma_hi and t_lo < t_hi")
    if t_lo <= 0:
        raise DomainError("t_lo must be positive (keeps s = 1 and the trivial zeros outside)")
    corners = [complex(s_lo, t_lo), complex(s_hi, t_lo), complex(s_hi, t_hi), complex(s_lo, t_hi)]
    corners.append(corners[0])
    _check_boundary(corners, cfg)
    edges = list(zip(corners[:-1], corners[1:]))
    parts = ordered_map(lambda e: _edge_integral(e[0], e[1], cfg), edges)
    total = sum(p[0] for p in parts)
    raw = (total / (2j * math.pi)).real
    count = round(raw)
    if abs(total / (2j * math.pi) - count) > 0.25:
        raise ToleranceError(f"contour integral {raw:.4f} does not round unambiguously")
    return ZeroCountResult(count=int(count), contour_integral=complex(total), rectangle=(s_lo, s_hi, t_lo, t_hi))
