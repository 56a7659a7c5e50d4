"""Euler-Maclaurin identities, the Todd kernel, Abel-Plana sums and M(theta).

The Todd kernel T(x) = 1/(e^{2 pi x} - 1) has a simple pole at x = 0, so
half-line integrals against it are split at ``KERNEL_SPLIT``; near zero the
kernel comes from its Laurent series and Gauss-Kronrod nodes never land on
the origin.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError, ToleranceError, TruncationError
from .quadrature import gauss_kronrod, integrate_half_line

TWO_PI = 2.0 * math.pi
KERNEL_SPLIT = 1e-3
_SERIES_CUTOFF = 1e-4
_KERNEL_FLOOR = 1e-16
# Where 1/(e^{2 pi x} - 1) drops below the floor.
KERNEL_CUTOFF = math.log1p(1.0 / _KERNEL_FLOOR) / TWO_PI

ArrayFunc = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Integrand1D:
    """f on [0, 1] (``domain="unit"``) or [0, inf) with optional derivatives.

    Callables take and return numpy arrays.
    """

    f: ArrayFunc
    df: ArrayFunc | None = None
    d2f: ArrayFunc | None = None
    domain: str = "unit"


class MThetaVariant(str, enum.Enum):
    ABEL_PLANA_0 = "abel_plana_0"
    ABEL_PLANA_STRIP = "abel_plana_strip"
    EULER_MACLAURIN_ALT = "euler_maclaurin_alt"


@dataclass(frozen=True)
class MThetaReport:
    variant: MThetaVariant
    value: complex
    quad_error_estimate: float
    derivative_path: str | None = None


def _unit_integral(func: ArrayFunc, a: float, b: float, cfg: EvalConfig) -> complex:
    return gauss_kronrod(func, a, b, abs_tol=cfg.quad_abs_tol, rel_tol=cfg.quad_rel_tol).value


def em_identity_residual(f: Integrand1D, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """|int_0^1 f'(t)(t - 1/2) dt - [(f(0) + f(1))/2 - int_0^1 f dt]|."""
    if f.df is None:
        raise DomainError("em_identity_residual needs the derivative f'")
    lhs = _unit_integral(lambda t: f.df(t) * (t - 0.5), 0.0, 1.0, cfg)
    ends = np.asarray(f.f(np.array([0.0, 1.0])))
    rhs = 0.5 * (ends[0] + ends[1]) - _unit_integral(f.f, 0.0, 1.0, cfg)
    return float(abs(lhs - rhs))


def revised_em_residual(f: Integrand1D, t_star: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Residual of the endpoint-free form of the unit-interval identity.

    Evaluates |(1/2)(int_{t*}^1 f' - int_0^{t*} f') + f(t*) - int_0^1 f
    - int_0^1 f'(t)(t - 1/2) dt| without ever calling f at 0 or 1.
    """
    if not 0.0 < t_star < 1.0:
        raise DomainError("t_star must lie strictly inside (0, 1)")
    if f.df is None:
        raise DomainError("revised_em_residual needs the derivative f'")
    upper = _unit_integral(f.df, t_star, 1.0, cfg)
    lower = _unit_integral(f.df, 0.0, t_star, cfg)
    f_star = complex(np.asarray(f.f(np.array([t_star])))[0])
    mean = _unit_integral(f.f, 0.0, 1.0, cfg)
    weighted = _unit_integral(lambda t: f.df(t) * (t - 0.5), 0.0, 1.0, cfg)
    return float(abs(0.5 * (upper - lower) + f_star - mean - weighted))


def todd_kernel(x):
    """T(x) = 1/(e^{2 pi x} - 1) for x > 0 (scalar or array)."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0) or np.any(~np.isfinite(arr)):
        raise DomainError("todd_kernel has a simple pole at 0; need finite x > 0")
    y = TWO_PI * arr
    with np.errstate(over="ignore"):
        direct = 1.0 / np.expm1(y)
    series = 1.0 / y - 0.5 + y / 12.0 - y**3 / 720.0
    out = np.where(arr < _SERIES_CUTOFF, series, direct)
    return float(out) if out.ndim == 0 else out


def todd_series(j: int, x: float, terms: int, max_tail: float = 1e-12) -> float:
    """Partial sum of (-1)^j sum_k e^{-2 pi k x} / (2 pi k)^j with a tail check.

    The tail after ``terms`` is bounded geometrically by
    e^{-2 pi (terms+1) x} / ((2 pi (terms+1))^j (1 - e^{-2 pi x})).
    """
    if x <= 0:
        raise DomainError("todd_series needs x > 0")
    if j < 0 or terms < 1:
        raise DomainError("need j >= 0 and terms >= 1")
    k = np.arange(1, terms + 1, dtype=float)
    total = float(np.sum(np.exp(-TWO_PI * k * x) / (TWO_PI * k) ** j))
    nxt = terms + 1
    tail = math.exp(-TWO_PI * nxt * x) / ((TWO_PI * nxt) ** j * -math.expm1(-TWO_PI * x))
    if tail > max_tail:
        raise TruncationError(f"tail bound {tail:.3e} exceeds {max_tail:g}; use more terms")
    return (-1) ** j * total


def kernel_integral(h: ArrayFunc, cfg: EvalConfig = DEFAULT_CONFIG) -> tuple[complex, float]:
    """int_0^inf h(x) / (e^{2 pi x} - 1) dx for h vanishing at 0.

    Truncated where the kernel times |h| falls below 1e-16. Returns
    (value, error estimate).
    """
    upper = KERNEL_CUTOFF
    while abs(complex(np.asarray(h(np.array([upper])))[0])) * todd_kernel(upper) > _KERNEL_FLOOR:
        upper += 1.0
        if upper > 60.0:
            raise DomainError("integrand outgrows the kernel; growth condition violated")

    def integrand(x: np.ndarray) -> np.ndarray:
        return np.asarray(h(x)) * todd_kernel(x)

    try:
        near = gauss_kronrod(integrand, 0.0, KERNEL_SPLIT, abs_tol=cfg.quad_abs_tol, rel_tol=cfg.quad_rel_tol)
        far = gauss_kronrod(
            integrand,
            KERNEL_SPLIT,
            upper,
            abs_tol=cfg.quad_abs_tol,
            rel_tol=cfg.quad_rel_tol,
            breakpoints=tuple(float(b) for b in range(1, int(upper) + 1)),
        )
    except ToleranceError as exc:
        raise DomainError(f"kernel integral does not converge: {exc}") from exc
    return near.value + far.value, near.error + far.error


def kernel_sine_integral(a: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """int_0^inf sin(a b) / (e^{2 pi b} - 1) db for a >= 0."""
    if a < 0:
        raise DomainError("kernel_sine_integral needs a >= 0")
    if a == 0:
        return 0.0
    value, _ = kernel_integral(lambda b: np.sin(a * b), cfg)
    return float(value.real)


def kernel_sine_closed_form(a: float) -> float:
    """(1/4) coth(a/2) - 1/(2a), the closed form of kernel_sine_integral."""
    if a <= 0:
        raise DomainError("closed form needs a > 0")
    return 0.25 / math.tanh(0.5 * a) - 0.5 / a


def abel_plana_sum(f: ArrayFunc, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """sum_{n>=0} f(n) as f(0)/2 + int_0^inf f + i int_0^inf [f(ix) - f(-ix)] T(x) dx.

    ``f`` must accept complex arrays; it should be real on the real axis.
    """
    f0 = complex(np.asarray(f(np.array([0.0 + 0.0j])))[0])
    try:
        body = integrate_half_line(
            lambda x: f(x.astype(complex)), abs_tol=cfg.quad_abs_tol, rel_tol=cfg.quad_rel_tol
        ).value
    except ToleranceError as exc:
        raise DomainError(f"integral of f over the half line diverges: {exc}") from exc
    boundary, _ = kernel_integral(lambda x: f(1j * x) - f(-1j * x), cfg)
    return float((0.5 * f0 + body + 1j * boundary).real)


def lattice_sum(theta, terms: int) -> tuple[np.ndarray | float, float]:
    """Truncated sum_k (e^{-2 pi k i theta} + e^{2 pi k i theta}) / (2 pi k)^2.

    Returns (partial sum, tail bound 2 / (4 pi^2 terms)).
    """
    th = np.asarray(theta, dtype=float)
    k = np.arange(1, terms + 1, dtype=float)
    vals = (2.0 * np.cos(TWO_PI * np.multiply.outer(th, k)) / (TWO_PI * k) ** 2).sum(axis=-1)
    return vals, 2.0 / (4.0 * math.pi**2 * terms)


def lattice_sum_closed(theta):
    """Exact value of the full lattice sum: B_2({theta}) / 2 with B_2(x) = x^2 - x + 1/6."""
    x = np.mod(np.asarray(theta, dtype=float), 1.0)
    return 0.5 * (x * x - x + 1.0 / 6.0)


def _central_diff(func: ArrayFunc, order: int, h: float = 1e-4) -> ArrayFunc:
    if order == 1:
        return lambda x: (np.asarray(func(x + h)) - np.asarray(func(x - h))) / (2.0 * h)
    return lambda x: (np.asarray(func(x + h)) - 2.0 * np.asarray(func(x)) + np.asarray(func(x - h))) / (h * h)


def _alt_em_integral(d2f: ArrayFunc, tol: float, cfg: EvalConfig, max_panels: int = 10000) -> tuple[complex, float]:
    # int_0^inf B2({theta})/2 * f''(theta): one panel per unit interval
    # (kinks of the periodic Bernoulli polynomial sit at the integers).
    def integrand(x: np.ndarray) -> np.ndarray:
        return lattice_sum_closed(x) * np.asarray(d2f(x))

    total = 0j
    err = 0.0
    quiet = 0
    for k in range(max_panels):
        res = gauss_kronrod(integrand, float(k), float(k + 1), abs_tol=tol * 1e-2, rel_tol=cfg.quad_rel_tol)
        total += res.value
        err += res.error
        edge = abs(complex(np.asarray(d2f(np.array([float(k + 1)])))[0]))
        if abs(res.value) < tol and edge / 12.0 < tol:
            quiet += 1
            if quiet >= 3:
                return total, err
        else:
            quiet = 0
    raise ToleranceError("alternative Euler-Maclaurin integral did not settle")


def m_theta(
    f: Integrand1D | ArrayFunc,
    variant: MThetaVariant | str,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> MThetaReport:
    """Boundary term M(theta) of the Abel-Plana formula in one of three forms.

    ``abel_plana_0``:       i int_0^inf [f(i t) - f(-i t)] T(t) dt
    ``abel_plana_strip``:   same with [f(1 + i t) - f(1 - i t)] subtracted
    ``euler_maclaurin_alt``: (f'(1) - f'(0))/12 - int_0^inf lattice(t) f''(t) dt
    """
    variant = MThetaVariant(variant)
    integrand = f if isinstance(f, Integrand1D) else Integrand1D(f=f)
    fn = integrand.f

    if variant is MThetaVariant.ABEL_PLANA_0:
        val, err = kernel_integral(lambda t: fn(1j * t) - fn(-1j * t), cfg)
        return MThetaReport(variant, 1j * val, err)
    if variant is MThetaVariant.ABEL_PLANA_STRIP:
        val, err = kernel_integral(
            lambda t: (fn(1j * t) - fn(-1j * t)) - (fn(1.0 + 1j * t) - fn(1.0 - 1j * t)), cfg
        )
        return MThetaReport(variant, 1j * val, err)

    analytic = integrand.df is not None and integrand.d2f is not None
    df = integrand.df if integrand.df is not None else _central_diff(fn, 1)
    d2f = integrand.d2f if integrand.d2f is not None else _central_diff(fn, 2)
    ends = np.asarray(df(np.array([0.0, 1.0])))
    # Second differences with step 1e-4 carry ~1e-8 rounding noise.
    tol = cfg.quad_abs_tol if analytic else max(cfg.quad_abs_tol, 1e-7)
    integral, err = _alt_em_integral(d2f, tol, cfg)
    value = (ends[1] - ends[0]) / 12.0 - integral
    return MThetaReport(variant, complex(value), err, "analytic" if analytic else "finite_difference")
