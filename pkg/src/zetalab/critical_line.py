"""Zeros on the critical line via the Hardy Z function.

Z(t) = e^{i theta(t)} zeta(1/2 + i t) is real for real t, so its sign
changes bracket zeros of zeta on Re(s) = 1/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import AccuracyError, DomainError, ToleranceError
from .numerics import LOG_PI, log_gamma
from .parallel import ordered_map
from .records import ClaimRecord, Verdict
from .zeta import count_zeros_rectangle, zeta_em, zeta_em_array, zeta_eta

ZERO_VERDICT_THRESHOLD = 1e-6
AGREEMENT_REQUIRED = 1e-8
Z_WITNESS_LIMIT = 1e-6
BRACKET_WIDTH = 1e-10
_CHUNK = 200


@dataclass(frozen=True)
class ZeroCandidate:
    t: float
    bracket: tuple[float, float]
    residual: float
    refine_iters: int


def rs_theta(t: float) -> float:
    """Riemann-Siegel theta: Im ln Gamma(1/4 + i t/2) - (t/2) ln pi."""
    t = float(t)
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * LOG_PI


def z_value(t: float, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """e^{i theta(t)} zeta(1/2 + i t) before dropping the imaginary part."""
    return cmath.exp(1j * rs_theta(t)) * zeta_em(complex(0.5, t), cfg)


def z_function(t: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Hardy's Z(t); raises AccuracyError when Im part exceeds 1e-6."""
    if t < 0:
        raise DomainError("z_function needs t >= 0")
    v = z_value(t, cfg)
    if abs(v.imag) > Z_WITNESS_LIMIT:
        raise AccuracyError(f"Z({t}) has imaginary part {v.imag:.3e}")
    return v.real


def _z_array(ts: np.ndarray, cfg: EvalConfig) -> np.ndarray:
    zeta, _ = zeta_em_array(0.5 + 1j * ts, cfg)
    theta = np.array([rs_theta(t) for t in ts])
    v = np.exp(1j * theta) * zeta
    worst = float(np.max(np.abs(v.imag))) if v.size else 0.0
    if worst > Z_WITNESS_LIMIT:
        raise AccuracyError(f"Z imaginary part reached {worst:.3e} on the scan grid")
    return v.real


def _bisect(lo: float, hi: float, z_lo: float, cfg: EvalConfig) -> ZeroCandidate:
    iters = 0
    while hi - lo > BRACKET_WIDTH and iters < cfg.max_refine_iters:
        mid = 0.5 * (lo + hi)
        z_mid = z_value(mid, cfg).real
        if (z_mid < 0) == (z_lo < 0):
            lo, z_lo = mid, z_mid
        else:
            hi = mid
        iters += 1
    if hi - lo > BRACKET_WIDTH:
        raise ToleranceError(f"bisection stopped at width {hi - lo:.3e}")
    t = 0.5 * (lo + hi)
    return ZeroCandidate(t=t, bracket=(lo, hi), residual=abs(zeta_em(complex(0.5, t), cfg)), refine_iters=iters)


def scan_zeros(
    t_lo: float,
    t_hi: float,
    step: float | None = None,
    cfg: EvalConfig = DEFAULT_CONFIG,
    verify_count: bool = False,
) -> list[ZeroCandidate]:
    """All sign changes of Z on a grid over [t_lo, t_hi], refined by bisection.

    With ``verify_count`` the number found is compared against the
    argument-principle count on (0.1, 0.9, max(t_lo, 1), t_hi); a mismatch
    means the step is too coarse and raises ToleranceError.
    """
    step = cfg.scan_step if step is None else step
    if not 0 <= t_lo < t_hi:
        raise DomainError("need 0 <= t_lo < t_hi")
    if step <= 0:
        raise DomainError("step must be positive")
    n = math.ceil((t_hi - t_lo) / step)
    grid = t_lo + step * np.arange(n + 1, dtype=float)
    grid[-1] = t_hi
    chunks = [grid[i:i + _CHUNK + 1] for i in range(0, len(grid) - 1, _CHUNK)]
    values = ordered_map(lambda c: _z_array(c, cfg), chunks)
    z = np.concatenate([values[0]] + [v[1:] for v in values[1:]])

    brackets = [
        (float(grid[i]), float(grid[i + 1]), float(z[i]))
        for i in range(len(grid) - 1)
        if (z[i] < 0) != (z[i + 1] < 0)
    ]
    found = ordered_map(lambda b: _bisect(b[0], b[1], b[2], cfg), brackets)
    found.sort(key=lambda c: c.t)

    if verify_count:
        expected = count_zeros_rectangle((0.1, 0.9, max(t_lo, 1.0), t_hi), cfg).count
        if expected != len(found):
            raise ToleranceError(
                f"scan found {len(found)} zeros but the contour count is {expected}; step too coarse"
            )
    return found


def verify_claimed_zero(b: float, cfg: EvalConfig = DEFAULT_CONFIG, claim_id: str | None = None) -> ClaimRecord:
    """Test whether zeta(1/2 +- i b) vanishes, using two independent evaluators."""
    if b <= 0:
        raise DomainError("claimed ordinate must be positive")
    s = complex(0.5, b)
    em = zeta_em(s, cfg)
    eta = zeta_eta(s, cfg.eta_terms)
    agreement = abs(em - eta)
    if agreement > 1e-6:
        raise AccuracyError(f"zeta evaluators disagree by {agreement:.3e} at b = {b}")
    em_minus = zeta_em(s.conjugate(), cfg)
    residual = abs(em)
    residual_minus = abs(em_minus)
    if agreement > AGREEMENT_REQUIRED:
        verdict = Verdict.INDETERMINATE
    else:
        verdict = Verdict.SUPPORTED if residual <= ZERO_VERDICT_THRESHOLD else Verdict.REFUTED
    return ClaimRecord(
        claim_id=claim_id or f"ZERO.b={b:.12g}",
        inputs={"b": b, "sigma": 0.5},
        computed={"zeta_plus": em, "zeta_minus": em_minus},
        asserted="zeta(1/2 + i b) = 0 and zeta(1/2 - i b) = 0",
        residual=residual,
        verdict=verdict,
        evaluator_agreement=agreement,
        threshold=ZERO_VERDICT_THRESHOLD,
        extra={"residual_minus": residual_minus},
    )
