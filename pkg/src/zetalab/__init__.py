"""Numerical checks of zeta-function and prime-distribution formulas.

Zeta evaluation (Euler-Maclaurin, accelerated eta series, functional
equation), zero counting and location on the critical line, Abel-Plana and
Euler-Maclaurin summation identities, prime/twin-prime formula evaluators with
a sieve oracle, and a claim ledger that records residuals and verdicts.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .config import DEFAULT_CONFIG, EvalConfig
from .critical_line import ZeroCandidate, rs_theta, scan_zeros, verify_claimed_zero, z_function
from .errors import (
    AccuracyError,
    BoundaryError,
    CapabilityError,
    DomainError,
    PoleError,
    ToleranceError,
    TruncationError,
    ZetaLabError,
)
from .numerics import ComplexValue, bernoulli, log_gamma
from .primes import (
    PrimeRelationRow,
    TwinPairRow,
    b_of,
    chi_model,
    delta_gamma_relation,
    delta_q_relation,
    gamma_of,
    q_of,
    q_of_b,
    sieve_primes,
    twin_pairs,
    twin_relation_residual,
)
from .records import ClaimRecord, Verdict
from .summation import (
    Integrand1D,
    MThetaVariant,
    abel_plana_sum,
    em_identity_residual,
    kernel_sine_integral,
    m_theta,
    revised_em_residual,
    todd_kernel,
    todd_series,
)
from .zeta import (
    ZeroCountResult,
    count_zeros_rectangle,
    zeta_derivative,
    zeta_em,
    zeta_eta,
    zeta_functional,
)

__all__ = [
    "__version__",
    "AccuracyError",
    "BoundaryError",
    "CapabilityError",
    "ClaimRecord",
    "ComplexValue",
    "DEFAULT_CONFIG",
    "DomainError",
    "EvalConfig",
    "Integrand1D",
    "MThetaVariant",
    "PoleError",
    "PrimeRelationRow",
    "ToleranceError",
    "TruncationError",
    "TwinPairRow",
    "Verdict",
    "ZeroCandidate",
    "ZeroCountResult",
    "ZetaLabError",
    "abel_plana_sum",
    "b_of",
    "bernoulli",
    "chi_model",
    "count_zeros_rectangle",
    "delta_gamma_relation",
    "delta_q_relation",
    "em_identity_residual",
    "gamma_of",
    "kernel_sine_integral",
    "log_gamma",
    "m_theta",
    "q_of",
    "q_of_b",
    "revised_em_residual",
    "rs_theta",
    "scan_zeros",
    "sieve_primes",
    "todd_kernel",
    "todd_series",
    "twin_pairs",
    "twin_relation_residual",
    "verify_claimed_zero",
    "z_function",
    "zeta_derivative",
    "zeta_em",
    "zeta_eta",
    "zeta_functional",
]
