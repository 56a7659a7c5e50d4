"""CSV reproductions of the prime / twin-prime / claimed-zero tables and the
(b, gamma) -> q surface.

Every cell is computed from the formula functions in :mod:`zetalab.primes`
and :mod:`zetalab.critical_line`; nothing is typed in by hand. Floats are
written with 12 significant digits and lines end with a bare newline.
"""

from __future__ import annotations

import csv
import io
import math
from typing import Iterable, Sequence

import numpy as np

from . import critical_line, primes
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError

TABLE_IDS = ("T1", "T2", "T3", "T4", "T5", "T6", "T7")
PRIME_LIMIT = 100
TABLE2_Q1 = 3
TWIN_GAP = 2
CHI_DELTA_N = 2


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.12g}"
    return str(value)


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def _rel_ok(residual: float, scale: float) -> bool:
    return residual <= primes.CONSISTENCY_TOL * max(1.0, abs(scale))


def table1_rows() -> list[tuple]:
    """q = n = gamma over the primes below 100, checked against ln q = (n/gamma) ln n."""
    rows = []
    for i, q in enumerate(primes.sieve_primes(PRIME_LIMIT), start=1):
        n = gamma = q
        rhs = n / gamma * math.log(n)
        residual = primes.log_q_residual(q, n, gamma)
        rows.append((i, q, n, gamma, math.log(q), rhs, residual, _rel_ok(residual, rhs)))
    return rows


def table2_rows() -> list[tuple]:
    """Differences against q1 = 3 with n = gamma = q2, checked against the dq/q relation."""
    rows = []
    for i, q2 in enumerate(primes.sieve_primes(PRIME_LIMIT), start=1):
        d = q2 - TABLE2_Q1
        row = primes.make_row(q2, q2, q2, delta_n=d, delta_gamma=d, delta_q=d)
        lhs = d / q2
        rhs = primes.delta_q_rhs(q2, q2, d, d)
        rows.append((i, TABLE2_Q1, q2, q2, q2, d, d, d, lhs, rhs, primes.delta_q_relation(row), row.consistent))
    return rows


def _twin_rows(sign: int) -> list[tuple]:
    rows = []
    step = TWIN_GAP * sign
    for i, (lower, upper) in enumerate(primes.twin_pairs(PRIME_LIMIT), start=1):
        q = lower if sign > 0 else upper
        lhs = sign * 2.0 / q
        rhs = primes.twin_rhs(q, q, step, step)
        residual = primes.twin_relation_residual(q, q, q, step, step, sign)
        rows.append((i, q, q, q, step, step, lhs, rhs, residual, _rel_ok(residual, lhs)))
    return rows


def table3_rows() -> list[tuple]:
    """Lower twin members with dn = dgamma = 2 against 2/q1."""
    return _twin_rows(+1)


def table4_rows() -> list[tuple]:
    """Upper twin members with dn = dgamma = -2 against -2/q2."""
    return _twin_rows(-1)


def chi_candidates(limit: int = PRIME_LIMIT, delta_n: int = CHI_DELTA_N) -> list[primes.TwinPairRow]:
    """Every gamma whose chi is a positive integer with 6 chi + 1 below ``limit``."""
    out = []
    for gamma in range(1, delta_n * limit):
        row = primes.chi_model(gamma, delta_n)
        if row.candidate and row.upper < limit:
            out.append(row)
    return out


def table5_rows() -> list[tuple]:
    """Sieve-confirmed (6 chi - 1, 6 chi + 1) pairs with 6 chi + 1 < 100."""
    rows = []
    twins = [r for r in chi_candidates() if r.is_twin]
    for i, r in enumerate(twins, start=1):
        chi = int(r.chi)
        lam = r.lam
        lam_out = int(lam) if lam.denominator == 1 else float(lam)
        rows.append((i, chi, 6 * chi, r.lower, r.upper, lam_out, lam_out + 2, r.gamma, r.delta_n, r.is_twin))
    return rows


def b_symbolic(q: int) -> str:
    return f"{2 * q}pi/ln{q}"


def table6_rows() -> list[tuple]:
    """b = 2 pi gamma / ln n next to 2 pi n / ln q for q = n = gamma."""
    rows = []
    for i, q in enumerate(primes.sieve_primes(PRIME_LIMIT), start=1):
        b = primes.b_of(q, q)
        b_alt = primes.b_of_prime(q, q)
        rows.append((i, q, q, q, b_symbolic(q), b, b_alt, abs(b - b_alt)))
    return rows


def table7_rows(cfg: EvalConfig = DEFAULT_CONFIG) -> list[tuple]:
    """Claimed ordinates b = 2 pi q / ln q with measured |zeta(1/2 +- i b)|."""
    rows = []
    for i, q in enumerate(primes.sieve_primes(PRIME_LIMIT), start=1):
        b = primes.b_of_prime(q, q)
        rec = critical_line.verify_claimed_zero(b, cfg)
        rows.append((i, q, b_symbolic(q), b, rec.residual, rec.extra["residual_minus"], rec.verdict.value))
    return rows


_HEADERS = {
    "T1": ("row", "q", "n", "gamma", "ln_q", "n_over_gamma_ln_n", "residual", "consistent"),
    "T2": ("row", "q1", "q2", "n", "gamma", "delta_q", "delta_n", "delta_gamma", "lhs", "rhs", "residual", "consistent"),
    "T3": ("row", "q1", "n", "gamma", "delta_n", "delta_gamma", "lhs", "rhs", "residual", "consistent"),
    "T4": ("row", "q2", "n", "gamma", "delta_n", "delta_gamma", "lhs", "rhs", "residual", "consistent"),
    "T5": ("row", "chi", "six_chi", "six_chi_minus_1", "six_chi_plus_1", "two_delta", "two_delta_plus_2", "gamma", "delta_n", "is_twin"),
    "T6": ("row", "q", "n", "gamma", "b_symbolic", "b", "b_prime_form", "residual"),
    "T7": ("row", "q", "b_symbolic", "b", "abs_zeta_plus", "abs_zeta_minus", "verdict"),
}


def emit_table(table_id: str, cfg: EvalConfig = DEFAULT_CONFIG) -> str:
    """CSV text for one of T1..T7."""
    builders = {
        "T1": table1_rows,
        "T2": table2_rows,
        "T3": table3_rows,
        "T4": table4_rows,
        "T5": table5_rows,
        "T6": table6_rows,
        "T7": lambda: table7_rows(cfg),
    }
    key = table_id.upper()
    if key not in builders:
        raise DomainError(f"unknown table id {table_id!r}; expected one of {', '.join(TABLE_IDS)}")
    return to_csv(_HEADERS[key], builders[key]())


def figure1_rows(b_values: Sequence[float], gamma_values: Sequence[int]) -> list[tuple]:
    rows = []
    for b in b_values:
        if b <= 0:
            raise DomainError("b values must be positive")
        for g in gamma_values:
            try:
                ln_q = primes.log_q_of_b(float(b), float(g))
            except OverflowError:
                ln_q = math.inf
            rows.append((float(b), int(g), primes.q_of_b(float(b), float(g)), ln_q))
    return rows


def emit_figure1(
    b_min: float,
    b_max: float,
    b_steps: int,
    gamma_max: int = 20,
    gamma_min: int = 1,
) -> str:
    """q = exp((2 pi / b) exp(2 pi gamma / b)) on an evenly spaced b grid and integer gamma."""
    if b_steps < 1:
        raise DomainError("b_steps must be >= 1")
    if not 0 < b_min <= b_max:
        raise DomainError("need 0 < b_min <= b_max")
    if gamma_max < gamma_min:
        raise DomainError("gamma_max must be >= gamma_min")
    b_values = [b_min] if b_steps == 1 else np.linspace(b_min, b_max, b_steps).tolist()
    gammas = range(gamma_min, gamma_max + 1)
    return to_csv(("b", "gamma", "q", "ln_q"), figure1_rows(b_values, gammas))
