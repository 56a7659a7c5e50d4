from __future__ import annotations

import math

import pytest

from zetalab.config import EvalConfig
from zetalab.critical_line import rs_theta, scan_zeros, verify_claimed_zero, z_function, z_value
from zetalab.errors import DomainError, ToleranceError
from zetalab.records import Verdict
from zetalab.zeta import count_zeros_rectangle

# First ten ordinates, mpmath.zetazero at 30 digits.
ZERO_ORACLE = [
    14.1347251417346938, 21.0220396387715550, 25.0108575801456888, 30.4248761258595132,
    32.9350615877391897, 37.5861781588256713, 40.9187190121474952, 43.3270732809149995,
    48.0051508811671597, 49.7738324776723022,
]
THETA_FIRST_ZERO = -1.72867026358983962
Z_AT_10 = -1.54919454618102239
ZETA_HALF = -1.46035450880958681


def test_rs_theta_values():
    assert rs_theta(0.0) == 0.0
    assert rs_theta(14.1347251) == pytest.approx(THETA_FIRST_ZERO, abs=1e-10)


def test_rs_theta_odd():
    for t in (0.5, 3.0, 14.0, 77.7):
        assert rs_theta(-t) == pytest.approx(-rs_theta(t), abs=1e-12)


def test_z_function_values():
    assert z_function(0.0) == pytest.approx(ZETA_HALF, abs=1e-13)
    assert z_function(10.0) == pytest.approx(Z_AT_10, abs=1e-12)
    assert abs(z_function(14.1347251417346938)) < 1e-8


@pytest.mark.parametrize("t", [1.0, 5.0, 10.0, 14.1347, 25.0, 50.0])
def test_z_is_real(t):
    assert abs(z_value(t).imag) <= 1e-8


def test_z_function_domain():
    with pytest.raises(DomainError):
        z_function(-1.0)


def test_scan_below_first_zero_is_empty():
    assert scan_zeros(0.0, 10.0) == []


def test_scan_first_three():
    found = scan_zeros(0.0, 30.0)
    assert [round(c.t, 6) for c in found] == [round(t, 6) for t in ZERO_ORACLE[:3]]


def test_scan_first_ten_against_oracle_and_contour():
    found = scan_zeros(0.0, 50.0, verify_count=True)
    assert len(found) == 10
    for cand, ref in zip(found, ZERO_ORACLE):
        assert abs(cand.t - ref) < 1e-6
        lo, hi = cand.bracket
        assert lo < cand.t < hi and hi - lo <= 1e-10
        assert z_function(lo) * z_function(hi) < 0
        assert cand.residual <= 1e-8
    assert [c.t for c in found] == sorted(c.t for c in found)


@pytest.mark.parametrize("t_hi", [20.0, 30.0, 50.0])
def test_scan_count_matches_contour(t_hi):
    assert len(scan_zeros(0.0, t_hi)) == count_zeros_rectangle((0.1, 0.9, 1.0, t_hi)).count


def test_scan_coarse_step_is_flagged():
    with pytest.raises(ToleranceError):
        scan_zeros(0.0, 50.0, step=5.0, verify_count=True)


def test_scan_rejects_bad_ranges():
    with pytest.raises(DomainError):
        scan_zeros(10.0, 5.0)
    with pytest.raises(DomainError):
        scan_zeros(0.0, 5.0, step=0.0)


def test_scan_respects_refine_budget():
    with pytest.raises(ToleranceError):
        scan_zeros(10.0, 16.0, cfg=EvalConfig(max_refine_iters=3))


def test_verify_control_zero_supported():
    rec = verify_claimed_zero(14.1347251417)
    assert rec.verdict is Verdict.SUPPORTED
    assert rec.residual <= 1e-8
    assert rec.evaluator_agreement <= 1e-8


def test_verify_claimed_ordinate_is_measured():
    b = 4 * math.pi / math.log(2)
    rec = verify_claimed_zero(b)
    assert rec.verdict is Verdict.REFUTED
    assert rec.residual == pytest.approx(2.32388074351291846, abs=1e-10)


def test_verify_reflection_symmetry():
    b = 6 * math.pi / math.log(3)
    rec = verify_claimed_zero(b)
    assert abs(rec.residual - rec.extra["residual_minus"]) <= 1e-12


def test_verify_requires_positive_b():
    with pytest.raises(DomainError):
        verify_claimed_zero(0.0)
