from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from zetalab.errors import DomainError, TruncationError
from zetalab.summation import (
    Integrand1D,
    MThetaVariant,
    abel_plana_sum,
    em_identity_residual,
    kernel_integral,
    kernel_sine_closed_form,
    kernel_sine_integral,
    lattice_sum,
    lattice_sum_closed,
    m_theta,
    revised_em_residual,
    todd_kernel,
    todd_series,
)

# Offline mpmath oracles.
TODD_HALF = 0.0451657053636841150
TODD_ONE = 0.00187093659866064410
TODD_SERIES_1_1 = -0.000297490601558292039
KERNEL_SINE_LN2 = 0.0286524795555182963


def poly(coeffs):
    c = np.array(coeffs, dtype=float)
    dc = np.polynomial.polynomial.polyder(c) if len(c) > 1 else np.array([0.0])
    return Integrand1D(
        f=lambda t: np.polynomial.polynomial.polyval(t, c),
        df=lambda t: np.polynomial.polynomial.polyval(t, dc) + 0 * t,
    )


def expo(c):
    return Integrand1D(f=lambda t: np.exp(c * t), df=lambda t: c * np.exp(c * t))


@pytest.mark.parametrize(
    "f",
    [poly([3.0]), poly([0.0, 0.0, 1.0]), expo(1.0), poly([1.0, -2.0, 0.5, 3.0, 0.0, 0.0, -1.0]), expo(-3.0)],
    ids=["constant", "t^2", "exp", "degree6", "exp(-3t)"],
)
def test_em_identity_examples(f):
    assert em_identity_residual(f) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-5, 5, allow_nan=False), min_size=1, max_size=7))
def test_em_identity_polynomials(coeffs):
    assert em_identity_residual(poly(coeffs)) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(st.floats(-3, 3, allow_nan=False))
def test_em_identity_exponentials(c):
    assert em_identity_residual(expo(c)) <= 1e-9


def test_em_identity_needs_derivative():
    with pytest.raises(DomainError):
        em_identity_residual(Integrand1D(f=np.sin))


@pytest.mark.parametrize("f, t_star", [(poly([0.0, 0.0, 1.0]), 0.5), (poly([2.0]), 0.2), (expo(1.0), 0.3)])
def test_revised_em_examples(f, t_star):
    assert revised_em_residual(f, t_star) <= 1e-12


def test_revised_em_never_touches_endpoints():
    seen = []

    def guard(g):
        def wrapped(t):
            arr = np.atleast_1d(t)
            seen.extend(arr.tolist())
            if np.any((arr <= 0.0) | (arr >= 1.0)):
                raise AssertionError("endpoint sampled")
            return g(t)
        return wrapped

    f = Integrand1D(f=guard(lambda t: np.cos(3 * t)), df=guard(lambda t: -3 * np.sin(3 * t)))
    assert revised_em_residual(f, 0.4) <= 1e-12
    assert seen


@pytest.mark.parametrize("t_star", [0.0, 1.0, -0.1])
def test_revised_em_domain(t_star):
    with pytest.raises(DomainError):
        revised_em_residual(poly([1.0, 1.0]), t_star)


@pytest.mark.parametrize("x, expected", [(0.5, TODD_HALF), (1.0, TODD_ONE)])
def test_todd_kernel_values(x, expected):
    assert todd_kernel(x) == pytest.approx(expected, rel=1e-14)


def test_todd_kernel_laurent_limit():
    for x in (1e-5, 1e-7, 1e-9):
        assert x * todd_kernel(x) == pytest.approx(1.0 / (2 * math.pi), rel=1e-4)


def test_todd_kernel_series_branch_continuous():
    below, above = todd_kernel(0.99999e-4), todd_kernel(1.00001e-4)
    assert below > above
    assert abs(below - above) / above < 1e-4


@pytest.mark.parametrize("x", [0.0, -1.0])
def test_todd_kernel_domain(x):
    with pytest.raises(DomainError):
        todd_kernel(x)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.0])
def test_todd_series_order_zero_is_kernel(x):
    assert todd_series(0, x, 400) == pytest.approx(todd_kernel(x), abs=1e-12)


def test_todd_series_order_one():
    assert todd_series(1, 1.0, 20) == pytest.approx(TODD_SERIES_1_1, rel=1e-13)


def test_todd_series_decreases_in_x():
    vals = [abs(todd_series(2, x, 50)) for x in (0.5, 1.0, 2.0, 4.0)]
    assert vals == sorted(vals, reverse=True)


def test_todd_series_truncation():
    with pytest.raises(TruncationError):
        todd_series(0, 0.01, 5)
    with pytest.raises(DomainError):
        todd_series(0, 0.0, 5)


def test_todd_first_moment():
    value, _ = kernel_integral(lambda x: x)
    assert abs(value - 1.0 / 24.0) <= 1e-10


def test_kernel_integral_against_scipy():
    value, _ = kernel_integral(lambda x: np.sin(3 * x) * np.exp(-0.1 * x))
    ref, _ = integrate.quad(lambda x: math.sin(3 * x) * math.exp(-0.1 * x) / math.expm1(2 * math.pi * x), 0, 40, limit=200)
    assert abs(value - ref) < 1e-10


def test_kernel_integral_growth_violation():
    with pytest.raises(DomainError):
        kernel_integral(lambda x: np.exp(8.0 * x))


@pytest.mark.parametrize("a", [0.1, math.log(2), 1.0, 5.0, 50.0])
def test_kernel_sine_integral_closed_form(a):
    assert abs(kernel_sine_integral(a) - kernel_sine_closed_form(a)) <= 1e-10


def test_kernel_sine_integral_values():
    assert kernel_sine_integral(0.0) == 0.0
    assert kernel_sine_integral(math.log(2)) == pytest.approx(KERNEL_SINE_LN2, abs=1e-15)
    assert kernel_sine_integral(50.0) == pytest.approx(0.25 - 1 / 100, abs=1e-12)
    with pytest.raises(DomainError):
        kernel_sine_integral(-1.0)


@pytest.mark.parametrize(
    "f, expected",
    [
        (lambda z: np.exp(-z), 1.0 / (1.0 - math.exp(-1.0))),
        (lambda z: np.exp(-2.0 * z), 1.0 / (1.0 - math.exp(-2.0))),
        (lambda z: 1.0 / (z + 1.0) ** 2, math.pi**2 / 6),
    ],
    ids=["exp(-x)", "exp(-2x)", "1/(x+1)^2"],
)
def test_abel_plana_closed_forms(f, expected):
    assert abs(abel_plana_sum(f) - expected) <= 1e-8


@pytest.mark.parametrize(
    "f, terms",
    [(lambda z: np.exp(-z), 60), (lambda z: np.exp(-2.0 * z), 40)],
)
def test_abel_plana_direct_sum(f, terms):
    direct = float(np.sum(f(np.arange(terms, dtype=float))))
    assert abs(abel_plana_sum(f) - direct) <= 1e-8


def test_abel_plana_inverse_square_direct_sum_with_tail():
    n = np.arange(200000, dtype=float)
    partial = float(np.sum(1.0 / (n + 1.0) ** 2))
    tail = 1.0 / 200000.5  # integral estimate of the remainder
    assert abs(abel_plana_sum(lambda z: 1.0 / (z + 1.0) ** 2) - (partial + tail)) <= 1e-8


def test_abel_plana_divergent_integral():
    with pytest.raises(DomainError):
        abel_plana_sum(lambda z: 1.0 / (z + 1.0))


def test_lattice_sum_converges_to_closed_form():
    theta = np.array([0.0, 0.1, 0.37, 0.5, 2.25])
    partial, bound = lattice_sum(theta, 20000)
    assert np.all(np.abs(partial - lattice_sum_closed(theta)) <= bound)


def test_m_theta_examples():
    identity = Integrand1D(f=lambda z: z, df=lambda z: np.ones_like(z), d2f=lambda z: np.zeros_like(z))
    assert abs(m_theta(lambda z: np.ones_like(z), MThetaVariant.ABEL_PLANA_0).value) < 1e-15
    assert abs(m_theta(identity, "abel_plana_0").value + 1.0 / 12.0) < 1e-12
    assert abs(m_theta(identity, "abel_plana_strip").value) < 1e-15
    rep = m_theta(identity, "euler_maclaurin_alt")
    assert abs(rep.value) < 1e-15
    assert rep.derivative_path == "analytic"


def test_m_theta_finite_difference_path_flagged():
    f = Integrand1D(f=lambda z: np.exp(-z))
    analytic = Integrand1D(f=lambda z: np.exp(-z), df=lambda z: -np.exp(-z), d2f=lambda z: np.exp(-z))
    fd = m_theta(f, "euler_maclaurin_alt")
    ex = m_theta(analytic, "euler_maclaurin_alt")
    assert fd.derivative_path == "finite_difference"
    assert abs(fd.value - ex.value) < 1e-6
    assert ex.quad_error_estimate >= 0


@settings(max_examples=25, deadline=None)
@given(st.floats(0.1, 3.0, allow_nan=False), st.floats(-1.0, 1.0, allow_nan=False))
def test_m_theta_strip_agrees_with_origin_form_for_even_integrands(c, alpha):
    # f(1 + i t) = f(1 - i t) when f is even about z = 1.
    def f(z):
        return np.cos(c * (z - 1.0)) * np.exp(-0.5 * c * c) + alpha * (z - 1.0) ** 2 * 1e-3

    v16 = m_theta(f, MThetaVariant.ABEL_PLANA_0).value
    v17 = m_theta(f, MThetaVariant.ABEL_PLANA_STRIP).value
    assert abs(v16 - v17) < 1e-10
