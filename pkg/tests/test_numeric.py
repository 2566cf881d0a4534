import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from wedgekit.numeric import (
    NumericEvaluator,
    eta_numeric,
    lemma_theta1_ratio,
    lemma_theta2_ratio,
    theta_numeric,
    theta_prime_zero,
)


def oracle_product(u, h):
    q, x = mpmath.e ** (-h), mpmath.e ** mpmath.mpc(u)
    return complex(
        (mpmath.sqrt(x) - 1 / mpmath.sqrt(x)) * mpmath.qp(q * x, q) * mpmath.qp(q / x, q) / mpmath.qp(q, q) ** 2
    )


def oracle_jacobi(u, h):
    q = mpmath.e ** (-h)
    eta = q ** (mpmath.mpf(1) / 24) * mpmath.qp(q, q)
    return complex(1j * mpmath.jtheta(1, -1j * mpmath.mpc(u) / 2, mpmath.sqrt(q)) / eta**3)


POINTS = [(0.3 + 0.2j, 0.5), (-0.7 + 1j, 1.0), (0.1, 2.0), (0.05 + 3j, 0.1), (1.2 - 0.4j, 0.3)]


@pytest.mark.parametrize("u,h", POINTS)
def test_against_mpmath(u, h):
    ref = oracle_product(u, h)
    assert abs(oracle_jacobi(u, h) - ref) <= 1e-12 * abs(ref)
    assert abs(theta_numeric(u, h) - ref) <= 1e-10 * abs(ref)


@given(st.floats(-2, 2), st.floats(-3, 3), st.floats(0.3, 3.0))
def test_methods_agree_on_overlap(re, im, h):
    u = complex(re, im)
    a = theta_numeric(u, h, "direct")
    b = theta_numeric(u, h, "transformed")
    # theta vanishes at u = 0, so allow a tiny absolute floor
    assert abs(a - b) <= 1e-9 * abs(a) + 1e-14


def test_method_guards():
    with pytest.raises(ValueError):
        theta_numeric(0.1, 0.01, "direct")
    with pytest.raises(ValueError):
        theta_numeric(0.1, 5.0, "transformed")
    with pytest.raises(ValueError):
        NumericEvaluator("bogus")(0.1, 1.0)
    with pytest.raises(ValueError):
        theta_numeric(0.1, 0.0)


@pytest.mark.parametrize("h", [2.0, 0.5, 0.1, 0.02])
def test_unit_derivative(h):
    assert abs(theta_prime_zero(h) - 1) < 1e-8


@pytest.mark.parametrize("h,method", [(2.0, "direct"), (0.5, "transformed"), (0.05, "transformed")])
def test_unit_derivative_finite_difference(h, method):
    d = 1e-4 * h
    fd = (theta_numeric(d, h, method) - theta_numeric(-d, h, method)).real / (2 * d)
    assert abs(fd - 1) < 1e-6


def test_eta_numeric():
    q = mpmath.e ** (-0.4)
    assert abs(eta_numeric(0.4) - float(q ** (mpmath.mpf(1) / 24) * mpmath.qp(q, q))) < 1e-14


@pytest.mark.parametrize("h", [0.2, 0.1, 0.05])
def test_theta1_lemma(h):
    assert abs(lemma_theta1_ratio(0.37, h) - 1) < 1e-6


def test_theta2_lemma_corrected_form_converges():
    errs = []
    for h in (0.4, 0.2, 0.1, 0.05):
        u = 0.3 * h + 2j * math.pi * 0.49
        errs.append(abs(lemma_theta2_ratio(u, h) - 1))
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 1e-3


def test_theta2_lemma_shifted_form_diverges():
    ratios = []
    for h in (0.4, 0.2, 0.1, 0.05):
        u = 0.3 * h + 2j * math.pi * 0.49
        ratios.append(abs(lemma_theta2_ratio(u, h, printed=True)))
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] < 1e-30
