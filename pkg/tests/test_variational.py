import math

import mpmath
import pytest

from conftest import P
from wedgekit.limits import PLANCHEREL, UNIFORM
from wedgekit.variational import (
    cell_hook_integral,
    directional_derivatives,
    entropy_S,
    euler_lagrange_residual,
    hook_correction_c,
    hook_integral,
    hook_lemma_residuals,
    plancherel_directional_derivative,
    staircase,
    staircase_bound,
    staircase_remainder,
    typical_dimension_closed_form,
    typical_dimension_constant,
)

def c_oracle(x):
    with mpmath.workdps(30):
        x = mpmath.mpf(x)
        return mpmath.nsum(lambda k: 1 / (k * (k + 1) * (2 * k + 1) * x ** (2 * k)), [1, mpmath.inf]) / 2


def test_c_at_one():
    assert hook_correction_c(1) == pytest.approx((3 - 4 * math.log(2)) / 2, abs=1e-15)
    assert float(c_oracle(1)) == pytest.approx((3 - 4 * math.log(2)) / 2, abs=1e-15)


@pytest.mark.parametrize("x", [1.0, 1.3, 1.99, 2.0, 3.0, 7.5, 40.0])
def test_c_against_series_oracle(x):
    ref = float(c_oracle(x))
    assert abs(hook_correction_c(x) - ref) < 1e-14 * max(ref, 1e-3)


def test_c_domain():
    with pytest.raises(ValueError):
        hook_correction_c(0.5)


def test_cell_lemma():
    lam = P(5, 4, 4, 2)
    assert max(abs(r) for r in hook_lemma_residuals(lam)) < 1e-10
    # without the correction the residual is visible
    assert abs(math.log(1) - cell_hook_integral(lam, 4, 2)) > 0.1


def test_entropy():
    assert entropy_S(0.5) == pytest.approx(math.log(2))
    assert entropy_S(0) == 0 == entropy_S(1)
    with pytest.raises(ValueError):
        entropy_S(1.5)


def test_euler_lagrange():
    assert euler_lagrange_residual() < 1e-10
    assert euler_lagrange_residual(PLANCHEREL, -0.9, 0.9) > 0.1


def test_plancherel_hook_integral():
    assert hook_integral(PLANCHEREL) == pytest.approx(-0.5, abs=1e-10)
    assert typical_dimension_constant("plancherel", "consistent") == pytest.approx(0.5, abs=1e-10)
    # the display form misses the known value 1/2, because it counts only n/2 cells
    assert abs(typical_dimension_constant("plancherel") - 0.5) > 0.05


def test_uniform_constant_closed_form():
    log_a = mpmath.log(mpmath.glaisher)
    consistent = float(2 + mpmath.log(2) + mpmath.log(6) / 2 - 12 * log_a)
    display = float(mpmath.mpf(3) / 2 + mpmath.log(2) / 4 + mpmath.log(6) / 4 - 6 * log_a)
    assert typical_dimension_closed_form() == pytest.approx(consistent, abs=1e-14)
    assert typical_dimension_closed_form("display") == pytest.approx(display, abs=1e-14)
    assert typical_dimension_constant("uniform", "consistent") == pytest.approx(consistent, abs=1e-10)
    assert typical_dimension_constant("uniform") == pytest.approx(display, abs=1e-10)
    assert consistent == pytest.approx(0.6039731907685585, abs=1e-14)
    assert display == pytest.approx(0.628699, abs=1e-6)


def test_display_and_consistent_relation():
    # display = 1/2 + consistent/2 - (1/4) log 2 holds for any shape with kernel mass 1
    for kind in ("uniform", "plancherel"):
        d = typical_dimension_constant(kind)
        c = typical_dimension_constant(kind, "consistent")
        assert d == pytest.approx(0.5 + c / 2 - math.log(2) / 4, abs=1e-10)
    with pytest.raises(ValueError):
        typical_dimension_constant("uniform", "other")
    with pytest.raises(ValueError):
        typical_dimension_closed_form("other")


def test_uniform_kernel():
    # C(r) = 4r/(e^{2cr} - 1) integrates to 4 zeta(2)/(2c)^2 = 1
    from scipy import integrate

    c = math.pi / math.sqrt(6)
    mass = integrate.quad(lambda r: 4 * r / math.expm1(2 * c * r), 0, 60, epsabs=1e-14)[0]
    assert mass == pytest.approx(1.0, abs=1e-12)


def test_hook_integral_rejects_bad_reach():
    with pytest.raises(ValueError):
        hook_integral((lambda s: 0.0, 1.0))
    with pytest.raises(ValueError):
        typical_dimension_constant("square")


@pytest.mark.slow
def test_plancherel_stationary():
    ds = plancherel_directional_derivative(seed=1, count=2)
    assert max(abs(d) for d in ds) < 1e-6


def test_stationarity_negative_control():
    clipped = lambda s: max(-1.0, min(1.0, s))
    ds = directional_derivatives(clipped, 1.0, seed=1, count=2)
    assert max(abs(d) for d in ds) > 1e-3


def test_staircase():
    assert staircase(3) == P(3, 2, 1)
    rems = [staircase_remainder(k) for k in (5, 13, 28)]
    assert rems == sorted(rems)
    bound = staircase_bound()
    assert bound == pytest.approx(0.18870, abs=1e-5)
    assert rems[-1] < bound
    assert rems[2] - rems[1] < rems[1] - rems[0]
