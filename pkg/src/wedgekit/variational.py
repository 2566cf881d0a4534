"""The hook integral, the per-cell correction c(x) and the typical dimension.

Contours are in the area-1/2 normalization of :mod:`wedgekit.limits`; in it

    log H(lambda) ~ (n/2) log n + n J(L) + sum_cells c(h),
    J(L) = int int_{s>t} log(2(s-t)) (1 - L'(s)) (1 + L'(t)) ds dt,

so that J(Plancherel) = -1/2.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
from scipy import integrate

from .limits import C_UNIFORM, PLANCHEREL, UNIFORM, LimitShape
from .partitions import Partition, hook_length

__all__ = [
    "hook_integral",
    "hook_correction_c",
    "entropy_S",
    "typical_dimension_constant",
    "typical_dimension_closed_form",
    "euler_lagrange_residual",
    "directional_derivatives",
    "plancherel_directional_derivative",
    "cell_hook_integral",
    "hook_lemma_residuals",
    "staircase",
    "staircase_remainder",
    "staircase_bound",
]

_TOL = dict(epsabs=1e-13, epsrel=1e-12, limit=200)


def _slope_fn(shape) -> tuple[Callable[[float], float], float]:
    """(slope, half-width of the region where the slope differs from sign(s))."""
    if isinstance(shape, LimitShape):
        # beyond 20/c the uniform slope is sign(s) to double precision
        reach = 1.0 if shape.kind == "plancherel" else 20 / C_UNIFORM
        return shape.slope_scalar, reach
    slope, reach = shape
    return slope, float(reach)


def _correlation(slope, reach: float, r: float, tol: dict = _TOL) -> float:
    """C(r) = int (1 - L'(t + r)) (1 + L'(t)) dt over the active window."""
    lo, hi = -reach, reach - r
    if hi <= lo:
        return 0.0
    f = lambda t: (1 - slope(t + r)) * (1 + slope(t))
    return integrate.quad(f, lo, hi, **tol)[0]


def hook_integral(shape, kernel_log_scale: float = 2.0, tol: float = 1e-13) -> float:
    """J = int_{s>t} log(a (s - t)) (1 - L'(s)) (1 + L'(t)) ds dt with a = 2.

    ``shape`` is a :class:`LimitShape` or a pair (slope function, reach)
    where the slope equals sign(s) for |s| >= reach.  The diagonal log
    singularity is handled by the substitution r = s - t and a log-weighted
    rule on the outer integral.
    """
    slope, reach = _slope_fn(shape)
    for s in (-reach - 1, reach + 1):
        if abs(slope(s) - math.copysign(1, s)) > 1e-15:
            raise ValueError("contour is not |s| outside the stated support")
    opts = dict(_TOL, epsabs=tol, epsrel=max(tol * 10, 1e-12))
    C = lambda r: _correlation(slope, reach, r, opts)
    top = 2 * reach
    mass = integrate.quad(C, 0, top, **opts)[0]
    # split so the log weight sees the singular end only
    logpart = integrate.quad(C, 0, 1.0, weight="alg-loga", wvar=(0, 0), **opts)[0]
    if top > 1:
        logpart += integrate.quad(lambda r: C(r) * math.log(r), 1.0, top, **opts)[0]
    return math.log(kernel_log_scale) * mass + logpart


def _P(y: float) -> float:
    return y * math.log(y) - y if y > 0 else 0.0


def _Q(y: float) -> float:
    return y * y / 2 * math.log(y) - y * y / 4 if y > 0 else 0.0


def hook_correction_c(x: float) -> float:
    """c(x) = (1/2) sum_k 1/(k(k+1)(2k+1) x^(2k)), x >= 1.

    Equivalently log x minus the mean of log(x - u - v) over the unit square
    centred at 0; that closed form is used for x < 2 where the series is slow.
    """
    if x < 1:
        raise ValueError("c(x) needs x >= 1")
    if x < 2:
        G = (
            (1 - x) * (_P(x) - _P(x - 1))
            + (_Q(x) - _Q(x - 1))
            + (1 + x) * (_P(x + 1) - _P(x))
            - (_Q(x + 1) - _Q(x))
        )
        return math.log(x) - G
    total, k, y = 0.0, 1, 1 / (x * x)
    yk = y
    while True:
        term = yk / (k * (k + 1) * (2 * k + 1))
        total += term
        if term < 1e-18 * total:
            return total / 2
        k += 1
        yk *= y


def entropy_S(p: float) -> float:
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    return -sum(t * math.log(t) for t in (p, 1 - p) if t > 0)


def typical_dimension_constant(kind: str = "uniform", convention: str = "display") -> float:
    """const in log dim(lambda) ~ lead - const n for a typical lambda.

    ``display``: lead is n log n and const = 1 + (1/2) int int log(sqrt2 (s-t))
    (1 - L'(s)) (1 + L'(t)) at the area-1/2 curve L.  This is the hook-integral
    form with its weight 1/2 and kernel sqrt 2 evaluated on that curve; since
    (1 - L')(1 + L') has mass 1 there, it accounts for only n/2 cells.

    ``consistent``: lead is (1/2) n log n and const = 1 + J.  Here
    log dim = log n! - log H ~ n log n - n - (n/2) log n - n J.  Plancherel
    gives 1/2, the known value.
    """
    shape = {"uniform": UNIFORM, "plancherel": PLANCHEREL}.get(kind)
    if shape is None:
        raise ValueError(f"unknown shape {kind!r}")
    if convention == "display":
        return 1 + hook_integral(shape, kernel_log_scale=math.sqrt(2)) / 2
    if convention == "consistent":
        return 1 + hook_integral(shape)
    raise ValueError(f"unknown convention {convention!r}")


def typical_dimension_closed_form(convention: str = "consistent") -> float:
    """The uniform constant in closed form, A the Glaisher constant.

    consistent: 2 + log 2 + (1/2) log 6 - 12 log A.
    display:    3/2 + (1/4) log 2 + (1/4) log 6 - 6 log A.

    For L' = tanh(cs) the correlation is C(r) = 4r/(e^(2cr) - 1), whose
    log-moment is a zeta derivative.
    """
    # log A = 1/12 - zeta'(-1)
    log_glaisher = 1 / 12 + 0.16542114370045092
    if convention == "consistent":
        return 2 + math.log(2) + 0.5 * math.log(6) - 12 * log_glaisher
    if convention == "display":
        return 1.5 + 0.25 * math.log(2) + 0.25 * math.log(6) - 6 * log_glaisher
    raise ValueError(f"unknown convention {convention!r}")


def euler_lagrange_residual(shape: LimitShape = UNIFORM, lo: float = -5, hi: float = 5, step: float = 1e-3) -> float:
    """sup |L'' - c (1 - L'^2)| on a grid, c = pi/sqrt 6."""
    s = np.arange(lo, hi + step / 2, step)
    return float(np.max(np.abs(shape.curvature(s) - C_UNIFORM * (1 - shape.slope(s) ** 2))))


def _bump(center: float, width: float):
    """Derivative of a smooth bump supported in [center - width, center + width]."""

    def h(s: float) -> float:
        x = (s - center) / width
        if abs(x) >= 1:
            return 0.0
        return math.exp(-1 / (1 - x * x)) * (-2 * x / (1 - x * x) ** 2) / width

    return h


def directional_derivatives(slope, reach: float, seed: int, count: int = 5, eps: float = 0.05) -> list[float]:
    """Central differences of J along L + eps b, b a random smooth bump in (-0.8, 0.8).

    The perturbation changes the slope by eps b'.  J is quadratic in eps, so
    the central difference is exact up to quadrature error.
    """
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        width = float(rng.uniform(0.1, 0.4))
        center = float(rng.uniform(-0.8 + width, 0.8 - width))
        amp = float(rng.uniform(0.2, 1.0)) * (1 if rng.random() < 0.5 else -1)
        g = _bump(center, width)

        def J(e: float) -> float:
            return hook_integral((lambda s: slope(s) + e * amp * g(s), reach), tol=1e-9)

        out.append((J(eps) - J(-eps)) / (2 * eps))
    return out


def plancherel_directional_derivative(seed: int, count: int = 5, eps: float = 0.05) -> list[float]:
    return directional_derivatives(PLANCHEREL.slope_scalar, 1.0, seed, count, eps)


# -- per-cell lemma --------------------------------------------------------------


def cell_hook_integral(lam: Partition, row: int, col: int) -> float:
    """n * int over the cell's rectangle of log(sqrt(n) h_F), by 2-d quadrature.

    Coordinates are in cell units, so the factor n and sqrt(n) cancel against
    the rescaling; h_F(X, Y) = (lam_row - X) + (lam'_col - Y).
    """
    arm_end = lam.part(row)
    leg_end = lam.conjugate().part(col)
    f = lambda Y, X: math.log((arm_end - X) + (leg_end - Y))
    val, _ = integrate.dblquad(f, col - 1, col, row - 1, row, epsabs=1e-13, epsrel=1e-13)
    return val


def hook_lemma_residuals(lam: Partition) -> list[float]:
    """log h - integral - c(h) for every cell."""
    out = []
    for cell in lam.cells():
        h = hook_length(lam, cell)
        out.append(math.log(h) - cell_hook_integral(lam, cell[0], cell[1]) - hook_correction_c(h))
    return out


def staircase(k: int) -> Partition:
    return Partition(tuple(range(k, 0, -1)))


def staircase_bound(terms: int = 100000) -> float:
    """sqrt 2 * sum_j c(2j - 1), an upper bound for every staircase remainder.

    The staircase of height k has k - j + 1 hooks equal to 2j - 1 and
    k / sqrt(k(k+1)/2) < sqrt 2; the tail beyond ``terms`` is below 1/(48 terms).
    """
    return math.sqrt(2) * (sum(hook_correction_c(2 * j - 1) for j in range(1, terms + 1)) + 1 / (48 * terms))


def staircase_remainder(k: int) -> float:
    """sum_cells c(h) / sqrt(n) for the staircase (k, k-1, ..., 1)."""
    lam = staircase(k)
    return sum(hook_correction_c(hook_length(lam, c)) for c in lam.cells()) / math.sqrt(lam.size())
