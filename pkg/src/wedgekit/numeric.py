"""Floating-point evaluation of theta(e^u, e^-h) for the q -> 1 asymptotics.

The ``transformed`` method uses the modular image

    theta(e^U, e^-h) = -i (h/2pi) e^(U^2/2h)
        * sum_k (-1)^k exp(-2 pi^2 k(k-1)/h + i pi U (1-2k)/h) / prod (1 - q'^n)^3,

with q' = e^(-4 pi^2/h); its k = 0, 1 terms alone give (h/pi) sin(pi U/h) e^(U^2/2h).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "NumericEvaluator",
    "theta_numeric",
    "theta_prime_zero",
    "eta_numeric",
    "lemma_theta1_ratio",
    "theta_minus_approx",
    "theta_minus_approx_printed",
    "lemma_theta2_ratio",
]

DIRECT_MIN_H = 0.05
TRANSFORMED_MAX_H = 4.0
SWITCH_H = 0.3


def _direct(u: complex, h: float) -> complex:
    q = math.exp(-h)
    x, xi = cmath.exp(u), cmath.exp(-u)
    out = cmath.exp(u / 2) - cmath.exp(-u / 2)
    big = max(abs(x), abs(xi))
    n = 1
    while True:
        qn = q**n
        out *= (1 - qn * x) * (1 - qn * xi) / (1 - qn) ** 2
        if qn * big < 1e-18:
            return out
        n += 1


def _euler_numeric(q: float) -> float:
    out, n = 1.0, 1
    while True:
        qn = q**n
        if qn < 1e-18:
            return out
        out *= 1 - qn
        n += 1


def _transformed(u: complex, h: float) -> complex:
    pi = math.pi
    total = 0j
    for k in range(-30, 32):
        expo = -2 * pi * pi * k * (k - 1) / h + 1j * pi * u * (1 - 2 * k) / h + u * u / (2 * h)
        if expo.real < -745:
            continue
        total += (-1) ** (k % 2) * cmath.exp(expo)
    qp = math.exp(-4 * pi * pi / h)
    return -1j * h / (2 * pi) * total / _euler_numeric(qp) ** 3


@dataclass(frozen=True)
class NumericEvaluator:
    """Stateless evaluator; ``method`` is 'direct', 'transformed' or 'auto'."""

    method: str = "auto"
    eps: float = 1e-12

    def __call__(self, u: complex, h: float) -> complex:
        if h <= 0:
            raise ValueError("h must be positive")
        method = self.method
        if method == "auto":
            method = "direct" if h >= SWITCH_H else "transformed"
        if method == "direct":
            if h < DIRECT_MIN_H:
                raise ValueError(f"direct series needs h >= {DIRECT_MIN_H}")
            return _direct(complex(u), h)
        if method == "transformed":
            if h > TRANSFORMED_MAX_H:
                raise ValueError(f"transformed series needs h <= {TRANSFORMED_MAX_H}")
            return _transformed(complex(u), h)
        raise ValueError(f"unknown method {self.method!r}")


def theta_numeric(u: complex, h: float, method: str = "auto") -> complex:
    return NumericEvaluator(method)(u, h)


def theta_prime_zero(h: float, method: str = "auto") -> float:
    """d/du theta(e^u) at u = 0, from the derivative of each series at 0.

    The product form gives prod (1 - q^n)^2 / (1 - q^n)^2 = 1.  The transformed
    form gives (1/2) sum_k (-1)^k (1 - 2k) q'^(k(k-1)/2) / prod (1 - q'^n)^3
    with q' = e^(-4 pi^2/h).  Both equal 1; a complex step would lose about
    eight digits to cancellation between the k = 0 and k = 1 terms.
    """
    ev = NumericEvaluator(method)
    ev(0.0, h)  # validates h and the method
    kind = method if method != "auto" else ("direct" if h >= SWITCH_H else "transformed")
    if kind == "direct":
        return 1.0
    qp = math.exp(-4 * math.pi**2 / h)
    total = 0.0
    for k in range(-30, 32):
        expo = -2 * math.pi**2 * k * (k - 1) / h
        if expo < -745:
            continue
        total += (-1) ** (k % 2) * (1 - 2 * k) * math.exp(expo)
    return total / (2 * _euler_numeric(qp) ** 3)


def eta_numeric(h: float) -> float:
    return math.exp(-h / 24) * _euler_numeric(math.exp(-h))


def lemma_theta1_ratio(u: float, h: float, method: str = "auto") -> complex:
    """theta(e^u)/theta'(0) divided by h sin(pi u/h)/pi exp(u^2/2h)."""
    approx = h * math.sin(math.pi * u / h) / math.pi * math.exp(u * u / (2 * h))
    return theta_numeric(u, h, method) / theta_prime_zero(h, method) / approx


def _nearest(x: float) -> int:
    return math.floor(x + 0.5)


def theta_minus_approx(u: complex, h: float) -> complex:
    """i eta^-3 sqrt(2pi/h) (-1)^[v] exp(-(2pi^2/h){v}^2) with v = u/(2 pi i).

    [v] is the integer nearest to Re v.
    """
    v = complex(u) / (2j * math.pi)
    n = _nearest(v.real)
    frac = v - n
    return (
        1j
        * eta_numeric(h) ** -3
        * math.sqrt(2 * math.pi / h)
        * (-1) ** (n % 2)
        * cmath.exp(-2 * math.pi**2 / h * frac * frac)
    )


def theta_minus_approx_printed(u: complex, h: float) -> complex:
    """The x = -1 approximation with the argument shifted by -1/2."""
    v = complex(u) / (2j * math.pi) - 0.5
    frac = v - _nearest(v.real)
    return 1j * eta_numeric(h) ** -3 * math.sqrt(2 * math.pi / h) * cmath.exp(-2 * math.pi**2 / h * frac * frac)


def lemma_theta2_ratio(u: complex, h: float, printed: bool = False) -> complex:
    exact = theta_numeric(complex(u) + 1j * math.pi, h)
    approx = theta_minus_approx_printed(u, h) if printed else theta_minus_approx(u, h)
    return exact / approx
