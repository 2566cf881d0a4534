"""Limit shapes, rescaled contours and moments.

Shapes use the area-1/2 normalization: a partition of n is drawn with cells
of diagonal 2 in content coordinates and rescaled by 1/(2 sqrt n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb, factorial

import numpy as np
from scipy import integrate, special

from .measures import MeasureSpec, sample, shifted_power
from .partitions import Partition, contour

__all__ = [
    "LimitShape",
    "UNIFORM",
    "PLANCHEREL",
    "MomentVector",
    "empirical_contour",
    "sup_distance",
    "moments_closed_form",
    "moments_numeric",
    "scaling_constant",
    "MomentScalingReport",
    "moment_scaling_check",
]

C_UNIFORM = math.pi / math.sqrt(6)


@dataclass(frozen=True)
class LimitShape:
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in ("uniform", "plancherel"):
            raise ValueError(f"unknown limit shape {self.kind!r}")

    @property
    def support(self) -> tuple[float, float] | None:
        return (-1.0, 1.0) if self.kind == "plancherel" else None

    def excess(self, s):
        """L(s) - |s|, computed without cancellation."""
        s = np.asarray(s, dtype=float)
        if self.kind == "uniform":
            return np.log1p(np.exp(-2 * C_UNIFORM * np.abs(s))) / C_UNIFORM
        inside = np.abs(s) < 1
        t = np.clip(s, -1, 1)
        val = 2 / np.pi * (t * np.arcsin(t) + np.sqrt(1 - t * t)) - np.abs(t)
        return np.where(inside, val, 0.0)

    def value(self, s):
        return self.excess(s) + np.abs(np.asarray(s, dtype=float))

    def slope(self, s):
        s = np.asarray(s, dtype=float)
        if self.kind == "uniform":
            return np.tanh(C_UNIFORM * s)
        return np.where(np.abs(s) < 1, 2 / np.pi * np.arcsin(np.clip(s, -1, 1)), np.sign(s))

    def slope_scalar(self, s: float) -> float:
        """Fast scalar slope for quadrature integrands."""
        if self.kind == "uniform":
            return math.tanh(C_UNIFORM * s)
        if abs(s) >= 1:
            return math.copysign(1.0, s)
        return 2 / math.pi * math.asin(s)

    def curvature(self, s):
        s = np.asarray(s, dtype=float)
        if self.kind == "uniform":
            return C_UNIFORM / np.cosh(C_UNIFORM * s) ** 2
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(np.abs(s) < 1, 2 / (np.pi * np.sqrt(1 - s * s)), 0.0)


UNIFORM = LimitShape("uniform")
PLANCHEREL = LimitShape("plancherel")


def empirical_contour(lam: Partition) -> np.ndarray:
    n = lam.size()
    if n < 1:
        raise ValueError("need a non-empty partition")
    return contour(lam, 1 / (2 * math.sqrt(n)))


def sup_distance(lam: Partition, shape: LimitShape) -> float:
    """sup |L_lam - L| over the line.

    On each linear piece L_lam has slope +-1 while |L'| < 1, so the
    difference is monotone there and the sup sits at a breakpoint.
    Beyond the ends L_lam = |s| and the gap L - |s| shrinks outward.
    """
    pts = empirical_contour(lam)
    return float(np.max(np.abs(pts[:, 1] - shape.value(pts[:, 0]))))


@dataclass(frozen=True)
class MomentVector:
    values: tuple[float, ...]

    def __getitem__(self, k: int) -> float:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def moments_closed_form(kind: str, K: int) -> MomentVector:
    """mu_k = int s^k (L(s) - |s|) ds, k = 0..K."""
    if K > 12:
        raise ValueError("K must be <= 12")
    out = []
    for k in range(K + 1):
        if k % 2:
            out.append(0.0)
            continue
        m = k // 2
        if kind == "uniform":
            val = (
                3 ** (m + 1)
                / (2 ** (m - 1) * math.pi ** (2 * m + 2))
                * factorial(2 * m)
                * (1 - 2.0 ** (-2 * m - 1))
                * float(special.zeta(2 * m + 2))
            )
        elif kind == "plancherel":
            # even moments of the arcsine law on [-2, 2] are central binomials
            val = 2 * comb(k + 2, m + 1) / ((k + 1) * (k + 2) * 2 ** (k + 2))
        else:
            raise ValueError(f"unknown limit shape {kind!r}")
        out.append(val)
    return MomentVector(tuple(out))


def moments_numeric(shape: LimitShape, K: int) -> MomentVector:
    out = []
    for k in range(K + 1):
        f = lambda s, k=k: s**k * float(shape.excess(s))
        if shape.support is not None:
            lo, hi = shape.support
            val = integrate.quad(f, lo, 0, epsabs=1e-14, epsrel=1e-13)[0]
            val += integrate.quad(f, 0, hi, epsabs=1e-14, epsrel=1e-13)[0]
        else:
            val = integrate.quad(f, -np.inf, 0, epsabs=1e-14, epsrel=1e-13)[0]
            val += integrate.quad(f, 0, np.inf, epsabs=1e-14, epsrel=1e-13)[0]
        out.append(val)
    return MomentVector(tuple(out))


def scaling_constant(k: int, moments: MomentVector) -> float:
    """Limit of n^(-(k+1)/2) p_k(lambda): k 2^k mu_{k-1}."""
    return k * 2**k * moments[k - 1]


@dataclass(frozen=True)
class MomentScalingReport:
    k: int
    count: int
    estimate: float
    stderr: float
    target: float
    printed_target: float

    @property
    def rel_error(self) -> float:
        return abs(self.estimate - self.target) / abs(self.target) if self.target else float("nan")

    @property
    def z_score(self) -> float:
        return abs(self.estimate - self.target) / self.stderr if self.stderr else float("inf")


def moment_scaling_check(
    spec: MeasureSpec, k: int, count: int, samples: list[Partition] | None = None
) -> MomentScalingReport:
    """Monte Carlo estimate of E[|lambda|^(-(k+1)/2) p_k(lambda)].

    ``target`` is k 2^k mu_{k-1}; ``printed_target`` is 2k mu_{k-1}, which
    agrees with it only at k = 1.  Pass ``samples`` to reuse draws of ``spec``.
    """
    if k > 6:
        raise ValueError("k must be <= 6")
    kind = "plancherel" if spec.kind == "plancherel" else "uniform"
    mu = moments_closed_form(kind, max(k - 1, 0))
    vals = []
    for i in range(count):
        lam = samples[i] if samples is not None else sample(spec, i)
        n = lam.size()
        vals.append(float(shifted_power(k, lam)) / n ** ((k + 1) / 2))
    arr = np.asarray(vals)
    stderr = float(arr.std(ddof=1) / math.sqrt(count)) if count > 1 else float("inf")
    return MomentScalingReport(
        k, count, float(arr.mean()), stderr, scaling_constant(k, mu), 2 * k * mu[k - 1]
    )
