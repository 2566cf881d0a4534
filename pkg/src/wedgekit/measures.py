"""Measures on partitions: exact laws, samplers, shifted power sums."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

import numpy as np

from .characters import dim_hook
from .fock import has_empty_two_core, pillowcase_weight
from .partitions import Partition, insert_sorted, partitions
from .qseries import QSeries, divisor_sigma, zeta_neg

__all__ = [
    "MeasureSpec",
    "sample",
    "sample_batch",
    "uniform_exact_distribution",
    "plancherel_exact_distribution",
    "pillowcase_exact_distribution",
    "pillowcase_mass_series",
    "shifted_power",
    "expected_size_series",
    "expected_size_numeric",
    "expected_size_asymptotic",
    "PILLOWCASE_MAX_N",
]

KINDS = ("uniform_q", "uniform_exact", "plancherel", "pillowcase_q", "pillowcase_exact")
PILLOWCASE_MAX_N = 40


@dataclass(frozen=True)
class MeasureSpec:
    kind: str
    seed: int
    n: int | None = None
    q: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown measure {self.kind!r}; expected one of {KINDS}")
        if self.kind.endswith("_q"):
            if self.q is None or not 0 < self.q < 1:
                raise ValueError("q must lie in (0, 1)")
        else:
            if self.n is None or self.n < 0:
                raise ValueError("n must be a non-negative integer")
        if self.kind == "pillowcase_exact" and self.n > PILLOWCASE_MAX_N:
            raise ValueError(f"pillowcase enumeration is limited to n <= {PILLOWCASE_MAX_N}")

    def rng(self, index: int = 0) -> np.random.Generator:
        return np.random.default_rng([self.seed, index])


def _from_multiplicities(mult: np.ndarray) -> Partition:
    parts = []
    for i in range(len(mult), 0, -1):
        m = int(mult[i - 1])
        if m:
            parts.extend([i] * m)
    return Partition(tuple(parts))


def _uniform_q(q: float, rng: np.random.Generator) -> Partition:
    top = max(1, math.ceil(math.log(1e-17 * (1 - q)) / math.log(q)))
    i = np.arange(1, top + 1)
    mult = rng.geometric(1 - q**i) - 1
    return _from_multiplicities(mult)


def _uniform_exact(n: int, rng: np.random.Generator, batch: int = 256) -> Partition:
    if n == 0:
        return Partition()
    q = math.exp(-math.pi / math.sqrt(6 * n))
    i = np.arange(1, n + 1)
    p = 1 - q**i
    while True:
        mult = rng.geometric(p, size=(batch, n)) - 1
        sizes = mult @ i
        hits = np.flatnonzero(sizes == n)
        if hits.size:
            return _from_multiplicities(mult[hits[0]])


def _plancherel(n: int, rng: np.random.Generator) -> Partition:
    rows: list[list[int]] = []
    for x in rng.permutation(n).tolist():
        for row in rows:
            x = insert_sorted(row, x)
            if x is None:
                break
        else:
            rows.append([x])
    return Partition(tuple(len(r) for r in rows))


def _choose(dist: dict[Partition, Fraction], rng: np.random.Generator) -> Partition:
    keys = sorted(dist)
    w = np.array([float(dist[k]) for k in keys])
    return keys[int(rng.choice(len(keys), p=w / w.sum()))]


def sample(spec: MeasureSpec, index: int = 0) -> Partition:
    """One draw; ``index`` selects an independent substream of the seed."""
    rng = spec.rng(index)
    if spec.kind == "uniform_q":
        return _uniform_q(spec.q, rng)
    if spec.kind == "uniform_exact":
        return _uniform_exact(spec.n, rng)
    if spec.kind == "plancherel":
        return _plancherel(spec.n, rng)
    if spec.kind == "pillowcase_exact":
        return _choose(pillowcase_exact_distribution(spec.n), rng)
    # pillowcase_q: pick the size from the mass series, then the shape
    mass = pillowcase_mass_series(PILLOWCASE_MAX_N)
    sizes = list(range(0, PILLOWCASE_MAX_N + 1, 2))
    w = np.array([float(mass.coeff(m)) * spec.q**m for m in sizes])
    tail = float(mass.coeff(PILLOWCASE_MAX_N)) * spec.q ** (PILLOWCASE_MAX_N + 2) / (1 - spec.q**2)
    if tail > 1e-12 * w.sum():
        raise ValueError("q too close to 1 for exact pillowcase enumeration")
    m = sizes[int(rng.choice(len(sizes), p=w / w.sum()))]
    return _choose(pillowcase_exact_distribution(m), rng)


def sample_batch(spec: MeasureSpec, count: int) -> list[Partition]:
    return [sample(spec, i) for i in range(count)]


# -- exact laws ---------------------------------------------------------------


def uniform_exact_distribution(n: int) -> dict[Partition, Fraction]:
    ps = partitions(n)
    return {lam: Fraction(1, len(ps)) for lam in ps}


def plancherel_exact_distribution(n: int) -> dict[Partition, Fraction]:
    return {lam: Fraction(dim_hook(lam) ** 2, factorial(n)) for lam in partitions(n)}


def pillowcase_exact_distribution(n: int) -> dict[Partition, Fraction]:
    """Unnormalized weights w(lambda) over empty-2-core partitions of n."""
    if n > PILLOWCASE_MAX_N:
        raise ValueError(f"pillowcase enumeration is limited to n <= {PILLOWCASE_MAX_N}")
    return dict(_pillowcase_table(n))


@cache
def _pillowcase_table(n: int) -> tuple[tuple[Partition, Fraction], ...]:
    if n % 2:
        return ()
    return tuple((lam, pillowcase_weight(lam)) for lam in partitions(n) if has_empty_two_core(lam))


@cache
def pillowcase_mass_series(order: int) -> QSeries:
    """prod (1 - q^(2n))^(-1/2) through q^order."""
    return QSeries.euler(order // 2).subs_power(2).truncate(order).power(Fraction(-1, 2))


# -- shifted power sums --------------------------------------------------------


def shifted_power(k: int, lam: Partition) -> Fraction:
    """sum_i [(lam_i - i + 1/2)^k - (-i + 1/2)^k] + (1 - 2^-k) zeta(-k)."""
    if k < 1:
        raise ValueError("k must be positive")
    total = 0
    for i, part in enumerate(lam.parts, start=1):
        total += (2 * (part - i) + 1) ** k - (1 - 2 * i) ** k
    return Fraction(total, 2**k) + (1 - Fraction(1, 2**k)) * zeta_neg(k)


# -- expected size --------------------------------------------------------------


def expected_size_series(order: int) -> QSeries:
    """q Z'/Z for Z = prod 1/(1 - q^n)."""
    z = QSeries.euler(order, -1)
    return z.q_derivative() / z


def expected_size_numeric(h: float, tol: float = 1e-15) -> float:
    """sum_n n q^n/(1 - q^n) at q = e^-h, i.e. sum sigma(m) q^m."""
    q = math.exp(-h)
    total, n = 0.0, 1
    while True:
        term = n * q**n / (1 - q**n)
        total += term
        if term < tol * total:
            return total
        n += 1


def expected_size_asymptotic(h: float, refined: bool = False) -> float:
    """pi^2/(6h^2); with ``refined`` also the terms -1/(2h) + 1/24.

    Both come from log Z = pi^2/(6h) + (1/2) log(h/2pi) - h/24 + O(e^(-4pi^2/h)).
    """
    lead = math.pi**2 / (6 * h * h)
    return lead - 1 / (2 * h) + 1 / 24 if refined else lead


def sigma_series(order: int) -> QSeries:
    return QSeries({m: divisor_sigma(1, m) for m in range(1, order + 1)}, 1, order + 1)
