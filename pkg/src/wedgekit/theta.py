"""Jacobi theta, Dedekind eta and Eisenstein series as exact formal series.

Our theta is

    theta(x, q) = (x^(1/2) - x^(-1/2)) prod_{i>=1} (1 - q^i x)(1 - q^i / x) / (1 - q^i)^2,

odd under x -> 1/x with theta'(0) = 1 in the variable u, x = e^u.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .qseries import QSeries, UQSeries, ZSeries, bernoulli, divisor_sigma

__all__ = [
    "theta_product",
    "theta_triple_product",
    "theta_inverse",
    "eta",
    "pentagonal_eta",
    "eisenstein",
    "theta_minus_one_real",
    "eta_quotient_minus_one",
    "theta_classical_bridge",
    "QuasimodularReport",
    "verify_quasimodular_identities",
]


def _check_window(window):
    lo, hi = window
    if lo is not None and hi is not None and lo > hi:
        raise ValueError(f"empty u-window {window}")
    return window


def theta_product(order: int, window=(None, None)) -> UQSeries:
    """Product form through q^order, restricted to the doubled u-window."""
    if order < 1:
        raise ValueError("order must be >= 1")
    _check_window(window)
    prec = order + 1
    # doubled u exponents: x = u^2 in these units
    acc: dict[tuple[int, int], Fraction] = {(1, 0): Fraction(1), (-1, 0): Fraction(-1)}
    for i in range(1, order + 1):
        for sign in (2, -2):
            nxt: dict[tuple[int, int], Fraction] = {}
            for (u, k), c in acc.items():
                nxt[(u, k)] = nxt.get((u, k), 0) + c
                if k + i < prec:
                    key = (u + sign, k + i)
                    nxt[key] = nxt.get(key, 0) - c
            acc = {k: c for k, c in nxt.items() if c}
    poly = UQSeries(acc, 1, prec)
    norm = QSeries.euler(order, -2)
    return (poly * norm).restrict(window)


def eta(order) -> QSeries:
    """q^(1/24) prod (1 - q^n) through q^order."""
    base = QSeries.euler(int(order))
    return base.shift(Fraction(1, 24)).truncate(order)


def pentagonal_eta(order) -> QSeries:
    """q^(1/24) sum (-1)^n q^((3n^2 - n)/2)."""
    terms = {}
    n = 0
    while True:
        hit = False
        for m in {n, -n}:
            e = (3 * m * m - m) // 2
            if e <= order:
                terms[Fraction(e) + Fraction(1, 24)] = (-1) ** (m % 2)
                hit = True
        if not hit:
            break
        n += 1
    return QSeries.from_exponents(terms, Fraction(order)).truncate(order)


def theta_triple_product(order: int, window=(None, None)) -> UQSeries:
    """eta^-3 sum (-1)^n q^((n+1/2)^2/2) x^(n+1/2) through q^order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    _check_window(window)
    # The sum starts at q^(1/8) and eta^-3 at q^(-1/8); pad so both are exact to order.
    inv_eta3 = eta(Fraction(order) + Fraction(1, 4)) ** -3
    den = 24
    prec = (order + 1) * den
    terms = {}
    n = 0
    while True:
        hit = False
        for m in {n, -n - 1}:
            e = Fraction((2 * m + 1) ** 2, 8)
            if e <= order + 1:
                terms[(2 * m + 1, int(e * den))] = Fraction((-1) ** (m % 2))
                hit = True
        if not hit:
            break
        n += 1
    theta_sum = UQSeries(terms, den, prec)
    return (theta_sum * inv_eta3).truncate(order).normalized().restrict(window)


def theta_inverse(order: int, window: tuple[int, int], annulus: str = "annulus") -> UQSeries:
    """1/theta expanded in the declared annulus through q^order.

    ``annulus`` is ``'annulus'`` for 1 < |u| < |q|^-1 or ``'inside'`` for
    |q| < |u| < 1.  Only coefficients with doubled u-exponent in ``window``
    are reported.
    """
    lo, hi = _check_window(window)
    prec = order + 1
    # prod (1 - q^i)^2 / ((1 - q^i u)(1 - q^i/u)) is a Laurent polynomial per q-order.
    acc: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    for i in range(1, order + 1):
        for sign in (2, -2):
            nxt: dict[tuple[int, int], Fraction] = {}
            for (u, k), c in acc.items():
                j = 0
                while k + i * j < prec:
                    key = (u + sign * j, k + i * j)
                    nxt[key] = nxt.get(key, 0) + c
                    j += 1
            acc = nxt
    body = UQSeries(acc, 1, prec) * QSeries.euler(order, 2)
    bmin, bmax = body.u_support()
    if annulus == "annulus":
        # 1/(u^(1/2) - u^(-1/2)) = sum_{k>=0} u^(-k-1/2)
        reach = lo - bmax
        geo = {(-(2 * k + 1), 0): Fraction(1) for k in range(0, max(0, -reach) + 2)}
        prefactor = UQSeries(geo, 1, prec, (reach, None), "annulus")
    elif annulus == "inside":
        # 1/(u^(1/2) - u^(-1/2)) = -sum_{k>=0} u^(k+1/2)
        reach = hi - bmin
        geo = {(2 * k + 1, 0): Fraction(-1) for k in range(0, max(0, reach) + 2)}
        prefactor = UQSeries(geo, 1, prec, (None, reach), "inside")
    else:
        raise ValueError(f"unknown annulus {annulus!r}")
    return (body * prefactor).restrict((lo, hi))


def eisenstein(k: int, order: int) -> QSeries:
    """E_{2k}(q) = zeta(1-2k)/2 + sum sigma_{2k-1}(n) q^n."""
    if k < 1:
        raise ValueError("k must be >= 1")
    const = -bernoulli(2 * k) / (4 * k)
    terms = {0: const}
    for n in range(1, order + 1):
        terms[n] = Fraction(divisor_sigma(2 * k - 1, n))
    return QSeries(terms, 1, order + 1)


def theta_minus_one_real(order: int) -> QSeries:
    """(prod (1 + q^n)/(1 - q^n))^2; theta(-1) is 2i times this."""
    out = QSeries.one(order)
    for n in range(1, order + 1):
        out = out * QSeries({0: 1, n: 1}, 1, order + 1) / QSeries({0: 1, n: -1}, 1, order + 1)
    return out * out


def eta_quotient_minus_one(order: int) -> QSeries:
    """eta(q^2)^2 / eta(q)^4."""
    pad = Fraction(1, 4)
    e1 = eta(order + pad)
    e2 = eta(Fraction(order, 2) + pad).subs_power(2)
    return (e2**2 / e1**4).truncate(order).normalized()


def theta_classical_bridge(order: int) -> list[tuple]:
    """Mismatches of theta = -i eta^-3 theta_11 through q^order.

    theta_11 has coefficient e^(pi i (n+1/2)) = i^(2n+1) on q^((n+1/2)^2/2)
    x^(n+1/2); Gaussian integers are carried as (re, im) pairs.
    """
    den = 24
    inv_eta3 = eta(Fraction(order) + Fraction(1, 4)) ** -3
    prec = (order + 1) * den
    re, im = {}, {}
    n = 0
    while True:
        hit = False
        for m in {n, -n - 1}:
            e = Fraction((2 * m + 1) ** 2, 8)
            if e > order + 1:
                continue
            hit = True
            unit = [(1, 0), (0, 1), (-1, 0), (0, -1)][(2 * m + 1) % 4]
            # multiply by -i: (a + bi)(-i) = b - ai
            a, b = unit
            key = (2 * m + 1, int(e * den))
            if b:
                re[key] = Fraction(b)
            if a:
                im[key] = Fraction(-a)
        if not hit:
            break
        n += 1
    real = (UQSeries(re, den, prec) * inv_eta3).truncate(order)
    imag = (UQSeries(im, den, prec) * inv_eta3).truncate(order)
    bad = real.mismatches(theta_product(order))
    bad += [("imaginary part", key, c) for key, c in imag.terms.items()]
    return bad


# -- quasimodular identities -------------------------------------------------


@dataclass
class QuasimodularReport:
    """For each identity: None when it holds to the checked order, else the first mismatch."""

    q_order: int
    z_order: int
    results: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is None for v in self.results.values())


def _exp_z(m: int, zprec: int, template: QSeries) -> list[Fraction]:
    """Taylor coefficients of e^(m z)."""
    return [Fraction(m**j, factorial(j)) for j in range(zprec)]


def _theta_over_z(order: int, zprec: int) -> ZSeries:
    """theta(e^z)/z as a series in z with q-series coefficients."""
    one = QSeries.one(order)
    # 2 sinh(z/2)/z = sum (z/2)^(2m) / (2m+1)!
    pre = [Fraction(1, 2**j * factorial(j + 1)) if j % 2 == 0 else 0 for j in range(zprec)]
    acc = ZSeries.from_scalars(pre, one)
    norm = QSeries.euler(order, -2)
    for i in range(1, order + 1):
        for sign in (1, -1):
            qi = QSeries({i: 1}, 1, order + 1)
            coeffs = [one - qi] + [qi * -Fraction(sign**j, factorial(j)) for j in range(1, zprec)]
            acc = acc * ZSeries(coeffs)
    return acc * norm


def _theta_minus_ratio(order: int, zprec: int) -> ZSeries:
    """theta(-e^z)/theta(-1)."""
    one = QSeries.one(order)
    # cosh(z/2)
    pre = [Fraction(1, 2**j * factorial(j)) if j % 2 == 0 else 0 for j in range(zprec)]
    acc = ZSeries.from_scalars(pre, one)
    for i in range(1, order + 1):
        qi = QSeries({i: 1}, 1, order + 1)
        for sign in (1, -1):
            coeffs = [one + qi] + [qi * Fraction(sign**j, factorial(j)) for j in range(1, zprec)]
            acc = acc * ZSeries(coeffs)
        acc = acc * (one + qi).inverse() ** 2
    return acc


def _compare_z(lhs: ZSeries, rhs: ZSeries):
    for j, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        where = a.agreement(b)
        if where is not None:
            return (j, where)
    return None


def verify_quasimodular_identities(order: int = 20, z_order: int = 8) -> QuasimodularReport:
    """Check the three formal identities linking theta with Eisenstein series.

    1. log(z / theta(e^z)) = 2 sum z^(2k)/(2k)! E_{2k}(q)
    2. log(theta(-e^z)/theta(-1)) = 2 sum z^(2k)/(2k)! (E_{2k}(q) - 2^(2k) E_{2k}(q^2))
    3. (prod (1+q^n)/(1-q^n))^2 = eta(q^2)^2/eta(q)^4, with theta(-1) = 2i times the left side
    """
    zprec = z_order + 1
    report = QuasimodularReport(order, z_order)
    one = QSeries.one(order)
    zero = one * 0

    lhs1 = -(_theta_over_z(order, zprec).log())
    rhs1 = [zero] * zprec
    for k in range(1, z_order // 2 + 1):
        rhs1[2 * k] = eisenstein(k, order) * Fraction(2, factorial(2 * k))
    report.results["log(z/theta(e^z))"] = _compare_z(lhs1, ZSeries(rhs1))

    lhs2 = _theta_minus_ratio(order, zprec).log()
    rhs2 = [zero] * zprec
    for k in range(1, z_order // 2 + 1):
        ek = eisenstein(k, order)
        ek2 = eisenstein(k, order // 2).subs_power(2).truncate(order)
        rhs2[2 * k] = (ek - ek2 * 4**k) * Fraction(2, factorial(2 * k))
    report.results["log(theta(-e^z)/theta(-1))"] = _compare_z(lhs2, ZSeries(rhs2))

    report.results["theta(-1)/2i = eta(q^2)^2/eta(q)^4"] = theta_minus_one_real(order).agreement(
        eta_quotient_minus_one(order)
    )
    return report
