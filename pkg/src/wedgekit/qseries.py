"""Truncated formal series with exact rational coefficients.

``QSeries`` is a power series in q^(1/den).  ``ZSeries`` is a power series in
z whose coefficients are ``QSeries``.  ``UQSeries`` is Laurent in u (exponents
stored doubled) with a q-power series at each u-exponent.  ``Laurent`` is a
multivariate Laurent polynomial used as a coefficient ring in the Fock space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
import math
from math import comb, gcd, lcm
from typing import Iterable, Iterator, Mapping

__all__ = [
    "bernoulli",
    "zeta_neg",
    "divisor_sigma",
    "QSeries",
    "ZSeries",
    "UQSeries",
    "Laurent",
    "OutsideWindow",
]


@cache
def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    return -sum(comb(n + 1, j) * bernoulli(j) for j in range(n)) / (n + 1)


def zeta_neg(k: int) -> Fraction:
    """zeta(-k) for k >= 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Fraction(-1, 2)
    return -bernoulli(k + 1) / (k + 1)


def divisor_sigma(k: int, n: int) -> int:
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# -- power series in q ---------------------------------------------------------


class QSeries:
    """Power series in q^(1/den), known for exponents < prec/den."""

    __slots__ = ("coeffs", "den", "prec")

    def __init__(self, coeffs: Mapping[int, Fraction], den: int, prec: int):
        if den < 1:
            raise ValueError("den must be positive")
        self.den = den
        self.prec = prec
        self.coeffs = {k: _frac(c) for k, c in coeffs.items() if c and k < prec}

    # constructors
    @classmethod
    def from_exponents(cls, terms: Mapping, order) -> QSeries:
        """Terms keyed by rational exponents; known through ``order`` inclusive."""
        order = _frac(order)
        den = order.denominator
        for e in terms:
            den = lcm(den, _frac(e).denominator)
        prec = int(order * den) + 1
        return cls({int(_frac(e) * den): c for e, c in terms.items()}, den, prec)

    @classmethod
    def one(cls, order) -> QSeries:
        return cls.from_exponents({0: 1}, order)

    @classmethod
    def monomial(cls, exponent, order, coeff=1) -> QSeries:
        return cls.from_exponents({exponent: coeff}, order)

    @classmethod
    def euler(cls, order: int, power: int = 1) -> QSeries:
        """prod_{n>=1} (1 - q^n)^power for integer power."""
        base = cls.one(order)
        for n in range(1, int(order) + 1):
            factor = cls({0: 1, n: -1}, 1, base.prec)
            if power > 0:
                for _ in range(power):
                    base = base * factor
            else:
                inv = factor.inverse()
                for _ in range(-power):
                    base = base * inv
        return base

    # bookkeeping
    @property
    def order(self) -> Fraction:
        """Largest exponent whose coefficient is known."""
        return Fraction(self.prec - 1, self.den)

    def _with_den(self, den: int) -> QSeries:
        if den == self.den:
            return self
        if den % self.den:
            raise ValueError("new den must be a multiple")
        f = den // self.den
        # prec rescales so that the same exponents stay known
        return QSeries({k * f: c for k, c in self.coeffs.items()}, den, (self.prec - 1) * f + 1)

    def normalized(self) -> QSeries:
        g = self.den
        for k in self.coeffs:
            g = gcd(g, k)
        g = gcd(g, self.prec - 1)
        if g <= 1:
            return self
        return QSeries({k // g: c for k, c in self.coeffs.items()}, self.den // g, (self.prec - 1) // g + 1)

    def _common(self, other: QSeries) -> tuple[QSeries, QSeries]:
        d = lcm(self.den, other.den)
        return self._with_den(d), other._with_den(d)

    def valuation(self) -> int:
        """Lowest numerator present, or prec if the known part vanishes."""
        return min(self.coeffs, default=self.prec)

    def coeff(self, exponent) -> Fraction:
        e = _frac(exponent) * self.den
        if e.denominator != 1:
            return Fraction(0)
        k = int(e)
        if k >= self.prec:
            raise ValueError(f"coefficient of q^{exponent} is beyond the truncation order {self.order}")
        return self.coeffs.get(k, Fraction(0))

    def items(self) -> Iterator[tuple[Fraction, Fraction]]:
        for k in sorted(self.coeffs):
            yield Fraction(k, self.den), self.coeffs[k]

    def truncate(self, order) -> QSeries:
        e = _frac(order) * self.den
        return QSeries(self.coeffs, self.den, min(self.prec, math.floor(e) + 1))

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})q^{e}" for e, c in list(self.items())[:8])
        return f"QSeries({terms or '0'} + O(q^{Fraction(self.prec, self.den)}))"

    # arithmetic
    def __neg__(self) -> QSeries:
        return QSeries({k: -c for k, c in self.coeffs.items()}, self.den, self.prec)

    def __add__(self, other) -> QSeries:
        if not isinstance(other, QSeries):
            other = QSeries({0: _frac(other)}, self.den, self.prec)
        a, b = self._common(other)
        out = dict(a.coeffs)
        for k, c in b.coeffs.items():
            out[k] = out.get(k, 0) + c
        return QSeries(out, a.den, min(a.prec, b.prec))

    __radd__ = __add__

    def __sub__(self, other) -> QSeries:
        return self + (-other)

    def __rsub__(self, other) -> QSeries:
        return (-self) + other

    def __mul__(self, other) -> QSeries:
        if not isinstance(other, QSeries):
            c = _frac(other)
            return QSeries({k: v * c for k, v in self.coeffs.items()}, self.den, self.prec)
        a, b = self._common(other)
        prec = min(a.prec + b.valuation(), b.prec + a.valuation())
        out: dict[int, Fraction] = {}
        bi = sorted(b.coeffs.items())
        for i, x in a.coeffs.items():
            for j, y in bi:
                k = i + j
                if k >= prec:
                    break
                out[k] = out.get(k, 0) + x * y
        return QSeries(out, a.den, prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return self * other.inverse()
        return self * (1 / _frac(other))

    def __rtruediv__(self, other) -> QSeries:
        return self.inverse() * other

    def __pow__(self, n) -> QSeries:
        if isinstance(n, int):
            if n < 0:
                return self.inverse() ** (-n)
            out = QSeries({0: 1}, self.den, self.prec)
            base = self
            while n:
                if n & 1:
                    out = out * base
                base = base * base
                n >>= 1
            return out
        return self.power(_frac(n))

    def _regular(self) -> tuple[int, Fraction, list[Fraction]]:
        """Split as c q^(v/den) (1 + sum a_k q^(k/den)), relative coefficients."""
        v = self.valuation()
        if v >= self.prec:
            raise ZeroDivisionError("series vanishes to its truncation order")
        c = self.coeffs[v]
        n = self.prec - v
        a = [self.coeffs.get(v + k, Fraction(0)) / c for k in range(n)]
        return v, c, a

    def inverse(self) -> QSeries:
        v, c, a = self._regular()
        n = len(a)
        b = [Fraction(0)] * n
        b[0] = Fraction(1)
        for k in range(1, n):
            b[k] = -sum((a[j] * b[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
        return QSeries({k - v: b[k] / c for k in range(n)}, self.den, n - v)

    def log(self) -> QSeries:
        """Logarithm of a series with constant term 1."""
        if self.valuation() != 0 or self.coeffs.get(0) != 1:
            raise ValueError("log needs constant term 1")
        _, _, a = self._regular()
        n = len(a)
        # k l_k = k a_k - sum_{j<k} j l_j a_{k-j}
        lg = [Fraction(0)] * n
        for k in range(1, n):
            s = k * a[k] - sum(j * lg[j] * a[k - j] for j in range(1, k) if lg[j] and a[k - j])
            lg[k] = s / k
        return QSeries(dict(enumerate(lg)), self.den, self.prec)

    def exp(self) -> QSeries:
        """Exponential of a series with zero constant term."""
        if self.valuation() <= 0 and self.coeffs.get(0):
            raise ValueError("exp needs zero constant term")
        n = self.prec
        g = [self.coeffs.get(k, Fraction(0)) for k in range(n)]
        e = [Fraction(0)] * n
        e[0] = Fraction(1)
        for k in range(1, n):
            e[k] = sum((j * g[j] * e[k - j] for j in range(1, k + 1) if g[j]), Fraction(0)) / k
        return QSeries(dict(enumerate(e)), self.den, n)

    def power(self, alpha: Fraction) -> QSeries:
        """f^alpha, needing the leading coefficient's alpha-th power rational."""
        v, c, _ = self._regular()
        cpow = _rational_power(c, alpha)
        unit = QSeries({k - v: x / c for k, x in self.coeffs.items()}, self.den, self.prec - v)
        body = (unit.log() * alpha).exp()
        shift = Fraction(v, self.den) * alpha
        den = lcm(self.den, shift.denominator)
        body = body._with_den(den)
        s = int(shift * den)
        return QSeries({k + s: x * cpow for k, x in body.coeffs.items()}, den, body.prec + s)

    def sqrt(self) -> QSeries:
        return self.power(Fraction(1, 2))

    def subs_power(self, m: int) -> QSeries:
        """q -> q^m."""
        if m < 1:
            raise ValueError("m must be positive")
        return QSeries({k * m: c for k, c in self.coeffs.items()}, self.den, (self.prec - 1) * m + 1)

    def shift(self, exponent) -> QSeries:
        """Multiply by q^exponent."""
        e = _frac(exponent)
        den = lcm(self.den, e.denominator)
        a = self._with_den(den)
        s = int(e * den)
        return QSeries({k + s: c for k, c in a.coeffs.items()}, den, a.prec + s)

    def q_derivative(self) -> QSeries:
        """q d/dq."""
        return QSeries({k: c * Fraction(k, self.den) for k, c in self.coeffs.items()}, self.den, self.prec)

    def evaluate(self, q: float) -> float:
        return sum(float(c) * q ** (k / self.den) for k, c in self.coeffs.items())

    def agreement(self, other: QSeries) -> Fraction | None:
        """None if equal to the common order, else the first differing exponent."""
        a, b = self._common(other)
        prec = min(a.prec, b.prec)
        for k in sorted(set(a.coeffs) | set(b.coeffs)):
            if k >= prec:
                break
            if a.coeffs.get(k, 0) != b.coeffs.get(k, 0):
                return Fraction(k, a.den)
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self._common(other)
        return a.prec == b.prec and a.coeffs == b.coeffs

    def __hash__(self):
        n = self.normalized()
        return hash((n.den, n.prec, frozenset(n.coeffs.items())))

    def tsv_rows(self) -> list[tuple[int, int, int, int, int]]:
        rows = []
        for k in sorted(self.coeffs):
            e = Fraction(k, self.den)
            c = self.coeffs[k]
            rows.append((0, e.numerator, e.denominator, c.numerator, c.denominator))
        return rows


def _rational_power(c: Fraction, alpha: Fraction) -> Fraction:
    if alpha.denominator == 1:
        return c ** int(alpha)
    if c < 0:
        raise ValueError("fractional power of a negative leading coefficient")
    r = alpha.denominator
    num, den = _int_root(c.numerator, r), _int_root(c.denominator, r)
    if num is None or den is None:
        raise ValueError(f"leading coefficient {c} has no rational {r}-th root")
    return Fraction(num, den) ** alpha.numerator


def _int_root(n: int, r: int) -> int | None:
    x = round(n ** (1 / r))
    for y in (x - 1, x, x + 1):
        if y >= 0 and y**r == n:
            return y
    return None


# -- power series in z with QSeries coefficients ----------------------------


class ZSeries:
    """sum_{j<K} c_j(q) z^j."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[QSeries]):
        self.coeffs = list(coeffs)

    @property
    def zprec(self) -> int:
        return len(self.coeffs)

    @classmethod
    def constant(cls, c: QSeries, zprec: int) -> ZSeries:
        zero = c * 0
        return cls([c] + [zero] * (zprec - 1))

    @classmethod
    def from_scalars(cls, scalars: Iterable, template: QSeries) -> ZSeries:
        """Coefficients constant in q, with the truncation of ``template``."""
        zero = template * 0
        return cls([zero + _frac(s) for s in scalars])

    def __add__(self, other: ZSeries) -> ZSeries:
        k = min(self.zprec, other.zprec)
        return ZSeries([self.coeffs[j] + other.coeffs[j] for j in range(k)])

    def __neg__(self) -> ZSeries:
        return ZSeries([-c for c in self.coeffs])

    def __sub__(self, other: ZSeries) -> ZSeries:
        return self + (-other)

    def __mul__(self, other) -> ZSeries:
        if not isinstance(other, ZSeries):
            return ZSeries([c * other for c in self.coeffs])
        k = min(self.zprec, other.zprec)
        out = []
        for j in range(k):
            acc = None
            for i in range(j + 1):
                term = self.coeffs[i] * other.coeffs[j - i]
                acc = term if acc is None else acc + term
            out.append(acc)
        return ZSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> ZSeries:
        g0 = self.coeffs[0].inverse()
        g = [g0]
        for j in range(1, self.zprec):
            acc = None
            for i in range(1, j + 1):
                t = self.coeffs[i] * g[j - i]
                acc = t if acc is None else acc + t
            g.append(-(g0 * acc))
        return ZSeries(g)

    def derivative(self) -> ZSeries:
        return ZSeries([self.coeffs[j] * j for j in range(1, self.zprec)])

    def log(self) -> ZSeries:
        c0 = self.coeffs[0]
        head = c0.log()
        quot = (self.derivative() * ZSeries(self.coeffs[:-1]).inverse()).coeffs
        return ZSeries([head] + [quot[j - 1] * Fraction(1, j) for j in range(1, self.zprec)])

    def exp(self) -> ZSeries:
        e = [self.coeffs[0].exp()]
        for j in range(1, self.zprec):
            acc = None
            for i in range(1, j + 1):
                t = self.coeffs[i] * e[j - i] * i
                acc = t if acc is None else acc + t
            e.append(acc * Fraction(1, j))
        return ZSeries(e)


# -- Laurent in u, power series in q ----------------------------------------


class OutsideWindow(LookupError):
    """Coefficient requested outside the known u-window."""


_ANNULI = (None, "inside", "annulus")


@dataclass(frozen=True)
class UQSeries:
    """sum c(u2, k) u^(u2/2) q^(k/den).

    ``window`` bounds the doubled u-exponents where coefficients are known;
    ``None`` on a side means known without bound there.  ``annulus`` is None
    for series that are Laurent polynomials in u at every q-order.
    """

    terms: Mapping[tuple[int, int], Fraction]
    den: int
    prec: int
    window: tuple[int | None, int | None] = (None, None)
    annulus: str | None = None

    def __post_init__(self) -> None:
        if self.annulus not in _ANNULI:
            raise ValueError(f"unknown annulus {self.annulus!r}")
        lo, hi = self.window
        if lo is not None and hi is not None and lo > hi:
            raise ValueError("empty u-window")
        clean = {
            (u, k): _frac(c)
            for (u, k), c in self.terms.items()
            if c and k < self.prec and self._inside(u)
        }
        object.__setattr__(self, "terms", clean)

    def _inside(self, u2: int) -> bool:
        lo, hi = self.window
        return (lo is None or u2 >= lo) and (hi is None or u2 <= hi)

    @property
    def fully_known(self) -> bool:
        return self.window == (None, None)

    @classmethod
    def from_q(cls, f: QSeries, u2: int = 0) -> UQSeries:
        return cls({(u2, k): c for k, c in f.coeffs.items()}, f.den, f.prec)

    def coeff(self, u2: int, exponent) -> Fraction:
        if not self._inside(u2):
            raise OutsideWindow(f"u^{Fraction(u2, 2)} lies outside the window {self.window}")
        e = _frac(exponent) * self.den
        if e.denominator != 1:
            return Fraction(0)
        if e >= self.prec:
            raise ValueError(f"q^{exponent} is beyond the truncation order")
        return self.terms.get((u2, int(e)), Fraction(0))

    def u_support(self) -> tuple[int, int]:
        us = [u for u, _ in self.terms]
        return (min(us), max(us)) if us else (0, 0)

    def _with_den(self, den: int) -> UQSeries:
        if den == self.den:
            return self
        f = den // self.den
        return UQSeries(
            {(u, k * f): c for (u, k), c in self.terms.items()},
            den,
            (self.prec - 1) * f + 1,
            self.window,
            self.annulus,
        )

    def normalized(self) -> UQSeries:
        g = self.den
        for _, k in self.terms:
            g = gcd(g, k)
        g = gcd(g, self.prec - 1)
        if g <= 1:
            return self
        return UQSeries(
            {(u, k // g): c for (u, k), c in self.terms.items()},
            self.den // g,
            (self.prec - 1) // g + 1,
            self.window,
            self.annulus,
        )

    def restrict(self, window: tuple[int | None, int | None]) -> UQSeries:
        lo = _max_opt(self.window[0], window[0])
        hi = _min_opt(self.window[1], window[1])
        return UQSeries(self.terms, self.den, self.prec, (lo, hi), self.annulus)

    def truncate(self, order) -> UQSeries:
        e = int(_frac(order) * self.den) + 1
        return UQSeries(self.terms, self.den, min(self.prec, e), self.window, self.annulus)

    def _tag(self, other: UQSeries) -> str | None:
        tags = {self.annulus, other.annulus} - {None}
        if len(tags) > 1:
            raise ValueError("cannot combine series expanded in different annuli")
        return tags.pop() if tags else None

    def __neg__(self) -> UQSeries:
        return self * -1

    def __add__(self, other: UQSeries) -> UQSeries:
        tag = self._tag(other)
        d = lcm(self.den, other.den)
        a, b = self._with_den(d), other._with_den(d)
        out = dict(a.terms)
        for key, c in b.terms.items():
            out[key] = out.get(key, 0) + c
        window = (_max_opt(a.window[0], b.window[0]), _min_opt(a.window[1], b.window[1]))
        return UQSeries(out, d, min(a.prec, b.prec), window, tag)

    def __sub__(self, other: UQSeries) -> UQSeries:
        return self + (-other)

    def __mul__(self, other) -> UQSeries:
        if isinstance(other, QSeries):
            other = UQSeries.from_q(other)
        if not isinstance(other, UQSeries):
            c = _frac(other)
            return UQSeries({k: v * c for k, v in self.terms.items()}, self.den, self.prec, self.window, self.annulus)
        tag = self._tag(other)
        a, b = self, other
        if not a.fully_known and not b.fully_known:
            raise ValueError("at least one factor must be known for every u")
        if not a.fully_known:
            a, b = b, a
        d = lcm(a.den, b.den)
        a, b = a._with_den(d), b._with_den(d)
        # a is a Laurent polynomial in u at each q-order; b is known on its window.
        amin, amax = a.u_support()
        lo = None if b.window[0] is None else b.window[0] + amax
        hi = None if b.window[1] is None else b.window[1] + amin
        qa = min((k for _, k in a.terms), default=a.prec)
        qb = min((k for _, k in b.terms), default=b.prec)
        prec = min(a.prec + qb, b.prec + qa)
        out: dict[tuple[int, int], Fraction] = {}
        bt = sorted(b.terms.items(), key=lambda t: t[0][1])
        for (ua, ka), x in a.terms.items():
            for (ub, kb), y in bt:
                k = ka + kb
                if k >= prec:
                    break
                key = (ua + ub, k)
                out[key] = out.get(key, 0) + x * y
        if lo is not None and hi is not None and lo > hi:
            raise ValueError("product window is empty; widen the input window")
        return UQSeries(out, d, prec, (lo, hi), tag)

    __rmul__ = __mul__

    def subs_inverse_u(self) -> UQSeries:
        """u -> 1/u."""
        lo, hi = self.window
        window = (None if hi is None else -hi, None if lo is None else -lo)
        return UQSeries({(-u, k): c for (u, k), c in self.terms.items()}, self.den, self.prec, window, self.annulus)

    def at_u_one(self) -> QSeries:
        if not self.fully_known:
            raise OutsideWindow("evaluation at u=1 needs every u-coefficient")
        out: dict[int, Fraction] = {}
        for (_, k), c in self.terms.items():
            out[k] = out.get(k, 0) + c
        return QSeries(out, self.den, self.prec)

    def u_derivative_at_one(self) -> QSeries:
        """d/du at x = e^u = 1, i.e. sum of exponent times coefficient."""
        if not self.fully_known:
            raise OutsideWindow("derivative at u=1 needs every u-coefficient")
        out: dict[int, Fraction] = {}
        for (u, k), c in self.terms.items():
            out[k] = out.get(k, 0) + c * Fraction(u, 2)
        return QSeries(out, self.den, self.prec)

    def mismatches(self, other: UQSeries, window: tuple[int, int] | None = None) -> list[tuple]:
        """Keys (u2, q exponent) where the two series differ on a common region."""
        d = lcm(self.den, other.den)
        a, b = self._with_den(d), other._with_den(d)
        prec = min(a.prec, b.prec)
        lo = _max_opt(a.window[0], b.window[0])
        hi = _min_opt(a.window[1], b.window[1])
        if window is not None:
            lo, hi = _max_opt(lo, window[0]), _min_opt(hi, window[1])
        bad = []
        for key in sorted(set(a.terms) | set(b.terms)):
            u, k = key
            if k >= prec or (lo is not None and u < lo) or (hi is not None and u > hi):
                continue
            if a.terms.get(key, 0) != b.terms.get(key, 0):
                bad.append((Fraction(u, 2), Fraction(k, d), a.terms.get(key, 0), b.terms.get(key, 0)))
        return bad

    def tsv_rows(self) -> list[tuple[int, int, int, int, int]]:
        rows = []
        for (u, k) in sorted(self.terms, key=lambda t: (t[1], t[0])):
            e = Fraction(k, self.den)
            c = self.terms[u, k]
            rows.append((u, e.numerator, e.denominator, c.numerator, c.denominator))
        return rows


def _max_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _min_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# -- multivariate Laurent polynomials ---------------------------------------


class Laurent:
    """Laurent polynomial with exponent tuples as keys."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.terms = {k: _frac(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c, nvars: int) -> Laurent:
        return cls({(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: tuple[int, ...], c=1) -> Laurent:
        return cls({tuple(exps): c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Laurent):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Laurent({self.terms})"

    def __neg__(self) -> Laurent:
        return Laurent({k: -c for k, c in self.terms.items()})

    def __add__(self, other) -> Laurent:
        if not isinstance(other, Laurent):
            if not other:
                return self
            raise TypeError("add a Laurent polynomial, not a scalar")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Laurent(out)

    __radd__ = __add__

    def __sub__(self, other) -> Laurent:
        return self + (-other)

    def __mul__(self, other) -> Laurent:
        if not isinstance(other, Laurent):
            c = _frac(other)
            return Laurent({k: v * c for k, v in self.terms.items()})
        out: dict[tuple[int, ...], Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Laurent:
        return self * (1 / _frac(other))

    def __pow__(self, n: int) -> Laurent:
        if n < 0:
            raise ValueError("negative powers are not supported")
        nvars = len(next(iter(self.terms))) if self.terms else 1
        out = Laurent.const(1, nvars)
        for _ in range(n):
            out = out * self
        return out
