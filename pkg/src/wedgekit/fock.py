"""The charge-zero half-infinite wedge on the basis v_lambda.

Coefficients may be ``Fraction`` or any ring element supporting +, * and
truthiness (``qseries.Laurent`` is used for generating-function checks).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping

from .characters import det, mn_character
from .partitions import (
    Partition,
    addable_strips,
    from_maya,
    hook_lengths,
    p_core_quotient,
    partitions,
    partitions_upto,
    removable_strips,
    to_maya,
)
from .qseries import Laurent, QSeries

__all__ = [
    "WedgeVector",
    "VertexOpSpec",
    "TraceSeries",
    "basis",
    "apply_alpha",
    "apply_normal_bilinear",
    "apply_energy",
    "apply_charge_check",
    "alpha_product_on_vacuum",
    "apply_vertex",
    "vertex_matrix_element",
    "trace_vertex",
    "trace_closed_form",
    "BosonFermionReport",
    "verify_boson_fermion",
    "pillowcase_spec",
    "pillowcase_weight",
    "one_point_enumeration",
    "one_point_series",
    "verify_one_point",
]


@dataclass(frozen=True)
class WedgeVector:
    """Finite combination of v_lambda, truncated at energy ``cutoff``."""

    terms: Mapping[Partition, object] = field(default_factory=dict)
    cutoff: int | None = None
    truncated: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", {lam: c for lam, c in self.terms.items() if c})

    def __getitem__(self, lam: Partition):
        return self.terms.get(lam, 0)

    def __iter__(self):
        return iter(sorted(self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WedgeVector):
            return NotImplemented
        return self.terms == other.terms

    def _join(self, other: WedgeVector) -> tuple[int | None, bool]:
        cut = _min_cut(self.cutoff, other.cutoff)
        return cut, self.truncated or other.truncated

    def __add__(self, other: WedgeVector) -> WedgeVector:
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return WedgeVector(out, *self._join(other))

    def __neg__(self) -> WedgeVector:
        return self.scale(-1)

    def __sub__(self, other: WedgeVector) -> WedgeVector:
        return self + (-other)

    def scale(self, c) -> WedgeVector:
        return WedgeVector({lam: v * c for lam, v in self.terms.items()}, self.cutoff, self.truncated)

    def inner(self, other: WedgeVector):
        out = 0
        for lam, c in self.terms.items():
            if lam in other.terms:
                out = out + c * other.terms[lam]
        return out

    def max_energy(self) -> int:
        return max((lam.size() for lam in self.terms), default=0)

    def restrict(self, energy: int) -> WedgeVector:
        return WedgeVector({l: c for l, c in self.terms.items() if l.size() <= energy}, self.cutoff, self.truncated)

    def to_json(self) -> dict:
        rows = []
        for lam in sorted(self.terms):
            c = Fraction(self.terms[lam])
            rows.append({"partition": str(lam), "num": str(c.numerator), "den": str(c.denominator)})
        return {"cutoff": self.cutoff, "truncated": self.truncated, "terms": rows}


def _min_cut(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def basis(lam: Partition | Iterable[int], cutoff: int | None = None, coeff=Fraction(1)) -> WedgeVector:
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    return WedgeVector({lam: coeff}, cutoff)


# -- fermionic and bosonic operators -----------------------------------------


def apply_alpha(n: int, v: WedgeVector) -> WedgeVector:
    """alpha_n: remove (n > 0) or add (n < 0) all |n|-strips with sign (-1)^height."""
    if n == 0:
        raise ValueError("alpha_0 vanishes on charge zero; n must be nonzero")
    out: dict[Partition, object] = {}
    truncated = v.truncated
    for lam, c in v.terms.items():
        if n > 0:
            strips = removable_strips(lam, n)
            targets = [(s.inner, s.sign) for s in strips]
        else:
            if v.cutoff is not None and lam.size() - n > v.cutoff:
                if addable_strips(lam, -n):
                    truncated = True
                continue
            targets = [(s.outer, s.sign) for s in addable_strips(lam, -n)]
        for mu, sign in targets:
            term = c if sign > 0 else -c
            out[mu] = out[mu] + term if mu in out else term
    return WedgeVector(out, v.cutoff, truncated)


def _move_pebble(lam: Partition, src: int, dst: int) -> tuple[Partition, int] | None:
    """Move the pebble at doubled site src to the vacant site dst."""
    m = to_maya(lam)
    if not m.occupied(src) or m.occupied(dst):
        return None
    lo, hi = min(src, dst), max(src, dst)
    between = sum(1 for s in range(lo + 2, hi, 2) if m.occupied(s))
    particles, holes = set(m.particles), set(m.holes)
    for site, fill in ((src, False), (dst, True)):
        if site > 0:
            (particles.add if fill else particles.discard)(site)
        else:
            (holes.discard if fill else holes.add)(site)
    mu = from_maya(type(m)(frozenset(particles), frozenset(holes)))
    return mu, (-1 if between % 2 else 1)


def apply_normal_bilinear(i2: int, j2: int, v: WedgeVector) -> WedgeVector:
    """:psi_i psi*_j: with doubled half-integer sites i2, j2."""
    if i2 % 2 == 0 or j2 % 2 == 0:
        raise ValueError("sites must be half-integers (odd when doubled)")
    out: dict[Partition, object] = {}
    truncated = v.truncated
    for lam, c in v.terms.items():
        if i2 == j2:
            factor = int(to_maya(lam).occupied(i2)) - int(i2 < 0)
            if factor:
                out[lam] = out[lam] + c * factor if lam in out else c * factor
            continue
        moved = _move_pebble(lam, j2, i2)
        if moved is None:
            continue
        mu, sign = moved
        if v.cutoff is not None and mu.size() > v.cutoff:
            truncated = True
            continue
        term = c if sign > 0 else -c
        out[mu] = out[mu] + term if mu in out else term
    return WedgeVector(out, v.cutoff, truncated)


def apply_energy(v: WedgeVector) -> WedgeVector:
    return WedgeVector({lam: c * lam.size() for lam, c in v.terms.items()}, v.cutoff, v.truncated)


def apply_charge_check(v: WedgeVector) -> None:
    """Every basis vector must round-trip through a charge-zero Maya diagram."""
    for lam in v.terms:
        m = to_maya(lam)
        if m.charge != 0 or from_maya(m) != lam:
            raise AssertionError(f"{lam} is not a charge-zero state")


def alpha_product_on_vacuum(mu: Partition, cutoff: int | None = None) -> WedgeVector:
    """alpha_{-mu_1} ... alpha_{-mu_k} v_empty."""
    if cutoff is not None and mu.size() > cutoff:
        raise ValueError("|mu| exceeds the cutoff")
    v = basis(Partition(), cutoff)
    for part in reversed(mu.parts):
        v = apply_alpha(-part, v)
    return v


# -- vertex operators --------------------------------------------------------

Coeffs = Mapping[int, object] | Callable[[int], object]


@dataclass(frozen=True)
class VertexOpSpec:
    """Gamma_- Gamma_+ with Gamma_+- = exp(sum c_{+-n} alpha_{+-n}), n >= 1.

    Coefficients are a finite map n -> c or a rule n -> c.
    """

    minus: Coeffs = field(default_factory=dict)
    plus: Coeffs = field(default_factory=dict)

    @staticmethod
    def _get(coeffs: Coeffs, n: int):
        if callable(coeffs):
            return coeffs(n)
        return coeffs.get(n, 0)

    def c_minus(self, n: int):
        return self._get(self.minus, n)

    def c_plus(self, n: int):
        return self._get(self.plus, n)

    def modes(self, which: str, bound: int) -> list[int]:
        coeffs = self.minus if which == "minus" else self.plus
        if callable(coeffs):
            return [n for n in range(1, bound + 1) if coeffs(n)]
        return sorted(n for n, c in coeffs.items() if c and n <= bound)


def _exp_alpha(n: int, c, v: WedgeVector) -> WedgeVector:
    """exp(c alpha_n) v; terminates for n > 0 and by the cutoff for n < 0."""
    out = v
    term = v
    j = 0
    while term.terms:
        j += 1
        term = apply_alpha(n, term).scale(c * Fraction(1, j))
        out = out + term
    return WedgeVector(out.terms, v.cutoff, out.truncated or term.truncated)


def apply_vertex(spec: VertexOpSpec, v: WedgeVector, cutoff: int) -> WedgeVector:
    v = WedgeVector(v.terms, cutoff, v.truncated)
    top = v.max_energy()
    for n in spec.modes("plus", top):
        v = _exp_alpha(n, spec.c_plus(n), v)
    for n in spec.modes("minus", cutoff):
        v = _exp_alpha(-n, spec.c_minus(n), v)
    return v


def _phi(coeffs: Callable[[int], object], degree: int, one) -> list:
    """Taylor coefficients of exp(sum c_k z^k) up to z^degree."""
    c = [0] + [coeffs(k) for k in range(1, degree + 1)]
    h = [one] + [one * 0] * degree
    for m in range(1, degree + 1):
        acc = one * 0
        for k in range(1, m + 1):
            if c[k]:
                acc = acc + h[m - k] * c[k] * k
        h[m] = acc * Fraction(1, m)
    return h


def _skew_schur(h: list, lam: Partition, mu: Partition, one):
    """det(h_{lam_i - mu_j - i + j}) with h_r = 0 for r < 0."""
    if not lam.contains(mu):
        return one * 0
    n = max(len(lam), 1)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            r = lam.part(i) - mu.part(j) - i + j
            row.append(h[r] if 0 <= r < len(h) else one * 0)
        rows.append(row)
    if isinstance(one, Fraction) or isinstance(one, int):
        return det(rows)
    return _det_generic(rows, one)


def _det_generic(rows: list[list], one):
    """Laplace expansion for coefficient rings without division."""
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    total = one * 0
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det_generic(minor, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def vertex_matrix_element(spec: VertexOpSpec, mu: Partition, lam: Partition, one=Fraction(1)):
    """<Gamma_- Gamma_+ v_mu, v_lam> = sum_nu s-_{lam/nu} s+_{mu/nu}."""
    degree = max(lam.size(), mu.size())
    hp = _phi(spec.c_plus, degree, one)
    hm = _phi(spec.c_minus, degree, one)
    total = one * 0
    for k in range(min(lam.size(), mu.size()) + 1):
        for nu in partitions(k):
            if lam.contains(nu) and mu.contains(nu):
                a = _skew_schur(hm, lam, nu, one)
                if not a:
                    continue
                b = _skew_schur(hp, mu, nu, one)
                if b:
                    total = total + a * b
    return total


# -- traces -------------------------------------------------------------------


@dataclass(frozen=True)
class TraceSeries:
    series: QSeries
    method: str


def trace_vertex(spec: VertexOpSpec, order: int) -> TraceSeries:
    """sum_{|lam| <= order} q^|lam| <Gamma_- Gamma_+ v_lam, v_lam> by enumeration."""
    coeffs: dict[int, Fraction] = {}
    for m in range(order + 1):
        total = Fraction(0)
        for lam in sorted(partitions(m)):
            w = apply_vertex(spec, basis(lam, m), m)
            total += Fraction(w[lam])
        coeffs[m] = total
    return TraceSeries(QSeries(coeffs, 1, order + 1), "enumeration")


def trace_closed_form(spec: VertexOpSpec, order: int) -> TraceSeries:
    """prod_n 1/(1 - q^n) exp(n c_{-n} c_n q^n / (1 - q^n))."""
    logs = QSeries({}, 1, order + 1)
    for n in range(1, order + 1):
        geo = QSeries({n * k: 1 for k in range(1, order // n + 1)}, 1, order + 1)
        # -log(1 - q^n) = sum_k q^{nk}/k
        logs = logs + QSeries({n * k: Fraction(1, k) for k in range(1, order // n + 1)}, 1, order + 1)
        ab = Fraction(spec.c_minus(n)) * Fraction(spec.c_plus(n))
        if ab:
            logs = logs + geo * (n * ab)
    return TraceSeries(logs.exp(), "closed form")


# -- boson-fermion correspondence ------------------------------------------------


@dataclass
class BosonFermionReport:
    degree: int
    size: int
    compared: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _bf_lhs(mu: Partition, lam: Partition, degree: int) -> dict[tuple[int, int], int]:
    """<sum (xy)^a y^-b psi_a psi*_b v_mu, v_lam>, keys (2*x-exponent, y-exponent)."""
    out: dict[tuple[int, int], int] = {}
    if mu == lam:
        sites = to_maya(mu).sites(-2 * degree)
        for a in sites:
            if abs(a) <= 2 * degree:
                out[(a, 0)] = out.get((a, 0), 0) + 1
        return out
    m_mu, m_lam = to_maya(mu), to_maya(lam)
    span = 2 * (mu.size() + lam.size() + len(mu) + len(lam)) + 3
    gone = [s for s in range(-span, span + 1, 2) if m_mu.occupied(s) and not m_lam.occupied(s)]
    new = [s for s in range(-span, span + 1, 2) if m_lam.occupied(s) and not m_mu.occupied(s)]
    if len(gone) != 1 or len(new) != 1:
        return out
    b, a = gone[0], new[0]
    moved = _move_pebble(mu, b, a)
    assert moved is not None and moved[0] == lam
    key = (a, (a - b) // 2)
    out[key] = moved[1]
    return out


def verify_boson_fermion(degree: int = 6, size: int = 5) -> BosonFermionReport:
    """Compare both sides of the fermionic generating identity, monomial by monomial.

    Right side: sum_{k>=0} x^(-k-1/2) times <Gamma_- Gamma_+ v_mu, v_lam> with
    c_{-n} = ((xy)^n - y^n)/n and c_n = (y^-n - (xy)^-n)/n.
    """
    one = Laurent.const(1, 2)

    def c_minus(n):
        return (Laurent.monomial((2 * n, n)) - Laurent.monomial((0, n))) * Fraction(1, n)

    def c_plus(n):
        return (Laurent.monomial((0, -n)) - Laurent.monomial((-2 * n, -n))) * Fraction(1, n)

    spec = VertexOpSpec(minus=c_minus, plus=c_plus)
    report = BosonFermionReport(degree, size)
    shapes = list(partitions_upto(size))
    for mu in shapes:
        for lam in shapes:
            lhs = _bf_lhs(mu, lam, degree)
            element = vertex_matrix_element(spec, mu, lam, one)
            for xa in range(-2 * degree + (1 - 2 * degree) % 2, 2 * degree + 1, 2):
                if xa % 2 == 0:
                    continue
                for yb in range(-degree, degree + 1):
                    # prefactor exponents are -k-1/2, k >= 0, so only e >= xa + 1 contribute
                    rhs = sum(
                        c
                        for (e, f), c in element.terms.items()
                        if f == yb and e >= xa + 1 and (e - xa) % 2 == 1
                    )
                    left = lhs.get((xa, yb), 0)
                    report.compared += 1
                    if left != rhs:
                        report.mismatches.append((str(mu), str(lam), Fraction(xa, 2), yb, left, rhs))
    return report


# -- pillowcase ---------------------------------------------------------------


def pillowcase_spec() -> VertexOpSpec:
    """exp(sum_{k odd} alpha_{-k}/k) exp(-sum_{k odd} alpha_k/k), k >= 1."""
    return VertexOpSpec(
        minus=lambda n: Fraction(1, n) if n % 2 else 0,
        plus=lambda n: Fraction(-1, n) if n % 2 else 0,
    )


def pillowcase_weight(lam: Partition) -> Fraction:
    """(prod odd hooks / prod even hooks)^2, without the 2-core gate."""
    odd, even = 1, 1
    for h in hook_lengths(lam):
        if h % 2:
            odd *= h
        else:
            even *= h
    return Fraction(odd, even) ** 2


def has_empty_two_core(lam: Partition) -> bool:
    return not p_core_quotient(lam, 2).core


# -- uniform 1-point function --------------------------------------------------


def one_point_enumeration(x_bound2: int, order: int):
    """sum_{|lam| <= order} q^|lam| sum_{x in S(lam), |x| <= bound} u^x, keys (2x, |lam|)."""
    out: dict[tuple[int, int], int] = {}
    for lam in partitions_upto(order):
        m = lam.size()
        for s in to_maya(lam).sites(-x_bound2):
            if abs(s) <= x_bound2:
                out[(s, m)] = out.get((s, m), 0) + 1
    return out


def one_point_series(x_bound2: int, order: int):
    """Z(q)/theta(u, q) in the annulus 1 < |u| < |q|^-1 on the window |2x| <= x_bound2."""
    from .theta import theta_inverse

    z = QSeries.euler(order, -1)
    return theta_inverse(order, (-x_bound2, x_bound2), "annulus") * z


def verify_one_point(x_bound2: int = 25, order: int = 12) -> list[tuple]:
    series = one_point_series(x_bound2, order)
    counts = one_point_enumeration(x_bound2, order)
    bad = []
    for u2 in range(-x_bound2, x_bound2 + 1):
        if u2 % 2 == 0:
            continue
        for m in range(order + 1):
            a = counts.get((u2, m), 0)
            b = series.coeff(u2, m)
            if a != b:
                bad.append((Fraction(u2, 2), m, a, b))
    return bad
