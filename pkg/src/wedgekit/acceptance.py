"""Acceptance checks shared by the test suite and ``wedgekit verify-all``.

Each check returns a :class:`CheckResult`; ``detail`` carries the numbers so a
failing line explains itself.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from pathlib import Path

from .characters import (
    centralizer_size,
    character_table,
    dim_coords,
    dim_determinant,
    dim_frobenius,
    dim_hook,
    mn_character,
    skew_dim,
)
from .fock import (
    VertexOpSpec,
    alpha_product_on_vacuum,
    apply_alpha,
    apply_normal_bilinear,
    apply_vertex,
    basis,
    has_empty_two_core,
    pillowcase_spec,
    pillowcase_weight,
    trace_closed_form,
    trace_vertex,
    verify_boson_fermion,
    verify_one_point,
)
from .limits import PLANCHEREL, UNIFORM, moment_scaling_check, sup_distance
from .measures import MeasureSpec, pillowcase_mass_series, sample_batch
from .numeric import lemma_theta1_ratio, theta_numeric
from .partitions import (
    FrobeniusCoords,
    Partition,
    hook_product,
    p_core_quotient,
    partitions,
    partitions_upto,
    standard_tableaux_count,
    to_frobenius,
)
from .theta import eta, pentagonal_eta, theta_product, theta_triple_product, verify_quasimodular_identities
from .variational import (
    euler_lagrange_residual,
    hook_correction_c,
    hook_lemma_residuals,
    typical_dimension_closed_form,
    typical_dimension_constant,
)

__all__ = ["CheckResult", "CHECKS", "run_all", "PRINTED_TYPICAL_CONSTANT"]

PRINTED_TYPICAL_CONSTANT = 0.628699
P = lambda *xs: Partition(tuple(xs))


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    budget: float = float("inf")

    @property
    def within_budget(self) -> bool:
        return self.seconds < self.budget


def _vec(*pairs) -> dict:
    return {P(*lam): c for lam, c in pairs}


def check_worked_values() -> list[tuple[str, bool, str]]:
    lam = P(5, 4, 4, 2)
    out = [
        ("dim(5,4,4,2) = 81081", dim_hook(lam) == 81081, str(dim_hook(lam))),
        ("h(5,4,4,2) = 16128000", hook_product(lam) == 16128000, str(hook_product(lam))),
        ("dim(3,2) = 5", dim_hook(P(3, 2)) == 5, str(dim_hook(P(3, 2)))),
        ("chi^(4,3,2)(6,2,1) = 0", mn_character(P(4, 3, 2), P(6, 2, 1)) == 0, ""),
    ]
    fc = to_frobenius(lam)
    out.append(("Frobenius (4,2,1|3,2,0)", fc == FrobeniusCoords((4, 2, 1), (3, 2, 0)), str(fc)))
    pq = p_core_quotient(lam, 2)
    ok = pq.core == P(1) and pq.quotient == (P(2, 2, 1), P(2))
    out.append(("2-core/2-quotient of (5,4,4,2)", ok, str(pq)))
    a = apply_alpha(-3, basis(P(3, 1))).terms
    out.append(("alpha_-3 v(3,1)", a == _vec(((6, 1), 1), ((3, 2, 2), -1), ((3, 1, 1, 1, 1), 1)), str(a)))
    b = apply_alpha(3, basis(P(5, 4, 3))).terms
    out.append(("alpha_3 v(5,4,3)", b == _vec(((5, 4), 1), ((3, 3, 3), -1), ((5, 2, 2), -1)), str(b)))
    c = apply_normal_bilinear(11, -3, basis(lam)).terms
    out.append((":psi_11/2 psi*_-3/2: v(5,4,4,2)", c == _vec(((6, 6, 5, 5), -1)), str(c)))
    return out


def c1() -> tuple[bool, str]:
    rows = check_worked_values()
    bad = [name for name, ok, _ in rows if not ok]
    return not bad, f"{len(rows) - len(bad)}/{len(rows)} values exact" + (f"; failed: {bad}" if bad else "")


def c2() -> tuple[bool, str]:
    count, bad = 0, []
    for lam in partitions_upto(12):
        vals = {dim_hook(lam), dim_coords(lam), dim_frobenius(lam), dim_determinant(lam), standard_tableaux_count(lam)}
        count += 1
        if len(vals) != 1:
            bad.append(str(lam))
    return not bad, f"{count} partitions, five-way agreement" + (f"; failed {bad[:5]}" if bad else "")


def c3() -> tuple[bool, str]:
    bad = []
    for n in range(1, 9):
        t = character_table(n)
        ps = t.rows
        z = {mu: centralizer_size(mu) for mu in ps}
        for i, a in enumerate(ps):
            for b in ps[i:]:
                row = sum(Fraction(t[a, mu] * t[b, mu], z[mu]) for mu in ps)
                if row != (a == b):
                    bad.append(("rows", n, str(a), str(b)))
                col = sum(t[lam, a] * t[lam, b] for lam in ps)
                if col != (z[a] if a == b else 0):
                    bad.append(("columns", n, str(a), str(b)))
        if sum(dim_hook(lam) ** 2 for lam in ps) != factorial(n):
            bad.append(("burnside", n))
        for mu in ps:
            v = alpha_product_on_vacuum(mu)
            if any(v[lam] != t[lam, mu] for lam in ps) or len(v) > len(ps):
                bad.append(("alpha product", n, str(mu)))
    return not bad, "orthogonality, Burnside and alpha products for n <= 8" + (f"; failed {bad[:5]}" if bad else "")


def c4() -> tuple[bool, str]:
    count, bad = 0, []
    for lam in partitions_upto(10):
        for m in range(lam.size() + 1):
            for mu in partitions(m):
                if not lam.contains(mu):
                    continue
                count += 1
                if skew_dim(lam, mu) != standard_tableaux_count(lam, mu):
                    bad.append((str(lam), str(mu)))
    return not bad, f"{count} pairs mu in lambda" + (f"; failed {bad[:5]}" if bad else "")


def c5() -> tuple[bool, str]:
    notes, ok = [], True
    prod_, triple = theta_product(30), theta_triple_product(30)
    m = prod_.mismatches(triple)
    ok &= not m
    notes.append(f"theta product/triple product: {len(m)} mismatches over {len(prod_.terms)} terms")
    e = eta(30).agreement(pentagonal_eta(30))
    ok &= e is None
    notes.append(f"eta pentagonal: {'ok' if e is None else e}")
    rep = verify_quasimodular_identities(20, 8)
    ok &= rep.ok
    notes.append(f"quasimodular: {rep.results}")
    for n, A, B in ((1, 2, 3), (2, Fraction(1, 2), -5), (3, 0, 0)):
        spec = VertexOpSpec(minus={n: A}, plus={n: B})
        d = trace_vertex(spec, 10).series.agreement(trace_closed_form(spec, 10).series)
        ok &= d is None
        notes.append(f"trace mode {n}: {'ok' if d is None else d}")
    bf = verify_boson_fermion(6, 5)
    ok &= bf.ok
    notes.append(f"boson-fermion: {bf.compared} monomials, {len(bf.mismatches)} mismatches")
    return ok, "; ".join(notes)


def c6() -> tuple[bool, str]:
    bad = verify_one_point(25, 12)
    return not bad, f"window |x| <= 25/2, order 12: {len(bad)} mismatches"


def c7() -> tuple[bool, str]:
    spec = pillowcase_spec()
    bad, count = [], 0
    for lam in partitions_upto(12):
        if not has_empty_two_core(lam):
            continue
        count += 1
        m = lam.size()
        w = apply_vertex(spec, basis(lam, m), m)
        if w[lam] != pillowcase_weight(lam):
            bad.append(str(lam))
    series = pillowcase_mass_series(20)
    mass_bad = []
    for m in range(21):
        total = sum((pillowcase_weight(l) for l in partitions(m) if has_empty_two_core(l)), Fraction(0))
        if total != series.coeff(m):
            mass_bad.append(m)
    ok = not bad and not mass_bad
    return ok, f"{count} diagonal entries, mass series to q^20" + (f"; failed {bad[:5]} {mass_bad}" if not ok else "")


def c8() -> tuple[bool, str]:
    h = 0.02
    r = lemma_theta1_ratio(0.3 * h, h)
    err1 = abs(r - 1)
    diffs = []
    for u in (0.1, 0.7 + 0.4j, -1.3, 2.0 - 1.0j):
        a, b = theta_numeric(u, 0.5, "direct"), theta_numeric(u, 0.5, "transformed")
        diffs.append(abs(a - b) / max(abs(a), 1e-300))
    err2 = max(diffs)
    return err1 < 1e-4 and err2 < 1e-9, f"|ratio - 1| = {err1:.2e} at h = 0.02; cross-method rel diff {err2:.2e} at h = 0.5"


def c9(count: int = 50, n: int = 10_000, seed: int = 7) -> tuple[bool, str]:
    notes, ok = [], True
    cache = {}
    for kind, shape in (("uniform_exact", UNIFORM), ("plancherel", PLANCHEREL)):
        samples = sample_batch(MeasureSpec(kind, seed=seed, n=n), count)
        cache[kind] = samples
        d = sum(sup_distance(l, shape) for l in samples) / count
        ok &= d < 0.08
        notes.append(f"{kind} mean sup distance {d:.4f}")
    for k in (1, 3):
        rep = moment_scaling_check(MeasureSpec("uniform_exact", seed=seed, n=n), k, count, cache["uniform_exact"])
        ok &= rep.rel_error < 0.05
        notes.append(
            f"k={k}: {rep.estimate:.4f} vs k 2^k mu_(k-1) = {rep.target:.4f} ({rep.rel_error:.2%});"
            f" printed 2k mu_(k-1) = {rep.printed_target:.4f}"
        )
    return ok, "; ".join(notes)


def c10() -> tuple[bool, str]:
    const = typical_dimension_constant("uniform")
    consistent = typical_dimension_constant("uniform", "consistent")
    c_one = hook_correction_c(1)
    el = euler_lagrange_residual()
    lemma = max(abs(r) for r in hook_lemma_residuals(P(5, 4, 4, 2)))
    parts = {
        "typical constant": abs(const - PRINTED_TYPICAL_CONSTANT) < 1e-3,
        "consistent constant": abs(consistent - typical_dimension_closed_form()) < 1e-10,
        "c(1)": abs(c_one - (3 - 4 * math.log(2)) / 2) < 1e-12,
        "EL residual": el < 1e-6,
        "hook lemma": lemma < 1e-10,
    }
    detail = (
        f"typical constant {const:.7f} vs {PRINTED_TYPICAL_CONSTANT} (diff {const - PRINTED_TYPICAL_CONSTANT:+.1e}); "
        f"self-consistent constant {consistent:.7f} (with (1/2) n log n); "
        f"c(1) err {abs(c_one - (3 - 4 * math.log(2)) / 2):.1e}; EL {el:.1e}; lemma {lemma:.1e}"
    )
    failed = [k for k, v in parts.items() if not v]
    if failed:
        detail += f"; failed: {failed}"
    return not failed, detail


DOC_PATH = Path(__file__).resolve().parents[2] / "docs" / "conventions.md"


def c11() -> tuple[bool, str]:
    if not DOC_PATH.exists():
        return False, f"missing {DOC_PATH}"
    text = DOC_PATH.read_text()
    needed = ["moment", "expected size", "p_1", "1/24"]
    missing = [w for w in needed if w not in text]
    return not missing, f"{DOC_PATH.name} present" + (f"; missing topics {missing}" if missing else "")


CHECKS = {
    1: ("exact reproduction of the worked values", c1, 1.0),
    2: ("four-way dimension agreement, |lambda| <= 12", c2, 60.0),
    3: ("character orthogonality, Burnside, alpha products, n <= 8", c3, 120.0),
    4: ("skew dimension vs SYT count, |lambda| <= 10", c4, 120.0),
    5: ("q-series and operator identities", c5, 600.0),
    6: ("uniform one-point function", c6, 300.0),
    7: ("pillowcase weights and total mass", c7, 300.0),
    8: ("numeric theta lemma and cross-method agreement", c8, 10.0),
    9: ("limit shapes and moment scaling", c9, 600.0),
    10: ("variational constants", c10, 60.0),
    11: ("convention document", c11, 1.0),
}


def run_check(criterion: int) -> CheckResult:
    name, fn, budget = CHECKS[criterion]
    t = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # report, do not abort the table
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(criterion, name, bool(passed), detail, time.perf_counter() - t, budget)


def run_all(criteria=None) -> list[CheckResult]:
    return [run_check(c) for c in (criteria or sorted(CHECKS))]
