import math
from collections import Counter
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from scipy import stats

from conftest import P, partition_st
from wedgekit.fock import has_empty_two_core, pillowcase_weight
from wedgekit.measures import (
    PILLOWCASE_MAX_N,
    MeasureSpec,
    expected_size_asymptotic,
    expected_size_numeric,
    expected_size_series,
    pillowcase_exact_distribution,
    pillowcase_mass_series,
    plancherel_exact_distribution,
    sample,
    sample_batch,
    shifted_power,
    sigma_series,
    uniform_exact_distribution,
)
from wedgekit.partitions import Partition, partitions, partitions_upto


def chi2_pvalue(draws, probs):
    counts = Counter(draws)
    keys = sorted(probs)
    total = sum(probs.values())
    observed = [counts.get(k, 0) for k in keys]
    expected = [len(draws) * float(probs[k] / total) for k in keys]
    assert sum(observed) == len(draws), "sampler produced an outcome outside the support"
    return stats.chisquare(observed, expected).pvalue


def test_spec_validation():
    with pytest.raises(ValueError):
        MeasureSpec("bogus", seed=1, n=3)
    with pytest.raises(ValueError):
        MeasureSpec("uniform_q", seed=1, q=1.0)
    with pytest.raises(ValueError):
        MeasureSpec("plancherel", seed=1)
    with pytest.raises(ValueError):
        MeasureSpec("pillowcase_exact", seed=1, n=PILLOWCASE_MAX_N + 2)


def test_exact_laws_normalized():
    for n in range(1, 9):
        assert sum(uniform_exact_distribution(n).values()) == 1
        assert sum(plancherel_exact_distribution(n).values()) == 1
    assert plancherel_exact_distribution(3)[P(2, 1)] == Fraction(4, 6)


def test_pillowcase_law():
    d = pillowcase_exact_distribution(4)
    assert set(d) == {lam for lam in partitions(4) if has_empty_two_core(lam)}
    assert pillowcase_exact_distribution(5) == {}
    mass = pillowcase_mass_series(12)
    for m in range(13):
        assert sum(pillowcase_exact_distribution(m).values(), Fraction(0)) == mass.coeff(m)
    # prod (1 - q^2n)^(-1/2): q^2 coefficient 1/2, q^4 coefficient 7/8
    assert mass.coeff(2) == Fraction(1, 2) and mass.coeff(4) == Fraction(7, 8)


def test_uniform_q_empty_probability():
    draws = sample_batch(MeasureSpec("uniform_q", seed=11, q=0.5), 4000)
    p_empty = math.prod(1 - 0.5**n for n in range(1, 80))
    assert abs(p_empty - 0.2887880951) < 1e-9
    freq = sum(1 for lam in draws if not lam) / len(draws)
    assert abs(freq - p_empty) < 4 * math.sqrt(p_empty * (1 - p_empty) / len(draws))


def test_uniform_q_size_law():
    q = 0.3
    draws = sample_batch(MeasureSpec("uniform_q", seed=3, q=q), 4000)
    z = math.prod(1 - q**n for n in range(1, 80))
    probs = {m: len(partitions(m)) * q**m * z for m in range(6)}
    sizes = [min(lam.size(), 6) for lam in draws]
    probs[6] = 1 - sum(probs.values())
    probs = {k: Fraction(v) for k, v in probs.items()}
    assert chi2_pvalue(sizes, probs) > 1e-3


@pytest.mark.parametrize(
    "kind,n,law",
    [
        ("uniform_exact", 6, uniform_exact_distribution),
        ("plancherel", 4, plancherel_exact_distribution),
        ("plancherel", 6, plancherel_exact_distribution),
        ("pillowcase_exact", 6, pillowcase_exact_distribution),
    ],
)
def test_sampler_matches_exact_law(kind, n, law):
    draws = sample_batch(MeasureSpec(kind, seed=5, n=n), 3000)
    assert chi2_pvalue(draws, law(n)) > 1e-3


def test_pillowcase_q_sampler():
    q = 0.3
    draws = sample_batch(MeasureSpec("pillowcase_q", seed=2, q=q), 2000)
    assert all(lam.size() % 2 == 0 and has_empty_two_core(lam) for lam in draws)
    weights = {}
    for m in range(0, 7, 2):
        for lam, w in pillowcase_exact_distribution(m).items():
            weights[lam] = w * Fraction(q) ** m
    tail = [lam for lam in draws if lam.size() > 6]
    assert len(tail) < 0.01 * len(draws)
    assert chi2_pvalue([lam for lam in draws if lam.size() <= 6], weights) > 1e-3


def test_seed_determinism():
    for spec in (
        MeasureSpec("uniform_q", seed=9, q=0.7),
        MeasureSpec("uniform_exact", seed=9, n=40),
        MeasureSpec("plancherel", seed=9, n=40),
    ):
        assert sample_batch(spec, 5) == sample_batch(spec, 5)
        assert sample(spec, 3) == sample_batch(spec, 5)[3]
    a = sample_batch(MeasureSpec("plancherel", seed=1, n=40), 5)
    b = sample_batch(MeasureSpec("plancherel", seed=2, n=40), 5)
    assert a != b


def test_exact_size_samplers():
    for lam in sample_batch(MeasureSpec("uniform_exact", seed=1, n=100), 5):
        assert lam.size() == 100
    for lam in sample_batch(MeasureSpec("plancherel", seed=1, n=100), 5):
        assert lam.size() == 100
    assert sample(MeasureSpec("uniform_exact", seed=1, n=0)) == Partition()


def test_first_shifted_power_is_size():
    for lam in partitions_upto(30):
        assert shifted_power(1, lam) == lam.size() - Fraction(1, 24)


def test_shifted_power_of_vacuum():
    assert shifted_power(1, Partition()) == Fraction(-1, 24)
    assert shifted_power(2, Partition()) == 0
    assert shifted_power(3, Partition()) == Fraction(7, 960)
    with pytest.raises(ValueError):
        shifted_power(0, Partition())


@given(partition_st(max_n=15))
def test_shifted_power_generating_function(lam):
    # sum_k p_k(lam) z^k/k! = sum_i (e^{z(lam_i - i + 1/2)} - e^{z(-i + 1/2)}) + 1/(2 sinh(z/2)) - 1/z
    z = mpmath.mpf("0.37")
    lhs = sum(mpmath.mpf(shifted_power(k, lam).numerator) / shifted_power(k, lam).denominator * z**k / mpmath.factorial(k) for k in range(1, 40))
    rhs = 1 / (2 * mpmath.sinh(z / 2)) - 1 / z
    for i, part in enumerate(lam.parts, start=1):
        rhs += mpmath.exp(z * (part - i + 0.5)) - mpmath.exp(z * (0.5 - i))
    assert abs(lhs - rhs) < 1e-12


def test_expected_size_series():
    s = expected_size_series(12)
    assert s.agreement(sigma_series(12)) is None
    # q Z' has coefficients m p(m); the q^4 coefficient is 20
    from wedgekit.qseries import QSeries

    qz = QSeries.euler(6, -1).q_derivative()
    assert qz.coeff(4) == 20
    assert [qz.coeff(m) for m in range(7)] == [m * len(partitions(m)) for m in range(7)]


def test_expected_size_numeric_vs_oracle():
    for h in (1.0, 0.3, 0.1):
        q = mpmath.e ** (-mpmath.mpf(h))
        ref = mpmath.nsum(lambda n: n * q**n / (1 - q**n), [1, mpmath.inf])
        assert abs(expected_size_numeric(h) - float(ref)) < 1e-12 * float(ref)


def test_expected_size_asymptotics():
    for h in (0.2, 0.1, 0.05):
        exact = expected_size_numeric(h)
        assert abs(expected_size_asymptotic(h, refined=True) - exact) < 1e-10 * exact
    exact = expected_size_numeric(0.1)
    lead_err = abs(expected_size_asymptotic(0.1) - exact) / exact
    assert 0.02 < lead_err < 0.05


def test_pillowcase_weight_no_gate():
    # (2,1) has a non-empty 2-core; its weight is still defined
    assert not has_empty_two_core(P(2, 1))
    assert pillowcase_weight(P(2, 1)) == 9
