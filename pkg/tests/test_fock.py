from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import P, partition_st
from wedgekit.characters import character_table, mn_character
from wedgekit.fock import (
    VertexOpSpec,
    WedgeVector,
    alpha_product_on_vacuum,
    apply_alpha,
    apply_charge_check,
    apply_energy,
    apply_normal_bilinear,
    apply_vertex,
    basis,
    has_empty_two_core,
    one_point_enumeration,
    pillowcase_spec,
    pillowcase_weight,
    trace_closed_form,
    trace_vertex,
    verify_boson_fermion,
    verify_one_point,
    vertex_matrix_element,
)
from wedgekit.partitions import Partition, partitions, partitions_upto, to_maya

EMPTY = Partition()


def vec(*pairs):
    return {P(*lam): c for lam, c in pairs}


def test_alpha_examples():
    assert apply_alpha(-3, basis(P(3, 1))).terms == vec(((6, 1), 1), ((3, 2, 2), -1), ((3, 1, 1, 1, 1), 1))
    assert apply_alpha(3, basis(P(5, 4, 3))).terms == vec(((5, 4), 1), ((3, 3, 3), -1), ((5, 2, 2), -1))
    assert apply_alpha(1, basis(EMPTY)).terms == {}
    with pytest.raises(ValueError):
        apply_alpha(0, basis(EMPTY))


def test_bilinear_examples():
    lam = P(5, 4, 4, 2)
    assert apply_normal_bilinear(11, -3, basis(lam)).terms == vec(((6, 6, 5, 5), -1))
    # diagonal: occupation number minus its vacuum value
    assert apply_normal_bilinear(9, 9, basis(lam)).terms == {lam: 1}
    assert apply_normal_bilinear(-3, -3, basis(lam)).terms == {}
    assert apply_normal_bilinear(-1, -1, basis(lam)).terms == {lam: -1}
    assert apply_normal_bilinear(-3, -3, basis(P(1, 1))).terms == {P(1, 1): -1}
    with pytest.raises(ValueError):
        apply_normal_bilinear(2, 1, basis(lam))


@given(partition_st(max_n=10))
def test_energy_from_bilinears(lam):
    v = basis(lam)
    span = 2 * (lam.size() + len(lam)) + 3
    total = WedgeVector({})
    for k2 in range(-span, span + 1, 2):
        total = total + apply_normal_bilinear(k2, k2, v).scale(Fraction(k2, 2))
    assert total == apply_energy(v)


@given(partition_st(max_n=8), st.sampled_from([-3, -2, -1, 1, 2, 3]))
def test_alpha_from_bilinears(lam, n):
    # alpha_n = sum_k psi_{k-n} psi*_k
    v = basis(lam)
    span = 2 * (lam.size() + len(lam) + abs(n)) + 3
    total = WedgeVector({})
    for k2 in range(-span, span + 1, 2):
        total = total + apply_normal_bilinear(k2 - 2 * n, k2, v)
    assert total == apply_alpha(n, v)


@given(partition_st(max_n=8), st.integers(1, 4), st.integers(1, 4))
def test_heisenberg_relations(lam, m, n):
    v = basis(lam)
    for a, b in ((m, -n), (-m, n), (m, n), (-m, -n)):
        lhs = apply_alpha(a, apply_alpha(b, v)) - apply_alpha(b, apply_alpha(a, v))
        expected = v.scale(a) if a + b == 0 else WedgeVector({})
        assert lhs == expected


@given(partition_st(max_n=8), st.integers(1, 4))
def test_adjointness(lam, n):
    up = apply_alpha(-n, basis(lam))
    for mu in up.terms:
        assert apply_alpha(n, basis(mu))[lam] == up[mu]


def test_charge_zero():
    for lam in partitions_upto(8):
        apply_charge_check(apply_alpha(-2, basis(lam)))


def test_alpha_product_gives_characters():
    for n in range(1, 8):
        t = character_table(n)
        for mu in t.cols:
            v = alpha_product_on_vacuum(mu)
            assert v.terms == {lam: t[lam, mu] for lam in t.rows if t[lam, mu]}
    with pytest.raises(ValueError):
        alpha_product_on_vacuum(P(3), cutoff=2)


def test_cutoff_marks_truncation():
    v = apply_alpha(-2, basis(P(2), cutoff=3))
    assert v.truncated and not v.terms
    assert not apply_alpha(-1, basis(P(2), cutoff=3)).truncated


SPECS = [
    VertexOpSpec(minus={1: 2}, plus={1: 3}),
    VertexOpSpec(minus={2: Fraction(1, 2), 1: -1}, plus={2: -5, 3: Fraction(1, 3)}),
    pillowcase_spec(),
]


@pytest.mark.parametrize("spec", SPECS)
def test_vertex_matrix_elements(spec):
    cutoff = 6
    for mu in partitions_upto(4):
        w = apply_vertex(spec, basis(mu, cutoff), cutoff)
        for lam in partitions_upto(cutoff):
            assert w[lam] == vertex_matrix_element(spec, mu, lam)


@pytest.mark.parametrize("spec", SPECS[:2])
def test_trace_two_ways(spec):
    assert trace_vertex(spec, 8).series == trace_closed_form(spec, 8).series


def test_trace_counts_partitions_without_operator():
    s = trace_closed_form(VertexOpSpec(), 10).series
    assert [s.coeff(m) for m in range(11)] == [len(partitions(m)) for m in range(11)]


def test_trace_example():
    s = trace_closed_form(VertexOpSpec(minus={1: 2}, plus={1: 3}), 2).series
    assert s.coeff(1) == 7


def test_boson_fermion():
    report = verify_boson_fermion(degree=4, size=4)
    assert report.ok and report.compared > 0


def test_one_point():
    assert verify_one_point(11, 8) == []
    counts = one_point_enumeration(3, 2)
    # x = 1/2 is a site of (1) and (1,1) but not of (2)
    assert counts[(1, 1)] == 1 and counts[(1, 2)] == 1
    assert counts[(-1, 0)] == 1


def test_pillowcase_diagonal():
    spec = pillowcase_spec()
    for lam in partitions_upto(10):
        m = lam.size()
        entry = apply_vertex(spec, basis(lam, m), m)[lam]
        assert entry == (pillowcase_weight(lam) if has_empty_two_core(lam) else 0)
    assert pillowcase_weight(P(2)) == Fraction(1, 4)
    assert pillowcase_weight(P(1, 1)) == Fraction(1, 4)


def test_pillowcase_diagonal_needs_first_mode():
    # dropping k = 1 from both exponents breaks the weights
    spec = VertexOpSpec(
        minus=lambda n: Fraction(1, n) if n % 2 and n > 1 else 0,
        plus=lambda n: Fraction(-1, n) if n % 2 and n > 1 else 0,
    )
    lam = P(2)
    assert apply_vertex(spec, basis(lam, 2), 2)[lam] != pillowcase_weight(lam)


@pytest.mark.parametrize("n", [1, 3, -1, -3])
def test_pillowcase_commutator(n):
    spec = pillowcase_spec()
    cut = 7
    for lam in partitions_upto(3):
        w = apply_vertex(spec, basis(lam, cut), cut)
        lhs = apply_alpha(n, w) - apply_vertex(spec, apply_alpha(n, basis(lam, cut)), cut)
        # alpha_n with n > 0 lowers energy, so only levels <= cut - n are exact
        top = cut - n if n > 0 else cut
        assert lhs.restrict(top) == w.restrict(top)


def test_pillowcase_commutator_even_mode_differs():
    spec = pillowcase_spec()
    lam = P(1, 1)
    w = apply_vertex(spec, basis(lam, 6), 6)
    lhs = apply_alpha(2, w) - apply_vertex(spec, apply_alpha(2, basis(lam, 6)), 6)
    assert lhs.restrict(4) != w.restrict(4)


def test_wedge_json():
    data = apply_alpha(-3, basis(P(3, 1))).to_json()
    assert data["terms"][0] == {"partition": "3,1,1,1,1", "num": "1", "den": "1"}
