import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import P, partition_st
from wedgekit.partitions import (
    Cell,
    FrobeniusCoords,
    MayaDiagram,
    PQuotient,
    Partition,
    addable_strips,
    conjugate,
    contour,
    from_frobenius,
    from_maya,
    hook_length,
    hook_lengths,
    hook_product,
    p_core_quotient,
    partitions,
    partitions_upto,
    reconstruct,
    removable_strips,
    standard_tableaux_count,
    to_frobenius,
    to_maya,
)

LAM = P(5, 4, 4, 2)


def test_partition_validation():
    with pytest.raises(ValueError):
        P(2, 3)
    with pytest.raises(ValueError):
        P(2, 0)
    with pytest.raises(ValueError):
        Partition.parse("3,x")


def test_parse_and_print_round_trip():
    assert str(LAM) == "5,4,4,2"
    assert Partition.parse("5,4,4,2") == LAM
    assert str(Partition()) == "0"
    assert Partition.parse("0") == Partition()
    assert Partition.from_json(LAM.to_json()) == LAM


def test_partition_counts():
    assert [len(partitions(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert len(list(partitions_upto(12))) == 272


def test_conjugate_examples():
    assert conjugate(LAM) == P(4, 4, 3, 3, 1)
    assert conjugate(Partition()) == Partition()
    assert conjugate(P(3, 3)) == P(2, 2, 2)


@given(partition_st(max_n=20))
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size() == lam.size()


def test_hook_length_examples():
    assert hook_length(LAM, (2, 2)) == 5
    assert hook_length(P(1), (1, 1)) == 1
    assert hook_length(LAM, (1, 1)) == 8
    assert [hook_length(LAM, (1, c)) for c in range(1, 6)] == [8, 7, 5, 4, 1]
    with pytest.raises(ValueError):
        hook_length(LAM, (1, 6))


def test_hook_product_examples():
    assert hook_product(LAM) == 16128000
    assert hook_product(Partition()) == 1
    assert hook_product(P(2, 1)) == 3


@given(partition_st(max_n=20))
def test_hook_lengths_transpose(lam):
    conj = conjugate(lam)
    for cell in lam.cells():
        assert hook_length(lam, cell) == hook_length(conj, (cell.col, cell.row))
    assert sorted(hook_lengths(lam)) == sorted(hook_length(lam, c) for c in lam.cells())


def test_frobenius_examples():
    assert to_frobenius(LAM) == FrobeniusCoords((4, 2, 1), (3, 2, 0))
    assert to_frobenius(Partition()).d == 0
    assert to_frobenius(P(3, 2)) == FrobeniusCoords((2, 0), (1, 0))
    with pytest.raises(ValueError):
        FrobeniusCoords((1, 2), (0, 1))


def test_maya_examples():
    m = to_maya(LAM)
    assert m.sites(-13) == [9, 5, 3, -3, -9, -11, -13]
    assert to_maya(Partition()).sites(-5) == [-1, -3, -5]
    assert to_maya(P(1)).sites(-5) == [1, -3, -5]
    assert m.charge == 0


def test_maya_rejects_charged():
    with pytest.raises(ValueError):
        from_maya(MayaDiagram(frozenset({1}), frozenset()))


def test_round_trips_exhaustive():
    for lam in partitions_upto(18):
        assert from_maya(to_maya(lam)) == lam
        assert from_frobenius(to_frobenius(lam)) == lam
        for p in (2, 3, 5):
            assert reconstruct(p_core_quotient(lam, p)) == lam


@given(partition_st(max_n=60, min_n=25))
def test_round_trips_random_large(lam):
    assert from_maya(to_maya(lam)) == lam
    assert from_frobenius(to_frobenius(lam)) == lam
    assert reconstruct(p_core_quotient(lam, 3)) == lam


def test_core_quotient_examples():
    pq = p_core_quotient(LAM, 2)
    assert pq.core == P(1)
    assert pq.quotient == (P(2, 2, 1), P(2))
    assert str(pq) == "core=1; quotient=[2,2,1],[2]"
    assert p_core_quotient(P(3, 2, 1), 2) == PQuotient(P(3, 2, 1), (Partition(), Partition()), 2)
    assert p_core_quotient(P(3, 2, 2, 2), 3).core == Partition()


def test_core_quotient_sizes_and_core_rigidity():
    for lam in partitions_upto(20):
        for p in (2, 3, 5):
            pq = p_core_quotient(lam, p)
            assert lam.size() == pq.core.size() + p * sum(q.size() for q in pq.quotient)
            assert removable_strips(pq.core, p) == ()


def test_reconstruct_rejects_bad_input():
    with pytest.raises(ValueError):
        reconstruct(PQuotient(P(1), (P(1),), 2))


def test_strip_examples():
    strips = removable_strips(P(6, 6, 5, 5), 7)
    match = [s for s in strips if s.inner == LAM]
    assert len(match) == 1 and match[0].height == 3 and match[0].sign == -1
    added = addable_strips(P(3, 1), 3)
    assert {s.outer: s.height for s in added} == {P(6, 1): 0, P(3, 2, 2): 1, P(3, 1, 1, 1, 1): 2}
    assert removable_strips(Partition(), 1) == ()


@given(partition_st(max_n=14), st.integers(min_value=1, max_value=6))
def test_strips_add_remove_are_inverse(lam, n):
    for s in addable_strips(lam, n):
        assert s.outer.size() == lam.size() + n
        back = [t for t in removable_strips(s.outer, n) if t.inner == lam]
        assert len(back) == 1 and back[0].height == s.height


def test_contour_small_cases():
    assert contour(Partition()).tolist() == [[-1.0, 1.0], [0.0, 0.0], [1.0, 1.0]]
    assert contour(P(1)).tolist() == [[-2, 2], [-1, 1], [0, 2], [1, 1], [2, 2]]


@given(partition_st(max_n=25))
def test_contour_shape(lam):
    pts = contour(lam)
    s, L = pts[:, 0], pts[:, 1]
    slopes = np.diff(L) / np.diff(s)
    assert np.all(np.abs(np.abs(slopes) - 1) < 1e-12)
    assert L[0] == abs(s[0]) and L[-1] == abs(s[-1])
    # area between contour and |s| is twice the number of cells; |s| is
    # integrated exactly since its kink need not be a breakpoint
    area_L = float(np.sum((L[1:] + L[:-1]) / 2 * np.diff(s)))
    area_abs = (s[0] ** 2 + s[-1] ** 2) / 2
    assert abs(area_L - area_abs - 2 * lam.size()) < 1e-9


def test_contour_slopes_follow_maya_sites():
    pts = contour(LAM)
    occupied = set(to_maya(LAM).sites(-20))
    s, L = pts[:, 0], pts[:, 1]
    for site in range(-15, 16, 2):
        x = site / 2
        val = np.interp([x - 0.5, x + 0.5], s, L) if s[0] <= x - 0.5 and x + 0.5 <= s[-1] else None
        if val is None:
            continue
        slope = val[1] - val[0]
        assert slope == (-1 if site in occupied else 1)


def test_standard_tableaux_count():
    assert standard_tableaux_count(P(3, 2)) == 5
    assert standard_tableaux_count(LAM) == 81081
    assert standard_tableaux_count(LAM, LAM) == 1
    with pytest.raises(ValueError):
        standard_tableaux_count(P(2), P(1, 1))


def test_cells_and_moves():
    lam = P(2, 1)
    assert list(lam.cells()) == [Cell(1, 1), Cell(1, 2), Cell(2, 1)]
    assert lam.add_cell(1) == P(3, 1)
    assert lam.remove_cell(2) == P(2)
    assert lam.contains(P(1, 1)) and not lam.contains(P(3))
