"""One test per acceptance criterion; each prints the numbers behind its verdict."""

import pytest

from wedgekit.acceptance import run_check


def check(criterion):
    r = run_check(criterion)
    print(f"criterion {r.criterion} ({r.name}): {r.detail} [{r.seconds:.1f}s of {r.budget:.0f}s]")
    assert r.passed, r.detail
    assert r.within_budget, f"{r.seconds:.1f}s exceeds the {r.budget}s budget"


def test_criterion_01_worked_values():
    check(1)


def test_criterion_02_dimension_formulas_agree():
    check(2)


def test_criterion_03_character_orthogonality():
    check(3)


def test_criterion_04_skew_dimensions():
    check(4)


def test_criterion_05_series_and_operator_identities():
    check(5)


def test_criterion_06_uniform_one_point_function():
    check(6)


def test_criterion_07_pillowcase_weights_and_mass():
    check(7)


def test_criterion_08_numeric_theta():
    check(8)


@pytest.mark.slow
def test_criterion_09_limit_shapes_and_moment_scaling():
    check(9)


def test_criterion_10_variational_constants():
    check(10)


def test_criterion_11_convention_document():
    check(11)
