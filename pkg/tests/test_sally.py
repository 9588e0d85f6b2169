##
# Licensed under the MIT License.
##
from dataclasses import replace

import pytest

from normlab.checks import enforce
from normlab.core import colength, multiply
from normlab.errors import NonExactDivisionError, NotEquigeneratedError, SeriesNotStabilizedError
from normlab.graded import quotient_length
from normlab.newton import closure_of_power
from normlab.sally import (
    closure_quotient,
    e1_inequality_report,
    filtration_report,
    generator_bound_check,
    h_polynomial,
    hilbert_coefficients,
    hilbert_polynomial_value,
    length_table,
    minimal_reduction,
    multiplicity,
    sally_cross_oracle,
    sally_h_vector,
    sally_hilbert_function,
    verify_identities,
)

from test_ideals import primary_tests
from test_utils import assert_all_hold, check_named

# f(t), e_0, e_1, g(t) of the closure filtration
EXPECTED_SERIES = {
    "maximal_d2": ((1,), 1, 0, ()),
    "pure_squares_d2": ((3, 1), 4, 1, ()),
    "pure_cubes_d2": ((6, 3), 9, 3, ()),
    "x3_y5": ((11, 4), 15, 4, ()),
    "pure_squares_d3": ((4, 4), 8, 4, ()),
    "pure_cubes_d3": ((10, 16, 1), 27, 18, (1,)),
}


def test_length_table_of_pure_squares(pure_squares_d2):
    assert length_table(pure_squares_d2, 5) == [0, 3, 10, 21, 36, 55]


def test_length_table_of_x3_y5(x3_y5):
    assert length_table(x3_y5, 5) == [0, 11, 37, 78, 134, 205]


def test_h_polynomial():
    assert h_polynomial([0, 3, 10, 21, 36, 55], 2) == [3, 1]


def test_short_table_does_not_stabilize():
    with pytest.raises(SeriesNotStabilizedError):
        h_polynomial([0, 3, 10], 2)


def test_hilbert_coefficients():
    assert hilbert_coefficients([10, 16, 1], 4) == [27, 18, 1, 0]


def test_sally_h_vector():
    assert sally_h_vector([3, 1], 4) == []
    assert sally_h_vector([10, 16, 1], 27) == [1]


def test_sally_h_vector_needs_exact_division():
    with pytest.raises(NonExactDivisionError):
        sally_h_vector([3, 1], 5)


def test_hilbert_polynomial_value():
    # 4 C(m+1, 2) - m for (x^2, y^2)
    assert [hilbert_polynomial_value([4, 1, 0], 2, m) for m in range(1, 5)] == [3, 10, 21, 36]


def test_sally_hilbert_function():
    assert sally_hilbert_function([1], 3, 3) == [1, 3, 6]
    assert sally_hilbert_function([], 2, 3) == [0, 0, 0]


@pytest.mark.parametrize("ideal_name", primary_tests)
def test_filtration_series(ideal_name, request):
    ideal = request.getfixturevalue(ideal_name)
    report = filtration_report(ideal)
    a, e0, e1, b = EXPECTED_SERIES[ideal_name]
    assert report.a == a
    assert report.e[:2] == (e0, e1)
    assert report.b == b
    assert multiplicity(ideal) == e0


@pytest.mark.parametrize("ideal_name", primary_tests)
def test_filtration_identities_hold(ideal_name, request):
    report = filtration_report(request.getfixturevalue(ideal_name))
    assert_all_hold(report.checks)
    assert check_named(report.checks, "b_nonnegative_non_increasing").holds
    assert check_named(report.checks, "hilbert_polynomial").holds
    assert check_named(report.checks, "e2>=e3>=e4>=e5").holds


def test_pure_squares_report(pure_squares_d2):
    report = filtration_report(pure_squares_d2, 5)
    assert report.length_table == (0, 3, 10, 21, 36, 55)
    assert report.hilbert_coefficients == (4, 1, 0)
    assert report.lambda_I1_over_J == 1
    inequality = e1_inequality_report(report)
    assert inequality.holds
    assert inequality.lhs - inequality.rhs == 0


def test_tampered_e1_breaks_identities(pure_squares_d2):
    report = filtration_report(pure_squares_d2, 5)
    tampered = replace(report, e=report.e[:1] + (report.e[1] + 1,) + report.e[2:])
    checks = verify_identities(tampered)
    assert not check_named(checks, "e1=lambda(I1/J)+g(1)").holds
    assert not check_named(checks, "hilbert_polynomial").holds
    assert check_named(checks, "a0=lambda(R/I1)").holds


def test_generation_degree_check(pure_cubes_d3):
    report = filtration_report(pure_cubes_d3, None, 1)
    assert check_named(report.checks, "generation_degree").holds


def test_generator_bounds_for_pure_cubes(pure_cubes_d3):
    bounds, reduction = generator_bound_check(pure_cubes_d3, 0)
    assert reduction.monomial == pure_cubes_d3
    assert bounds.seed is None
    assert bounds.first_quotient == 17
    assert bounds.higher_quotients == (1, 0)
    assert bounds.total == 18
    assert check_named(bounds.checks, "G<=e0").skipped == "needs g = 0"
    assert_all_hold(bounds.checks)


@pytest.mark.parametrize(
    "ideal_name, total",
    [("maximal_d2", 0), ("pure_squares_d2", 1), ("pure_cubes_d2", 3), ("x3_y5", 4)],
)
def test_generator_count_matches_e1(ideal_name, total, request):
    bounds, _ = generator_bound_check(request.getfixturevalue(ideal_name), 0)
    assert bounds.total == total
    assert check_named(bounds.checks, "G<=e0").holds
    assert_all_hold(bounds.checks)


def test_generator_bounds_with_drawn_reduction(maximal_squared_d2):
    bounds, reduction = generator_bound_check(maximal_squared_d2, 7)
    assert reduction.monomial is None
    assert reduction.seed is not None
    assert len(reduction.forms) == 2
    assert bounds.first_quotient == 1
    assert bounds.total == 1


def test_generator_bounds_when_reduction_number_exceeds_dimension(sparse_cubics_d3):
    bounds, reduction = generator_bound_check(sparse_cubics_d3, 0)
    assert reduction.monomial is None
    assert reduction.general.colength == 27
    assert reduction.general.reduction_number > 3
    assert bounds.first_quotient == 17
    assert check_named(bounds.checks, "e1=lambda(I1/J)+g(1)").holds
    assert_all_hold(bounds.checks)


def test_parameter_ideals_use_graded_lengths(pure_cubes_d3, monkeypatch):
    calls = []

    def counted(num, den, dimension=None):
        calls.append(dimension)
        return quotient_length(num, den, dimension)

    monkeypatch.setattr("normlab.sally.quotient_length", counted)
    reduction = minimal_reduction(pure_cubes_d3, 0)
    assert reduction.monomial is not None
    closure = closure_of_power(pure_cubes_d3, 1)
    expected = colength(multiply(pure_cubes_d3, closure)) - colength(
        closure_of_power(pure_cubes_d3, 2)
    )
    assert closure_quotient(reduction, 2, 1, 1) == expected
    assert calls == [3]


def test_e1_upper_bound_is_informational(pure_squares_d2):
    report = filtration_report(pure_squares_d2, 5)
    tampered = replace(report, e=report.e[:1] + (3,) + report.e[2:])
    bound = check_named(verify_identities(tampered), "e1_upper_bound")
    assert bound.holds is False
    assert not bound.asserted
    enforce([bound])


@pytest.mark.parametrize("ideal_name", primary_tests + ["maximal_squared_d2"])
def test_sally_cross_oracle(ideal_name, request):
    ideal = request.getfixturevalue(ideal_name)
    report = filtration_report(ideal)
    cross = sally_cross_oracle(report, minimal_reduction(ideal, 3, report.multiplicity))
    assert cross.predicted == cross.direct


def test_sally_cross_oracle_for_pure_cubes(pure_cubes_d3):
    report = filtration_report(pure_cubes_d3)
    cross = sally_cross_oracle(report, minimal_reduction(pure_cubes_d3, 0))
    assert cross.direct == (1, 3, 6)


def test_minimal_reduction_needs_equigenerated(mixed_d2):
    with pytest.raises(NotEquigeneratedError):
        minimal_reduction(mixed_d2, 0)
