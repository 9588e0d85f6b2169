##
# Licensed under the MIT License.
##
import pytest

from normlab.core import MonomialIdeal, maximal_ideal_power, minimalize, multiply, unit_ideal
from normlab.errors import BoundViolationError
from normlab.indices import (
    check_bounds,
    generation_index,
    indices_report,
    normalization_index,
    products_below,
    termination_certificate,
)
from normlab.newton import analytic_spread, closure_of_power

from test_ideals import index_tests
from test_ideals.monomial_ideals import XY
from test_utils import assert_all_hold, check_named

EXPECTED_INDICES = {
    "maximal_d2": (0, 1, 2),
    "maximal_squared_d2": (0, 1, 2),
    "pure_squares_d2": (1, 1, 2),
    "pure_cubes_d2": (1, 1, 2),
    "x3_y5": (1, 1, 2),
    "pure_squares_d3": (1, 1, 3),
    "pure_cubes_d3": (2, 1, 3),
    "triangle_ideal": (0, 1, 3),
    "path_ideal": (0, 1, 3),
}


@pytest.mark.parametrize("ideal_name", index_tests)
def test_indices(ideal_name, request):
    ideal = request.getfixturevalue(ideal_name)
    report = indices_report(ideal)
    assert (report.s, report.s0, report.ell) == EXPECTED_INDICES[ideal_name]


@pytest.mark.parametrize("ideal_name", index_tests)
def test_bounds_and_certificate_hold(ideal_name, request):
    report = indices_report(request.getfixturevalue(ideal_name))
    assert_all_hold(report.bound_checks)
    assert report.certificate.holds
    assert check_named(report.bound_checks, "s<=l-1").holds


@pytest.mark.parametrize("ideal_name", index_tests + ["six_vertex_ideal"])
def test_fresh_generators_regenerate_closures(ideal_name, request):
    ideal = request.getfixturevalue(ideal_name)
    ring = ideal.ring
    _, fresh = generation_index(ideal)
    levels = {k: minimalize(ring, gens) for k, gens in fresh.items() if gens}
    rebuilt = {0: unit_ideal(ring)}
    for n in range(1, analytic_spread(ideal) + 1):
        products = [multiply(levels[k], rebuilt[n - k]) for k in levels if k <= n]
        rebuilt[n] = minimalize(ring, [g for piece in products for g in piece.generators])
        assert rebuilt[n] == closure_of_power(ideal, n)


@pytest.mark.parametrize("ideal_name", ["pure_squares_d2", "pure_cubes_d3"])
def test_multiplicity_bounds_run_on_primary_ideals(ideal_name, request):
    report = indices_report(request.getfixturevalue(ideal_name))
    check = check_named(report.bound_checks, "s<=(e-1)s0")
    assert check.skipped is None
    assert check.holds


def test_multiplicity_bounds_are_skipped_off_primary(triangle_ideal):
    checks = check_bounds(triangle_ideal, 0, 1)
    assert check_named(checks, "s<=(e-1)s0").skipped == "the ideal is not m-primary"
    assert check_named(checks, "s<=e((s0+1)^d-1)-s0(2d-1)").skipped


def test_bound_violation_is_a_falsification(pure_squares_d2):
    with pytest.raises(BoundViolationError) as excinfo:
        check_bounds(pure_squares_d2, 5, 1)
    assert excinfo.value.name == "s<=l-1"
    assert excinfo.value.exit_code == 2


def test_six_vertex_indices(six_vertex_ideal):
    report = indices_report(six_vertex_ideal)
    assert (report.s, report.s0, report.ell) == (2, 2, 4)
    assert not report.normal
    assert report.fresh_generators[2] == ((1, 1, 1, 1, 1, 1),)
    assert report.fresh_generators[3] == ()
    assert report.fresh_generators[1] == six_vertex_ideal.generators


def test_pure_power_family_reaches_spread_minus_one(pure_squares_d2, pure_cubes_d3):
    # (x1^d, ..., xd^d): s = d - 1 and s0 = 1
    assert normalization_index(pure_squares_d2) == 1
    assert normalization_index(pure_cubes_d3) == 2
    assert generation_index(pure_cubes_d3)[0] == 1


def test_products_below(pure_squares_d2):
    assert products_below(pure_squares_d2, 2) == maximal_ideal_power(XY, 4)


def test_principal_ideal_has_zero_indices():
    principal = MonomialIdeal(XY, ((1, 2),))
    assert normalization_index(principal) == 0
    s0, fresh = generation_index(principal)
    assert s0 == 0
    assert fresh == {1: ((1, 2),)}
    assert termination_certificate(principal).holds


def test_normal_iff_closed_with_zero_index(triangle_ideal, pure_squares_d3):
    assert indices_report(triangle_ideal).normal
    report = indices_report(pure_squares_d3)
    assert not report.normal
    assert report.s == 1
