##
# Licensed under the MIT License.
##
from itertools import product

import pytest
from sympy import QQ

from normlab.clutter import (
    Clutter,
    compare_symbolic_closure,
    cover_prime_power,
    edge_ideal,
    incidence_matrix,
    minimal_vertex_covers,
    monomial_height,
    q_polyhedron_integral,
    q_polyhedron_vertices,
    symbolic_power,
)
from normlab.core import contains_ideal, contains_monomial, intersect_all, multiply, power
from normlab.errors import DegenerateSystemError
from normlab.newton import closure_of_power
from normlab.oracle import symbolic_power_by_covers

from test_ideals import clutter_tests
from test_ideals.clutters import SIX_VERTEX_COVERS
from test_utils import monomials


def test_comparable_edges_are_rejected():
    with pytest.raises(ValueError):
        Clutter(3, ((1, 2), (1, 2, 3)))


def test_edges_stay_in_range():
    with pytest.raises(ValueError):
        Clutter(2, ((1, 3),))


def test_from_supports_keeps_minimal_sets():
    clutter = Clutter.from_supports(3, [{0, 1}, {0, 1, 2}, {2}])
    assert clutter.edges == ((1, 2), (3,))


def test_edge_ideal(six_vertex_clutter):
    ideal = edge_ideal(six_vertex_clutter)
    assert sorted(monomials(ideal)) == ["x1*x2*x5", "x1*x3*x4", "x2*x3*x6", "x4*x5*x6"]


def test_incidence_matrix(triangle):
    matrix = incidence_matrix(triangle)
    assert matrix.shape == (3, 3)
    assert matrix.column_supports() == list(triangle.edges)


def test_minimal_vertex_covers(six_vertex_clutter, triangle):
    assert minimal_vertex_covers(six_vertex_clutter) == SIX_VERTEX_COVERS
    assert minimal_vertex_covers(triangle) == [(1, 2), (1, 3), (2, 3)]


def test_cover_prime_power(triangle):
    prime = cover_prime_power(triangle.ring(), (1, 3), 2)
    assert prime.generators == ((0, 0, 2), (1, 0, 1), (2, 0, 0))


def test_six_vertex_closure_of_square(six_vertex_ideal):
    square = power(six_vertex_ideal, 2)
    closure = closure_of_power(six_vertex_ideal, 2)
    fresh = [g for g in closure.generators if g not in square.generators]
    assert fresh == [(1, 1, 1, 1, 1, 1)]
    assert len(closure.generators) == len(square.generators) + 1


def test_six_vertex_closure_of_cube(six_vertex_ideal):
    assert closure_of_power(six_vertex_ideal, 3) == multiply(
        six_vertex_ideal, closure_of_power(six_vertex_ideal, 2)
    )


def test_six_vertex_symbolic_powers_are_closures(six_vertex_clutter):
    assert q_polyhedron_integral(six_vertex_clutter)
    rows = compare_symbolic_closure(six_vertex_clutter, 3)
    assert [row.power for row in rows] == [1, 2, 3]
    assert all(row.equal for row in rows)


def test_triangle_covering_polyhedron(triangle):
    vertices = q_polyhedron_vertices(triangle)
    half = QQ(1, 2)
    assert (half, half, half) in vertices
    assert len(vertices) == 4
    assert not q_polyhedron_integral(triangle)


def test_triangle_symbolic_square_exceeds_closure(triangle):
    assert symbolic_power(triangle, 1) == edge_ideal(triangle)
    rows = compare_symbolic_closure(triangle, 2)
    assert rows[0].equal
    assert not rows[1].equal
    assert rows[1].only_symbolic == ((1, 1, 1),)
    assert rows[1].only_closure == ()


def test_comparison_stops_at_the_spread(triangle):
    with pytest.raises(ValueError):
        compare_symbolic_closure(triangle, 4)


def test_clutter_without_edges_has_no_polyhedron():
    with pytest.raises(DegenerateSystemError):
        q_polyhedron_vertices(Clutter(2, ()))


@pytest.mark.parametrize(
    "ideal_name, height",
    [
        ("triangle_ideal", 2),
        ("six_vertex_ideal", 2),
        ("pure_squares_d3", 3),
        ("not_primary_d2", 1),
        ("path_ideal", 2),
    ],
)
def test_monomial_height(ideal_name, height, request):
    assert monomial_height(request.getfixturevalue(ideal_name)) == height


def test_clutter_without_edges_has_no_symbolic_powers():
    empty = Clutter(2, ())
    with pytest.raises(DegenerateSystemError):
        symbolic_power(empty, 1)
    with pytest.raises(DegenerateSystemError):
        symbolic_power_by_covers(empty, 1)
    with pytest.raises(DegenerateSystemError):
        cover_prime_power(empty.ring(), (), 1)


@pytest.mark.parametrize("clutter_name", clutter_tests)
def test_covers_are_minimal(clutter_name, request):
    clutter = request.getfixturevalue(clutter_name)
    for cover in minimal_vertex_covers(clutter):
        assert all(set(edge) & set(cover) for edge in clutter.edges)
        for vertex in cover:
            smaller = set(cover) - {vertex}
            assert not all(set(edge) & smaller for edge in clutter.edges)


@pytest.mark.parametrize("clutter_name", clutter_tests)
def test_edge_ideal_is_the_intersection_of_cover_primes(clutter_name, request):
    clutter = request.getfixturevalue(clutter_name)
    ideal = edge_ideal(clutter)
    primes = [
        cover_prime_power(clutter.ring(), cover, 1) for cover in minimal_vertex_covers(clutter)
    ]
    for point in product(range(3), repeat=clutter.vertices):
        assert contains_monomial(ideal, point) == all(
            contains_monomial(prime, point) for prime in primes
        )


@pytest.mark.parametrize("clutter_name", clutter_tests)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_cover_prime_powers_match_cover_sums(clutter_name, n, request):
    clutter = request.getfixturevalue(clutter_name)
    ring = clutter.ring()
    primes = [cover_prime_power(ring, cover, n) for cover in minimal_vertex_covers(clutter)]
    by_covers = symbolic_power_by_covers(clutter, n)
    assert intersect_all(primes) == by_covers
    assert symbolic_power(clutter, n) == by_covers
    assert all(contains_ideal(prime, by_covers) for prime in primes)


@pytest.mark.parametrize("clutter_name", clutter_tests)
def test_symbolic_powers_decrease(clutter_name, request):
    clutter = request.getfixturevalue(clutter_name)
    ideal = edge_ideal(clutter)
    powers = {n: symbolic_power(clutter, n) for n in range(1, 4)}
    for n in (1, 2):
        assert contains_ideal(powers[n], powers[n + 1])
    for n in (1, 2, 3):
        assert contains_ideal(powers[n], power(ideal, n))
