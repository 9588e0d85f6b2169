##
# Licensed under the MIT License.
##
import pytest

from normlab.clutter import Clutter
from normlab.core import MonomialIdeal, RingDescriptor
from normlab.errors import DimensionMismatchError, NonAntichainWarning, ParseError
from normlab.parsing import (
    default_names,
    parse_clutter,
    parse_ideal,
    parse_input,
    parse_monomial,
)

from test_ideals.monomial_ideals import XY
from test_utils import fixture_path, write_input

SQUARES = {"generators": [[2, 0], [0, 2]]}


def test_default_names():
    assert default_names(2) == ["x", "y"]
    assert default_names(4) == ["x1", "x2", "x3", "x4"]


def test_parse_monomial():
    assert parse_monomial("x^2*y", XY) == (2, 1)
    assert parse_monomial(" x * y^3 ", XY) == (1, 3)
    assert parse_monomial("1", XY) == (0, 0)


@pytest.mark.parametrize("text", ["w", "x^", "x^0", "x**2", ""])
def test_malformed_monomials(text):
    with pytest.raises(ParseError):
        parse_monomial(text, XY)


def test_exponent_vectors(pure_squares_d2):
    assert parse_ideal({"generators": [[2, 0], [0, 2]]}) == pure_squares_d2


def test_monomial_strings_with_indexed_variables(six_vertex_ideal):
    ideal = parse_ideal({"monomials": ["x1*x2*x5", "x1*x3*x4", "x2*x3*x6", "x4*x5*x6"]})
    assert ideal.ring.names == ("x1", "x2", "x3", "x4", "x5", "x6")
    assert ideal == six_vertex_ideal


def test_variables_sort_naturally():
    ideal = parse_ideal({"monomials": ["x10", "x2*x9"]})
    assert ideal.ring.names == ("x2", "x9", "x10")


def test_weighted_ring():
    ideal = parse_ideal(
        {"ring": {"variables": ["x", "y"], "weights": [1, 2]}, "generators": [[2, 0], [0, 1]]}
    )
    assert ideal.ring == RingDescriptor(("x", "y"), (1, 2))
    assert ideal.degrees == [2, 2]


def test_non_antichain_is_minimalized():
    with pytest.warns(NonAntichainWarning):
        ideal = parse_ideal({"generators": [[1, 0], [2, 0]]})
    assert ideal == MonomialIdeal(XY, ((1, 0),))


def test_generator_length_must_match_ring():
    with pytest.raises(DimensionMismatchError):
        parse_ideal({"ring": {"variables": ["x", "y"]}, "generators": [[1, 0, 0]]})


def test_negative_exponents_are_rejected():
    with pytest.raises(ParseError) as excinfo:
        parse_ideal({"generators": [[1, -1]]})
    assert excinfo.value.field == "generators"


def test_missing_generators():
    with pytest.raises(ParseError):
        parse_ideal({"ring": {"variables": ["x"]}})


def test_parse_clutter(triangle):
    assert parse_clutter({"vertices": 3, "edges": [[1, 2], [2, 3], [1, 3]]}) == triangle


def test_comparable_clutter_edges():
    with pytest.raises(ParseError) as excinfo:
        parse_clutter({"vertices": 3, "edges": [[1], [1, 2]]})
    assert excinfo.value.field == "edges"


def test_parse_input_files(six_vertex_clutter, six_vertex_ideal):
    assert parse_input(fixture_path("clutter.json")) == six_vertex_clutter
    assert parse_input(fixture_path("clutter_monomials.json")) == six_vertex_ideal
    assert isinstance(parse_input(fixture_path("triangle.json")), Clutter)


def test_invalid_json_reports_the_line(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"generators":\n  [[1, 0],\n', encoding="utf-8")
    with pytest.raises(ParseError) as excinfo:
        parse_input(path)
    assert "line 3" in excinfo.value.msg


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        parse_input(tmp_path / "absent.json")


def test_top_level_must_be_an_object(tmp_path):
    with pytest.raises(ParseError):
        parse_input(write_input(tmp_path, "list.json", [[1, 0]]))


@pytest.mark.parametrize(
    "data, field",
    [
        ({"ring": {"variables": ["x", "y"], "weights": ["a", "b"]}, **SQUARES}, "ring.weights"),
        ({"ring": {"variables": "xy", "weights": 3}, **SQUARES}, "ring.variables"),
        ({"ring": {"variables": ["x", "y"], "weights": 3}, **SQUARES}, "ring.weights"),
        ({"ring": {"variables": [1, 2]}, "generators": [[1, 0]]}, "ring.variables"),
        ({"generators": [[1, True]]}, "generators"),
    ],
)
def test_badly_typed_rings(data, field):
    with pytest.raises(ParseError) as excinfo:
        parse_ideal(data)
    assert excinfo.value.field == field


@pytest.mark.parametrize(
    "data",
    [
        {"vertices": 3, "edges": [[1, "a"]]},
        {"vertices": 3, "edges": [[1, 2.5]]},
        {"vertices": "3", "edges": [[1, 2]]},
        {"vertices": True, "edges": [[1]]},
    ],
)
def test_badly_typed_clutters(data):
    with pytest.raises(ParseError):
        parse_clutter(data)


def test_badly_typed_files_raise_parse_errors(tmp_path):
    path = write_input(tmp_path, "typed.json", {"vertices": 3, "edges": [[1, "a"]]})
    with pytest.raises(ParseError):
        parse_input(path)
