##
# Licensed under the MIT License.
##

from .monomial_ideals import *
from .clutters import *

# m-primary ideals with a hand-checked Hilbert series
primary_tests = [
    "maximal_d2",
    "pure_squares_d2",
    "pure_cubes_d2",
    "x3_y5",
    "pure_squares_d3",
    "pure_cubes_d3",
]

# every ideal the index and bound suites run on
index_tests = primary_tests + ["maximal_squared_d2", "triangle_ideal", "path_ideal"]

# small enough for the definition oracle
oracle_tests = [
    "maximal_d2",
    "pure_squares_d2",
    "pure_cubes_d2",
    "x3_y5",
    "pure_squares_d3",
    "mixed_d2",
    "triangle_ideal",
]

clutter_tests = ["six_vertex_clutter", "triangle", "path"]

# three-variable ideals for the degreewise colon comparison
colon_tests = ["pure_squares_d3", "pure_cubes_d3", "sparse_cubics_d3", "triangle_ideal"]
