##
# Licensed under the MIT License.
##
"""Newton polyhedra of monomial ideals and the integral closures they cut out.

The integral closure of I^n is spanned by the monomials whose exponents lie
in n * NP(I), where NP(I) = conv(exponents of I) + R^d_{>=0}. Facets are found
by brute force over d-subsets of generator points and recession directions,
which is fine at the scale of the examples this package targets.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from sympy import igcd

from normlab import linalg
from normlab.core import (
    ExponentVector,
    MonomialIdeal,
    contains_monomial,
    power,
)

_log = logging.getLogger(name=__name__)


@dataclass(frozen=True, order=True)
class Facet:
    """The inequality <normal, a> >= offset; the normal is a primitive integer vector."""

    normal: Tuple[int, ...]
    offset: int

    def value(self, vector: Sequence[int]) -> int:
        return sum(c * a for c, a in zip(self.normal, vector))

    def is_tight(self, vector: Sequence[int], scale: int = 1) -> bool:
        return self.value(vector) == scale * self.offset

    def scaled(self, n: int) -> "Facet":
        return Facet(self.normal, n * self.offset)

    def __str__(self) -> str:
        terms = " + ".join(
            f"{c}*a{i + 1}" if c != 1 else f"a{i + 1}"
            for i, c in enumerate(self.normal)
            if c
        )
        return f"{terms} >= {self.offset}"


@dataclass(frozen=True)
class NewtonPolyhedron:
    dimension: int
    facets: Tuple[Facet, ...]

    def contains(self, vector: Sequence[int], scale: int = 1) -> bool:
        """Membership of ``vector`` in scale * NP; the orthant is implicit."""
        if any(entry < 0 for entry in vector):
            return False
        return all(f.value(vector) >= scale * f.offset for f in self.facets)

    def scaled(self, n: int) -> "NewtonPolyhedron":
        return NewtonPolyhedron(self.dimension, tuple(f.scaled(n) for f in self.facets))

    @property
    def bounded_facets(self) -> List[Facet]:
        return [f for f in self.facets if all(c > 0 for c in f.normal)]


def _homogenized(point: Sequence[int]) -> List[int]:
    return list(point) + [-1]


def _direction(dimension: int, index: int) -> List[int]:
    return [int(i == index) for i in range(dimension)] + [0]


@lru_cache(maxsize=None)
def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    ideal.require_proper("newton_polyhedron")
    d = ideal.ring.dimension
    points = list(ideal.generators)
    elements = [_homogenized(p) for p in points] + [_direction(d, j) for j in range(d)]
    seen: Set[Tuple[Tuple[int, ...], int]] = set()
    facets: List[Facet] = []
    for subset in combinations(range(len(elements)), d):
        rows = [elements[i] for i in subset]
        kernel = linalg.nullspace(rows, d + 1)
        if len(kernel) != 1:
            continue
        candidate = _orient(linalg.primitive_integer_vector(kernel[0]), points)
        if candidate is None or candidate in seen:
            continue
        seen.add(candidate)
        normal, offset = candidate
        if _is_facet(normal, offset, points, d):
            facets.append(Facet(normal, offset))
    _log.debug(f"Newton polyhedron of {ideal} has {len(facets)} facets")
    return NewtonPolyhedron(d, tuple(sorted(facets)))


def _orient(
    vector: List[int], points: List[ExponentVector]
) -> Optional[Tuple[Tuple[int, ...], int]]:
    normal, offset = vector[:-1], vector[-1]
    if not any(normal):
        return None
    if any(c > 0 for c in normal) and any(c < 0 for c in normal):
        return None
    if all(c <= 0 for c in normal):
        normal = [-c for c in normal]
        offset = -offset
    if any(sum(c * a for c, a in zip(normal, p)) < offset for p in points):
        return None
    divisor = 0
    for c in normal:
        divisor = igcd(divisor, c)
    # offset is attained at a tight generator, so divisor | offset
    return tuple(c // divisor for c in normal), offset // divisor


def _is_facet(
    normal: Tuple[int, ...], offset: int, points: List[ExponentVector], d: int
) -> bool:
    tight = [
        _homogenized(p)
        for p in points
        if sum(c * a for c, a in zip(normal, p)) == offset
    ]
    tight += [_direction(d, j) for j in range(d) if normal[j] == 0]
    return linalg.rank(tight, d + 1) == d


@lru_cache(maxsize=None)
def closure_of_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """Minimal generators of the integral closure of I^n."""
    ideal.require_proper("closure_of_power")
    if n < 1:
        raise ValueError(f"The power must be positive, got {n}")
    polyhedron = newton_polyhedron(ideal)
    # a lattice point of n*NP with a_j > n*max_j stays in n*NP after lowering a_j
    box = [range(n * m + 1) for m in ideal.max_exponents]
    minimal = []
    for point in product(*box):
        if not polyhedron.contains(point, n):
            continue
        if all(
            not polyhedron.contains(_lower(point, j), n)
            for j in range(len(point))
            if point[j]
        ):
            minimal.append(point)
    _log.debug(f"Closure of power {n} of {ideal} has {len(minimal)} generators")
    return MonomialIdeal(ideal.ring, tuple(minimal))


def _lower(point: Tuple[int, ...], index: int) -> Tuple[int, ...]:
    return point[:index] + (point[index] - 1,) + point[index + 1 :]


def closure_contains(ideal: MonomialIdeal, vector: Sequence[int], n: int = 1) -> bool:
    return newton_polyhedron(ideal).contains(vector, n)


@lru_cache(maxsize=None)
def analytic_spread(ideal: MonomialIdeal) -> int:
    """l(I), one more than the largest dimension of a bounded face of NP(I).

    For an equigenerated ideal the bounded face cut by the degree form holds
    every generator, so this is the rank of the rows (a_i | 1).
    """
    ideal.require_proper("analytic_spread")
    polyhedron = newton_polyhedron(ideal)
    points = list(ideal.generators)
    tight_sets: Dict[Facet, FrozenSet[int]] = {
        f: frozenset(i for i, p in enumerate(points) if f.is_tight(p))
        for f in polyhedron.facets
    }
    faces: Set[FrozenSet[int]] = set()
    frontier = [s for s in tight_sets.values() if s]
    while frontier:
        face = frontier.pop()
        if face in faces:
            continue
        faces.add(face)
        for s in tight_sets.values():
            meet = face & s
            if meet and meet not in faces:
                frontier.append(meet)
    spread = 1
    for face in faces:
        supporting = [f for f, s in tight_sets.items() if face <= s]
        weight = [sum(column) for column in zip(*(f.normal for f in supporting))]
        if not weight or not all(w > 0 for w in weight):
            continue
        rows = [list(points[i]) + [1] for i in face]
        spread = max(spread, linalg.rank(rows, ideal.ring.dimension + 1))
    return spread


@dataclass(frozen=True)
class NormalityCertificate:
    normal: bool
    checked_powers: Tuple[int, ...]
    failing_power: Optional[int] = None
    witness: Optional[ExponentVector] = None


def is_normal(ideal: MonomialIdeal) -> Tuple[bool, NormalityCertificate]:
    """Decide normality by checking closure(I^n) == I^n for n < l(I)."""
    ideal.require_proper("is_normal")
    checked = []
    for n in range(1, analytic_spread(ideal)):
        closure = closure_of_power(ideal, n)
        plain = power(ideal, n)
        checked.append(n)
        if closure != plain:
            witness = next(g for g in closure if not contains_monomial(plain, g))
            _log.debug(f"{ideal} is not normal: power {n} misses {witness}")
            certificate = NormalityCertificate(False, tuple(checked), n, witness)
            return False, certificate
    return True, NormalityCertificate(True, tuple(checked))
