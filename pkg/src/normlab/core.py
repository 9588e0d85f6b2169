##
# Licensed under the MIT License.
##
"""Monomial ideal arithmetic in a (positively) graded polynomial ring.

Monomials are exponent vectors, i.e. tuples of nonnegative ints. The unit
ideal is the singleton holding the zero vector and the zero ideal is the
empty antichain; every operation here accepts both.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from normlab.errors import (
    DegenerateIdealError,
    DimensionMismatchError,
    NotMPrimaryError,
    RingMismatchError,
)

_log = logging.getLogger(name=__name__)

ExponentVector = Tuple[int, ...]


@dataclass(frozen=True)
class RingDescriptor:
    names: Tuple[str, ...]
    weights: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        names = tuple(self.names)
        weights = tuple(self.weights) if self.weights else (1,) * len(names)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        if len(names) < 1:
            raise ValueError("A polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"Variable names must be unique: {list(names)}")
        if len(weights) != len(names):
            raise ValueError(
                f"{len(weights)} weights given for {len(names)} variables"
            )
        if any(weight <= 0 for weight in weights):
            raise ValueError(f"Weights must be positive: {list(weights)}")

    @classmethod
    def standard(cls, dimension: int, prefix: str = "x") -> "RingDescriptor":
        return cls(tuple(f"{prefix}{i + 1}" for i in range(dimension)))

    @property
    def dimension(self) -> int:
        return len(self.names)

    @property
    def sigma(self) -> int:
        return sum(self.weights)

    @property
    def is_standard(self) -> bool:
        return all(weight == 1 for weight in self.weights)

    def degree(self, vector: Sequence[int]) -> int:
        return sum(w * a for w, a in zip(self.weights, vector))

    def check(self, vector: Sequence[int]) -> ExponentVector:
        if len(vector) != self.dimension:
            raise DimensionMismatchError(self.dimension, vector)
        if any(entry < 0 for entry in vector):
            raise ValueError(f"Exponents must be nonnegative: {tuple(vector)}")
        return tuple(int(entry) for entry in vector)

    def monomials_of_degree(self, degree: int) -> List[ExponentVector]:
        """All exponent vectors of weighted degree ``degree``, lex descending."""
        return list(_monomials_of_degree(self.weights, degree))

    def format_monomial(self, vector: Sequence[int]) -> str:
        factors = []
        for name, exponent in zip(self.names, vector):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        return "*".join(factors) if factors else "1"


@lru_cache(maxsize=None)
def _monomials_of_degree(
    weights: Tuple[int, ...], degree: int
) -> Tuple[ExponentVector, ...]:
    if degree < 0:
        return ()
    if len(weights) == 1:
        if degree % weights[0]:
            return ()
        return ((degree // weights[0],),)
    result = []
    for first in range(degree // weights[0], -1, -1):
        for rest in _monomials_of_degree(weights[1:], degree - first * weights[0]):
            result.append((first,) + rest)
    return tuple(result)


@dataclass(frozen=True)
class MonomialIdeal:
    ring: RingDescriptor
    generators: Tuple[ExponentVector, ...]

    def __post_init__(self):
        checked = tuple(sorted(self.ring.check(g) for g in self.generators))
        object.__setattr__(self, "generators", checked)

    def __iter__(self) -> Iterator[ExponentVector]:
        return iter(self.generators)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(self.ring.format_monomial(g) for g in self) + ")"

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    @property
    def degrees(self) -> List[int]:
        return [self.ring.degree(g) for g in self.generators]

    @property
    def is_equigenerated(self) -> bool:
        return len(set(self.degrees)) == 1

    @property
    def max_exponents(self) -> ExponentVector:
        if self.is_zero:
            return (0,) * self.ring.dimension
        return tuple(max(column) for column in zip(*self.generators))

    @property
    def is_squarefree(self) -> bool:
        return all(entry <= 1 for g in self.generators for entry in g)

    def pure_powers(self) -> Dict[int, int]:
        """Least pure-power exponent per variable index, for the variables that have one."""
        found: Dict[int, int] = {}
        for g in self.generators:
            support = [i for i, entry in enumerate(g) if entry]
            if len(support) == 1:
                i = support[0]
                found[i] = min(found.get(i, g[i]), g[i])
        return found

    def is_m_primary(self) -> bool:
        return self.is_unit or len(self.pure_powers()) == self.ring.dimension

    def is_parameter_ideal(self) -> bool:
        """Minimally generated by one pure power of each variable."""
        return (
            len(self.generators) == self.ring.dimension
            and len(self.pure_powers()) == self.ring.dimension
            and not self.is_unit
        )

    def require_proper(self, operation: str) -> None:
        if self.is_zero:
            raise DegenerateIdealError(operation, "zero")
        if self.is_unit:
            raise DegenerateIdealError(operation, "unit")

    def require_m_primary(self, operation: str) -> None:
        if self.is_m_primary():
            return
        pure = self.pure_powers()
        missing = [name for i, name in enumerate(self.ring.names) if i not in pure]
        raise NotMPrimaryError(operation, missing)


def _minimal_elements(vectors: Iterable[ExponentVector]) -> List[ExponentVector]:
    candidates = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept: List[ExponentVector] = []
    for candidate in candidates:
        if not any(_divides(g, candidate) for g in kept):
            kept.append(candidate)
    return kept


def _divides(g: ExponentVector, a: ExponentVector) -> bool:
    return all(x <= y for x, y in zip(g, a))


def minimalize(ring: RingDescriptor, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """The ideal generated by ``gens``, presented by its antichain of minimal generators."""
    checked = [ring.check(g) for g in gens]
    return MonomialIdeal(ring, tuple(_minimal_elements(checked)))


def unit_ideal(ring: RingDescriptor) -> MonomialIdeal:
    return MonomialIdeal(ring, ((0,) * ring.dimension,))


def zero_ideal(ring: RingDescriptor) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def maximal_ideal_power(ring: RingDescriptor, n: int) -> MonomialIdeal:
    """m^n in the standard grading."""
    if n == 0:
        return unit_ideal(ring)
    standard = RingDescriptor(ring.names)
    return MonomialIdeal(ring, tuple(standard.monomials_of_degree(n)))


def _same_ring(left: MonomialIdeal, right: MonomialIdeal) -> None:
    if left.ring != right.ring:
        raise RingMismatchError(left.ring, right.ring)


def multiply(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    _same_ring(left, right)
    sums = (
        tuple(x + y for x, y in zip(a, b))
        for a in left.generators
        for b in right.generators
    )
    return MonomialIdeal(left.ring, tuple(_minimal_elements(sums)))


@lru_cache(maxsize=None)
def power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError(f"Negative power {n}")
    if n == 0:
        return unit_ideal(ideal.ring)
    if n == 1:
        return ideal
    return multiply(power(ideal, n - 1), ideal)


def intersect(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    _same_ring(left, right)
    lcms = (
        tuple(max(x, y) for x, y in zip(a, b))
        for a in left.generators
        for b in right.generators
    )
    return MonomialIdeal(left.ring, tuple(_minimal_elements(lcms)))


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("At least one ideal is needed")
    result = ideals[0]
    for ideal in ideals[1:]:
        result = intersect(result, ideal)
    return result


def colon(ideal: MonomialIdeal, divisor: MonomialIdeal) -> MonomialIdeal:
    """(I : J), the intersection of the monomial colons (I : x^b) over generators b of J."""
    _same_ring(ideal, divisor)
    if divisor.is_zero:
        raise DegenerateIdealError("colon", "zero")
    pieces = []
    for b in divisor.generators:
        shifted = (tuple(max(x - y, 0) for x, y in zip(a, b)) for a in ideal.generators)
        pieces.append(MonomialIdeal(ideal.ring, tuple(_minimal_elements(shifted))))
    return intersect_all(pieces)


def contains_monomial(ideal: MonomialIdeal, vector: Sequence[int]) -> bool:
    vector = ideal.ring.check(vector)
    return any(_divides(g, vector) for g in ideal.generators)


def contains_ideal(ideal: MonomialIdeal, other: MonomialIdeal) -> bool:
    _same_ring(ideal, other)
    return all(contains_monomial(ideal, g) for g in other.generators)


def colength(ideal: MonomialIdeal) -> int:
    """lambda(R/I), the number of standard monomials of an m-primary ideal."""
    if ideal.is_unit:
        return 0
    ideal.require_m_primary("colength")
    count = _staircase_count(ideal.generators)
    _log.debug(f"Colength of {ideal} is {count}")
    return count


def _staircase_count(gens: Sequence[ExponentVector]) -> int:
    # slice by the first exponent; every slice keeps the pure powers of the rest
    if len(gens[0]) == 1:
        return min(g[0] for g in gens)
    bound = min(g[0] for g in gens if not any(g[1:]))
    total = 0
    for level in range(bound):
        section = _minimal_elements(g[1:] for g in gens if g[0] <= level)
        total += _staircase_count(section)
    return total


def hilbert_slice(ideal: MonomialIdeal, degree: int) -> int:
    """dim_k (R/I)_e for the weighted grading."""
    if degree < 0:
        raise ValueError(f"Negative degree {degree}")
    return sum(
        1
        for a in ideal.ring.monomials_of_degree(degree)
        if not any(_divides(g, a) for g in ideal.generators)
    )


def standard_monomials(ideal: MonomialIdeal) -> Optional[List[ExponentVector]]:
    """Exponent vectors outside an m-primary ideal, or None when I is not m-primary."""
    pure = ideal.pure_powers()
    if len(pure) != ideal.ring.dimension:
        return None
    box = product(*(range(pure[i]) for i in range(ideal.ring.dimension)))
    return [a for a in box if not any(_divides(g, a) for g in ideal.generators)]
