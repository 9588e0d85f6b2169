##
# Licensed under the MIT License.
##
"""Degreewise exact linear algebra for homogeneous ideals in a standard graded ring.

An ideal generated by forms of degree at most e meets R_e in the span of the
products m*g, m a monomial of degree e - deg g. Slices are kept in reduced row
echelon form over the monomial basis of R_e in the order returned by
RingDescriptor.monomials_of_degree, so two slices are equal iff their rows are.

Two ideals generated in the single degree t agree iff their degree-t slices
agree, which is how reduction numbers are decided without Groebner bases.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import QQ

from normlab import linalg
from normlab.clutter import monomial_height
from normlab.core import (
    ExponentVector,
    MonomialIdeal,
    RingDescriptor,
    power,
)
from normlab.errors import (
    ColonMismatchError,
    HypothesisUnverifiableError,
    IdentityViolationError,
    InclusionViolatedError,
    NoReductionWithinBoundError,
    NonFiniteQuotientError,
    NotEquigeneratedError,
    ReductionDrawFailedError,
)
from normlab.hypotheses import (
    Hypothesis,
    fully_verified,
    hypothesis_names,
    profile_accepts,
)
from normlab.newton import closure_of_power, is_normal

_log = logging.getLogger(name=__name__)

COEFFICIENT_BOX = 100
DRAW_RETRIES = 8
DEGREE_CAP = 60


@dataclass(frozen=True)
class HomogeneousForm:
    degree: int
    terms: Tuple[Tuple[ExponentVector, object], ...]

    def __post_init__(self):
        merged: Dict[ExponentVector, object] = {}
        for vector, coefficient in self.terms:
            vector = tuple(int(entry) for entry in vector)
            if sum(vector) != self.degree:
                raise ValueError(
                    f"Monomial {vector} does not have degree {self.degree}"
                )
            merged[vector] = merged.get(vector, QQ(0)) + QQ(coefficient)
        terms = tuple(sorted((v, c) for v, c in merged.items() if c))
        if not terms:
            raise ValueError("A homogeneous form needs a nonzero coefficient")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def monomial(cls, vector: Sequence[int]) -> "HomogeneousForm":
        return cls(sum(vector), ((tuple(vector), 1),))

    @property
    def dimension(self) -> int:
        return len(self.terms[0][0])

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __mul__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        products = [
            (tuple(x + y for x, y in zip(a, b)), c * e)
            for a, c in self.terms
            for b, e in other.terms
        ]
        return HomogeneousForm(self.degree + other.degree, tuple(products))

    def format(self, ring: RingDescriptor) -> str:
        return " + ".join(
            f"{c}*{ring.format_monomial(v)}" if c != 1 else ring.format_monomial(v)
            for v, c in self.terms
        )


FormsOrIdeal = Union[MonomialIdeal, Sequence[HomogeneousForm]]


def forms_of(ideal: MonomialIdeal) -> List[HomogeneousForm]:
    _require_standard(ideal)
    return [HomogeneousForm.monomial(g) for g in ideal.generators]


def _require_standard(ideal: MonomialIdeal) -> None:
    if not ideal.ring.is_standard:
        raise ValueError("Degreewise linear algebra needs the standard grading")


def _as_forms(source: FormsOrIdeal) -> List[HomogeneousForm]:
    if isinstance(source, MonomialIdeal):
        return forms_of(source)
    return list(source)


@lru_cache(maxsize=None)
def _basis_index(
    dimension: int, degree: int
) -> Tuple[Tuple[ExponentVector, ...], Dict[ExponentVector, int]]:
    basis = tuple(RingDescriptor.standard(dimension).monomials_of_degree(degree))
    return basis, {vector: i for i, vector in enumerate(basis)}


def _add(left: Sequence[int], right: Sequence[int]) -> ExponentVector:
    return tuple(x + y for x, y in zip(left, right))


@dataclass(frozen=True)
class GradedSubspace:
    """A subspace of R_e held as the nonzero rows of its reduced echelon form."""

    dimension: int
    degree: int
    rows: Tuple[Tuple, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def from_rows(cls, dimension: int, degree: int, rows) -> "GradedSubspace":
        basis, _ = _basis_index(dimension, degree)
        reduced, pivots = linalg.row_reduce(list(rows), len(basis))
        return cls(dimension, degree, tuple(tuple(row) for row in reduced), pivots)

    @classmethod
    def full(cls, dimension: int, degree: int) -> "GradedSubspace":
        basis, _ = _basis_index(dimension, degree)
        rows = tuple(_unit(i, len(basis)) for i in range(len(basis)))
        return cls(dimension, degree, rows, tuple(range(len(basis))))

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def ambient(self) -> int:
        return len(_basis_index(self.dimension, self.degree)[0])

    @property
    def is_full(self) -> bool:
        return self.rank == self.ambient

    def contains(self, other: "GradedSubspace") -> bool:
        if other.rank == 0:
            return True
        stacked = list(self.rows) + list(other.rows)
        return linalg.rank(stacked, self.ambient) == self.rank


def _unit(index: int, size: int) -> Tuple:
    return tuple(QQ(int(i == index)) for i in range(size))


def ideal_slice(
    gens: Sequence[HomogeneousForm], degree: int, dimension: Optional[int] = None
) -> GradedSubspace:
    """The degree-``degree`` piece of the ideal generated by ``gens``."""
    if dimension is None:
        if not gens:
            raise ValueError("The ring dimension is needed for an empty generator list")
        dimension = gens[0].dimension
    basis, index = _basis_index(dimension, degree)
    if all(g.is_monomial for g in gens):
        columns = sorted(
            {
                index[_add(m, g.terms[0][0])]
                for g in gens
                if g.degree <= degree
                for m in _basis_index(dimension, degree - g.degree)[0]
            }
        )
        rows = tuple(_unit(c, len(basis)) for c in columns)
        return GradedSubspace(dimension, degree, rows, tuple(columns))
    rows = []
    for g in gens:
        if g.degree > degree:
            continue
        for m in _basis_index(dimension, degree - g.degree)[0]:
            row = [QQ(0)] * len(basis)
            for vector, coefficient in g.terms:
                row[index[_add(m, vector)]] = coefficient
            rows.append(row)
    return GradedSubspace.from_rows(dimension, degree, rows)


def multiply_forms(
    left: Sequence[HomogeneousForm], right: Sequence[HomogeneousForm]
) -> List[HomogeneousForm]:
    return [a * b for a in left for b in right]


def power_forms(gens: Sequence[HomogeneousForm], n: int) -> List[HomogeneousForm]:
    """Generators of the n-th power: all products of n generators."""
    if n == 0:
        return [HomogeneousForm.monomial((0,) * gens[0].dimension)]
    products = []
    for chosen in combinations_with_replacement(range(len(gens)), n):
        product = gens[chosen[0]]
        for i in chosen[1:]:
            product = product * gens[i]
        products.append(product)
    return products


def _power_generators(source: FormsOrIdeal, n: int) -> List[HomogeneousForm]:
    if isinstance(source, MonomialIdeal):
        return forms_of(power(source, n))
    return power_forms(list(source), n)


def _generator_degree(gens: Sequence[HomogeneousForm], operation: str) -> int:
    degrees = {g.degree for g in gens}
    if len(degrees) != 1:
        raise NotEquigeneratedError(operation, [g.degree for g in gens])
    return degrees.pop()


def _reduction_relation(
    source: FormsOrIdeal,
    reduction: Sequence[HomogeneousForm],
    delta: int,
    bound: int,
) -> Optional[int]:
    dimension = reduction[0].dimension
    for r in range(bound + 1):
        top = (r + 1) * delta
        whole = ideal_slice(_power_generators(source, r + 1), top, dimension)
        reduced = ideal_slice(
            multiply_forms(reduction, _power_generators(source, r)), top, dimension
        )
        if whole == reduced:
            return r
    return None


def relation_bound(dimension: int) -> int:
    return 2 * dimension + 2


def reduction_number(
    ideal: FormsOrIdeal, reduction: Sequence[HomogeneousForm]
) -> int:
    """Least r with I^{r+1} = J I^r, decided in the single degree (r+1)*delta."""
    gens = _as_forms(ideal)
    delta = _generator_degree(gens, "reduction_number")
    if _generator_degree(reduction, "reduction_number") != delta:
        raise NotEquigeneratedError(
            "reduction_number", [delta] + [g.degree for g in reduction]
        )
    bound = relation_bound(gens[0].dimension)
    r = _reduction_relation(ideal, reduction, delta, bound)
    if r is None:
        raise NoReductionWithinBoundError(bound)
    return r


def degreewise_colength(
    gens: Sequence[HomogeneousForm],
    dimension: Optional[int] = None,
    degree_cap: int = DEGREE_CAP,
) -> int:
    """lambda(R/J) summed over degrees until J_e = R_e past the generator degrees."""
    dimension = dimension or gens[0].dimension
    top = max((g.degree for g in gens), default=0)
    total = 0
    for e in range(degree_cap + 1):
        piece = ideal_slice(gens, e, dimension)
        total += piece.ambient - piece.rank
        if e >= top and piece.is_full:
            return total
    raise NonFiniteQuotientError(degree_cap)


@dataclass(frozen=True)
class GeneralReduction:
    seed: int
    forms: Tuple[HomogeneousForm, ...]
    reduction_number: int
    colength: Optional[int]
    seeds_tried: Tuple[int, ...]


def _combination(
    coefficients: Sequence[int], gens: Sequence[HomogeneousForm], delta: int
) -> Optional[HomogeneousForm]:
    terms = [
        (vector, QQ(int(c)) * coefficient)
        for c, g in zip(coefficients, gens)
        for vector, coefficient in g.terms
    ]
    try:
        return HomogeneousForm(delta, tuple(terms))
    except ValueError:
        return None


def _is_m_primary(source: FormsOrIdeal, gens: Sequence[HomogeneousForm]) -> bool:
    if isinstance(source, MonomialIdeal):
        return source.is_m_primary()
    d = gens[0].dimension
    top = max(g.degree for g in gens)
    # an m-primary ideal generated in degree <= top has (R/I)_e = 0 past d(top - 1)
    try:
        degreewise_colength(gens, d, degree_cap=max(top, d * (top - 1) + 1))
    except NonFiniteQuotientError:
        return False
    return True


def draw_reduction(
    ideal: FormsOrIdeal,
    seed: int,
    multiplicity: Optional[int] = None,
    **kwargs,
) -> GeneralReduction:
    r"""Draws d general combinations of the generators and validates them as a reduction.

    :param ideal: an equigenerated monomial ideal or a list of forms of one degree
    :param seed: seed of the first draw; failed draws retry with seed + 1
    :param multiplicity: expected lambda(R/J) for m-primary input, default delta^d

    :Keyword Arguments:
        * *box* (``int``) -- coefficients are drawn from [-box, box], default 100
        * *retries* (``int``) -- number of draws before giving up, default 8
        * *relation_bound* (``int``) -- largest reduction number searched, default 2d + 2
    """
    box = kwargs.get("box", COEFFICIENT_BOX)
    retries = kwargs.get("retries", DRAW_RETRIES)
    gens = _as_forms(ideal)
    delta = _generator_degree(gens, "draw_reduction")
    d = gens[0].dimension
    primary = _is_m_primary(ideal, gens)
    bound = kwargs.get("relation_bound", relation_bound(d))
    if primary and multiplicity is None:
        multiplicity = delta**d

    tried: List[int] = []
    reasons: List[str] = []
    for attempt in range(retries):
        current = seed + attempt
        tried.append(current)
        rng = np.random.default_rng(current)
        coefficients = rng.integers(-box, box + 1, size=(d, len(gens)))
        forms = [_combination(row, gens, delta) for row in coefficients]
        if any(form is None for form in forms):
            reasons.append("a drawn form vanished")
            continue
        # lambda(R/J) = e0(I) decides the reduction property for m-primary I
        colength = None
        if primary:
            colength = degreewise_colength(forms, d)
            if colength != multiplicity:
                reasons.append(f"lambda(R/J) = {colength}, expected {multiplicity}")
                continue
        r = _reduction_relation(ideal, forms, delta, bound)
        if r is None:
            reasons.append(f"no reduction relation with r <= {bound}")
            continue
        _log.debug(f"Seed {current} gives a reduction with r = {r}")
        return GeneralReduction(current, tuple(forms), r, colength, tuple(tried))
    _log.warning(f"Reduction draw failed for seeds {tried}")
    raise ReductionDrawFailedError(tried, reasons)


def quotient_length(
    num: Sequence[HomogeneousForm],
    den: Sequence[HomogeneousForm],
    dimension: Optional[int] = None,
    degree_cap: int = DEGREE_CAP,
) -> int:
    """lambda(num/den) for ideals den <= num, summed slice by slice."""
    forms = list(num) + list(den)
    if not forms:
        return 0
    dimension = dimension or forms[0].dimension
    top = max(f.degree for f in forms)
    start = min(f.degree for f in forms)
    total = 0
    for e in range(start, degree_cap + 1):
        upper = ideal_slice(num, e, dimension)
        lower = ideal_slice(den, e, dimension)
        if not upper.contains(lower):
            raise InclusionViolatedError(e)
        total += upper.rank - lower.rank
        if e >= top and upper.rank == lower.rank:
            following = e + 1
            if (
                ideal_slice(num, following, dimension).rank
                != ideal_slice(den, following, dimension).rank
            ):
                raise IdentityViolationError(
                    "slice_persistence",
                    f"slices agree in degree {e} but not in degree {following}",
                )
            return total
    raise NonFiniteQuotientError(degree_cap)


def colon_by_m_power(
    reduction: Sequence[HomogeneousForm],
    k: int,
    degree: int,
    dimension: Optional[int] = None,
) -> GradedSubspace:
    """(J : m^k)_e = {f in R_e : u*f in J_{e+k} for every monomial u of degree k}."""
    if k < 0 or degree < 0:
        raise ValueError(f"Need k >= 0 and e >= 0, got k={k}, e={degree}")
    if dimension is None:
        dimension = reduction[0].dimension
    if k == 0:
        return ideal_slice(reduction, degree, dimension)
    target = ideal_slice(reduction, degree + k, dimension)
    basis, _ = _basis_index(dimension, degree)
    shifted, index = _basis_index(dimension, degree + k)
    pivot_rows = dict(zip(target.pivots, target.rows))
    free = [c for c in range(len(shifted)) if c not in pivot_rows]
    if not free:
        return GradedSubspace.full(dimension, degree)

    constraints = []
    for u in _basis_index(dimension, k)[0]:
        # residue of u*m modulo the echelon rows, read on the free columns
        residues = []
        for m in basis:
            column = index[_add(u, m)]
            if column in pivot_rows:
                residues.append([-pivot_rows[column][q] for q in free])
            else:
                residues.append([QQ(int(q == column)) for q in free])
        for position in range(len(free)):
            constraints.append([residue[position] for residue in residues])
    kernel = linalg.nullspace(constraints, len(basis))
    return GradedSubspace.from_rows(dimension, degree, kernel)


@dataclass(frozen=True)
class ColonVerdict:
    power: int
    height: int
    delta: int
    sigma: int
    exponent: int
    seed: int
    degrees_checked: int
    equal: bool
    flags: Hypothesis
    label: str
    mismatch_degree: Optional[int] = None

    @property
    def effective_exponent(self) -> int:
        return max(self.exponent, 0)

    @property
    def hypotheses(self) -> List[str]:
        return hypothesis_names(self.flags)


def _screen_hypotheses(ideal: MonomialIdeal, height: int) -> Tuple[Hypothesis, str]:
    flags = Hypothesis.STANDARD_GRADED | Hypothesis.EQUIGENERATED
    if ideal.is_m_primary():
        return flags | Hypothesis.ONE_STEP, "hypotheses verified"
    if ideal.is_squarefree:
        flags |= Hypothesis.SQUAREFREE
    if height == ideal.ring.dimension - 1:
        flags |= Hypothesis.DIMENSION_ONE
    if fully_verified(flags):
        return flags, "hypotheses partially verified"
    return flags, "hypotheses unverified"


def verify_colon_formula(
    ideal: MonomialIdeal,
    n: int,
    seed: int,
    profile: str = "lenient",
    multiplicity: Optional[int] = None,
) -> ColonVerdict:
    """Compare closure(I^n) with J^n : m^k degree by degree, k = g*delta - delta - sigma + 1.

    k <= 0 reads m^k as R. The comparison runs through degree D + delta + 1,
    D the largest generator degree of the closure.
    """
    _require_standard(ideal)
    ideal.require_proper("verify_colon_formula")
    if n < 1:
        raise ValueError(f"The power must be positive, got {n}")
    if not ideal.is_equigenerated:
        raise NotEquigeneratedError("verify_colon_formula", ideal.degrees)
    d = ideal.ring.dimension
    delta = ideal.degrees[0]
    sigma = ideal.ring.sigma
    height = monomial_height(ideal)
    flags, label = _screen_hypotheses(ideal, height)
    if not fully_verified(flags):
        _log.warning(f"Colon formula for {ideal}: {label}")
    if not profile_accepts(profile, flags):
        missing = Hypothesis.ONE_DIMENSIONAL & ~flags
        raise HypothesisUnverifiableError(", ".join(hypothesis_names(missing)))

    exponent = height * delta - delta - sigma + 1
    k = max(exponent, 0)
    reduction = draw_reduction(ideal, seed, multiplicity)
    reduction_power = power_forms(list(reduction.forms), n)
    closure = closure_of_power(ideal, n)
    top = max(closure.degrees) + delta + 1
    closure_forms = forms_of(closure)

    mismatch = None
    for e in range(top + 1):
        expected = ideal_slice(closure_forms, e, d)
        found = colon_by_m_power(reduction_power, k, e, d)
        _log.debug(f"Degree {e}: closure rank {expected.rank}, colon rank {found.rank}")
        if expected != found:
            mismatch = (e, expected.rank, found.rank)
            break

    verdict = ColonVerdict(
        power=n,
        height=height,
        delta=delta,
        sigma=sigma,
        exponent=exponent,
        seed=reduction.seed,
        degrees_checked=top,
        equal=mismatch is None,
        flags=flags,
        label=label,
        mismatch_degree=mismatch[0] if mismatch else None,
    )
    if mismatch is not None:
        if fully_verified(flags):
            raise ColonMismatchError(n, *mismatch)
        _log.warning(f"Colon formula mismatch in degree {mismatch[0]} ({label})")
    return verdict


@dataclass(frozen=True)
class LinearTypePrediction:
    height: int
    delta: int
    sigma: int
    generators: int
    dimension: int
    predicted: bool
    normal: bool

    @property
    def consistent(self) -> bool:
        return self.normal or not self.predicted


def linear_type_prediction(ideal: MonomialIdeal) -> LinearTypePrediction:
    """Predict "normal of linear type" from delta <= (sigma-1)/(g-1) or nu(I) <= d-1."""
    _require_standard(ideal)
    ideal.require_proper("linear_type_prediction")
    if not ideal.is_equigenerated:
        raise NotEquigeneratedError("linear_type_prediction", ideal.degrees)
    d = ideal.ring.dimension
    delta = ideal.degrees[0]
    sigma = ideal.ring.sigma
    height = monomial_height(ideal)
    generators = len(ideal.generators)
    predicted = generators <= d - 1 or (
        height >= 2 and delta * (height - 1) <= sigma - 1
    )
    normal, _ = is_normal(ideal)
    prediction = LinearTypePrediction(
        height, delta, sigma, generators, d, predicted, normal
    )
    if not prediction.consistent:
        _log.warning(f"{ideal} is predicted normal but the closure check disagrees")
    return prediction
