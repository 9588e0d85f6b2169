##
# Licensed under the MIT License.
##
"""Slow, definition-level recomputations of the fast paths.

They share no code with the paths they check beyond ideal arithmetic:
closure membership is decided either facet by facet or from the definition
x^{ka} in I^{nk}, colengths are counted over the whole box, and symbolic
powers come from the cover inequalities instead of prime intersections.
"""
import logging
from itertools import product
from typing import List

from normlab.checks import Check, compare
from normlab.clutter import Clutter, edge_ideal, minimal_vertex_covers, symbolic_power
from normlab.core import (
    MonomialIdeal,
    colength,
    colon,
    contains_monomial,
    maximal_ideal_power,
    minimalize,
    power,
)
from normlab.errors import DegenerateSystemError, OracleMismatchError
from normlab.graded import GradedSubspace, colon_by_m_power, forms_of, ideal_slice
from normlab.newton import closure_of_power, newton_polyhedron

_log = logging.getLogger(name=__name__)

DEFINITION_MULTIPLIER_CAP = 12
DEFINITION_DIMENSION_CAP = 3
DEFINITION_EXPONENT_CAP = 6


def _box(ideal: MonomialIdeal, n: int):
    return product(*(range(n * m + 1) for m in ideal.max_exponents))


def closure_by_facets(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """Every box point tested against every facet of n*NP, then minimalized."""
    facets = newton_polyhedron(ideal).facets
    members = [
        point
        for point in _box(ideal, n)
        if all(f.value(point) >= n * f.offset for f in facets)
    ]
    return minimalize(ideal.ring, members)


def in_closure_by_definition(
    ideal: MonomialIdeal, vector, n: int, multiplier_cap: int = DEFINITION_MULTIPLIER_CAP
) -> bool:
    """x^a is integral over I^n iff x^{ka} lies in I^{nk} for some k >= 1."""
    for k in range(1, multiplier_cap + 1):
        if contains_monomial(power(ideal, n * k), tuple(k * entry for entry in vector)):
            return True
    return False


def closure_by_definition(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    members = [point for point in _box(ideal, n) if in_closure_by_definition(ideal, point, n)]
    return minimalize(ideal.ring, members)


def colength_by_box(ideal: MonomialIdeal) -> int:
    pure = ideal.pure_powers()
    box = product(*(range(pure[i]) for i in range(ideal.ring.dimension)))
    return sum(1 for point in box if not contains_monomial(ideal, point))


def symbolic_power_by_covers(clutter: Clutter, n: int) -> MonomialIdeal:
    """Monomials whose exponents sum to at least n over every minimal vertex cover."""
    if not clutter.edges:
        raise DegenerateSystemError("a clutter without edges has no cover primes")
    covers = minimal_vertex_covers(clutter)
    ring = clutter.ring()
    members = [
        point
        for point in product(range(n + 1), repeat=clutter.vertices)
        if all(sum(point[v - 1] for v in cover) >= n for cover in covers)
    ]
    return minimalize(ring, members)


def colon_by_monomials(ideal: MonomialIdeal, k: int, degree: int) -> GradedSubspace:
    """(J : m^k)_e through the monomial colon of core."""
    quotient = colon(ideal, maximal_ideal_power(ideal.ring, k))
    return ideal_slice(forms_of(quotient), degree, ideal.ring.dimension)


def _differences(left: MonomialIdeal, right: MonomialIdeal) -> List:
    return [g for g in left if not contains_monomial(right, g)] + [
        g for g in right if not contains_monomial(left, g)
    ]


def _agree(name: str, fast: MonomialIdeal, slow: MonomialIdeal) -> Check:
    if fast != slow:
        raise OracleMismatchError(name, _differences(fast, slow))
    return compare(name, len(fast.generators), "==", len(slow.generators))


def definition_oracle_applies(ideal: MonomialIdeal) -> bool:
    return (
        ideal.ring.dimension <= DEFINITION_DIMENSION_CAP
        and max(ideal.max_exponents) <= DEFINITION_EXPONENT_CAP
    )


def run_oracles(ideal: MonomialIdeal, n: int) -> List[Check]:
    """Diff the fast paths against the oracles that apply to ``ideal``; raise on disagreement."""
    fast = closure_of_power(ideal, n)
    checks = [_agree(f"closure_by_facets[{n}]", fast, closure_by_facets(ideal, n))]
    if definition_oracle_applies(ideal):
        checks.append(
            _agree(f"closure_by_definition[{n}]", fast, closure_by_definition(ideal, n))
        )
    if ideal.is_m_primary():
        counted = colength_by_box(fast)
        if counted != colength(fast):
            raise OracleMismatchError(f"colength[{n}]", [(colength(fast), counted)])
        checks.append(compare(f"colength[{n}]", colength(fast), "==", counted))
    if ideal.is_squarefree and ideal.ring.is_standard:
        clutter = Clutter.from_supports(
            ideal.ring.dimension,
            ([i for i, entry in enumerate(g) if entry] for g in ideal.generators),
        )
        if edge_ideal(clutter, ideal.ring) == ideal:
            checks.append(
                _agree(
                    f"symbolic_power_by_covers[{n}]",
                    symbolic_power(clutter, n),
                    symbolic_power_by_covers(clutter, n),
                )
            )
    for check in checks:
        _log.debug(f"Oracle {check}")
    return checks


def colon_oracle(ideal: MonomialIdeal, k: int, max_degree: int) -> List[Check]:
    """Slice-by-slice agreement of colon_by_m_power with the monomial colon."""
    forms = forms_of(ideal)
    checks = []
    for e in range(max_degree + 1):
        fast = colon_by_m_power(forms, k, e, ideal.ring.dimension)
        slow = colon_by_monomials(ideal, k, e)
        if fast != slow:
            raise OracleMismatchError(f"colon_by_m_power[{k},{e}]", [(e, fast.rank, slow.rank)])
        checks.append(compare(f"colon_by_m_power[{k},{e}]", fast.rank, "==", slow.rank))
    return checks
