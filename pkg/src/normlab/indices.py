##
# Licensed under the MIT License.
##
"""Normalization index s(I), generation index s0(I) and the bounds relating them.

Both indices only need the levels below l(I): past l(I) - 1 the closure
filtration satisfies I_{n+1} = I * I_n because the normalization of a monomial
ideal is Cohen-Macaulay. termination_certificate checks the first such level
directly.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from normlab.checks import Check, compare, enforce, skipped
from normlab.core import (
    ExponentVector,
    MonomialIdeal,
    contains_monomial,
    minimalize,
    multiply,
    unit_ideal,
)
from normlab.errors import BoundViolationError, IdentityViolationError
from normlab.newton import analytic_spread, closure_of_power, is_normal
from normlab.sally import multiplicity

_log = logging.getLogger(name=__name__)


def _require_monomial(ideal) -> None:
    if not isinstance(ideal, MonomialIdeal):
        raise ValueError("Normalization indices are computed for monomial ideals only")


def _closure(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    return closure_of_power(ideal, n) if n else unit_ideal(ideal.ring)


def _advances(ideal: MonomialIdeal, n: int) -> bool:
    """closure(I^{n+1}) == I * closure(I^n)."""
    return _closure(ideal, n + 1) == multiply(ideal, _closure(ideal, n))


def normalization_index(ideal: MonomialIdeal) -> int:
    """Least s >= 0 with closure(I^{n+1}) = I closure(I^n) for s <= n <= l(I) - 2."""
    _require_monomial(ideal)
    ideal.require_proper("normalization_index")
    spread = analytic_spread(ideal)
    if spread == 1:
        return 0
    s = spread - 1
    for n in range(spread - 2, -1, -1):
        if not _advances(ideal, n):
            break
        s = n
    _log.debug(f"Normalization index of {ideal} is {s}")
    return s


def products_below(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """sum_{0<k<n} I_k * I_{n-k}."""
    gens: List[ExponentVector] = []
    for k in range(1, n // 2 + 1):
        gens.extend(multiply(_closure(ideal, k), _closure(ideal, n - k)).generators)
    return minimalize(ideal.ring, gens)


def generation_index(
    ideal: MonomialIdeal,
) -> Tuple[int, Dict[int, Tuple[ExponentVector, ...]]]:
    """s0(I) and the fresh generators of the normalization at each level below l(I).

    Level 1 holds the generators of closure(I). With l(I) = 1 the index is 0.
    """
    _require_monomial(ideal)
    ideal.require_proper("generation_index")
    spread = analytic_spread(ideal)
    fresh: Dict[int, Tuple[ExponentVector, ...]] = {1: closure_of_power(ideal, 1).generators}
    for n in range(2, spread):
        below = products_below(ideal, n)
        fresh[n] = tuple(g for g in closure_of_power(ideal, n) if not contains_monomial(below, g))
    if spread == 1:
        return 0, fresh
    s0 = max([n for n, gens in fresh.items() if n >= 2 and gens], default=1)
    _log.debug(f"Generation index of {ideal} is {s0}")
    return s0, fresh


def termination_certificate(ideal: MonomialIdeal) -> Check:
    """closure(I^l) = I closure(I^{l-1}), the first level the index searches skip."""
    _require_monomial(ideal)
    ideal.require_proper("termination_certificate")
    level = analytic_spread(ideal) - 1
    return Check(
        f"I_{level + 1}=I*I_{level}",
        level + 1,
        "advances",
        level,
        _advances(ideal, level),
    )


def check_bounds(
    ideal: MonomialIdeal, s: int, s0: int, spread: Optional[int] = None
) -> List[Check]:
    """Every bound on s and s0; raises BoundViolationError if one fails.

    The multiplicity bounds need an m-primary ideal and are skipped otherwise.
    """
    spread = spread or analytic_spread(ideal)
    checks = [
        compare("s<=l-1", s, "<=", spread - 1),
        compare("s0<=l-1", s0, "<=", spread - 1),
    ]
    if ideal.is_m_primary():
        e = multiplicity(ideal)
        d = ideal.ring.dimension
        checks.append(compare("s<=(e-1)s0", s, "<=", (e - 1) * s0))
        checks.append(
            compare(
                "s<=e((s0+1)^d-1)-s0(2d-1)",
                s,
                "<=",
                e * ((s0 + 1) ** d - 1) - s0 * (2 * d - 1),
            )
        )
    else:
        reason = "the ideal is not m-primary"
        checks.append(skipped("s<=(e-1)s0", reason))
        checks.append(skipped("s<=e((s0+1)^d-1)-s0(2d-1)", reason))
    enforce(checks, BoundViolationError)
    return checks


@dataclass(frozen=True)
class IndicesReport:
    ideal: MonomialIdeal
    s: int
    s0: int
    ell: int
    fresh_generators: Dict[int, Tuple[ExponentVector, ...]]
    normal: bool
    bound_checks: Tuple[Check, ...]
    certificate: Check


def indices_report(ideal: MonomialIdeal) -> IndicesReport:
    _require_monomial(ideal)
    ideal.require_proper("indices_report")
    spread = analytic_spread(ideal)
    s = normalization_index(ideal)
    s0, fresh = generation_index(ideal)
    normal, _ = is_normal(ideal)
    certificate = termination_certificate(ideal)
    enforce([certificate])
    integrally_closed = closure_of_power(ideal, 1) == ideal
    if normal != (integrally_closed and s == 0):
        raise IdentityViolationError(
            "normal_iff_closed_and_s0",
            f"normal={normal}, closure(I)=I is {integrally_closed}, s={s}",
        )
    bounds = check_bounds(ideal, s, s0, spread)
    return IndicesReport(ideal, s, s0, spread, fresh, normal, tuple(bounds), certificate)
