##
# Licensed under the MIT License.
##
"""Hilbert series of the integral-closure filtration and its Sally module.

Lengths follow the shifted convention

    sum_{n >= 0} lambda(R / I_{n+1}) t^n = f(t) / (1 - t)^(d+1),   I_n = closure(I^n),

so that f(0) = lambda(R/I_1) and the relation

    f(t) = lambda(R/I_1) + lambda(I_1/J) t - (1 - t) g(t)

is an exact polynomial division. g(t) = sum_{n >= 1} lambda(I_{n+1} / J^n I_1) t^n
is the h-polynomial of the Sally module, whose Hilbert series is g / (1 - t)^d.

The normalized Rees algebra of a monomial ideal is Cohen-Macaulay, hence so is
the associated graded ring of its closure filtration. The coefficients of g are
then nonnegative and non-increasing, which is asserted here, not just reported.
"""
import logging
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from sympy import Poly, binomial, factorial, symbols

from normlab.checks import Check, compare, enforce, skipped
from normlab.core import (
    MonomialIdeal,
    colength,
    multiply,
    power,
    unit_ideal,
)
from normlab.errors import (
    NonExactDivisionError,
    NonzeroConstantTermError,
    NotEquigeneratedError,
    OracleMismatchError,
    SeriesNotStabilizedError,
)
from normlab.graded import (
    GeneralReduction,
    HomogeneousForm,
    draw_reduction,
    forms_of,
    multiply_forms,
    power_forms,
    quotient_length,
)
from normlab.newton import analytic_spread, closure_of_power

_log = logging.getLogger(name=__name__)

TABLE_CAP = 25
CROSS_ORACLE_POWERS = 3

t = symbols("t")


def _poly(coefficients: Sequence[int]) -> Poly:
    """The polynomial sum c_k t^k."""
    return Poly(list(reversed(list(coefficients))) or [0], t)


def _coefficients(polynomial: Poly) -> List[int]:
    if polynomial.is_zero:
        return []
    return [int(polynomial.coeff_monomial(t**k)) for k in range(polynomial.degree() + 1)]


def _strip(coefficients: List[int]) -> List[int]:
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return coefficients


def length_table(ideal: MonomialIdeal, table_length: int) -> List[int]:
    """[lambda(R/closure(I^n)) for n = 0..table_length]; entry 0 is 0."""
    ideal.require_proper("length_table")
    ideal.require_m_primary("length_table")
    table = [0]
    for n in range(1, table_length + 1):
        table.append(colength(closure_of_power(ideal, n)))
    _log.debug(f"Length table of {ideal}: {table}")
    return table


def h_polynomial(table: Sequence[int], dimension: int) -> List[int]:
    """Coefficients of f(t), read off (1-t)^(d+1) * sum table[n+1] t^n.

    Only the first len(table) - 1 coefficients of that product are known;
    the last two of them must vanish.
    """
    series = list(table[1:])
    product = _poly(series) * Poly((1 - t) ** (dimension + 1), t)
    known = [int(product.coeff_monomial(t**k)) for k in range(len(series))]
    trailing = known[-2:]
    if len(series) < 2 or any(trailing):
        raise SeriesNotStabilizedError(len(table) - 1, trailing)
    return _strip(known)


def hilbert_coefficients(a: Sequence[int], count: int) -> List[int]:
    """e_i = f^(i)(1) / i! for i < count."""
    derivative = _poly(a)
    coefficients = []
    for i in range(count):
        coefficients.append(int(derivative.eval(1) / factorial(i)))
        derivative = derivative.diff(t)
    return coefficients


def sally_h_vector(a: Sequence[int], e0: int) -> List[int]:
    """b_1..b_deg of g(t) = (a_0 + (e_0 - a_0) t - f(t)) / (1 - t)."""
    a0 = a[0] if a else 0
    numerator = Poly(a0 + (e0 - a0) * t, t) - _poly(a)
    quotient, remainder = numerator.div(Poly(1 - t, t))
    if not remainder.is_zero:
        raise NonExactDivisionError(remainder.as_expr())
    b = _coefficients(quotient)
    if b and b[0] != 0:
        raise NonzeroConstantTermError(b[0])
    return _strip(b[1:])


def hilbert_polynomial_value(e: Sequence[int], dimension: int, m: int) -> int:
    """lambda(R/I_m) for large m: sum (-1)^i e_i C(m-1+d-i, d-i)."""
    return int(
        sum(
            (-1) ** i * e[i] * binomial(m - 1 + dimension - i, dimension - i)
            for i in range(dimension + 1)
        )
    )


def sally_hilbert_function(b: Sequence[int], dimension: int, nmax: int) -> List[int]:
    """Coefficients of t^1..t^nmax in g(t) / (1-t)^d."""
    return [
        int(
            sum(
                b[k - 1] * binomial(n - k + dimension - 1, dimension - 1)
                for k in range(1, min(n, len(b)) + 1)
            )
        )
        for n in range(1, nmax + 1)
    ]


@dataclass(frozen=True)
class FiltrationReport:
    ideal: MonomialIdeal
    length_table: Tuple[int, ...]
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    # e_0, e_1, ... at least through e_5 and e_d
    e: Tuple[int, ...]
    checks: Tuple[Check, ...] = ()

    @property
    def dimension(self) -> int:
        return self.ideal.ring.dimension

    @property
    def multiplicity(self) -> int:
        return self.e[0]

    @property
    def hilbert_coefficients(self) -> Tuple[int, ...]:
        return self.e[: self.dimension + 1]

    @property
    def lambda_I1_over_J(self) -> int:
        return self.e[0] - self.a[0]


def _coefficient(values: Sequence[int], i: int) -> int:
    return values[i] if 0 <= i < len(values) else 0


def _non_increasing(values: Sequence[int]) -> bool:
    return all(x >= y for x, y in zip(values, values[1:]))


def verify_identities(report: FiltrationReport, s0: Optional[int] = None) -> List[Check]:
    a, e, d = report.a, report.e, report.dimension
    b = (0,) + report.b
    checks = [
        compare("a0=lambda(R/I1)", _coefficient(a, 0), "==", report.length_table[1]),
        compare(
            "a1=lambda(I1/J)-b1",
            _coefficient(a, 1),
            "==",
            report.lambda_I1_over_J - _coefficient(b, 1),
        ),
    ]
    for i in range(2, max(len(a), len(b) + 1)):
        checks.append(
            compare(
                f"a{i}=b{i - 1}-b{i}",
                _coefficient(a, i),
                "==",
                _coefficient(b, i - 1) - _coefficient(b, i),
            )
        )

    sally = hilbert_coefficients(b, len(e) - 1)
    checks.append(compare("e1=lambda(I1/J)+g(1)", e[1], "==", report.lambda_I1_over_J + sally[0]))
    for i in range(1, len(e) - 1):
        checks.append(compare(f"e{i + 1}(F)=e{i}(S)", e[i + 1], "==", sally[i]))

    checks.append(
        Check(
            "b_nonnegative_non_increasing",
            list(report.b),
            "non-increasing",
            0,
            all(x >= 0 for x in report.b) and _non_increasing(report.b),
        )
    )
    if len(report.b) <= 4:
        chain = list(e[2:6])
        checks.append(Check("e2>=e3>=e4>=e5", chain, "non-increasing", "", _non_increasing(chain)))

    checks.append(compare("e1_upper_bound", 2 * e[1], "<=", (d - 1) * e[0], asserted=False))

    degree = len(a) - 1
    checked = [m for m in range(1, len(report.length_table)) if m - 1 >= degree - d]
    observed = [report.length_table[m] for m in checked]
    predicted = [hilbert_polynomial_value(e, d, m) for m in checked]
    checks.append(compare("hilbert_polynomial", observed, "==", predicted))

    if s0 is not None:
        checks.append(compare("generation_degree", s0, "<=", max(1, len(report.b))))
    return checks


@lru_cache(maxsize=None)
def filtration_report(
    ideal: MonomialIdeal, table_length: Optional[int] = None, s0: Optional[int] = None
) -> FiltrationReport:
    """Lengths, f, e_i and g of the closure filtration, with every identity checked.

    The table starts at d + l(I) + 2 entries and grows by two until the series
    stabilizes, up to TABLE_CAP.
    """
    ideal.require_proper("filtration_report")
    ideal.require_m_primary("filtration_report")
    d = ideal.ring.dimension
    size = min(table_length or d + analytic_spread(ideal) + 2, TABLE_CAP)
    while True:
        table = length_table(ideal, size)
        try:
            a = h_polynomial(table, d)
            break
        except SeriesNotStabilizedError:
            if size >= TABLE_CAP:
                raise
            size = min(size + 2, TABLE_CAP)
            _log.debug(f"Extending the length table of {ideal} to {size}")
    e0 = sum(a)
    b = sally_h_vector(a, e0)
    e = hilbert_coefficients(a, max(d, 5, len(b) + 1) + 1)
    report = FiltrationReport(ideal, tuple(table), tuple(a), tuple(b), tuple(e))
    checks = verify_identities(report, s0)
    enforce(checks)
    return replace(report, checks=tuple(checks))


def multiplicity(ideal: MonomialIdeal) -> int:
    return filtration_report(ideal).multiplicity


def e1_inequality_report(report: FiltrationReport) -> Check:
    """e_1 >= e_0 - lambda(R/I_1), reported but never asserted."""
    return compare(
        "e1>=e0-lambda(R/I1)",
        report.e[1],
        ">=",
        report.e[0] - report.a[0],
        asserted=False,
    )


@dataclass(frozen=True)
class MinimalReduction:
    """J = I for a monomial parameter ideal, otherwise a drawn general reduction."""

    ideal: MonomialIdeal
    monomial: Optional[MonomialIdeal] = None
    general: Optional[GeneralReduction] = None

    @property
    def seed(self) -> Optional[int]:
        return self.general.seed if self.general else None

    @property
    def forms(self) -> List[HomogeneousForm]:
        if self.monomial is not None:
            return forms_of(self.monomial)
        return list(self.general.forms)


def minimal_reduction(
    ideal: MonomialIdeal, seed: int, multiplicity: Optional[int] = None
) -> MinimalReduction:
    if ideal.is_parameter_ideal():
        return MinimalReduction(ideal, monomial=ideal)
    if ideal.ring.is_standard and ideal.is_equigenerated:
        return MinimalReduction(ideal, general=draw_reduction(ideal, seed, multiplicity))
    raise NotEquigeneratedError("minimal_reduction", ideal.degrees)


def _closure(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    return closure_of_power(ideal, n) if n else unit_ideal(ideal.ring)


def closure_quotient(
    reduction: MinimalReduction, top: int, reduction_power: int, closure_power: int
) -> int:
    """lambda(I_top / J^q I_r) with q = reduction_power, r = closure_power and q + r = top."""
    ideal = reduction.ideal
    numerator = _closure(ideal, top)
    if not ideal.ring.is_standard:
        # weighted parameter ideals stay monomial
        denominator = multiply(
            power(reduction.monomial, reduction_power), _closure(ideal, closure_power)
        )
        return colength(denominator) - colength(numerator)
    denominator = multiply_forms(
        power_forms(reduction.forms, reduction_power),
        forms_of(_closure(ideal, closure_power)),
    )
    return quotient_length(forms_of(numerator), denominator, ideal.ring.dimension)


@dataclass(frozen=True)
class GeneratorBoundReport:
    seed: Optional[int]
    first_quotient: int
    higher_quotients: Tuple[int, ...]
    checks: Tuple[Check, ...]

    @property
    def total(self) -> int:
        return self.first_quotient + sum(self.higher_quotients)


def generator_bound_check(
    ideal: MonomialIdeal, seed: int, report: Optional[FiltrationReport] = None
) -> Tuple[GeneratorBoundReport, MinimalReduction]:
    """Count G = lambda(I_1/J) + sum_k lambda(I_{k+1}/J I_k) against the three generator bounds."""
    report = report or filtration_report(ideal)
    reduction = minimal_reduction(ideal, seed, report.multiplicity)
    d = ideal.ring.dimension
    first = closure_quotient(reduction, 1, 1, 0)
    higher = tuple(
        closure_quotient(reduction, k + 1, 1, k) for k in range(1, analytic_spread(ideal))
    )
    total = first + sum(higher)
    e0, e1 = report.e[0], report.e[1]
    second = higher[0] if higher else 0
    checks = [
        compare("lambda(I1/J)=e0-a0", first, "==", report.lambda_I1_over_J),
        compare("e1=lambda(I1/J)+g(1)", e1, "==", first + sum(report.b)),
        compare("G<=e1", total, "<=", e1),
        compare("G<=e0", total, "<=", e0)
        if not report.b
        else skipped("G<=e0", "needs g = 0"),
        compare("G<=lambda(I1/J)+(d-2)lambda(I2/I1J)", total, "<=", first + (d - 2) * second),
    ]
    enforce(checks)
    _log.debug(f"Generator count of {ideal}: {total}")
    return GeneratorBoundReport(reduction.seed, first, higher, tuple(checks)), reduction


@dataclass(frozen=True)
class SallyCrossCheck:
    predicted: Tuple[int, ...]
    direct: Tuple[int, ...]


def sally_cross_oracle(
    report: FiltrationReport,
    reduction: MinimalReduction,
    nmax: int = CROSS_ORACLE_POWERS,
) -> SallyCrossCheck:
    """Series coefficients of g/(1-t)^d against lambda(I_{n+1}/J^n I_1) for n = 1..nmax."""
    predicted = tuple(sally_hilbert_function(report.b, report.dimension, nmax))
    direct = tuple(closure_quotient(reduction, n + 1, n, 1) for n in range(1, nmax + 1))
    if predicted != direct:
        witnesses = [
            (n, p, q) for n, (p, q) in enumerate(zip(predicted, direct), start=1) if p != q
        ]
        raise OracleMismatchError("sally_hilbert_function", witnesses)
    return SallyCrossCheck(predicted, direct)
