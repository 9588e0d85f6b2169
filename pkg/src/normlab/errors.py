##
# Licensed under the MIT License.
##
import os
from typing import Iterable, List, Optional, Sequence, Tuple


def _format_vector(vector: Sequence[int]) -> str:
    return "(" + ",".join(str(entry) for entry in vector) + ")"


class NormlabError(Exception):
    """Base class for every error raised by normlab"""

    exit_code = 1

    def _join(self, *parts: Optional[str]) -> str:
        return os.linesep.join(part for part in parts if part)


class ParseError(NormlabError):
    def __init__(self, source: str, field: str, detail: str):
        self.source = source
        self.field = field
        self.detail = detail
        self.msg = self._join(
            f"Could not parse {source}.",
            f"Field: {field}",
            detail,
        )
        NormlabError.__init__(self, self.msg)


class DimensionMismatchError(NormlabError):
    def __init__(self, expected: int, vector: Sequence[int]):
        self.expected = expected
        self.vector = tuple(vector)
        self.msg = self._join(
            f"Exponent vector {_format_vector(vector)} has length {len(vector)}.",
            f"The ring has {expected} variables.",
        )
        NormlabError.__init__(self, self.msg)


class RingMismatchError(NormlabError):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.msg = self._join(
            "Operands live in different rings.",
            f"Left: {left}",
            f"Right: {right}",
        )
        NormlabError.__init__(self, self.msg)


class DegenerateIdealError(NormlabError):
    def __init__(self, operation: str, kind: str):
        self.operation = operation
        self.kind = kind
        self.msg = f"{operation} is undefined for the {kind} ideal."
        NormlabError.__init__(self, self.msg)


class NotMPrimaryError(NormlabError):
    def __init__(self, operation: str, missing_variables: Iterable[str] = ()):
        self.operation = operation
        self.missing_variables = list(missing_variables)
        self.msg_suffix = (
            "An m-primary monomial ideal needs a pure power of every variable"
        )
        detail = None
        if self.missing_variables:
            detail = "No pure power of: " + ", ".join(self.missing_variables)
        self.msg = self._join(
            f"{operation} requires an m-primary ideal.", detail, self.msg_suffix
        )
        NormlabError.__init__(self, self.msg)


class NotEquigeneratedError(NormlabError):
    def __init__(self, operation: str, degrees: Iterable[int]):
        self.operation = operation
        self.degrees = sorted(set(degrees))
        self.msg = self._join(
            f"{operation} requires generators of a single degree.",
            f"Generator degrees found: {self.degrees}",
        )
        NormlabError.__init__(self, self.msg)


class JobSpecError(NormlabError):
    def __init__(self, option: str, value, allowed: str):
        self.option = option
        self.value = value
        self.msg = f"Option {option}={value} is out of range; allowed: {allowed}."
        NormlabError.__init__(self, self.msg)


class SeriesNotStabilizedError(NormlabError):
    def __init__(self, table_length: int, trailing: Sequence[int]):
        self.table_length = table_length
        self.trailing = list(trailing)
        self.msg = self._join(
            f"The Hilbert series did not stabilize with {table_length} lengths.",
            f"Trailing numerator coefficients: {self.trailing}",
        )
        NormlabError.__init__(self, self.msg)


class NonExactDivisionError(NormlabError):
    def __init__(self, remainder):
        self.remainder = remainder
        self.msg = f"Division by (1 - t) left the remainder {remainder}."
        NormlabError.__init__(self, self.msg)


class NonzeroConstantTermError(NormlabError):
    def __init__(self, constant):
        self.constant = constant
        self.msg = f"The Sally h-polynomial has constant term {constant}, expected 0."
        NormlabError.__init__(self, self.msg)


class InclusionViolatedError(NormlabError):
    def __init__(self, degree: int):
        self.degree = degree
        self.msg = (
            f"The denominator ideal is not contained in the numerator in degree {degree}."
        )
        NormlabError.__init__(self, self.msg)


class NonFiniteQuotientError(NormlabError):
    def __init__(self, degree_cap: int):
        self.degree_cap = degree_cap
        self.msg = f"The quotient did not vanish up to degree {degree_cap}."
        NormlabError.__init__(self, self.msg)


class NoReductionWithinBoundError(NormlabError):
    def __init__(self, bound: int):
        self.bound = bound
        self.msg_suffix = "The candidate is not a reduction or the draw is not general"
        self.msg = self._join(
            f"No reduction relation found for r <= {bound}.", self.msg_suffix
        )
        NormlabError.__init__(self, self.msg)


class ReductionDrawFailedError(NormlabError):
    def __init__(self, seeds: List[int], reasons: List[str]):
        self.seeds = list(seeds)
        self.reasons = list(reasons)
        lines = [f"seed {seed}: {reason}" for seed, reason in zip(seeds, reasons)]
        self.msg = self._join(
            f"Could not draw a general reduction after {len(seeds)} attempts.",
            *lines,
        )
        NormlabError.__init__(self, self.msg)


class DegenerateSystemError(NormlabError):
    def __init__(self, detail: str):
        self.msg = f"Degenerate constraint system: {detail}"
        NormlabError.__init__(self, self.msg)


class HypothesisUnverifiableError(NormlabError):
    def __init__(self, missing: str):
        self.missing = missing
        self.msg = f"Hypotheses could not be verified: {missing}"
        NormlabError.__init__(self, self.msg)


class FalsificationError(NormlabError):
    """A property guaranteed by the theory failed: the input or the code is wrong"""

    exit_code = 2


class BoundViolationError(FalsificationError):
    def __init__(self, name: str, lhs, rhs):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.msg = f"Bound {name} violated: {lhs} > {rhs}."
        FalsificationError.__init__(self, self.msg)


class IdentityViolationError(FalsificationError):
    def __init__(self, name: str, detail: str):
        self.name = name
        self.detail = detail
        self.msg = self._join(f"Identity {name} failed.", detail)
        FalsificationError.__init__(self, self.msg)


class ColonMismatchError(FalsificationError):
    def __init__(self, power: int, degree: int, closure_dim: int, colon_dim: int):
        self.power = power
        self.degree = degree
        self.msg = self._join(
            f"Colon formula failed for the power {power} in degree {degree}.",
            f"closure slice dimension {closure_dim}, colon slice dimension {colon_dim}",
        )
        FalsificationError.__init__(self, self.msg)


class OracleMismatchError(FalsificationError):
    def __init__(self, name: str, witnesses: Iterable[Tuple[int, ...]]):
        self.name = name
        self.witnesses = [tuple(w) for w in witnesses]
        shown = ", ".join(_format_vector(w) for w in self.witnesses[:5])
        self.msg = self._join(
            f"Oracle {name} disagrees with the fast path.", f"Witnesses: {shown}"
        )
        FalsificationError.__init__(self, self.msg)


class NonAntichainWarning(UserWarning):
    """Input generators divide one another and were minimalized"""
