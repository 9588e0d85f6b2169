##
# Licensed under the MIT License.
##
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Type

from normlab.errors import BoundViolationError, FalsificationError, IdentityViolationError

_log = logging.getLogger(name=__name__)


@dataclass(frozen=True)
class Check:
    """A named comparison ``lhs relation rhs``.

    ``asserted`` checks are theorems in the setting they run in; a failed
    asserted check is a falsification. ``skipped`` carries the reason a check
    could not run.
    """

    name: str
    lhs: object
    relation: str
    rhs: object
    holds: Optional[bool]
    asserted: bool = True
    skipped: Optional[str] = None

    def __str__(self) -> str:
        if self.skipped:
            return f"{self.name}: skipped ({self.skipped})"
        status = "holds" if self.holds else "FAILS"
        return f"{self.name}: {self.lhs} {self.relation} {self.rhs} {status}"


_RELATIONS = {
    "==": lambda a, b: a == b,
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
}


def compare(name: str, lhs, relation: str, rhs, asserted: bool = True) -> Check:
    return Check(name, lhs, relation, rhs, _RELATIONS[relation](lhs, rhs), asserted)


def skipped(name: str, reason: str) -> Check:
    _log.warning(f"Check {name} skipped: {reason}")
    return Check(name, None, "", None, None, asserted=False, skipped=reason)


def enforce(
    checks: Iterable[Check], error: Type[FalsificationError] = IdentityViolationError
) -> None:
    """Raise on the first asserted check that failed."""
    for check in checks:
        if not check.asserted or check.holds is not False:
            continue
        if error is BoundViolationError:
            raise BoundViolationError(check.name, check.lhs, check.rhs)
        raise IdentityViolationError(
            check.name, f"{check.lhs} {check.relation} {check.rhs} does not hold"
        )
