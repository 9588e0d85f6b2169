##
# Licensed under the MIT License.
##
from enum import Flag, auto
from io import UnsupportedOperation
from typing import List


class Hypothesis(Flag):
    NONE = 0
    STANDARD_GRADED = auto()
    EQUIGENERATED = auto()
    M_PRIMARY = auto()
    SQUAREFREE = auto()
    DIMENSION_ONE = auto()
    # G_d and the depth chain hold trivially for m-primary ideals
    ALL_VACUOUS = auto()
    ONE_STEP = STANDARD_GRADED | EQUIGENERATED | M_PRIMARY | ALL_VACUOUS
    ONE_DIMENSIONAL = STANDARD_GRADED | EQUIGENERATED | SQUAREFREE | DIMENSION_ONE


def hypothesis_names(flags: Hypothesis) -> List[str]:
    return [member.name for member in Hypothesis if _is_atom(member) and member in flags]


def _is_atom(member: Hypothesis) -> bool:
    value = member.value
    return value != 0 and value & (value - 1) == 0


def fully_verified(flags: Hypothesis) -> bool:
    """True when the verified flags cover one of the two settings the colon formula is proven in."""
    return (flags & Hypothesis.ONE_STEP) == Hypothesis.ONE_STEP or (
        flags & Hypothesis.ONE_DIMENSIONAL
    ) == Hypothesis.ONE_DIMENSIONAL


def profile_accepts(profile: str, flags: Hypothesis) -> bool:
    """Whether a run with the verified ``flags`` may proceed under ``profile``."""
    value = profile.strip().lower()
    if "strict" == value:
        return fully_verified(flags)
    elif "lenient" == value:
        return True
    else:
        raise UnsupportedOperation(f"The supplied profile is not supported: {profile}.")
