##
# Licensed under the MIT License.
##

import json
from pathlib import Path
from typing import Dict, Iterable, List, Sequence

from normlab.checks import Check
from normlab.core import MonomialIdeal

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


def write_input(directory: Path, name: str, data: Dict) -> str:
    path = directory / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def monomials(ideal: MonomialIdeal) -> List[str]:
    return [ideal.ring.format_monomial(g) for g in ideal.generators]


def check_named(checks: Iterable[Check], name: str) -> Check:
    found = [check for check in checks if check.name == name]
    assert found, f"No check named {name}: {[c.name for c in checks]}"
    return found[0]


def assert_all_hold(checks: Sequence[Check]) -> None:
    failed = [str(c) for c in checks if c.asserted and c.holds is False]
    assert not failed, f"Failed checks: {failed}"
