##
# Licensed under the MIT License.
##
"""JSON input for ideals and clutters.

Ideal files carry either exponent vectors or monomial strings::

    {"ring": {"variables": ["x", "y"], "weights": [1, 1]},
     "generators": [[2, 0], [0, 2]]}
    {"monomials": ["x1*x2*x5", "x1*x3*x4", "x2*x3*x6", "x4*x5*x6"]}

and clutter files list 1-based edges::

    {"vertices": 3, "edges": [[1, 2], [2, 3], [1, 3]]}

Without a ring, up to three variables are named x, y, z and more are named
x1..xd; monomial strings then take their variables in natural order.
"""
import json
import logging
import re
import warnings
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from normlab.clutter import Clutter
from normlab.core import MonomialIdeal, RingDescriptor, minimalize
from normlab.errors import DimensionMismatchError, NonAntichainWarning, ParseError

_log = logging.getLogger(name=__name__)

_FACTOR = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*([0-9]+))?\s*$")
_NATURAL = re.compile(r"([0-9]+)")


def default_names(dimension: int) -> List[str]:
    if dimension <= 3:
        return ["x", "y", "z"][:dimension]
    return [f"x{i + 1}" for i in range(dimension)]


def _natural_key(name: str):
    return [int(part) if part.isdigit() else part for part in _NATURAL.split(name)]


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _int_list(value) -> bool:
    return isinstance(value, list) and all(_is_int(entry) for entry in value)


def parse_monomial(text: str, ring: RingDescriptor, source: str = "<string>") -> tuple:
    """Exponent vector of ``x^2*y``-style text; ``1`` is the unit monomial."""
    vector = [0] * ring.dimension
    if text.strip() == "1":
        return tuple(vector)
    positions = {name: i for i, name in enumerate(ring.names)}
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if not match:
            raise ParseError(source, "monomials", f"Malformed factor {factor!r} in {text!r}")
        name, exponent = match.group(1), match.group(2)
        if name not in positions:
            raise ParseError(source, "monomials", f"Unknown variable {name!r} in {text!r}")
        exponent = int(exponent) if exponent is not None else 1
        if exponent < 1:
            raise ParseError(source, "monomials", f"Exponents must be positive in {text!r}")
        vector[positions[name]] += exponent
    return tuple(vector)


def _variables_in(monomials: Sequence[str]) -> List[str]:
    names = set()
    for text in monomials:
        for factor in text.split("*"):
            match = _FACTOR.match(factor)
            if match:
                names.add(match.group(1))
    return sorted(names, key=_natural_key)


def _ring_from(data: Dict, dimension: Optional[int], source: str) -> Optional[RingDescriptor]:
    ring = data.get("ring", data)
    if not isinstance(ring, dict):
        raise ParseError(source, "ring", "Expected an object")
    names = ring.get("variables")
    weights = ring.get("weights") or []
    if names is not None and not (
        isinstance(names, list) and all(isinstance(name, str) for name in names)
    ):
        raise ParseError(source, "ring.variables", f"Expected a list of names, got {names!r}")
    if not _int_list(weights):
        raise ParseError(source, "ring.weights", f"Expected a list of ints, got {weights!r}")
    if names is None:
        if dimension is None:
            return None
        names = default_names(dimension)
    try:
        return RingDescriptor(tuple(names), tuple(weights))
    except ValueError as error:
        raise ParseError(source, "ring", str(error))


def parse_ideal(data: Dict, source: str = "<input>") -> MonomialIdeal:
    if "generators" in data:
        gens = data["generators"]
        if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
            raise ParseError(source, "generators", "Expected a list of exponent lists")
        dimension = len(gens[0]) if gens else None
        ring = _ring_from(data, dimension, source)
        if ring is None:
            raise ParseError(source, "ring", "An empty generator list needs a ring")
        vectors = []
        for g in gens:
            if not all(_is_int(entry) and entry >= 0 for entry in g):
                raise ParseError(source, "generators", f"Exponents must be nonnegative ints: {g}")
            if len(g) != ring.dimension:
                raise DimensionMismatchError(ring.dimension, g)
            vectors.append(tuple(g))
    elif "monomials" in data:
        texts = data["monomials"]
        if not isinstance(texts, list) or not all(isinstance(m, str) for m in texts):
            raise ParseError(source, "monomials", "Expected a list of strings")
        ring = _ring_from(data, None, source)
        if ring is None:
            names = _variables_in(texts)
            if not names:
                raise ParseError(source, "monomials", "No variables found")
            ring = RingDescriptor(tuple(names))
        vectors = [parse_monomial(text, ring, source) for text in texts]
    else:
        raise ParseError(source, "generators", "Expected 'generators' or 'monomials'")

    ideal = minimalize(ring, vectors)
    if len(ideal.generators) != len(vectors):
        message = f"{source}: generators are not an antichain; using {ideal}"
        _log.warning(message)
        warnings.warn(message, NonAntichainWarning)
    return ideal


def parse_clutter(data: Dict, source: str = "<input>") -> Clutter:
    vertices = data.get("vertices")
    edges = data.get("edges")
    if not _is_int(vertices):
        raise ParseError(source, "vertices", "Expected a positive int")
    if not isinstance(edges, list) or not all(_int_list(edge) for edge in edges):
        raise ParseError(source, "edges", "Expected a list of lists of vertex ints")
    try:
        return Clutter(vertices, tuple(tuple(edge) for edge in edges))
    except ValueError as error:
        raise ParseError(source, "edges", str(error))


def parse_input(path: Union[str, Path]) -> Union[MonomialIdeal, Clutter]:
    path = Path(path)
    source = str(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise ParseError(source, "<file>", str(error))
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(
            source, "<document>", f"line {error.lineno}, column {error.colno}: {error.msg}"
        )
    if not isinstance(data, dict):
        raise ParseError(source, "<document>", "The top level must be an object")
    _log.debug(f"Parsing {source}")
    try:
        if "edges" in data:
            return parse_clutter(data, source)
        return parse_ideal(data, source)
    except TypeError as error:
        raise ParseError(source, "<document>", str(error))
