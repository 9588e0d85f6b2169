##
# Licensed under the MIT License.
##
"""Clutters, their edge ideals, symbolic powers and the set-covering polyhedron Q(A)."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple

from normlab import linalg
from normlab.core import (
    ExponentVector,
    MonomialIdeal,
    RingDescriptor,
    contains_monomial,
    intersect_all,
    maximal_ideal_power,
)
from normlab.errors import DegenerateSystemError, IdentityViolationError
from normlab.newton import analytic_spread, closure_of_power

_log = logging.getLogger(name=__name__)

MAX_COVER_VERTICES = 20


@dataclass(frozen=True)
class Clutter:
    """A hypergraph on the vertices 1..vertices whose edges are pairwise incomparable."""

    vertices: int
    edges: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        edges = tuple(sorted(tuple(sorted(set(edge))) for edge in self.edges))
        object.__setattr__(self, "edges", edges)
        if self.vertices < 1:
            raise ValueError(f"A clutter needs at least one vertex, got {self.vertices}")
        for edge in edges:
            if not edge:
                raise ValueError("Clutter edges must be nonempty")
            if edge[0] < 1 or edge[-1] > self.vertices:
                raise ValueError(
                    f"Edge {list(edge)} leaves the vertex range 1..{self.vertices}"
                )
        for left, right in combinations(edges, 2):
            if set(left) <= set(right) or set(right) <= set(left):
                raise ValueError(
                    f"Edges {list(left)} and {list(right)} are comparable; not a clutter"
                )

    @classmethod
    def from_supports(cls, vertices: int, supports) -> "Clutter":
        """The clutter of minimal sets among ``supports`` (0-based index sets)."""
        sets = sorted({frozenset(s) for s in supports}, key=lambda s: (len(s), sorted(s)))
        minimal: List[FrozenSet[int]] = []
        for s in sets:
            if not any(m <= s for m in minimal):
                minimal.append(s)
        return cls(vertices, tuple(tuple(i + 1 for i in s) for s in minimal))

    def ring(self) -> RingDescriptor:
        return RingDescriptor.standard(self.vertices)


@dataclass(frozen=True)
class IncidenceMatrix:
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def column_supports(self) -> List[Tuple[int, ...]]:
        _, m = self.shape
        return [
            tuple(i + 1 for i, row in enumerate(self.rows) if row[j]) for j in range(m)
        ]


def incidence_matrix(clutter: Clutter) -> IncidenceMatrix:
    rows = tuple(
        tuple(int(vertex in edge) for edge in clutter.edges)
        for vertex in range(1, clutter.vertices + 1)
    )
    return IncidenceMatrix(rows)


def edge_ideal(clutter: Clutter, ring: Optional[RingDescriptor] = None) -> MonomialIdeal:
    ring = ring or clutter.ring()
    gens = tuple(
        tuple(int(vertex in edge) for vertex in range(1, clutter.vertices + 1))
        for edge in clutter.edges
    )
    return MonomialIdeal(ring, gens)


def minimal_vertex_covers(clutter: Clutter) -> List[Tuple[int, ...]]:
    """Inclusion-minimal vertex sets meeting every edge, by size then lexicographically."""
    if clutter.vertices > MAX_COVER_VERTICES:
        raise ValueError(
            f"Exhaustive cover search is limited to {MAX_COVER_VERTICES} vertices"
        )
    edges = [set(edge) for edge in clutter.edges]
    covers: List[Tuple[int, ...]] = []
    for size in range(0, clutter.vertices + 1):
        for candidate in combinations(range(1, clutter.vertices + 1), size):
            chosen = set(candidate)
            if any(set(cover) <= chosen for cover in covers):
                continue
            if all(edge & chosen for edge in edges):
                covers.append(candidate)
    return covers


def cover_prime_power(
    ring: RingDescriptor, cover: Sequence[int], n: int
) -> MonomialIdeal:
    """p^n for the monomial prime p generated by the variables of ``cover``."""
    if not cover:
        raise DegenerateSystemError("the empty cover generates no prime")
    local = RingDescriptor(tuple(ring.names[i - 1] for i in cover))
    gens = []
    for exponents in maximal_ideal_power(local, n).generators:
        vector = [0] * ring.dimension
        for vertex, exponent in zip(cover, exponents):
            vector[vertex - 1] = exponent
        gens.append(tuple(vector))
    return MonomialIdeal(ring, tuple(gens))


def symbolic_power(clutter: Clutter, n: int) -> MonomialIdeal:
    """I^(n) as the intersection of the n-th powers of the cover primes."""
    if n < 1:
        raise ValueError(f"The power must be positive, got {n}")
    if not clutter.edges:
        raise DegenerateSystemError("a clutter without edges has no cover primes")
    ring = clutter.ring()
    covers = sorted(minimal_vertex_covers(clutter), key=len)
    powers = [cover_prime_power(ring, cover, n) for cover in covers]
    result = intersect_all(powers)
    _log.debug(f"Symbolic power {n} has {len(result.generators)} generators")
    return result


def q_polyhedron_vertices(clutter: Clutter) -> List[Tuple]:
    """Vertices of Q(A) = {x >= 0, xA >= 1}, as tuples of QQ elements."""
    if not clutter.edges:
        raise DegenerateSystemError("a clutter without edges has no covering constraints")
    d = clutter.vertices
    rows: List[List[int]] = []
    rhs: List[int] = []
    for i in range(d):
        rows.append([int(j == i) for j in range(d)])
        rhs.append(0)
    for edge in clutter.edges:
        rows.append([int(j + 1 in edge) for j in range(d)])
        rhs.append(1)
    vertices = set()
    for subset in combinations(range(len(rows)), d):
        solution = linalg.solve_square([rows[i] for i in subset], [rhs[i] for i in subset])
        if solution is None:
            continue
        feasible = all(
            sum(c * x for c, x in zip(row, solution)) >= bound
            for row, bound in zip(rows, rhs)
        )
        if feasible:
            vertices.add(tuple(solution))
    if not vertices:
        raise DegenerateSystemError("the covering polyhedron has no vertices")
    return sorted(vertices)


def q_polyhedron_integral(clutter: Clutter) -> bool:
    return all(
        linalg.is_integral(x) for vertex in q_polyhedron_vertices(clutter) for x in vertex
    )


@dataclass(frozen=True)
class SymbolicComparison:
    power: int
    equal: bool
    only_symbolic: Tuple[ExponentVector, ...]
    only_closure: Tuple[ExponentVector, ...]


def compare_symbolic_closure(
    clutter: Clutter, nmax: int, integral: Optional[bool] = None
) -> List[SymbolicComparison]:
    """Compare closure(I^n) with I^(n) for n = 1..nmax.

    When Q(A) is integral the two must agree; a disagreement then raises.
    """
    ideal = edge_ideal(clutter)
    spread = analytic_spread(ideal)
    if nmax > spread:
        raise ValueError(f"nmax={nmax} exceeds the analytic spread {spread}")
    if integral is None:
        integral = q_polyhedron_integral(clutter)
    table = []
    for n in range(1, nmax + 1):
        closure = closure_of_power(ideal, n)
        symbolic = symbolic_power(clutter, n)
        only_symbolic = tuple(g for g in symbolic if not contains_monomial(closure, g))
        only_closure = tuple(g for g in closure if not contains_monomial(symbolic, g))
        row = SymbolicComparison(
            n, closure == symbolic, only_symbolic, only_closure
        )
        if integral and not row.equal:
            raise IdentityViolationError(
                "symbolic_equals_closure",
                f"power {n}: symbolic-only {list(only_symbolic)}, closure-only {list(only_closure)}",
            )
        table.append(row)
    return table


def monomial_height(ideal: MonomialIdeal) -> int:
    """Height of a monomial ideal: the least size of a minimal prime of its radical."""
    ideal.require_proper("monomial_height")
    supports = [
        [i for i, entry in enumerate(g) if entry] for g in ideal.generators
    ]
    radical = Clutter.from_supports(ideal.ring.dimension, supports)
    return min(len(cover) for cover in minimal_vertex_covers(radical))

