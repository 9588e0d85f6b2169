##
# Licensed under the MIT License.
##
from abc import ABCMeta, abstractmethod
from typing import List, Optional, Sequence, Tuple

from normlab.checks import Check
from normlab.clutter import Clutter, SymbolicComparison
from normlab.core import ExponentVector, MonomialIdeal
from normlab.graded import ColonVerdict, LinearTypePrediction
from normlab.indices import IndicesReport
from normlab.newton import NewtonPolyhedron, NormalityCertificate
from normlab.sally import (
    FiltrationReport,
    GeneratorBoundReport,
    MinimalReduction,
    SallyCrossCheck,
)


class _ReportElement(metaclass=ABCMeta):
    @abstractmethod
    def accept(self, visitor):
        pass


class _Closure(_ReportElement):
    def __init__(
        self,
        ideal: MonomialIdeal,
        n: int,
        polyhedron: NewtonPolyhedron,
        closure: MonomialIdeal,
        plain: MonomialIdeal,
    ):
        self.ideal = ideal
        self.n = n
        self.polyhedron = polyhedron
        self.closure = closure
        self.plain = plain

    def accept(self, visitor):
        visitor.visit_closure(self)


class _Normality(_ReportElement):
    def __init__(self, ideal: MonomialIdeal, spread: int, certificate: NormalityCertificate):
        self.ideal = ideal
        self.spread = spread
        self.certificate = certificate

    def accept(self, visitor):
        visitor.visit_normality(self)


class _Indices(_ReportElement):
    def __init__(self, report: IndicesReport):
        self.report = report

    def accept(self, visitor):
        visitor.visit_indices(self.report)


class _Filtration(_ReportElement):
    def __init__(self, report: FiltrationReport, inequality: Check):
        self.report = report
        self.inequality = inequality

    def accept(self, visitor):
        visitor.visit_filtration(self)


class _Sally(_ReportElement):
    def __init__(
        self,
        bounds: GeneratorBoundReport,
        reduction: MinimalReduction,
        cross: SallyCrossCheck,
    ):
        self.bounds = bounds
        self.reduction = reduction
        self.cross = cross

    def accept(self, visitor):
        visitor.visit_sally(self)


class _Clutter(_ReportElement):
    def __init__(
        self,
        clutter: Clutter,
        covers: List[Tuple[int, ...]],
        vertices: List[Tuple],
        integral: bool,
        spread: int,
        comparisons: List[SymbolicComparison],
    ):
        self.clutter = clutter
        self.covers = covers
        self.vertices = vertices
        self.integral = integral
        self.spread = spread
        self.comparisons = comparisons

    def accept(self, visitor):
        visitor.visit_clutter(self)


class _Colon(_ReportElement):
    def __init__(self, verdict: ColonVerdict, prediction: LinearTypePrediction):
        self.verdict = verdict
        self.prediction = prediction

    def accept(self, visitor):
        visitor.visit_colon(self)


class _Oracle(_ReportElement):
    def __init__(self, checks: Sequence[Check]):
        self.checks = list(checks)

    def accept(self, visitor):
        visitor.visit_oracle(self.checks)


class NormlabReport:
    def __init__(
        self,
        command: str,
        source: str,
        ideal: Optional[MonomialIdeal],
        seed: Optional[int],
        elements: List[_ReportElement],
    ):
        self._command = command
        self._source = source
        self._ideal = ideal
        self._seed = seed
        self._elements = elements

    @property
    def command(self) -> str:
        return self._command

    @property
    def source(self) -> str:
        return self._source

    @property
    def ideal(self) -> Optional[MonomialIdeal]:
        return self._ideal

    @property
    def seed(self) -> Optional[int]:
        return self._seed

    def format(self, vectors: Sequence[ExponentVector]) -> List[str]:
        return [self._ideal.ring.format_monomial(v) for v in vectors]

    def accept(self, visitor):
        visitor.visit_report(self)
        for element in self._elements:
            element.accept(visitor)
        visitor.finalize()
