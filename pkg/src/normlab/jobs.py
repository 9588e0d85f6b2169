##
# Licensed under the MIT License.
##
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple, Union

from normlab.clutter import (
    Clutter,
    compare_symbolic_closure,
    edge_ideal,
    minimal_vertex_covers,
    q_polyhedron_vertices,
)
from normlab.core import MonomialIdeal, power
from normlab.errors import JobSpecError, NormlabError
from normlab.graded import linear_type_prediction, verify_colon_formula
from normlab.indices import generation_index, indices_report
from normlab import linalg
from normlab.newton import analytic_spread, closure_of_power, is_normal, newton_polyhedron
from normlab.oracle import colon_oracle, run_oracles
from normlab.parsing import parse_input
from normlab.reports import (
    NormlabReport,
    _Closure,
    _Clutter,
    _Colon,
    _Filtration,
    _Indices,
    _Normality,
    _Oracle,
    _ReportElement,
    _Sally,
)
from normlab.sally import (
    CROSS_ORACLE_POWERS,
    TABLE_CAP,
    e1_inequality_report,
    filtration_report,
    generator_bound_check,
    sally_cross_oracle,
)
from normlab.visitor import OUTPUT_FORMATS, ReportVisitor

_log = logging.getLogger(name=__name__)

COMMANDS = ("closure", "normal", "indices", "hilbert", "sally", "clutter", "colon-verify")
PROFILES = ("lenient", "strict")
MAX_POWER = 10
MAX_DIMENSION = 8


@dataclass(frozen=True)
class JobSpec:
    command: str
    input_path: str
    power: Optional[int] = None
    table_length: Optional[int] = None
    seed: int = 0
    output_format: str = "text"
    oracle: bool = False
    banner: bool = True
    profile: str = "lenient"

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise JobSpecError("command", self.command, ", ".join(COMMANDS))
        if self.power is not None and not 1 <= self.power <= MAX_POWER:
            raise JobSpecError("--power", self.power, f"1..{MAX_POWER}")
        if self.table_length is not None and not 2 <= self.table_length <= TABLE_CAP:
            raise JobSpecError("--table-length", self.table_length, f"2..{TABLE_CAP}")
        if self.output_format not in OUTPUT_FORMATS:
            raise JobSpecError("format", self.output_format, ", ".join(OUTPUT_FORMATS))
        if self.profile not in PROFILES:
            raise JobSpecError("--profile", self.profile, ", ".join(PROFILES))


Parsed = Union[MonomialIdeal, Clutter]
Outcome = Tuple[List[_ReportElement], Optional[int]]


def _ideal_of(parsed: Parsed) -> MonomialIdeal:
    return edge_ideal(parsed) if isinstance(parsed, Clutter) else parsed


def _run_closure(job: JobSpec, parsed: Parsed) -> Outcome:
    ideal = _ideal_of(parsed)
    n = job.power or 1
    element = _Closure(
        ideal, n, newton_polyhedron(ideal), closure_of_power(ideal, n), power(ideal, n)
    )
    return [element], None


def _run_normal(job: JobSpec, parsed: Parsed) -> Outcome:
    ideal = _ideal_of(parsed)
    _, certificate = is_normal(ideal)
    return [_Normality(ideal, analytic_spread(ideal), certificate)], None


def _run_indices(job: JobSpec, parsed: Parsed) -> Outcome:
    return [_Indices(indices_report(_ideal_of(parsed)))], None


def _run_hilbert(job: JobSpec, parsed: Parsed) -> Outcome:
    ideal = _ideal_of(parsed)
    ideal.require_m_primary("hilbert")
    s0, _ = generation_index(ideal)
    report = filtration_report(ideal, job.table_length, s0)
    return [_Filtration(report, e1_inequality_report(report))], None


def _run_sally(job: JobSpec, parsed: Parsed) -> Outcome:
    ideal = _ideal_of(parsed)
    ideal.require_m_primary("sally")
    report = filtration_report(ideal, job.table_length)
    bounds, reduction = generator_bound_check(ideal, job.seed, report)
    cross = sally_cross_oracle(report, reduction, job.power or CROSS_ORACLE_POWERS)
    return [_Sally(bounds, reduction, cross)], reduction.seed


def _run_clutter(job: JobSpec, parsed: Parsed) -> Outcome:
    if not isinstance(parsed, Clutter):
        raise JobSpecError("--input", job.input_path, "a clutter file with vertices and edges")
    vertices = q_polyhedron_vertices(parsed)
    integral = all(linalg.is_integral(x) for vertex in vertices for x in vertex)
    spread = analytic_spread(edge_ideal(parsed))
    comparisons = compare_symbolic_closure(parsed, job.power or spread, integral)
    element = _Clutter(
        parsed, minimal_vertex_covers(parsed), vertices, integral, spread, comparisons
    )
    return [element], None


def _run_colon(job: JobSpec, parsed: Parsed) -> Outcome:
    ideal = _ideal_of(parsed)
    verdict = verify_colon_formula(ideal, job.power or 1, job.seed, job.profile)
    elements: List[_ReportElement] = [_Colon(verdict, linear_type_prediction(ideal))]
    if job.oracle:
        checks = colon_oracle(ideal, verdict.effective_exponent, verdict.degrees_checked)
        elements.append(_Oracle(checks))
    return elements, verdict.seed


_HANDLERS: Dict[str, Callable[[JobSpec, Parsed], Outcome]] = {
    "closure": _run_closure,
    "normal": _run_normal,
    "indices": _run_indices,
    "hilbert": _run_hilbert,
    "sally": _run_sally,
    "clutter": _run_clutter,
    "colon-verify": _run_colon,
}


def run(job: JobSpec) -> Tuple[int, str]:
    r"""Runs one job and renders its report.

    :param job: the validated command, input path and options
    :returns:
        Tuple of the exit code and the text to print: the report on success
        (code 0), the error message otherwise (1 for input or computation
        errors, 2 when a guaranteed property failed).
    """
    try:
        job.validate()
        parsed = parse_input(job.input_path)
        ideal = _ideal_of(parsed)
        if ideal.ring.dimension > MAX_DIMENSION:
            raise JobSpecError("dimension", ideal.ring.dimension, f"<= {MAX_DIMENSION}")
        elements, seed = _HANDLERS[job.command](job, parsed)
        if job.oracle and job.command != "colon-verify":
            elements.append(_Oracle(run_oracles(ideal, job.power or 1)))
        report = NormlabReport(job.command, job.input_path, ideal, seed, elements)
        visitor = ReportVisitor(job.output_format, banner=job.banner)
        report.accept(visitor)
    except NormlabError as error:
        _log.debug(f"Job '{job.command}' failed with {type(error).__name__}")
        return error.exit_code, error.msg
    except ValueError as error:
        return 1, str(error)
    return 0, visitor.output
