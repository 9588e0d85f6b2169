##
# Licensed under the MIT License.
##
import json
import logging
from abc import ABCMeta, abstractmethod
from io import UnsupportedOperation
from typing import Dict, List, Optional, Sequence

from normlab import __version__
from normlab.checks import Check
from normlab.indices import IndicesReport
from normlab.reports import NormlabReport

_log = logging.getLogger(name=__name__)

OUTPUT_FORMATS = ("text", "json")


class ReportElementVisitor(metaclass=ABCMeta):
    @abstractmethod
    def visit_closure(self, element):
        raise NotImplementedError

    @abstractmethod
    def visit_normality(self, element):
        raise NotImplementedError

    @abstractmethod
    def visit_indices(self, report):
        raise NotImplementedError

    @abstractmethod
    def visit_filtration(self, element):
        raise NotImplementedError

    @abstractmethod
    def visit_sally(self, element):
        raise NotImplementedError

    @abstractmethod
    def visit_clutter(self, element):
        raise NotImplementedError

    @abstractmethod
    def visit_colon(self, element):
        raise NotImplementedError

    @abstractmethod
    def visit_oracle(self, checks):
        raise NotImplementedError


def _check(check: Check) -> Dict:
    return {
        "name": check.name,
        "lhs": check.lhs,
        "relation": check.relation,
        "rhs": check.rhs,
        "holds": check.holds,
        "asserted": check.asserted,
        "skipped": check.skipped,
    }


def _exponents(vectors) -> List[List[int]]:
    return [list(v) for v in vectors]


class ReportVisitor(ReportElementVisitor):
    """Collects one section per element and renders them as text or JSON.

    Sections keep insertion order; keys ending in ``_exponents`` only appear
    in JSON output.
    """

    def __init__(self, output_format: str = "text", **kwargs):
        self._format = self._map_output_format(output_format)
        self._banner = kwargs.get("banner", True)
        self._report: Optional[NormlabReport] = None
        self._header: Dict = {}
        self._sections: List = []
        self._output: Optional[str] = None

    def _map_output_format(self, output_format: str) -> str:
        value = output_format.strip().lower()
        if value in OUTPUT_FORMATS:
            return value
        raise UnsupportedOperation(f"The supplied output format is not supported: {output_format}.")

    @property
    def output(self) -> str:
        return self._output

    def _monomials(self, vectors) -> List[str]:
        return self._report.format(vectors)

    def _section(self, name: str, payload: Dict) -> None:
        _log.debug(f"Visiting section '{name}'")
        self._sections.append((name, payload))

    def visit_report(self, report: NormlabReport):
        _log.debug(f"Visiting report '{report.command}' for {report.source}")
        self._report = report
        self._header = {"command": report.command, "input": report.source}
        if report.ideal is not None:
            self._header["ideal"] = str(report.ideal)
            self._header["variables"] = list(report.ideal.ring.names)
        if report.seed is not None:
            self._header["seed"] = report.seed

    def visit_closure(self, element):
        facets = element.polyhedron.facets
        self._section(
            "closure",
            {
                "power": element.n,
                "facets": [str(f) for f in facets],
                "facets_exponents": [list(f.normal) + [f.offset] for f in facets],
                "closure": self._monomials(element.closure.generators),
                "closure_exponents": _exponents(element.closure.generators),
                "power_generators": len(element.plain.generators),
                "integrally_closed": element.closure == element.plain,
            },
        )

    def visit_normality(self, element):
        certificate = element.certificate
        witness = certificate.witness
        self._section(
            "normal",
            {
                "normal": certificate.normal,
                "analytic_spread": element.spread,
                "checked_powers": list(certificate.checked_powers),
                "failing_power": certificate.failing_power,
                "witness": self._monomials([witness])[0] if witness else None,
                "witness_exponents": list(witness) if witness else None,
            },
        )

    def visit_indices(self, report: IndicesReport):
        levels = sorted(report.fresh_generators)
        self._section(
            "indices",
            {
                "s": report.s,
                "s0": report.s0,
                "analytic_spread": report.ell,
                "normal": report.normal,
                "fresh_generators": {
                    str(n): self._monomials(report.fresh_generators[n]) for n in levels
                },
                "fresh_generators_exponents": {
                    str(n): _exponents(report.fresh_generators[n]) for n in levels
                },
                "bound_checks": [_check(c) for c in report.bound_checks],
                "termination_certificate": _check(report.certificate),
            },
        )

    def visit_filtration(self, element):
        report = element.report
        inequality = element.inequality
        self._section(
            "hilbert",
            {
                "length_table": list(report.length_table),
                "f": list(report.a),
                "e": list(report.hilbert_coefficients),
                "g": list(report.b),
                "lambda_I1_over_J": report.lambda_I1_over_J,
                "checks": [_check(c) for c in report.checks],
                "e1_inequality": dict(
                    _check(inequality), difference=inequality.lhs - inequality.rhs
                ),
            },
        )

    def visit_sally(self, element):
        bounds = element.bounds
        reduction = element.reduction
        if reduction.monomial is not None:
            described = ["the ideal itself (parameter ideal)"]
        else:
            described = [form.format(reduction.ideal.ring) for form in reduction.forms]
        self._section(
            "sally",
            {
                "seed": bounds.seed,
                "reduction": described,
                "lambda_I1_over_J": bounds.first_quotient,
                "higher_quotients": list(bounds.higher_quotients),
                "generator_count": bounds.total,
                "checks": [_check(c) for c in bounds.checks],
                "sally_hilbert_function": list(element.cross.predicted),
                "direct_lengths": list(element.cross.direct),
            },
        )

    def visit_clutter(self, element):
        self._section(
            "clutter",
            {
                "vertices": element.clutter.vertices,
                "edges": _exponents(element.clutter.edges),
                "minimal_vertex_covers": _exponents(element.covers),
                "q_polyhedron_integral": element.integral,
                "fractional_vertices": [
                    [str(x) for x in vertex]
                    for vertex in element.vertices
                    if any(getattr(x, "denominator", 1) != 1 for x in vertex)
                ],
                "analytic_spread": element.spread,
                "comparisons": [
                    {
                        "power": row.power,
                        "equal": row.equal,
                        "only_symbolic": self._monomials(row.only_symbolic),
                        "only_closure": self._monomials(row.only_closure),
                    }
                    for row in element.comparisons
                ],
            },
        )

    def visit_colon(self, element):
        verdict = element.verdict
        prediction = element.prediction
        self._section(
            "colon",
            {
                "power": verdict.power,
                "height": verdict.height,
                "delta": verdict.delta,
                "sigma": verdict.sigma,
                "k": verdict.exponent,
                "effective_exponent": verdict.effective_exponent,
                "seed": verdict.seed,
                "degrees_checked": verdict.degrees_checked,
                "verdict": "equal" if verdict.equal else "mismatch",
                "mismatch_degree": verdict.mismatch_degree,
                "hypotheses": verdict.hypotheses,
                "label": verdict.label,
                "linear_type": {
                    "predicted": prediction.predicted,
                    "normal": prediction.normal,
                    "consistent": prediction.consistent,
                    "generators": prediction.generators,
                },
            },
        )

    def visit_oracle(self, checks: Sequence[Check]):
        self._section("oracle", {"checks": [_check(c) for c in checks]})

    def finalize(self):
        if "json" == self._format:
            document = dict(self._header)
            if self._banner:
                document["normlab"] = __version__
            for name, payload in self._sections:
                document[name] = payload
            self._output = json.dumps(document, sort_keys=True, indent=2)
        else:
            self._output = "\n".join(self._text_lines())

    def _text_lines(self) -> List[str]:
        lines = [f"normlab {__version__}"] if self._banner else []
        lines.extend(f"{key}: {_text(value)}" for key, value in self._header.items())
        for name, payload in self._sections:
            lines.append(f"[{name}]")
            for key, value in payload.items():
                if key.endswith("_exponents"):
                    continue
                if isinstance(value, list) and value and isinstance(value[0], dict):
                    lines.append(f"  {key}:")
                    lines.extend(f"    {_text_entry(entry)}" for entry in value)
                else:
                    lines.append(f"  {key}: {_text(value)}")
        return lines


def _text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "[" + ", ".join(_text(v) for v in value) + "]"
    if isinstance(value, dict):
        if "relation" in value:
            return _text_entry(value)
        return "{" + ", ".join(f"{k}: {_text(v)}" for k, v in value.items()) + "}"
    return str(value)


def _text_entry(entry: Dict) -> str:
    if "relation" not in entry:
        return _text(entry)
    if entry["skipped"]:
        return f"{entry['name']}: skipped ({entry['skipped']})"
    status = "holds" if entry["holds"] else "FAILS"
    return f"{entry['name']}: {_text(entry['lhs'])} {entry['relation']} {_text(entry['rhs'])} {status}"
