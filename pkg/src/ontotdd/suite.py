"""Batch runner: classify once, evaluate a file of test cases, report.

Suite files hold one case per line: a Manchester-like axiom, optionally
followed by `` ; expect <entailed|absent|incoherent|inconsistent|missing>``.
'#' comments and blank lines are ignored.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .core import (
    Axiom, Outcome, PreconditionFailure, PreconditionKind, TestResult,
    VERDICT_BY_NAME,
)
from . import engine, reasoner
from .parser import ParseError, parse_ontology, parse_test_axiom

EXPECTATION_TAGS = set(VERDICT_BY_NAME) | {"missing"}

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_INPUT_ERROR = 2


@dataclass(frozen=True)
class TestCase:
    source_line: int
    text: str
    axiom: Axiom
    expected: str | None  # one of EXPECTATION_TAGS, or None for informational


@dataclass(frozen=True)
class CaseOutcome:
    case: TestCase
    result: TestResult | None
    error: str | None = None

    @property
    def status(self) -> str:
        if self.error is not None:
            return "error"
        if isinstance(self.result, Outcome):
            return str(self.result.verdict)
        return str(self.result.kind)

    @property
    def meets_expectation(self) -> bool | None:
        """True/False against the stated expectation, None when informational."""
        if self.case.expected is None:
            return None
        if self.error is not None:
            return False
        if self.case.expected == "missing":
            return (
                isinstance(self.result, PreconditionFailure)
                and self.result.kind is PreconditionKind.MISSING_ENTITIES
            )
        return isinstance(self.result, Outcome) and str(self.result.verdict) == self.case.expected


@dataclass(frozen=True)
class SuiteReport:
    ontology_path: str
    suite_path: str
    classification_millis: float
    outcomes: tuple[CaseOutcome, ...]
    summary: dict[str, int]
    exit_code: int


def parse_suite(text: str, sig) -> list[TestCase]:
    cases = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        axiom_text, expected = line, None
        if ";" in line:
            axiom_text, _, tail = line.partition(";")
            axiom_text = axiom_text.strip()
            tail = tail.strip()
            if not tail.startswith("expect"):
                raise ParseError(lineno, 1, f"malformed expectation {tail!r}")
            expected = tail[len("expect"):].strip()
            if expected not in EXPECTATION_TAGS:
                raise ParseError(lineno, 1, f"unknown expectation {expected!r}")
        try:
            axiom = parse_test_axiom(axiom_text, sig)
        except ParseError as err:
            raise ParseError(lineno, err.column, err.message, err.kind) from None
        cases.append(TestCase(lineno, axiom_text, axiom, expected))
    return cases


def run_suite(
    ontology_path: str,
    suite_path: str,
    node_budget: int = reasoner.DEFAULT_NODE_BUDGET,
) -> SuiteReport:
    """Classify the ontology exactly once and evaluate every case against
    the shared snapshot.

    When the ontology itself is inconsistent or incoherent, every case
    reports that precondition failure without being evaluated.
    """
    with open(ontology_path, encoding="utf-8") as f:
        axioms, sig = parse_ontology(f.read())
    started = time.perf_counter()
    state = reasoner.classify(reasoner.make_state(axioms, sig, node_budget))
    classification_millis = (time.perf_counter() - started) * 1000.0

    with open(suite_path, encoding="utf-8") as f:
        cases = parse_suite(f.read(), sig)

    outcomes: list[CaseOutcome] = []
    index = state.index
    if not index.consistent:
        blanket: TestResult = PreconditionFailure(PreconditionKind.ONTOLOGY_INCONSISTENT)
        outcomes = [CaseOutcome(c, blanket) for c in cases]
    elif index.unsatisfiable_named:
        blanket = PreconditionFailure(PreconditionKind.ONTOLOGY_INCOHERENT)
        outcomes = [CaseOutcome(c, blanket) for c in cases]
    else:
        for case in cases:
            try:
                outcomes.append(CaseOutcome(case, engine.evaluate(state, case.axiom)))
            except reasoner.ResourceBudgetExceeded as err:
                outcomes.append(CaseOutcome(case, None, error=str(err)))

    summary: dict[str, int] = {}
    for oc in outcomes:
        summary[oc.status] = summary.get(oc.status, 0) + 1

    failed_expectation = any(oc.meets_expectation is False for oc in outcomes)
    any_precondition = any(isinstance(oc.result, PreconditionFailure) for oc in outcomes)
    any_error = any(oc.error is not None for oc in outcomes)
    exit_code = EXIT_FAILURES if (failed_expectation or any_precondition or any_error) else EXIT_OK

    return SuiteReport(
        ontology_path=ontology_path,
        suite_path=suite_path,
        classification_millis=classification_millis,
        outcomes=tuple(outcomes),
        summary=summary,
        exit_code=exit_code,
    )


def eval_one(
    ontology_path: str,
    axiom_text: str,
    node_budget: int = reasoner.DEFAULT_NODE_BUDGET,
) -> TestResult:
    """Single-axiom convenience path over the same pipeline."""
    with open(ontology_path, encoding="utf-8") as f:
        axioms, sig = parse_ontology(f.read())
    state = reasoner.classify(reasoner.make_state(axioms, sig, node_budget))
    axiom = parse_test_axiom(axiom_text, sig)
    return engine.evaluate(state, axiom)


def result_to_json(result: TestResult | None, error: str | None = None) -> dict:
    if error is not None:
        return {"kind": "error", "value": error}
    if isinstance(result, Outcome):
        return {"kind": "verdict", "value": str(result.verdict)}
    payload = {"kind": "precondition", "value": str(result.kind)}
    if result.missing:
        payload["missing"] = sorted(result.missing)
    return payload


def format_text(report: SuiteReport) -> str:
    lines = []
    for oc in report.outcomes:
        expected = f" [{oc.case.expected}]" if oc.case.expected else ""
        marker = ""
        if oc.meets_expectation is False:
            marker = " FAIL"
        lines.append(f"{oc.case.source_line}: {oc.status}{expected}{marker} {oc.case.text}")
    counted = ", ".join(f"{k}={v}" for k, v in sorted(report.summary.items()))
    lines.append(f"cases={len(report.outcomes)} {counted}".rstrip())
    return "\n".join(lines)


def format_json(report: SuiteReport) -> str:
    doc = {
        "ontology": report.ontology_path,
        "suite": report.suite_path,
        "classificationMillis": report.classification_millis,
        "cases": [
            {
                "line": oc.case.source_line,
                "axiom": oc.case.text,
                "expected": oc.case.expected,
                "result": result_to_json(oc.result, oc.error),
                "pass": oc.meets_expectation,
            }
            for oc in report.outcomes
        ],
        "summary": report.summary,
        "exitCode": report.exit_code,
    }
    return json.dumps(doc, indent=2, sort_keys=True)
