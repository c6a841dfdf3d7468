"""The testing model: preconditions, per-axiom-kind verdicts, and the
add-and-reclassify reference oracle.

Everything here routes through the six reasoner query methods over an
already-classified snapshot; no call path reclassifies the ontology.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    TOP, All, And, Axiom, ClassAssertion, ClassExpression,
    DifferentIndividuals, DisjointClasses, DisjointUnion, EquivalentClasses,
    FunctionalObjectProperty, MaxCard, Named, Not, ObjectPropertyAssertion,
    ObjectPropertyDomain, ObjectPropertyRange, Or, Outcome,
    PreconditionFailure, PreconditionKind, SameIndividual, Some, SubClassOf,
    TestResult, Verdict, max_verdict, signature_of,
)
from . import reasoner
from .reasoner import OntologyState


class UnsupportedAxiomError(Exception):
    """The axiom kind has no test algorithm (e.g. role assertions)."""


@dataclass(frozen=True)
class PreTestReport:
    """Suite-level precondition status, read off the classification index."""

    consistent: bool
    coherent: bool
    missing: frozenset[str]

    @property
    def ok(self) -> bool:
        return self.consistent and self.coherent and not self.missing


def is_property_axiom(axiom: Axiom) -> bool:
    return isinstance(
        axiom, (ObjectPropertyDomain, ObjectPropertyRange, FunctionalObjectProperty)
    )


def rewrite_property_axiom(axiom: Axiom) -> SubClassOf:
    """Encode the testable property axioms as class axioms.

    Domain(R, C) becomes (some R owl:Thing) subclass-of C; Range(R, D)
    becomes owl:Thing subclass-of (only R D), the inverse-free equivalent of
    a range constraint; Functional(R) becomes owl:Thing subclass-of
    (max 1 R owl:Thing).
    """
    match axiom:
        case ObjectPropertyDomain(role, expr):
            return SubClassOf(Some(role, TOP), expr)
        case ObjectPropertyRange(role, expr):
            return SubClassOf(TOP, All(role, expr))
        case FunctionalObjectProperty(role):
            return SubClassOf(TOP, MaxCard(1, role, TOP))
    raise UnsupportedAxiomError(f"not an encodable property axiom: {axiom!r}")


def pre_test(state: OntologyState, axiom: Axiom) -> PreTestReport:
    if state.index is None:
        raise ValueError("state must be classified")
    missing = signature_of(axiom).difference(state.signature)
    return PreTestReport(
        consistent=state.index.consistent,
        coherent=not state.index.unsatisfiable_named,
        missing=missing,
    )


def evaluate(state: OntologyState, axiom: Axiom) -> TestResult:
    """Test one axiom against a classified ontology.

    Ontology-level failures and missing vocabulary short-circuit before any
    reasoner call; otherwise the per-kind algorithm produces a verdict.
    """
    if state.index is None:
        raise ValueError("state must be classified")
    if not state.index.consistent:
        return PreconditionFailure(PreconditionKind.ONTOLOGY_INCONSISTENT)
    if state.index.unsatisfiable_named:
        return PreconditionFailure(PreconditionKind.ONTOLOGY_INCOHERENT)
    missing = signature_of(axiom).difference(state.signature)
    if missing:
        return PreconditionFailure(PreconditionKind.MISSING_ENTITIES, missing)
    return Outcome(_dispatch(state, axiom))


def _dispatch(state: OntologyState, axiom: Axiom) -> Verdict:
    match axiom:
        case SubClassOf(sub, sup):
            return test_sub_class_of(state, sub, sup)
        case EquivalentClasses(members):
            return test_equivalent_classes(state, members)
        case DisjointClasses(members):
            return test_disjoint_classes(state, members)
        case DisjointUnion(lhs, members):
            return test_disjoint_union(state, lhs, members)
        case ClassAssertion(individual, expr):
            return test_class_assertion(state, individual, expr)
        case SameIndividual(individuals):
            return test_same_individual(state, individuals)
        case DifferentIndividuals(individuals):
            return test_different_individuals(state, individuals)
        case ObjectPropertyDomain() | ObjectPropertyRange() | FunctionalObjectProperty():
            rewritten = rewrite_property_axiom(axiom)
            return test_sub_class_of(state, rewritten.sub, rewritten.sup)
    raise UnsupportedAxiomError(f"no test algorithm for {type(axiom).__name__}")


def _probe_sub_class_of(state: OntologyState, sub: ClassExpression, sup: ClassExpression) -> Verdict:
    """Query-only subsumption test: instances, named subclasses, then
    satisfiability of sub-and-not-sup."""
    probe = And((sub, Not(sup)))
    if reasoner.get_instances(state, probe):
        return Verdict.INCONSISTENT
    if reasoner.get_sub_classes(state, probe):
        return Verdict.INCOHERENT
    if reasoner.is_satisfiable(state, probe):
        return Verdict.ABSENT
    return Verdict.ENTAILED


def _probe_equivalent(state: OntologyState, members: tuple[ClassExpression, ...]) -> Verdict:
    result = Verdict.ENTAILED
    for i, c in enumerate(members):
        for j, d in enumerate(members):
            if i != j:
                result = max_verdict(result, _probe_sub_class_of(state, c, d))
    return result


def _probe_disjoint(state: OntologyState, members: tuple[ClassExpression, ...]) -> Verdict:
    result = Verdict.ENTAILED
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            result = max_verdict(result, _probe_sub_class_of(state, members[i], Not(members[j])))
    return result


def _complete_class_axiom(state: OntologyState, axiom: Axiom, preliminary: Verdict) -> Verdict:
    """Close the gap the query probes cannot see.

    A class axiom can contradict the TBox globally, or starve a named class,
    without any asserted individual or entailed named subclass witnessing it
    through the probe expression.  One consistency check of the extended
    axiom set (plus a per-class satisfiability scan when the probes saw
    nothing) decides those cases; no classification index is built or
    touched.
    """
    if preliminary in (Verdict.ENTAILED, Verdict.INCONSISTENT):
        return preliminary
    extended = reasoner.add_axioms(state, [axiom])
    if not reasoner._consistent(extended):
        return Verdict.INCONSISTENT
    if preliminary is Verdict.INCOHERENT:
        return preliminary
    for name in sorted(state.signature.classes):
        if not reasoner._satisfiable(extended, Named(name)):
            return Verdict.INCOHERENT
    return preliminary


def test_sub_class_of(state: OntologyState, sub: ClassExpression, sup: ClassExpression) -> Verdict:
    preliminary = _probe_sub_class_of(state, sub, sup)
    return _complete_class_axiom(state, SubClassOf(sub, sup), preliminary)


def test_equivalent_classes(state: OntologyState, members: tuple[ClassExpression, ...]) -> Verdict:
    preliminary = _probe_equivalent(state, members)
    return _complete_class_axiom(state, EquivalentClasses(members), preliminary)


def test_disjoint_classes(state: OntologyState, members: tuple[ClassExpression, ...]) -> Verdict:
    preliminary = _probe_disjoint(state, members)
    return _complete_class_axiom(state, DisjointClasses(members), preliminary)


def test_disjoint_union(state: OntologyState, lhs: str, members: tuple[ClassExpression, ...]) -> Verdict:
    union = Or(members)
    preliminary = max_verdict(
        _probe_equivalent(state, (Named(lhs), union)),
        _probe_disjoint(state, members),
    )
    return _complete_class_axiom(state, DisjointUnion(lhs, members), preliminary)


def test_class_assertion(state: OntologyState, individual: str, expr: ClassExpression) -> Verdict:
    if individual in reasoner.get_instances(state, expr):
        return Verdict.ENTAILED
    if individual in reasoner.get_instances(state, Not(expr)):
        return Verdict.INCONSISTENT
    return Verdict.ABSENT


def test_same_individual(state: OntologyState, individuals: tuple[str, ...]) -> Verdict:
    first, *rest = individuals
    if set(rest) <= reasoner.get_same_individuals(state, first):
        return Verdict.ENTAILED
    args = set(individuals)
    for a in individuals:
        if args & reasoner.get_different_individuals(state, a):
            return Verdict.INCONSISTENT
    return Verdict.ABSENT


def test_different_individuals(state: OntologyState, individuals: tuple[str, ...]) -> Verdict:
    args = set(individuals)
    for a in individuals:
        if (args - {a}) & reasoner.get_same_individuals(state, a):
            return Verdict.INCONSISTENT
    for a in individuals:
        if not (args - {a}) <= reasoner.get_different_individuals(state, a):
            return Verdict.ABSENT
    return Verdict.ENTAILED


# ---------------------------------------------------------------------------
# Reference oracle: direct reading of the testing model
# ---------------------------------------------------------------------------

def _entailed(state: OntologyState, axiom: Axiom) -> bool:
    """Entailment by decomposition into unsatisfiability / query checks."""
    match axiom:
        case SubClassOf(sub, sup):
            return not reasoner.is_satisfiable(state, And((sub, Not(sup))))
        case EquivalentClasses(members):
            return all(
                _entailed(state, SubClassOf(members[i], members[j]))
                for i in range(len(members))
                for j in range(len(members))
                if i != j
            )
        case DisjointClasses(members):
            return all(
                not reasoner.is_satisfiable(state, And((members[i], members[j])))
                for i in range(len(members))
                for j in range(i + 1, len(members))
            )
        case DisjointUnion(lhs, members):
            return _entailed(state, EquivalentClasses((Named(lhs), Or(members)))) and _entailed(
                state, DisjointClasses(members)
            )
        case ClassAssertion(individual, expr):
            return individual in reasoner.get_instances(state, expr)
        case SameIndividual(individuals):
            first = individuals[0]
            return set(individuals[1:]) <= reasoner.get_same_individuals(state, first)
        case DifferentIndividuals(individuals):
            return all(
                set(individuals) - {a} <= reasoner.get_different_individuals(state, a)
                for a in individuals
            )
        case ObjectPropertyDomain() | ObjectPropertyRange() | FunctionalObjectProperty():
            return _entailed(state, rewrite_property_axiom(axiom))
    raise UnsupportedAxiomError(f"no entailment decomposition for {type(axiom).__name__}")


def reference_verdict(state: OntologyState, axiom: Axiom) -> Verdict:
    """Test-last oracle: if not entailed, add the axiom and re-run the
    reasoner, reading the verdict off the consequences.

    Only the consistency bit and the set of unsatisfiable named classes of
    the re-run are consulted, exactly the fields the testing model defines.
    """
    if _entailed(state, axiom):
        return Verdict.ENTAILED
    extended = reasoner.add_axioms(state, [axiom])
    if not reasoner._consistent(extended):
        return Verdict.INCONSISTENT
    for name in sorted(extended.signature.classes):
        if not reasoner._satisfiable(extended, Named(name)):
            # coherent before the add by precondition, so this is new
            return Verdict.INCOHERENT
    return Verdict.ABSENT
