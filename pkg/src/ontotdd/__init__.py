"""Test-driven development harness for description-logic ontologies."""

from .core import (
    TOP, BOTTOM, All, And, Axiom, Bottom, ClassAssertion, ClassExpression,
    DifferentIndividuals, DisjointClasses, DisjointUnion, EquivalentClasses,
    ExactCard, FunctionalObjectProperty, MaxCard, MinCard, Named, Not,
    ObjectPropertyAssertion, ObjectPropertyDomain, ObjectPropertyRange,
    Or, Outcome, PreconditionFailure, PreconditionKind, SameIndividual,
    Signature, Some, SubClassOf, TestResult, Top, Verdict, complement,
    max_verdict, nnf, signature_of,
)
from .parser import (
    ParseError, parse_ontology, parse_test_axiom, print_axiom, print_expr,
    print_functional_axiom, print_ontology,
)
from .reasoner import (
    CLASSIFY_CALLS, ClassificationIndex, InconsistentOntologyError,
    OntologyState, ResourceBudgetExceeded, UnknownEntityError, add_axioms,
    classify, get_different_individuals, get_instances, get_same_individuals,
    get_sub_classes, get_types, is_satisfiable, make_state,
)
from .engine import (
    PreTestReport, UnsupportedAxiomError, evaluate, pre_test,
    reference_verdict, rewrite_property_axiom, test_class_assertion,
    test_different_individuals, test_disjoint_classes, test_disjoint_union,
    test_equivalent_classes, test_same_individual, test_sub_class_of,
)

__all__ = [name for name in dir() if not name.startswith("_")]
