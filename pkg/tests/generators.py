"""Seeded random generators for ontologies, expressions and test axioms."""
from __future__ import annotations

import random

from ontotdd.core import (
    TOP, BOTTOM, All, And, Axiom, ClassAssertion, ClassExpression,
    DifferentIndividuals, DisjointClasses, DisjointUnion, EquivalentClasses,
    ExactCard, FunctionalObjectProperty, MaxCard, MinCard, Named, Not,
    ObjectPropertyAssertion, ObjectPropertyDomain, ObjectPropertyRange, Or,
    SameIndividual, Signature, Some, SubClassOf,
)

CLASS_POOL = ("A", "B", "C", "D")
ROLE_POOL = ("R", "S")
IND_POOL = ("a", "b", "c")


def random_expr(
    rng: random.Random,
    classes: tuple[str, ...],
    roles: tuple[str, ...],
    depth: int = 2,
    max_card: int = 2,
) -> ClassExpression:
    leafy = depth <= 0 or rng.random() < 0.4
    if leafy or not roles:
        pick = rng.random()
        if pick < 0.85:
            return Named(rng.choice(classes))
        return TOP if pick < 0.93 else BOTTOM
    kind = rng.choice(["and", "or", "not", "some", "all", "min", "max", "exact"])
    sub = lambda: random_expr(rng, classes, roles, depth - 1, max_card)
    if kind == "and":
        return And((sub(), sub()))
    if kind == "or":
        return Or((sub(), sub()))
    if kind == "not":
        return Not(sub())
    role = rng.choice(roles)
    if kind == "some":
        return Some(role, sub())
    if kind == "all":
        return All(role, sub())
    n = rng.randint(0, max_card)
    if kind == "min":
        return MinCard(n, role, sub())
    if kind == "max":
        return MaxCard(n, role, sub())
    return ExactCard(n, role, sub())


def random_ontology_axiom(
    rng: random.Random,
    classes: tuple[str, ...],
    roles: tuple[str, ...],
    individuals: tuple[str, ...],
    depth: int = 2,
    max_card: int = 2,
) -> Axiom:
    kinds = ["sub", "sub", "sub", "equiv", "disjoint", "domain", "range", "functional"]
    if individuals:
        kinds += ["assert", "assert", "role_assert", "role_assert", "same", "different"]
    expr = lambda d=depth: random_expr(rng, classes, roles, d, max_card)
    kind = rng.choice(kinds)
    if kind == "sub":
        return SubClassOf(expr(), expr())
    if kind == "equiv":
        return EquivalentClasses((expr(1), expr(1)))
    if kind == "disjoint":
        return DisjointClasses((expr(1), expr(1)))
    if kind == "domain" and roles:
        return ObjectPropertyDomain(rng.choice(roles), expr(1))
    if kind == "range" and roles:
        return ObjectPropertyRange(rng.choice(roles), expr(1))
    if kind == "functional" and roles:
        return FunctionalObjectProperty(rng.choice(roles))
    if kind == "assert" and individuals:
        return ClassAssertion(rng.choice(individuals), expr(1))
    if kind == "role_assert" and individuals and roles:
        return ObjectPropertyAssertion(
            rng.choice(roles), rng.choice(individuals), rng.choice(individuals)
        )
    if kind == "same" and len(individuals) >= 2:
        picks = rng.sample(individuals, 2)
        return SameIndividual(tuple(picks))
    if kind == "different" and len(individuals) >= 2:
        picks = rng.sample(individuals, 2)
        return DifferentIndividuals(tuple(picks))
    return SubClassOf(expr(1), expr(1))


def random_ontology(
    rng: random.Random,
    n_classes: int = 4,
    n_roles: int = 2,
    n_individuals: int = 3,
    n_axioms: int = 10,
    depth: int = 2,
    max_card: int = 2,
) -> tuple[list[Axiom], Signature]:
    classes = CLASS_POOL[: rng.randint(1, n_classes)]
    roles = ROLE_POOL[: rng.randint(0, n_roles)]
    individuals = IND_POOL[: rng.randint(0, n_individuals)]
    axioms = [
        random_ontology_axiom(rng, classes, roles, individuals, depth, max_card)
        for _ in range(rng.randint(0, n_axioms))
    ]
    sig = Signature(frozenset(classes), frozenset(roles), frozenset(individuals))
    return axioms, sig


def random_test_axiom(rng: random.Random, sig: Signature, max_card: int = 2) -> Axiom:
    """A supported test axiom over the given signature only."""
    classes = tuple(sorted(sig.classes))
    roles = tuple(sorted(sig.roles))
    individuals = tuple(sorted(sig.individuals))
    expr = lambda d=2: random_expr(rng, classes, roles, d, max_card)
    kinds = ["sub", "sub", "equiv", "disjoint"]
    if roles:
        kinds += ["domain", "range", "functional", "disjoint_union"]
    if individuals:
        kinds += ["assert", "assert"]
    if len(individuals) >= 2:
        kinds += ["same", "different"]
    kind = rng.choice(kinds)
    if kind == "sub":
        return SubClassOf(expr(), expr())
    if kind == "equiv":
        return EquivalentClasses(tuple(expr(1) for _ in range(rng.randint(2, 3))))
    if kind == "disjoint":
        return DisjointClasses(tuple(expr(1) for _ in range(rng.randint(2, 3))))
    if kind == "disjoint_union":
        return DisjointUnion(rng.choice(classes), (expr(1), expr(1)))
    if kind == "domain":
        return ObjectPropertyDomain(rng.choice(roles), expr(1))
    if kind == "range":
        return ObjectPropertyRange(rng.choice(roles), expr(1))
    if kind == "functional":
        return FunctionalObjectProperty(rng.choice(roles))
    if kind == "assert":
        return ClassAssertion(rng.choice(individuals), expr(1))
    count = rng.randint(2, min(3, len(individuals)))
    picks = tuple(rng.sample(individuals, count))
    return SameIndividual(picks) if kind == "same" else DifferentIndividuals(picks)
