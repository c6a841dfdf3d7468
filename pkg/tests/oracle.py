"""Brute-force finite-model enumeration used as an independent oracle.

Interpretations are enumerated exhaustively over small domains; checks
against the tableau are one-directional where the bound makes the verdict
decisive (a found model or countermodel is always decisive; exhausting the
bound without finding one is not).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ontotdd.core import (
    All, And, Axiom, Bottom, ClassAssertion, ClassExpression,
    DifferentIndividuals, DisjointClasses, DisjointUnion, EquivalentClasses,
    ExactCard, MaxCard, MinCard, Named, Not, ObjectPropertyAssertion, Or,
    SameIndividual, Signature, Some, SubClassOf, Top,
)


@dataclass(frozen=True)
class Interp:
    domain: frozenset[int]
    classes: dict[str, frozenset[int]]
    roles: dict[str, frozenset[tuple[int, int]]]
    individuals: dict[str, int]


def eval_expr(expr: ClassExpression, m: Interp) -> frozenset[int]:
    match expr:
        case Named(name):
            return m.classes.get(name, frozenset())
        case Top():
            return m.domain
        case Bottom():
            return frozenset()
        case And(operands):
            result = m.domain
            for o in operands:
                result &= eval_expr(o, m)
            return result
        case Or(operands):
            result = frozenset()
            for o in operands:
                result |= eval_expr(o, m)
            return result
        case Not(operand):
            return m.domain - eval_expr(operand, m)
        case Some(role, filler):
            fill = eval_expr(filler, m)
            pairs = m.roles.get(role, frozenset())
            return frozenset(x for x, y in pairs if y in fill)
        case All(role, filler):
            fill = eval_expr(filler, m)
            pairs = m.roles.get(role, frozenset())
            return frozenset(
                x for x in m.domain
                if all(y in fill for (px, y) in pairs if px == x)
            )
        case MinCard(n, role, filler) | MaxCard(n, role, filler) | ExactCard(n, role, filler):
            fill = eval_expr(filler, m)
            pairs = m.roles.get(role, frozenset())
            counts = {x: 0 for x in m.domain}
            for x, y in pairs:
                if y in fill:
                    counts[x] += 1
            if isinstance(expr, MinCard):
                return frozenset(x for x in m.domain if counts[x] >= n)
            if isinstance(expr, MaxCard):
                return frozenset(x for x in m.domain if counts[x] <= n)
            return frozenset(x for x in m.domain if counts[x] == n)
    raise TypeError(f"not a class expression: {expr!r}")


def satisfies(axiom: Axiom, m: Interp) -> bool:
    match axiom:
        case SubClassOf(sub, sup):
            return eval_expr(sub, m) <= eval_expr(sup, m)
        case EquivalentClasses(members):
            exts = [eval_expr(x, m) for x in members]
            return all(e == exts[0] for e in exts[1:])
        case DisjointClasses(members):
            exts = [eval_expr(x, m) for x in members]
            return all(
                not (exts[i] & exts[j])
                for i in range(len(exts))
                for j in range(i + 1, len(exts))
            )
        case DisjointUnion(lhs, members):
            exts = [eval_expr(x, m) for x in members]
            union = frozenset()
            for e in exts:
                union |= e
            disjoint = all(
                not (exts[i] & exts[j])
                for i in range(len(exts))
                for j in range(i + 1, len(exts))
            )
            return disjoint and eval_expr(Named(lhs), m) == union
        case ClassAssertion(individual, expr):
            return m.individuals[individual] in eval_expr(expr, m)
        case ObjectPropertyAssertion(role, subject, obj):
            return (m.individuals[subject], m.individuals[obj]) in m.roles.get(role, frozenset())
        case SameIndividual(inds):
            vals = {m.individuals[i] for i in inds}
            return len(vals) == 1
        case DifferentIndividuals(inds):
            vals = [m.individuals[i] for i in inds]
            return len(set(vals)) == len(vals)
    raise TypeError(f"oracle cannot evaluate {axiom!r}")


def _subsets(items: list) -> list[frozenset]:
    out = []
    for k in range(len(items) + 1):
        out.extend(frozenset(c) for c in itertools.combinations(items, k))
    return out


def interpretations(sig: Signature, max_domain: int):
    """Every interpretation of the signature up to the domain bound."""
    class_names = sorted(sig.classes)
    role_names = sorted(sig.roles)
    ind_names = sorted(sig.individuals)
    for d in range(1, max_domain + 1):
        domain = frozenset(range(d))
        elem_subsets = _subsets(list(range(d)))
        pair_subsets = _subsets(list(itertools.product(range(d), repeat=2)))
        for cls_choice in itertools.product(elem_subsets, repeat=len(class_names)):
            classes = dict(zip(class_names, cls_choice))
            for role_choice in itertools.product(pair_subsets, repeat=len(role_names)):
                roles = dict(zip(role_names, role_choice))
                for ind_choice in itertools.product(range(d), repeat=len(ind_names)):
                    yield Interp(domain, classes, roles, dict(zip(ind_names, ind_choice)))


def models(axioms, sig: Signature, max_domain: int):
    """Interpretations satisfying every axiom."""
    for m in interpretations(sig, max_domain):
        if all(satisfies(ax, m) for ax in axioms):
            yield m


def find_model(axioms, sig: Signature, max_domain: int) -> Interp | None:
    return next(models(axioms, sig, max_domain), None)


def expr_satisfiable_bounded(expr: ClassExpression, sig: Signature, max_domain: int) -> bool:
    """True iff some interpretation up to the bound gives expr a non-empty extension."""
    return any(eval_expr(expr, m) for m in interpretations(sig, max_domain))
