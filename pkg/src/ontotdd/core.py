"""Core domain types: class expressions, axioms, signatures, verdicts.

All types are immutable values; they hash and compare structurally and are
safe to share between threads.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field


def _cached_hash(cls):
    """Memoize the structural hash; expressions are hashed constantly in
    tableau label sets and recomputing tuple hashes recursively dominates."""
    field_hash = cls.__hash__

    def __hash__(self):
        try:
            return object.__getattribute__(self, "_hash_cache")
        except AttributeError:
            value = field_hash(self)
            object.__setattr__(self, "_hash_cache", value)
            return value

    cls.__hash__ = __hash__
    return cls


# ---------------------------------------------------------------------------
# Class expressions
# ---------------------------------------------------------------------------

@_cached_hash
@dataclass(frozen=True)
class Named:
    name: str


@_cached_hash
@dataclass(frozen=True)
class Top:
    pass


@_cached_hash
@dataclass(frozen=True)
class Bottom:
    pass


@_cached_hash
@dataclass(frozen=True)
class And:
    operands: tuple["ClassExpression", ...]

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("And requires at least 2 operands")


@_cached_hash
@dataclass(frozen=True)
class Or:
    operands: tuple["ClassExpression", ...]

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("Or requires at least 2 operands")


@_cached_hash
@dataclass(frozen=True)
class Not:
    operand: "ClassExpression"


@_cached_hash
@dataclass(frozen=True)
class Some:
    role: str
    filler: "ClassExpression"


@_cached_hash
@dataclass(frozen=True)
class All:
    role: str
    filler: "ClassExpression"


@_cached_hash
@dataclass(frozen=True)
class MinCard:
    n: int
    role: str
    filler: "ClassExpression"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


@_cached_hash
@dataclass(frozen=True)
class MaxCard:
    n: int
    role: str
    filler: "ClassExpression"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


@_cached_hash
@dataclass(frozen=True)
class ExactCard:
    n: int
    role: str
    filler: "ClassExpression"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


ClassExpression = (
    Named | Top | Bottom | And | Or | Not | Some | All | MinCard | MaxCard | ExactCard
)

TOP = Top()
BOTTOM = Bottom()


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubClassOf:
    sub: ClassExpression
    sup: ClassExpression


@dataclass(frozen=True)
class EquivalentClasses:
    members: tuple[ClassExpression, ...]

    def __post_init__(self):
        if len(self.members) < 2:
            raise ValueError("EquivalentClasses requires at least 2 members")


@dataclass(frozen=True)
class DisjointClasses:
    members: tuple[ClassExpression, ...]

    def __post_init__(self):
        if len(self.members) < 2:
            raise ValueError("DisjointClasses requires at least 2 members")


@dataclass(frozen=True)
class DisjointUnion:
    lhs: str  # must name a class, never a complex expression
    members: tuple[ClassExpression, ...]

    def __post_init__(self):
        if len(self.members) < 2:
            raise ValueError("DisjointUnion requires at least 2 members")


@dataclass(frozen=True)
class ClassAssertion:
    individual: str
    expr: ClassExpression


@dataclass(frozen=True)
class ObjectPropertyAssertion:
    role: str
    subject: str
    object: str


@dataclass(frozen=True)
class SameIndividual:
    individuals: tuple[str, ...]

    def __post_init__(self):
        if len(self.individuals) < 2:
            raise ValueError("SameIndividual requires at least 2 individuals")


@dataclass(frozen=True)
class DifferentIndividuals:
    individuals: tuple[str, ...]

    def __post_init__(self):
        if len(self.individuals) < 2:
            raise ValueError("DifferentIndividuals requires at least 2 individuals")


@dataclass(frozen=True)
class ObjectPropertyDomain:
    role: str
    expr: ClassExpression


@dataclass(frozen=True)
class ObjectPropertyRange:
    role: str
    expr: ClassExpression


@dataclass(frozen=True)
class FunctionalObjectProperty:
    role: str


Axiom = (
    SubClassOf | EquivalentClasses | DisjointClasses | DisjointUnion
    | ClassAssertion | ObjectPropertyAssertion | SameIndividual
    | DifferentIndividuals | ObjectPropertyDomain | ObjectPropertyRange
    | FunctionalObjectProperty
)


# ---------------------------------------------------------------------------
# Signatures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Signature:
    """Named classes, roles and individuals occurring somewhere.

    The three sets are pairwise disjoint; owl:Thing and owl:Nothing are never
    members of ``classes``.
    """

    classes: frozenset[str] = frozenset()
    roles: frozenset[str] = frozenset()
    individuals: frozenset[str] = frozenset()

    def union(self, other: "Signature") -> "Signature":
        return Signature(
            self.classes | other.classes,
            self.roles | other.roles,
            self.individuals | other.individuals,
        )

    def issubset(self, other: "Signature") -> bool:
        return (
            self.classes <= other.classes
            and self.roles <= other.roles
            and self.individuals <= other.individuals
        )

    def difference(self, other: "Signature") -> frozenset[str]:
        """All names in self that are missing from other, regardless of kind."""
        return (
            (self.classes - other.classes)
            | (self.roles - other.roles)
            | (self.individuals - other.individuals)
        )

    def all_names(self) -> frozenset[str]:
        return self.classes | self.roles | self.individuals


def _expr_signature(expr: ClassExpression, classes: set, roles: set) -> None:
    match expr:
        case Named(name):
            classes.add(name)
        case Top() | Bottom():
            pass
        case And(operands) | Or(operands):
            for op in operands:
                _expr_signature(op, classes, roles)
        case Not(operand):
            _expr_signature(operand, classes, roles)
        case Some(role, filler) | All(role, filler):
            roles.add(role)
            _expr_signature(filler, classes, roles)
        case MinCard(_, role, filler) | MaxCard(_, role, filler) | ExactCard(_, role, filler):
            roles.add(role)
            _expr_signature(filler, classes, roles)
        case _:
            raise TypeError(f"not a class expression: {expr!r}")


def signature_of(axiom: Axiom) -> Signature:
    """Collect exactly the names occurring syntactically in the axiom.

    owl:Thing / owl:Nothing carry no names and contribute nothing.
    """
    classes: set[str] = set()
    roles: set[str] = set()
    individuals: set[str] = set()
    match axiom:
        case SubClassOf(sub, sup):
            _expr_signature(sub, classes, roles)
            _expr_signature(sup, classes, roles)
        case EquivalentClasses(members) | DisjointClasses(members):
            for m in members:
                _expr_signature(m, classes, roles)
        case DisjointUnion(lhs, members):
            classes.add(lhs)
            for m in members:
                _expr_signature(m, classes, roles)
        case ClassAssertion(individual, expr):
            individuals.add(individual)
            _expr_signature(expr, classes, roles)
        case ObjectPropertyAssertion(role, subject, obj):
            roles.add(role)
            individuals.add(subject)
            individuals.add(obj)
        case SameIndividual(inds) | DifferentIndividuals(inds):
            individuals.update(inds)
        case ObjectPropertyDomain(role, expr) | ObjectPropertyRange(role, expr):
            roles.add(role)
            _expr_signature(expr, classes, roles)
        case FunctionalObjectProperty(role):
            roles.add(role)
        case _:
            raise TypeError(f"not an axiom: {axiom!r}")
    return Signature(frozenset(classes), frozenset(roles), frozenset(individuals))


# ---------------------------------------------------------------------------
# Negation normal form
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def nnf(expr: ClassExpression) -> ClassExpression:
    """Push negation down to named classes.

    Exact-cardinality expands to min-and-max first; a negated min collapses
    through >= 0 being trivially true.
    """
    match expr:
        case Named() | Top() | Bottom():
            return expr
        case And(operands):
            return And(tuple(nnf(o) for o in operands))
        case Or(operands):
            return Or(tuple(nnf(o) for o in operands))
        case Some(role, filler):
            return Some(role, nnf(filler))
        case All(role, filler):
            return All(role, nnf(filler))
        case MinCard(n, role, filler):
            if n == 0:
                return TOP
            return MinCard(n, role, nnf(filler))
        case MaxCard(n, role, filler):
            return MaxCard(n, role, nnf(filler))
        case ExactCard(n, role, filler):
            return nnf(And((MinCard(n, role, filler), MaxCard(n, role, filler))))
        case Not(operand):
            match operand:
                case Named():
                    return expr
                case Top():
                    return BOTTOM
                case Bottom():
                    return TOP
                case Not(inner):
                    return nnf(inner)
                case And(operands):
                    return Or(tuple(nnf(Not(o)) for o in operands))
                case Or(operands):
                    return And(tuple(nnf(Not(o)) for o in operands))
                case Some(role, filler):
                    return All(role, nnf(Not(filler)))
                case All(role, filler):
                    return Some(role, nnf(Not(filler)))
                case MinCard(n, role, filler):
                    if n == 0:
                        return BOTTOM
                    return MaxCard(n - 1, role, nnf(filler))
                case MaxCard(n, role, filler):
                    return MinCard(n + 1, role, nnf(filler))
                case ExactCard():
                    return nnf(Not(nnf(operand)))
    raise TypeError(f"not a class expression: {expr!r}")


def complement(expr: ClassExpression) -> ClassExpression:
    """NNF of the negation; the tableau's clash partner for ``expr``."""
    return nnf(Not(expr))


# ---------------------------------------------------------------------------
# Verdicts and test results
# ---------------------------------------------------------------------------

class Verdict(enum.IntEnum):
    """Four-valued test outcome, ordered by graveness of failure."""

    ENTAILED = 0
    ABSENT = 1
    INCOHERENT = 2
    INCONSISTENT = 3

    def __str__(self) -> str:
        return self.name.lower()


def max_verdict(a: Verdict, b: Verdict) -> Verdict:
    """Join in the graveness order."""
    return a if a >= b else b


VERDICT_BY_NAME = {str(v): v for v in Verdict}


class PreconditionKind(enum.Enum):
    ONTOLOGY_INCONSISTENT = "ontology-inconsistent"
    ONTOLOGY_INCOHERENT = "ontology-incoherent"
    MISSING_ENTITIES = "missing-entities"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PreconditionFailure:
    kind: PreconditionKind
    missing: frozenset[str] = frozenset()

    def __post_init__(self):
        if (self.kind is PreconditionKind.MISSING_ENTITIES) != bool(self.missing):
            raise ValueError("missing set is non-empty iff kind is missing-entities")


@dataclass(frozen=True)
class Outcome:
    verdict: Verdict


TestResult = PreconditionFailure | Outcome
