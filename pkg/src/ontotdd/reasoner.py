"""Tableau reasoner for the ALCQ fragment with an ABox.

Supported: arbitrary class expressions over and/or/not/some/only and
qualified number restrictions, GCIs (handled by internalization), class
assertions, role assertions, same/different individuals.  No inverse roles,
no role hierarchies, no nominals inside expressions.

A classified :class:`OntologyState` is an immutable snapshot; every query
runs a fresh tableau against it and never mutates the classification index.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from .core import (
    BOTTOM, TOP, All, And, Axiom, Bottom, ClassAssertion, ClassExpression,
    DifferentIndividuals, DisjointClasses, DisjointUnion, EquivalentClasses,
    MaxCard, MinCard, Named, Not, ObjectPropertyAssertion, Or, SameIndividual,
    Signature, Some, SubClassOf, Top, complement, nnf, signature_of,
)

DEFAULT_NODE_BUDGET = 10**6


class ResourceBudgetExceeded(Exception):
    """The tableau grew past the configured node budget."""


class InconsistentOntologyError(Exception):
    """A query method was called on an inconsistent ontology."""


class UnknownEntityError(Exception):
    """A query referred to an individual outside the ontology signature."""


class _Counter:
    __slots__ = ("value",)

    def __init__(self):
        self.value = 0

    def increment(self):
        self.value += 1


#: Process-wide instrumentation: bumped once per classify() call.
CLASSIFY_CALLS = _Counter()


@dataclass(frozen=True, eq=False)
class ClassificationIndex:
    consistent: bool
    unsatisfiable_named: frozenset[str]
    subsumers: dict[str, frozenset[str]]
    instances_of: dict[str, frozenset[str]]
    same_as: dict[str, frozenset[str]]
    different_from: dict[str, frozenset[str]]

    @property
    def coherent(self) -> bool:
        return self.consistent and not self.unsatisfiable_named

    def __eq__(self, other):
        if not isinstance(other, ClassificationIndex):
            return NotImplemented
        return (
            self.consistent == other.consistent
            and self.unsatisfiable_named == other.unsatisfiable_named
            and self.subsumers == other.subsumers
            and self.instances_of == other.instances_of
            and self.same_as == other.same_as
            and self.different_from == other.different_from
        )


@dataclass(frozen=True)
class OntologyState:
    """Immutable ontology snapshot; property axioms are stored rewritten."""

    axioms: tuple[Axiom, ...]
    signature: Signature
    node_budget: int = DEFAULT_NODE_BUDGET
    index: ClassificationIndex | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def tbox(self) -> tuple[Axiom, ...]:
        return tuple(
            a for a in self.axioms
            if isinstance(a, (SubClassOf, EquivalentClasses, DisjointClasses, DisjointUnion))
        )

    @property
    def abox(self) -> tuple[Axiom, ...]:
        return tuple(
            a for a in self.axioms
            if isinstance(a, (ClassAssertion, ObjectPropertyAssertion, SameIndividual, DifferentIndividuals))
        )


def make_state(
    axioms: list[Axiom] | tuple[Axiom, ...],
    signature: Signature | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> OntologyState:
    """Build an unclassified state; property axioms are rewritten on entry.

    ``signature`` carries declared-but-unused names; names occurring in the
    axioms are always included.
    """
    from .engine import rewrite_property_axiom, is_property_axiom

    sig = signature if signature is not None else Signature()
    rewritten = []
    for ax in axioms:
        sig = sig.union(signature_of(ax))
        rewritten.append(rewrite_property_axiom(ax) if is_property_axiom(ax) else ax)
    return OntologyState(tuple(rewritten), sig, node_budget)


def add_axioms(state: OntologyState, axioms: list[Axiom] | tuple[Axiom, ...]) -> OntologyState:
    """New state with the axioms appended; the old state is untouched.

    The classification index is dropped: the result is unclassified.
    """
    from .engine import rewrite_property_axiom, is_property_axiom

    sig = state.signature
    rewritten = []
    for ax in axioms:
        sig = sig.union(signature_of(ax))
        rewritten.append(rewrite_property_axiom(ax) if is_property_axiom(ax) else ax)
    return OntologyState(state.axioms + tuple(rewritten), sig, state.node_budget)


# ---------------------------------------------------------------------------
# TBox internalization
# ---------------------------------------------------------------------------

def _gci_disjunct(sub: ClassExpression, sup: ClassExpression) -> ClassExpression:
    """NNF of (not sub) or sup, lightly simplified."""
    neg = complement(sub)
    pos = nnf(sup)
    if neg == BOTTOM:
        return pos
    if pos == BOTTOM:
        return neg
    if neg == TOP or pos == TOP:
        return TOP
    return Or((neg, pos))


def _gci_pairs(axiom: Axiom) -> list[tuple[ClassExpression, ClassExpression]]:
    match axiom:
        case SubClassOf(sub, sup):
            return [(sub, sup)]
        case EquivalentClasses(members):
            pairs = []
            for a, b in zip(members, members[1:]):
                pairs.append((a, b))
                pairs.append((b, a))
            return pairs
        case DisjointClasses(members):
            return [
                (members[i], Not(members[j]))
                for i in range(len(members))
                for j in range(i + 1, len(members))
            ]
        case DisjointUnion(lhs, members):
            union = Or(members) if len(members) >= 2 else members[0]
            pairs = [(Named(lhs), union), (union, Named(lhs))]
            pairs.extend(_gci_pairs(DisjointClasses(members)))
            return pairs
    raise TypeError(f"not a TBox axiom: {axiom!r}")


def _setup(state: OntologyState) -> dict:
    """Precompute the tableau seed shared by every query on this state."""
    cached = state._cache.get("setup")
    if cached is not None:
        return cached
    meta = []
    for ax in state.tbox:
        for sub, sup in _gci_pairs(ax):
            d = _gci_disjunct(sub, sup)
            if d != TOP and d not in meta:
                meta.append(d)

    inds = sorted(state.signature.individuals)
    same_groups: list[set[str]] = []

    def group_of(name: str) -> set[str] | None:
        for g in same_groups:
            if name in g:
                return g
        return None

    for ax in state.abox:
        if isinstance(ax, SameIndividual):
            merged = set(ax.individuals)
            for name in ax.individuals:
                g = group_of(name)
                if g is not None:
                    merged |= g
                    same_groups.remove(g)
            same_groups.append(merged)
    labels: dict[str, list[ClassExpression]] = {a: [] for a in inds}
    edges: list[tuple[str, str, str]] = []
    distinct: list[tuple[str, str]] = []
    for ax in state.abox:
        match ax:
            case ClassAssertion(individual, expr):
                labels[individual].append(nnf(expr))
            case ObjectPropertyAssertion(role, subject, obj):
                edges.append((role, subject, obj))
            case DifferentIndividuals(names):
                for i in range(len(names)):
                    for j in range(i + 1, len(names)):
                        distinct.append((names[i], names[j]))
    setup = {
        "meta": tuple(meta),
        "individuals": inds,
        "same_groups": same_groups,
        "labels": labels,
        "edges": edges,
        "distinct": distinct,
    }
    state._cache["setup"] = setup
    return setup


# ---------------------------------------------------------------------------
# The tableau
# ---------------------------------------------------------------------------

class _Budget:
    """Work meter shared across all branches of one tableau run.

    Both node creation and branch copying count, so exponential searches
    abort with a resource error instead of running unbounded.
    """

    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        self.remaining = limit

    def spend(self, units: int = 1):
        self.remaining -= units
        if self.remaining < 0:
            raise ResourceBudgetExceeded("tableau node budget exhausted")


class _Tableau:
    """Backtracking is trail-based: label/edge/node/inequality additions are
    journaled and undone on branch failure; only neighbor merges branch on a
    full snapshot copy (their set rewrites do not undo cheaply)."""

    __slots__ = (
        "labels", "edges", "distinct", "parent", "next_id", "meta", "budget",
        "clashed", "trail",
    )

    def __init__(self, meta: tuple[ClassExpression, ...], budget: _Budget):
        self.labels: dict[int, set[ClassExpression]] = {}
        self.edges: dict[int, dict[str, set[int]]] = {}
        self.distinct: set[frozenset[int]] = set()
        self.parent: dict[int, int] = {}  # tree nodes only; roots are absent
        self.next_id = 0
        self.meta = meta
        self.budget = budget
        self.clashed = False
        self.trail: list[tuple] = []

    def mark(self) -> tuple[int, bool, int]:
        return (len(self.trail), self.clashed, self.next_id)

    def undo(self, mark: tuple[int, bool, int]) -> None:
        depth, clashed, next_id = mark
        trail = self.trail
        self.budget.spend(len(trail) - depth)  # backtracking is metered work
        while len(trail) > depth:
            op = trail.pop()
            kind = op[0]
            if kind == "label":
                self.labels[op[1]].discard(op[2])
            elif kind == "node":
                nid = op[1]
                del self.labels[nid]
                del self.edges[nid]
                self.parent.pop(nid, None)
            elif kind == "edge":
                self.edges[op[1]][op[2]].discard(op[3])
            else:  # distinct
                self.distinct.discard(op[1])
        self.clashed = clashed
        self.next_id = next_id

    def new_node(self, parent: int | None = None) -> int:
        self.budget.spend()
        nid = self.next_id
        self.next_id += 1
        self.labels[nid] = set()
        self.edges[nid] = {}
        if parent is not None:
            self.parent[nid] = parent
        self.trail.append(("node", nid))
        for expr in self.meta:
            self.add_label(nid, expr)
        return nid

    def copy(self) -> "_Tableau":
        self.budget.spend(len(self.labels))
        t = _Tableau.__new__(_Tableau)
        t.labels = {n: set(l) for n, l in self.labels.items()}
        t.edges = {n: {r: set(s) for r, s in e.items()} for n, e in self.edges.items()}
        t.distinct = set(self.distinct)
        t.parent = dict(self.parent)
        t.next_id = self.next_id
        t.meta = self.meta
        t.budget = self.budget
        t.clashed = self.clashed
        t.trail = []  # the copy is a branch root; it never unwinds further back
        return t

    def add_label(self, node: int, expr: ClassExpression) -> bool:
        """Add to a node label, flagging direct clashes as they appear."""
        label = self.labels[node]
        if expr in label:
            return False
        label.add(expr)
        self.trail.append(("label", node, expr))
        te = type(expr)
        if te is Bottom:
            self.clashed = True
        elif te is Not:
            if expr.operand in label:
                self.clashed = True
        elif te is Named:
            if Not(expr) in label:
                self.clashed = True
        return True

    def add_edge(self, x: int, role: str, y: int) -> None:
        succs = self.edges[x].setdefault(role, set())
        if y not in succs:
            succs.add(y)
            self.trail.append(("edge", x, role, y))

    def successors(self, x: int, role: str):
        return self.edges[x].get(role, ())

    def are_distinct(self, x: int, y: int) -> bool:
        return frozenset((x, y)) in self.distinct

    def mark_distinct(self, x: int, y: int) -> None:
        pair = frozenset((x, y))
        if pair not in self.distinct:
            self.distinct.add(pair)
            self.trail.append(("distinct", pair))

    def merge(self, source: int, target: int) -> None:
        """Fold source into target; caller guarantees they are not distinct."""
        source_label = self.labels.pop(source)
        for expr in source_label:
            self.add_label(target, expr)
        src_edges = self.edges.pop(source)
        for role, succs in src_edges.items():
            tgt = self.edges[target].setdefault(role, set())
            tgt |= {target if s == source else s for s in succs}
        for e in self.edges.values():
            for succs in e.values():
                if source in succs:
                    succs.discard(source)
                    succs.add(target)
        new_distinct = set()
        for pair in self.distinct:
            if source in pair:
                other = next(iter(pair - {source}))
                new_distinct.add(frozenset((target, other)))
            else:
                new_distinct.add(pair)
        self.distinct = new_distinct
        for child, par in list(self.parent.items()):
            if par == source:
                self.parent[child] = target
        self.parent.pop(source, None)

    # -- blocking ---------------------------------------------------------

    def is_blocked(self, node: int) -> bool:
        cur = node
        while cur in self.parent:
            if self._directly_blocked(cur):
                return True
            cur = self.parent[cur]
        return False

    def _directly_blocked(self, node: int) -> bool:
        label = self.labels[node]
        anc = self.parent.get(node)
        while anc is not None:
            if anc in self.parent and self.labels[anc] == label:
                return True
            anc = self.parent.get(anc)
        return False


def _saturate(t: _Tableau) -> bool:
    """Expand to completion; True iff a clash-free complete tableau exists.

    Iterative depth-first search.  Each pass scans once, applies every
    deterministic consequence (conjunctions, universals, unit propagation,
    tree growth on unblocked nodes), then opens the highest-priority choice
    point: a disjunction, a filler choice for a counted neighbor, or a
    neighbor merge for an over-full at-most constraint.  Label choices are
    unwound through the trail; merge choices restart from a snapshot.
    """
    # choice-point stack; entries are
    #   ("label", tableau, mark, node, remaining options)
    #   ("merge", base tableau, remaining (source, target) pairs)
    stack: list[tuple] = []

    while True:
        step = _expand(t)

        if step is None:
            return True

        if step[0] == "label":
            _, node, options = step
            mark = t.mark()
            stack.append(("label", t, mark, node, list(options[1:])))
            t.add_label(node, options[0])
            continue

        if step[0] == "merge":
            pairs = list(step[1])
            base = t
            stack.append(("merge", base, pairs[1:]))
            source, target = pairs[0]
            t = base.copy()
            t.merge(source, target)
            continue

        # clash: backtrack to the nearest choice point with options left
        while stack:
            entry = stack[-1]
            if entry[0] == "label":
                _, owner, mark, node, options = entry
                owner.undo(mark)  # back to the choice point itself
                t = owner
                if options:
                    t.add_label(node, options.pop(0))
                    break
                stack.pop()
            else:
                _, base, pairs = entry
                t = base
                if pairs:
                    source, target = pairs.pop(0)
                    t = base.copy()
                    t.merge(source, target)
                    break
                stack.pop()
        else:
            return False


def _expand(t: _Tableau):
    """Apply deterministic rules to a fixpoint; report the next choice point.

    Returns None when the tableau is complete and clash-free, ("clash",) on
    a dead end, ("label", node, options) to branch on label additions, or
    ("merge", pairs) to branch on neighbor merges.
    """
    while True:
        if t.clashed:
            return ("clash",)
        t.budget.spend(len(t.labels))  # each full scan is metered work

        progressed = False
        branch_or = None      # (node, viable disjuncts)
        choose = None         # (neighbor, filler, complement)
        violation = None      # sorted over-full neighbor list
        generators = []       # (node, expr)

        for node in list(t.labels):
            if node not in t.labels:
                continue
            label = t.labels[node]
            for expr in list(label):
                te = type(expr)
                if te is And:
                    for o in expr.operands:
                        if t.add_label(node, o):
                            progressed = True
                elif te is All:
                    for y in list(t.successors(node, expr.role)):
                        if t.add_label(y, expr.filler):
                            progressed = True
                elif te is Or:
                    if any(o in label for o in expr.operands):
                        continue
                    viable = [o for o in expr.operands if complement(o) not in label]
                    if not viable:
                        return ("clash",)  # every disjunct refuted
                    if len(viable) == 1:
                        t.add_label(node, viable[0])
                        progressed = True
                    elif branch_or is None:
                        branch_or = (node, viable)
                elif te is MaxCard:
                    counted = [
                        y for y in t.successors(node, expr.role)
                        if expr.filler in t.labels[y]
                    ]
                    if choose is None:
                        neg = complement(expr.filler)
                        for y in t.successors(node, expr.role):
                            ylabel = t.labels[y]
                            if expr.filler not in ylabel and neg not in ylabel:
                                choose = (y, expr.filler, neg)
                                break
                    if violation is None and len(counted) > expr.n:
                        violation = sorted(counted)
                elif te is Some:
                    if not any(expr.filler in t.labels[y] for y in t.successors(node, expr.role)):
                        generators.append((node, expr))
                elif te is MinCard and expr.n >= 1:
                    if not _min_card_satisfied(t, node, expr):
                        generators.append((node, expr))
            if t.clashed:
                return ("clash",)
        if progressed:
            continue

        if branch_or is not None:
            return ("label", branch_or[0], branch_or[1])

        if choose is not None:
            y, pos, neg = choose
            return ("label", y, (pos, neg))

        if violation is not None:
            eligible = [
                (a, b)
                for a, b in itertools.combinations(violation, 2)
                if not t.are_distinct(a, b)
            ]
            if not eligible:
                return ("clash",)  # more pairwise-distinct neighbors than allowed
            pairs = []
            for a, b in eligible:
                # keep the node that is a root (or the older one) as target
                pairs.append((b, a) if a not in t.parent or b in t.parent else (a, b))
            return ("merge", pairs)

        generated = False
        for node, expr in generators:
            if node not in t.labels or t.is_blocked(node):
                continue
            if type(expr) is Some:
                y = t.new_node(parent=node)
                t.add_edge(node, expr.role, y)
                t.add_label(y, expr.filler)
            else:
                created = [t.new_node(parent=node) for _ in range(expr.n)]
                for y in created:
                    t.add_edge(node, expr.role, y)
                    t.add_label(y, expr.filler)
                for a, b in itertools.combinations(created, 2):
                    t.mark_distinct(a, b)
            generated = True
            break
        if generated:
            continue

        return None


def _min_card_satisfied(t: _Tableau, node: int, expr: MinCard) -> bool:
    candidates = [y for y in t.successors(node, expr.role) if expr.filler in t.labels[y]]
    if len(candidates) < expr.n:
        return False
    if expr.n == 1:
        return True
    for combo in itertools.combinations(candidates, expr.n):
        if all(t.are_distinct(a, b) for a, b in itertools.combinations(combo, 2)):
            return True
    return False


# ---------------------------------------------------------------------------
# Queries over a state
# ---------------------------------------------------------------------------

def _build_tableau(
    state: OntologyState,
    extra_labels: dict[str, ClassExpression] | None = None,
    extra_distinct: tuple[str, str] | None = None,
    extra_same: tuple[str, str] | None = None,
    fresh_root: ClassExpression | None = None,
) -> _Tableau | None:
    """Seed tableau for the ontology plus query extras.

    Returns None when the extras contradict asserted identity outright
    (which means the queried addition is already inconsistent).
    """
    setup = _setup(state)
    budget = _Budget(state.node_budget)
    t = _Tableau(setup["meta"], budget)

    groups = [set(g) for g in setup["same_groups"]]
    if extra_same is not None:
        a, b = extra_same
        merged = {a, b}
        for g in list(groups):
            if g & merged:
                merged |= g
                groups.remove(g)
        groups.append(merged)

    node_of: dict[str, int] = {}
    for name in setup["individuals"]:
        g = next((g for g in groups if name in g), None)
        rep = min(g) if g else name
        if rep in node_of:
            node_of[name] = node_of[rep]
        else:
            nid = t.new_node()
            node_of[rep] = nid
            node_of[name] = nid

    for name, exprs in setup["labels"].items():
        for expr in exprs:
            t.add_label(node_of[name], expr)
    for role, subj, obj in setup["edges"]:
        t.add_edge(node_of[subj], role, node_of[obj])

    all_distinct = list(setup["distinct"])
    if extra_distinct is not None:
        all_distinct.append(extra_distinct)
    for a, b in all_distinct:
        if node_of[a] == node_of[b]:
            return None
        t.mark_distinct(node_of[a], node_of[b])

    if extra_labels:
        for name, expr in extra_labels.items():
            t.add_label(node_of[name], nnf(expr))

    if fresh_root is not None:
        nid = t.new_node()
        t.add_label(nid, nnf(fresh_root))
    elif not node_of:
        t.new_node()  # interpretation domains are non-empty
    return t


def _run(state, **kwargs) -> bool:
    t = _build_tableau(state, **kwargs)
    if t is None:
        return False
    return _saturate(t)


def _consistent(state: OntologyState) -> bool:
    key = ("consistent",)
    if key not in state._cache:
        state._cache[key] = _run(state)
    return state._cache[key]


def _satisfiable(state: OntologyState, expr: ClassExpression) -> bool:
    key = ("sat", nnf(expr))
    if key not in state._cache:
        state._cache[key] = _run(state, fresh_root=expr)
    return state._cache[key]


def _is_instance(state: OntologyState, individual: str, expr: ClassExpression) -> bool:
    key = ("inst", individual, nnf(expr))
    if key not in state._cache:
        state._cache[key] = not _run(state, extra_labels={individual: Not(expr)})
    return state._cache[key]


def _entailed_same(state: OntologyState, a: str, b: str) -> bool:
    key = ("same", *sorted((a, b)))
    if key not in state._cache:
        state._cache[key] = not _run(state, extra_distinct=(a, b))
    return state._cache[key]


def _entailed_different(state: OntologyState, a: str, b: str) -> bool:
    key = ("diff", *sorted((a, b)))
    if key not in state._cache:
        state._cache[key] = not _run(state, extra_same=(a, b))
    return state._cache[key]


# ---------------------------------------------------------------------------
# Classification and the public query interface
# ---------------------------------------------------------------------------

def classify(state: OntologyState) -> OntologyState:
    """Produce a state with a fully materialized classification index.

    Consistency, per-class satisfiability, pairwise subsumption, instance
    and identity relations are all decided here so that tests afterwards
    run on index lookups and per-query tableau calls only.
    """
    CLASSIFY_CALLS.increment()
    classes = sorted(state.signature.classes)
    individuals = sorted(state.signature.individuals)

    if not _consistent(state):
        index = ClassificationIndex(False, frozenset(), {}, {}, {}, {})
        return replace(state, index=index)

    unsat = frozenset(n for n in classes if not _satisfiable(state, Named(n)))
    subsumers: dict[str, frozenset[str]] = {}
    for n in classes:
        if n in unsat:
            subsumers[n] = frozenset(classes)
            continue
        sups = {n}
        for m in classes:
            if m != n and not _satisfiable(state, And((Named(n), Not(Named(m))))):
                sups.add(m)
        subsumers[n] = frozenset(sups)

    instances_of = {
        n: frozenset(a for a in individuals if _is_instance(state, a, Named(n)))
        for n in classes
    }
    same_as = {
        a: frozenset(b for b in individuals if a == b or _entailed_same(state, a, b))
        for a in individuals
    }
    different_from = {
        a: frozenset(b for b in individuals if a != b and _entailed_different(state, a, b))
        for a in individuals
    }
    index = ClassificationIndex(True, unsat, subsumers, instances_of, same_as, different_from)
    return replace(state, index=index)


def _require_queryable(state: OntologyState) -> ClassificationIndex:
    if state.index is None:
        raise ValueError("state must be classified before querying")
    if not state.index.consistent:
        raise InconsistentOntologyError("ontology is inconsistent; queries are meaningless")
    return state.index


def is_satisfiable(state: OntologyState, expr: ClassExpression) -> bool:
    _require_queryable(state)
    return _satisfiable(state, expr)


def get_sub_classes(state: OntologyState, expr: ClassExpression) -> frozenset[str]:
    """Named classes entailed to be subsumed by expr (equivalents included).

    Unsatisfiable named classes are excluded; with the coherence precondition
    in force there are none, so this is only a robustness guard.
    """
    index = _require_queryable(state)
    candidates = [n for n in state.signature.classes if n not in index.unsatisfiable_named]
    if isinstance(expr, Named) and expr.name in index.subsumers:
        return frozenset(n for n in candidates if expr.name in index.subsumers[n])
    return frozenset(
        n for n in candidates if not _satisfiable(state, And((Named(n), Not(expr))))
    )


def get_instances(state: OntologyState, expr: ClassExpression) -> frozenset[str]:
    index = _require_queryable(state)
    if isinstance(expr, Named) and expr.name in index.instances_of:
        return index.instances_of[expr.name]
    return frozenset(
        a for a in state.signature.individuals if _is_instance(state, a, expr)
    )


def get_types(state: OntologyState, individual: str) -> frozenset[str]:
    index = _require_queryable(state)
    if individual not in state.signature.individuals:
        raise UnknownEntityError(individual)
    return frozenset(n for n, inds in index.instances_of.items() if individual in inds)


def get_same_individuals(state: OntologyState, individual: str) -> frozenset[str]:
    index = _require_queryable(state)
    if individual not in state.signature.individuals:
        raise UnknownEntityError(individual)
    return index.same_as[individual]


def get_different_individuals(state: OntologyState, individual: str) -> frozenset[str]:
    index = _require_queryable(state)
    if individual not in state.signature.individuals:
        raise UnknownEntityError(individual)
    return index.different_from[individual]
