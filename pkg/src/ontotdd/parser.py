"""Concrete syntaxes.

Two surfaces: functional-style S-expressions for ontology files, and a
Manchester-like infix syntax for single test axioms typed interactively.
Both are whitespace-insensitive; '#' starts a comment running to end of line.
Entity kind (class / role / individual) is fixed by first declaration or use;
reusing a name as a different kind is a parse-time error.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    TOP, BOTTOM, All, And, Axiom, Bottom, ClassAssertion, ClassExpression,
    DifferentIndividuals, DisjointClasses, DisjointUnion, EquivalentClasses,
    ExactCard, FunctionalObjectProperty, MaxCard, MinCard, Named, Not,
    ObjectPropertyAssertion, ObjectPropertyDomain, ObjectPropertyRange,
    Or, SameIndividual, Signature, Some, SubClassOf, Top, signature_of,
)


class ParseError(Exception):
    """Positioned parse failure; kind is syntax | unknown-construct | kind-conflict."""

    def __init__(self, line: int, column: int, message: str, kind: str = "syntax"):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message
        self.kind = kind


@dataclass(frozen=True)
class Token:
    type: str  # name, keyword, nat, punct, top, bottom, eof
    text: str
    line: int
    column: int


AXIOM_KEYWORDS = {
    "SubClassOf:", "EquivalentTo:", "DisjointWith:", "DisjointUnionOf:",
    "Type:", "SameAs:", "DifferentFrom:", "Domain:", "Range:", "Characteristics:",
}
EXPR_KEYWORDS = {"and", "or", "not", "some", "only", "min", "max", "exactly"}
_FUNCTIONAL_WORDS = {
    "Declaration", "Class", "ObjectProperty", "NamedIndividual",
    "SubClassOf", "EquivalentClasses", "DisjointClasses", "DisjointUnion",
    "ObjectPropertyDomain", "ObjectPropertyRange", "FunctionalObjectProperty",
    "ClassAssertion", "ObjectPropertyAssertion", "SameIndividual",
    "DifferentIndividuals", "ObjectIntersectionOf", "ObjectUnionOf",
    "ObjectComplementOf", "ObjectSomeValuesFrom", "ObjectAllValuesFrom",
    "ObjectMinCardinality", "ObjectMaxCardinality", "ObjectExactCardinality",
}
RESERVED = EXPR_KEYWORDS | {"Functional"} | _FUNCTIONAL_WORDS

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<comment>#[^\n]*)"
    r"|(?P<owl>owl:(?:Thing|Nothing))"
    r"|(?P<word>[A-Za-z_][A-Za-z0-9_]*:?)"
    r"|(?P<nat>\d+)"
    r"|(?P<punct>[(),])"
)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(line, col, f"unexpected character {text[pos]!r}")
        lexeme = m.group(0)
        if m.lastgroup == "owl":
            tokens.append(Token("top" if lexeme == "owl:Thing" else "bottom", lexeme, line, col))
        elif m.lastgroup == "word":
            if lexeme.endswith(":"):
                if lexeme not in AXIOM_KEYWORDS:
                    raise ParseError(line, col, f"unknown keyword {lexeme!r}")
                tokens.append(Token("keyword", lexeme, line, col))
            else:
                tokens.append(Token("name", lexeme, line, col))
        elif m.lastgroup == "nat":
            tokens.append(Token("nat", lexeme, line, col))
        elif m.lastgroup == "punct":
            tokens.append(Token("punct", lexeme, line, col))
        for ch in lexeme:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


class _KindTable:
    """Tracks the entity kind each name is committed to."""

    def __init__(self, sig: Signature | None = None):
        self.kinds: dict[str, str] = {}
        if sig is not None:
            for n in sig.classes:
                self.kinds[n] = "class"
            for n in sig.roles:
                self.kinds[n] = "role"
            for n in sig.individuals:
                self.kinds[n] = "individual"

    def use(self, name: str, kind: str, tok: Token) -> None:
        prior = self.kinds.get(name)
        if prior is None:
            self.kinds[name] = kind
        elif prior != kind:
            raise ParseError(
                tok.line, tok.column,
                f"{name!r} already used as {prior}, cannot be a {kind}",
                kind="kind-conflict",
            )

    def signature(self) -> Signature:
        return Signature(
            frozenset(n for n, k in self.kinds.items() if k == "class"),
            frozenset(n for n, k in self.kinds.items() if k == "role"),
            frozenset(n for n, k in self.kinds.items() if k == "individual"),
        )


class _Cursor:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.type != "eof":
            self.i += 1
        return tok

    def expect_punct(self, text: str) -> Token:
        tok = self.peek()
        if tok.type != "punct" or tok.text != text:
            raise ParseError(tok.line, tok.column, f"expected {text!r}, found {tok.text or 'end of input'!r}")
        return self.next()

    def expect_name(self, what: str = "name") -> Token:
        tok = self.peek()
        if tok.type != "name":
            raise ParseError(tok.line, tok.column, f"expected {what}, found {tok.text or 'end of input'!r}")
        if tok.text in RESERVED:
            raise ParseError(tok.line, tok.column, f"{tok.text!r} is a reserved word")
        return self.next()


# ---------------------------------------------------------------------------
# Functional-style ontology files
# ---------------------------------------------------------------------------

_DECL_KINDS = {"Class": "class", "ObjectProperty": "role", "NamedIndividual": "individual"}

_FUNCTIONAL_CE_HEADS = {
    "ObjectIntersectionOf", "ObjectUnionOf", "ObjectComplementOf",
    "ObjectSomeValuesFrom", "ObjectAllValuesFrom",
    "ObjectMinCardinality", "ObjectMaxCardinality", "ObjectExactCardinality",
}

_FUNCTIONAL_AXIOM_HEADS = {
    "SubClassOf", "EquivalentClasses", "DisjointClasses", "DisjointUnion",
    "ObjectPropertyDomain", "ObjectPropertyRange", "FunctionalObjectProperty",
    "ClassAssertion", "ObjectPropertyAssertion", "SameIndividual",
    "DifferentIndividuals",
}


def _parse_functional_ce(cur: _Cursor, kinds: _KindTable) -> ClassExpression:
    tok = cur.peek()
    if tok.type == "top":
        cur.next()
        return TOP
    if tok.type == "bottom":
        cur.next()
        return BOTTOM
    if tok.type != "name":
        raise ParseError(tok.line, tok.column, f"expected class expression, found {tok.text or 'end of input'!r}")
    head = tok.text
    if head not in _FUNCTIONAL_CE_HEADS:
        name_tok = cur.expect_name("class name")
        kinds.use(name_tok.text, "class", name_tok)
        return Named(name_tok.text)
    cur.next()
    cur.expect_punct("(")
    if head in ("ObjectIntersectionOf", "ObjectUnionOf"):
        operands = [_parse_functional_ce(cur, kinds)]
        while not _at_punct(cur, ")"):
            operands.append(_parse_functional_ce(cur, kinds))
        if len(operands) < 2:
            raise ParseError(tok.line, tok.column, f"{head} requires at least 2 operands")
        cur.expect_punct(")")
        ctor = And if head == "ObjectIntersectionOf" else Or
        return ctor(tuple(operands))
    if head == "ObjectComplementOf":
        inner = _parse_functional_ce(cur, kinds)
        cur.expect_punct(")")
        return Not(inner)
    if head in ("ObjectSomeValuesFrom", "ObjectAllValuesFrom"):
        role_tok = cur.expect_name("role name")
        kinds.use(role_tok.text, "role", role_tok)
        filler = _parse_functional_ce(cur, kinds)
        cur.expect_punct(")")
        ctor = Some if head == "ObjectSomeValuesFrom" else All
        return ctor(role_tok.text, filler)
    # cardinalities: ObjectMinCardinality(n R [C])
    n_tok = cur.peek()
    if n_tok.type != "nat":
        raise ParseError(n_tok.line, n_tok.column, f"expected cardinality, found {n_tok.text!r}")
    cur.next()
    role_tok = cur.expect_name("role name")
    kinds.use(role_tok.text, "role", role_tok)
    filler = TOP if _at_punct(cur, ")") else _parse_functional_ce(cur, kinds)
    cur.expect_punct(")")
    ctor = {
        "ObjectMinCardinality": MinCard,
        "ObjectMaxCardinality": MaxCard,
        "ObjectExactCardinality": ExactCard,
    }[head]
    return ctor(int(n_tok.text), role_tok.text, filler)


def _at_punct(cur: _Cursor, text: str) -> bool:
    tok = cur.peek()
    return tok.type == "punct" and tok.text == text


def _parse_individual(cur: _Cursor, kinds: _KindTable) -> str:
    tok = cur.expect_name("individual name")
    kinds.use(tok.text, "individual", tok)
    return tok.text


def _parse_role(cur: _Cursor, kinds: _KindTable) -> str:
    tok = cur.expect_name("role name")
    kinds.use(tok.text, "role", tok)
    return tok.text


def parse_ontology(text: str) -> tuple[list[Axiom], Signature]:
    """Parse a functional-style document into axioms plus the full signature.

    Declarations extend the signature without producing axioms.  The returned
    signature also covers every name used inside an axiom.
    """
    cur = _Cursor(tokenize(text))
    kinds = _KindTable()
    axioms: list[Axiom] = []
    while cur.peek().type != "eof":
        head_tok = cur.peek()
        if head_tok.type != "name":
            raise ParseError(head_tok.line, head_tok.column, f"expected axiom or declaration, found {head_tok.text!r}")
        head = head_tok.text
        if head == "Declaration":
            cur.next()
            cur.expect_punct("(")
            kind_tok = cur.peek()
            if kind_tok.type != "name" or kind_tok.text not in _DECL_KINDS:
                raise ParseError(kind_tok.line, kind_tok.column, f"unknown declaration kind {kind_tok.text!r}", kind="unknown-construct")
            cur.next()
            cur.expect_punct("(")
            name_tok = cur.expect_name("entity name")
            kinds.use(name_tok.text, _DECL_KINDS[kind_tok.text], name_tok)
            cur.expect_punct(")")
            cur.expect_punct(")")
            continue
        if head not in _FUNCTIONAL_AXIOM_HEADS:
            raise ParseError(head_tok.line, head_tok.column, f"unknown construct {head!r}", kind="unknown-construct")
        cur.next()
        cur.expect_punct("(")
        axioms.append(_parse_functional_axiom(head, head_tok, cur, kinds))
        cur.expect_punct(")")
    return axioms, kinds.signature()


def _parse_functional_axiom(head: str, head_tok: Token, cur: _Cursor, kinds: _KindTable) -> Axiom:
    if head == "SubClassOf":
        sub = _parse_functional_ce(cur, kinds)
        sup = _parse_functional_ce(cur, kinds)
        return SubClassOf(sub, sup)
    if head in ("EquivalentClasses", "DisjointClasses"):
        members = [_parse_functional_ce(cur, kinds)]
        while not _at_punct(cur, ")"):
            members.append(_parse_functional_ce(cur, kinds))
        if len(members) < 2:
            raise ParseError(head_tok.line, head_tok.column, f"{head} requires at least 2 members")
        ctor = EquivalentClasses if head == "EquivalentClasses" else DisjointClasses
        return ctor(tuple(members))
    if head == "DisjointUnion":
        lhs_tok = cur.expect_name("class name")
        kinds.use(lhs_tok.text, "class", lhs_tok)
        members = [_parse_functional_ce(cur, kinds)]
        while not _at_punct(cur, ")"):
            members.append(_parse_functional_ce(cur, kinds))
        if len(members) < 2:
            raise ParseError(head_tok.line, head_tok.column, "DisjointUnion requires at least 2 members")
        return DisjointUnion(lhs_tok.text, tuple(members))
    if head in ("ObjectPropertyDomain", "ObjectPropertyRange"):
        role = _parse_role(cur, kinds)
        expr = _parse_functional_ce(cur, kinds)
        ctor = ObjectPropertyDomain if head == "ObjectPropertyDomain" else ObjectPropertyRange
        return ctor(role, expr)
    if head == "FunctionalObjectProperty":
        return FunctionalObjectProperty(_parse_role(cur, kinds))
    if head == "ClassAssertion":
        expr = _parse_functional_ce(cur, kinds)
        ind = _parse_individual(cur, kinds)
        return ClassAssertion(ind, expr)
    if head == "ObjectPropertyAssertion":
        role = _parse_role(cur, kinds)
        subj = _parse_individual(cur, kinds)
        obj = _parse_individual(cur, kinds)
        return ObjectPropertyAssertion(role, subj, obj)
    # SameIndividual / DifferentIndividuals
    inds = [_parse_individual(cur, kinds)]
    while not _at_punct(cur, ")"):
        inds.append(_parse_individual(cur, kinds))
    if len(inds) < 2:
        raise ParseError(head_tok.line, head_tok.column, f"{head} requires at least 2 individuals")
    ctor = SameIndividual if head == "SameIndividual" else DifferentIndividuals
    return ctor(tuple(inds))


# ---------------------------------------------------------------------------
# Manchester-like test axioms
# ---------------------------------------------------------------------------

def _parse_m_expr(cur: _Cursor, kinds: _KindTable) -> ClassExpression:
    return _parse_m_or(cur, kinds)


def _parse_m_or(cur: _Cursor, kinds: _KindTable) -> ClassExpression:
    operands = [_parse_m_and(cur, kinds)]
    while cur.peek().type == "name" and cur.peek().text == "or":
        cur.next()
        operands.append(_parse_m_and(cur, kinds))
    return operands[0] if len(operands) == 1 else Or(tuple(operands))


def _parse_m_and(cur: _Cursor, kinds: _KindTable) -> ClassExpression:
    operands = [_parse_m_unary(cur, kinds)]
    while cur.peek().type == "name" and cur.peek().text == "and":
        cur.next()
        operands.append(_parse_m_unary(cur, kinds))
    return operands[0] if len(operands) == 1 else And(tuple(operands))


_RESTRICTIONS = {"some", "only", "min", "max", "exactly"}


def _parse_m_unary(cur: _Cursor, kinds: _KindTable) -> ClassExpression:
    tok = cur.peek()
    if tok.type == "name" and tok.text == "not":
        cur.next()
        return Not(_parse_m_unary(cur, kinds))
    if tok.type == "punct" and tok.text == "(":
        cur.next()
        inner = _parse_m_or(cur, kinds)
        cur.expect_punct(")")
        return inner
    if tok.type == "top":
        cur.next()
        return TOP
    if tok.type == "bottom":
        cur.next()
        return BOTTOM
    name_tok = cur.expect_name("class or role name")
    follower = cur.peek()
    if follower.type == "name" and follower.text in _RESTRICTIONS:
        kinds.use(name_tok.text, "role", name_tok)
        cur.next()
        if follower.text in ("some", "only"):
            filler = _parse_m_unary(cur, kinds)
            ctor = Some if follower.text == "some" else All
            return ctor(name_tok.text, filler)
        n_tok = cur.peek()
        if n_tok.type != "nat":
            raise ParseError(n_tok.line, n_tok.column, f"expected cardinality after {follower.text!r}")
        cur.next()
        filler = _parse_m_unary(cur, kinds)
        ctor = {"min": MinCard, "max": MaxCard, "exactly": ExactCard}[follower.text]
        return ctor(int(n_tok.text), name_tok.text, filler)
    kinds.use(name_tok.text, "class", name_tok)
    return Named(name_tok.text)


def _parse_m_expr_list(cur: _Cursor, kinds: _KindTable) -> list[ClassExpression]:
    exprs = [_parse_m_expr(cur, kinds)]
    while _at_punct(cur, ","):
        cur.next()
        exprs.append(_parse_m_expr(cur, kinds))
    return exprs


def _parse_m_name_list(cur: _Cursor, kinds: _KindTable, kind: str) -> list[str]:
    toks = [cur.expect_name(f"{kind} name")]
    while _at_punct(cur, ","):
        cur.next()
        toks.append(cur.expect_name(f"{kind} name"))
    for t in toks:
        kinds.use(t.text, kind, t)
    return [t.text for t in toks]


_INDIVIDUAL_KEYWORDS = {"Type:", "SameAs:", "DifferentFrom:"}
_ROLE_KEYWORDS = {"Domain:", "Range:", "Characteristics:"}


def parse_test_axiom(text: str, sig: Signature | None = None) -> Axiom:
    """Parse one Manchester-like axiom line.

    ``sig`` fixes entity kinds for names the ontology already knows; names
    outside the signature parse fine (they surface later as a missing-entities
    test result, not a parse error).
    """
    cur = _Cursor(tokenize(text))
    kinds = _KindTable(sig)
    first = cur.peek()
    second = cur.tokens[cur.i + 1] if first.type == "name" else None

    if second is not None and second.type == "keyword" and second.text in (_INDIVIDUAL_KEYWORDS | _ROLE_KEYWORDS):
        axiom = _parse_entity_axiom(cur, kinds, second.text)
    else:
        axiom = _parse_class_axiom(cur, kinds)
    tail = cur.peek()
    if tail.type != "eof":
        raise ParseError(tail.line, tail.column, f"unexpected trailing input {tail.text!r}")
    return axiom


def _parse_entity_axiom(cur: _Cursor, kinds: _KindTable, keyword: str) -> Axiom:
    lhs_tok = cur.expect_name()
    kw = cur.next()
    if keyword == "Type:":
        kinds.use(lhs_tok.text, "individual", lhs_tok)
        expr = _parse_m_expr(cur, kinds)
        return ClassAssertion(lhs_tok.text, expr)
    if keyword in ("SameAs:", "DifferentFrom:"):
        kinds.use(lhs_tok.text, "individual", lhs_tok)
        rhs = _parse_m_name_list(cur, kinds, "individual")
        inds: list[str] = []
        for name in [lhs_tok.text, *rhs]:
            if name not in inds:
                inds.append(name)
        if len(inds) < 2:
            raise ParseError(kw.line, kw.column, "fewer than 2 distinct individuals")
        ctor = SameIndividual if keyword == "SameAs:" else DifferentIndividuals
        return ctor(tuple(inds))
    kinds.use(lhs_tok.text, "role", lhs_tok)
    if keyword == "Domain:":
        return ObjectPropertyDomain(lhs_tok.text, _parse_m_expr(cur, kinds))
    if keyword == "Range:":
        return ObjectPropertyRange(lhs_tok.text, _parse_m_expr(cur, kinds))
    char_tok = cur.peek()
    if char_tok.type != "name" or char_tok.text != "Functional":
        raise ParseError(char_tok.line, char_tok.column, f"unsupported characteristic {char_tok.text!r}")
    cur.next()
    return FunctionalObjectProperty(lhs_tok.text)


def _parse_class_axiom(cur: _Cursor, kinds: _KindTable) -> Axiom:
    lhs = _parse_m_expr(cur, kinds)
    kw = cur.peek()
    if kw.type != "keyword":
        raise ParseError(kw.line, kw.column, f"expected axiom keyword, found {kw.text or 'end of input'!r}")
    cur.next()
    if kw.text == "SubClassOf:":
        return SubClassOf(lhs, _parse_m_expr(cur, kinds))
    if kw.text == "EquivalentTo:":
        return EquivalentClasses(tuple([lhs, *_parse_m_expr_list(cur, kinds)]))
    if kw.text == "DisjointWith:":
        return DisjointClasses(tuple([lhs, *_parse_m_expr_list(cur, kinds)]))
    if kw.text == "DisjointUnionOf:":
        if not isinstance(lhs, Named):
            raise ParseError(kw.line, kw.column, "left side of DisjointUnionOf must be a named class")
        members = _parse_m_expr_list(cur, kinds)
        if len(members) < 2:
            raise ParseError(kw.line, kw.column, "DisjointUnionOf requires at least 2 members")
        return DisjointUnion(lhs.name, tuple(members))
    raise ParseError(kw.line, kw.column, f"unexpected keyword {kw.text!r}")


# ---------------------------------------------------------------------------
# Pretty-printing
# ---------------------------------------------------------------------------

def _level(expr: ClassExpression) -> int:
    match expr:
        case Or():
            return 1
        case And():
            return 2
        case Not() | Some() | All() | MinCard() | MaxCard() | ExactCard():
            return 3
        case _:
            return 4


def print_expr(expr: ClassExpression, min_level: int = 1) -> str:
    """Manchester-like rendering; parenthesized so parsing round-trips."""
    match expr:
        case Named(name):
            s = name
        case Top():
            s = "owl:Thing"
        case Bottom():
            s = "owl:Nothing"
        case And(operands):
            s = " and ".join(print_expr(o, 3) for o in operands)
        case Or(operands):
            s = " or ".join(print_expr(o, 2) for o in operands)
        case Not(operand):
            s = f"not {print_expr(operand, 4)}"
        case Some(role, filler):
            s = f"{role} some {print_expr(filler, 4)}"
        case All(role, filler):
            s = f"{role} only {print_expr(filler, 4)}"
        case MinCard(n, role, filler):
            s = f"{role} min {n} {print_expr(filler, 4)}"
        case MaxCard(n, role, filler):
            s = f"{role} max {n} {print_expr(filler, 4)}"
        case ExactCard(n, role, filler):
            s = f"{role} exactly {n} {print_expr(filler, 4)}"
        case _:
            raise TypeError(f"not a class expression: {expr!r}")
    if _level(expr) < min_level:
        return f"({s})"
    return s


def print_axiom(axiom: Axiom) -> str:
    """Canonical Manchester-like line; parse_test_axiom inverts it."""
    match axiom:
        case SubClassOf(sub, sup):
            return f"{print_expr(sub)} SubClassOf: {print_expr(sup)}"
        case EquivalentClasses(members):
            rest = ", ".join(print_expr(m) for m in members[1:])
            return f"{print_expr(members[0])} EquivalentTo: {rest}"
        case DisjointClasses(members):
            rest = ", ".join(print_expr(m) for m in members[1:])
            return f"{print_expr(members[0])} DisjointWith: {rest}"
        case DisjointUnion(lhs, members):
            rest = ", ".join(print_expr(m) for m in members)
            return f"{lhs} DisjointUnionOf: {rest}"
        case ClassAssertion(individual, expr):
            return f"{individual} Type: {print_expr(expr)}"
        case SameIndividual(inds):
            return f"{inds[0]} SameAs: {', '.join(inds[1:])}"
        case DifferentIndividuals(inds):
            return f"{inds[0]} DifferentFrom: {', '.join(inds[1:])}"
        case ObjectPropertyDomain(role, expr):
            return f"{role} Domain: {print_expr(expr)}"
        case ObjectPropertyRange(role, expr):
            return f"{role} Range: {print_expr(expr)}"
        case FunctionalObjectProperty(role):
            return f"{role} Characteristics: Functional"
        case _:
            raise TypeError(f"no Manchester form for {axiom!r}")


def print_functional_expr(expr: ClassExpression) -> str:
    match expr:
        case Named(name):
            return name
        case Top():
            return "owl:Thing"
        case Bottom():
            return "owl:Nothing"
        case And(operands):
            return f"ObjectIntersectionOf({' '.join(print_functional_expr(o) for o in operands)})"
        case Or(operands):
            return f"ObjectUnionOf({' '.join(print_functional_expr(o) for o in operands)})"
        case Not(operand):
            return f"ObjectComplementOf({print_functional_expr(operand)})"
        case Some(role, filler):
            return f"ObjectSomeValuesFrom({role} {print_functional_expr(filler)})"
        case All(role, filler):
            return f"ObjectAllValuesFrom({role} {print_functional_expr(filler)})"
        case MinCard(n, role, filler):
            return f"ObjectMinCardinality({n} {role} {print_functional_expr(filler)})"
        case MaxCard(n, role, filler):
            return f"ObjectMaxCardinality({n} {role} {print_functional_expr(filler)})"
        case ExactCard(n, role, filler):
            return f"ObjectExactCardinality({n} {role} {print_functional_expr(filler)})"
        case _:
            raise TypeError(f"not a class expression: {expr!r}")


def print_functional_axiom(axiom: Axiom) -> str:
    match axiom:
        case SubClassOf(sub, sup):
            return f"SubClassOf({print_functional_expr(sub)} {print_functional_expr(sup)})"
        case EquivalentClasses(members):
            return f"EquivalentClasses({' '.join(print_functional_expr(m) for m in members)})"
        case DisjointClasses(members):
            return f"DisjointClasses({' '.join(print_functional_expr(m) for m in members)})"
        case DisjointUnion(lhs, members):
            return f"DisjointUnion({lhs} {' '.join(print_functional_expr(m) for m in members)})"
        case ClassAssertion(individual, expr):
            return f"ClassAssertion({print_functional_expr(expr)} {individual})"
        case ObjectPropertyAssertion(role, subject, obj):
            return f"ObjectPropertyAssertion({role} {subject} {obj})"
        case SameIndividual(inds):
            return f"SameIndividual({' '.join(inds)})"
        case DifferentIndividuals(inds):
            return f"DifferentIndividuals({' '.join(inds)})"
        case ObjectPropertyDomain(role, expr):
            return f"ObjectPropertyDomain({role} {print_functional_expr(expr)})"
        case ObjectPropertyRange(role, expr):
            return f"ObjectPropertyRange({role} {print_functional_expr(expr)})"
        case FunctionalObjectProperty(role):
            return f"FunctionalObjectProperty({role})"
        case _:
            raise TypeError(f"not an axiom: {axiom!r}")


def print_ontology(axioms: list[Axiom], sig: Signature) -> str:
    """Functional-style document: declarations first, axioms in given order."""
    lines = []
    for name in sorted(sig.classes):
        lines.append(f"Declaration(Class({name}))")
    for name in sorted(sig.roles):
        lines.append(f"Declaration(ObjectProperty({name}))")
    for name in sorted(sig.individuals):
        lines.append(f"Declaration(NamedIndividual({name}))")
    for ax in axioms:
        lines.append(print_functional_axiom(ax))
    return "\n".join(lines) + "\n"
