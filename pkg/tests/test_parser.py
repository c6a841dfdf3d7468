"""Both concrete syntaxes and the printers."""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ontotdd.core import (
    TOP, All, And, ClassAssertion, DifferentIndividuals, DisjointClasses,
    DisjointUnion, EquivalentClasses, FunctionalObjectProperty, MinCard,
    Named, Not, ObjectPropertyAssertion, ObjectPropertyDomain,
    ObjectPropertyRange, Or, SameIndividual, Signature, Some, SubClassOf,
)
from ontotdd.parser import (
    ParseError, parse_ontology, parse_test_axiom, print_axiom,
    print_functional_axiom, print_ontology,
)
from conftest import class_expressions
from generators import random_ontology, random_test_axiom

SIG = Signature(
    frozenset({"A", "B", "C", "Giraffe", "Mammal", "Carnivore", "Animal"}),
    frozenset({"R", "S", "eats"}),
    frozenset({"a", "b"}),
)


# -- functional-style files -------------------------------------------------

def test_smallest_file():
    axioms, sig = parse_ontology("Declaration(Class(A)) SubClassOf(A owl:Thing)")
    assert axioms == [SubClassOf(Named("A"), TOP)]
    assert sig.classes == {"A"}


def test_giraffe_file():
    text = """
    Declaration(Class(Giraffe)) Declaration(Class(Herbivore))
    Declaration(Class(Mammal)) Declaration(Class(Animal))
    SubClassOf(Giraffe Herbivore)
    SubClassOf(Herbivore Mammal)
    SubClassOf(Mammal Animal)
    """
    axioms, sig = parse_ontology(text)
    assert len(axioms) == 3
    assert sig.classes == {"Giraffe", "Herbivore", "Mammal", "Animal"}


def test_arity_violation_is_syntax_error():
    with pytest.raises(ParseError) as err:
        parse_ontology("SubClassOf(A)")
    assert err.value.kind == "syntax"


def test_unknown_construct():
    with pytest.raises(ParseError) as err:
        parse_ontology("HasKey(A R)")
    assert err.value.kind == "unknown-construct"


def test_kind_conflict_across_axioms():
    with pytest.raises(ParseError) as err:
        parse_ontology("Declaration(Class(A)) ObjectPropertyDomain(A B)")
    assert err.value.kind == "kind-conflict"


def test_comments_and_whitespace():
    axioms, sig = parse_ontology("# a comment\nSubClassOf(A B) # trailing\n")
    assert len(axioms) == 1


def test_cardinality_default_filler():
    axioms, _ = parse_ontology("SubClassOf(A ObjectMinCardinality(2 R))")
    assert axioms == [SubClassOf(Named("A"), MinCard(2, "R", TOP))]


def test_functional_round_trip_random():
    rng = random.Random(7)
    for _ in range(50):
        axioms, sig = random_ontology(rng)
        text = print_ontology(axioms, sig)
        parsed, parsed_sig = parse_ontology(text)
        assert parsed == axioms
        assert parsed_sig == sig


def test_error_position_at_or_after_mutation():
    lines = [
        "Declaration(Class(A))",
        "Declaration(ObjectProperty(R))",
        "SubClassOf(A ObjectSomeValuesFrom(R A))",
    ]
    text = "\n".join(lines)
    tokens = text.split(" ")
    for i in range(len(tokens)):
        mutated_tokens = tokens.copy()
        mutated_tokens[i] = "%"
        mutated = " ".join(mutated_tokens)
        before = " ".join(tokens[:i])
        mut_line = before.count("\n") + 1
        try:
            parse_ontology(mutated)
        except ParseError as err:
            assert (err.line, err.column) >= (mut_line, 1)
        else:
            pytest.fail("mutation should not parse")


# -- Manchester-like test axioms --------------------------------------------

def test_simple_subclass():
    assert parse_test_axiom("Giraffe SubClassOf: Mammal", SIG) == SubClassOf(
        Named("Giraffe"), Named("Mammal")
    )


def test_existential_rhs():
    assert parse_test_axiom("Carnivore SubClassOf: eats some Animal", SIG) == SubClassOf(
        Named("Carnivore"), Some("eats", Named("Animal"))
    )


def test_same_as_degenerate_arity():
    with pytest.raises(ParseError):
        parse_test_axiom("a SameAs: a", SIG)


def test_names_outside_signature_parse():
    axiom = parse_test_axiom("Zebra SubClassOf: Mammal", SIG)
    assert axiom == SubClassOf(Named("Zebra"), Named("Mammal"))


def test_kind_conflict_against_signature():
    with pytest.raises(ParseError) as err:
        parse_test_axiom("Giraffe SameAs: a", SIG)
    assert err.value.kind == "kind-conflict"


def test_complex_lhs_gci():
    axiom = parse_test_axiom("eats only A SubClassOf: B", SIG)
    assert axiom == SubClassOf(All("eats", Named("A")), Named("B"))


def test_precedence_not_and_or():
    axiom = parse_test_axiom("A SubClassOf: not B and C or D", SIG)
    assert axiom == SubClassOf(
        Named("A"), Or((And((Not(Named("B")), Named("C"))), Named("D")))
    )


def test_quantifier_binds_tighter_than_and():
    axiom = parse_test_axiom("A SubClassOf: eats some B and C", SIG)
    assert axiom == SubClassOf(Named("A"), And((Some("eats", Named("B")), Named("C"))))


def test_all_axiom_forms():
    cases = {
        "A EquivalentTo: B, C": EquivalentClasses((Named("A"), Named("B"), Named("C"))),
        "A DisjointWith: B": DisjointClasses((Named("A"), Named("B"))),
        "A DisjointUnionOf: B, C": DisjointUnion("A", (Named("B"), Named("C"))),
        "a Type: A": ClassAssertion("a", Named("A")),
        "a SameAs: b": SameIndividual(("a", "b")),
        "a DifferentFrom: b": DifferentIndividuals(("a", "b")),
        "R Domain: A": ObjectPropertyDomain("R", Named("A")),
        "R Range: A": ObjectPropertyRange("R", Named("A")),
        "R Characteristics: Functional": FunctionalObjectProperty("R"),
    }
    for text, expected in cases.items():
        assert parse_test_axiom(text, SIG) == expected


def test_disjoint_union_needs_named_lhs():
    with pytest.raises(ParseError):
        parse_test_axiom("A and B DisjointUnionOf: C, D", SIG)


def test_trailing_garbage_rejected():
    with pytest.raises(ParseError):
        parse_test_axiom("A SubClassOf: B C", SIG)


# -- printing ----------------------------------------------------------------

def test_print_canonical_forms():
    assert print_axiom(SubClassOf(Named("C"), Named("D"))) == "C SubClassOf: D"
    assert print_axiom(DisjointClasses((Named("C"), Named("D")))) == "C DisjointWith: D"
    assert (
        print_axiom(SubClassOf(Named("C"), MinCard(2, "eats", Named("Plant"))))
        == "C SubClassOf: eats min 2 Plant"
    )


def test_print_functional_role_assertion():
    assert print_functional_axiom(ObjectPropertyAssertion("R", "a", "b")) == (
        "ObjectPropertyAssertion(R a b)"
    )


_AXIOM_STRATEGY = st.one_of(
    st.tuples(class_expressions(), class_expressions()).map(lambda t: SubClassOf(*t)),
    st.lists(class_expressions(), min_size=2, max_size=3).map(
        lambda xs: EquivalentClasses(tuple(xs))
    ),
    st.lists(class_expressions(), min_size=2, max_size=3).map(
        lambda xs: DisjointClasses(tuple(xs))
    ),
    st.tuples(st.sampled_from(["N", "M"]), class_expressions(), class_expressions()).map(
        lambda t: DisjointUnion(t[0], (t[1], t[2]))
    ),
    st.tuples(st.sampled_from(["a", "b"]), class_expressions()).map(
        lambda t: ClassAssertion(*t)
    ),
    st.just(SameIndividual(("a", "b"))),
    st.just(DifferentIndividuals(("a", "b", "c"))),
    st.tuples(st.sampled_from(["R", "S"]), class_expressions()).map(
        lambda t: ObjectPropertyDomain(*t)
    ),
    st.tuples(st.sampled_from(["R", "S"]), class_expressions()).map(
        lambda t: ObjectPropertyRange(*t)
    ),
    st.just(FunctionalObjectProperty("R")),
)


@given(_AXIOM_STRATEGY)
@settings(max_examples=200)
def test_manchester_round_trip(axiom):
    printed = print_axiom(axiom)
    assert parse_test_axiom(printed) == axiom


def test_random_test_axiom_round_trip():
    rng = random.Random(11)
    sig = Signature(frozenset("ABCD"), frozenset("RS"), frozenset("abc"))
    for _ in range(300):
        axiom = random_test_axiom(rng, sig)
        assert parse_test_axiom(print_axiom(axiom), sig) == axiom
