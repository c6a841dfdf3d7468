import sys
from pathlib import Path

import hypothesis
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ontotdd.core import (
    TOP, BOTTOM, All, And, ExactCard, MaxCard, MinCard, Named, Not, Or, Some,
)

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis.settings.load_profile("ci")

FIXTURES = Path(__file__).parent / "fixtures"

_CLASS_NAMES = st.sampled_from(["A", "B", "C"])
_ROLE_NAMES = st.sampled_from(["R", "S"])


def class_expressions(max_card: int = 2) -> st.SearchStrategy:
    """Random class expressions over at most 3 class names and 2 roles."""
    leaves = st.one_of(
        _CLASS_NAMES.map(Named),
        st.just(TOP),
        st.just(BOTTOM),
    )

    def extend(children):
        pair = st.tuples(children, children)
        card = st.integers(min_value=0, max_value=max_card)
        return st.one_of(
            pair.map(And),
            pair.map(Or),
            children.map(Not),
            st.tuples(_ROLE_NAMES, children).map(lambda t: Some(*t)),
            st.tuples(_ROLE_NAMES, children).map(lambda t: All(*t)),
            st.tuples(card, _ROLE_NAMES, children).map(lambda t: MinCard(*t)),
            st.tuples(card, _ROLE_NAMES, children).map(lambda t: MaxCard(*t)),
            st.tuples(card, _ROLE_NAMES, children).map(lambda t: ExactCard(*t)),
        )

    return st.recursive(leaves, extend, max_leaves=6)


@pytest.fixture
def giraffe_state():
    from ontotdd import classify, make_state, parse_ontology

    text = (FIXTURES / "giraffe.ofn").read_text()
    axioms, sig = parse_ontology(text)
    return classify(make_state(axioms, sig))
