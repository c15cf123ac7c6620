import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tensorsquare.presentation import (
    Presentation,
    PresentationError,
    commutator,
    cyclic_reduce,
    free_reduce,
    invert,
    load_presentation,
    parse_presentation,
    parse_word,
    power,
)

letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=30)


def test_parse_s3():
    P = parse_presentation("<a, b | a^3, b^2, (ab)^2>")
    assert P.generators == ("a", "b")
    assert P.relators == ((1, 1, 1), (2, 2), (1, 2, 1, 2))


def test_inverse_notations_agree():
    gens = ("a", "b")
    assert parse_word("A", gens) == parse_word("a'", gens) == parse_word("a^-1", gens) == (-1,)
    assert parse_word("(ab)^-2", gens) == (-2, -1, -2, -1)


def test_relation_with_equals_sign():
    assert parse_word("a^2 = b", ("a", "b")) == (1, 1, -2)


def test_unknown_symbol():
    with pytest.raises(PresentationError):
        parse_presentation("a | c^2")


def test_empty_generator_list_rejected():
    with pytest.raises(PresentationError):
        Presentation((), ())


def test_letter_range_checked():
    with pytest.raises(PresentationError):
        Presentation(("a",), ((2,),))


def test_load_json_and_text(tmp_path):
    (tmp_path / "q.json").write_text(json.dumps({"generators": ["a", "b"], "relators": ["a^4", "a^2 B^2"]}))
    P = load_presentation(tmp_path / "q.json")
    assert P.name == "q" and P.relators[0] == (1, 1, 1, 1)
    (tmp_path / "z5.txt").write_text("x | x^5\n")
    assert load_presentation(tmp_path / "z5.txt").relators == ((1,) * 5,)


@given(letters)
def test_free_reduce_idempotent_and_reduced(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(a != -b for a, b in zip(r, r[1:]))


@given(letters)
def test_inverse_cancels(w):
    assert free_reduce(tuple(w) + invert(w)) == ()


@given(letters)
def test_cyclic_reduce_is_conjugate(w):
    c = cyclic_reduce(w)
    assert len(c) <= len(free_reduce(w))
    if c:
        assert c[0] != -c[-1]


@given(letters, st.integers(-4, 4))
def test_power_length(w, n):
    r = free_reduce(w)
    assert len(power(r, n)) <= abs(n) * len(r)
    assert free_reduce(power(r, n) + power(r, -n)) == ()


@given(letters, letters)
def test_commutator_inverse(a, b):
    assert invert(commutator(a, b)) == commutator(b, a)
