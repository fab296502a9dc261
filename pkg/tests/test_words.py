import pytest
from hypothesis import given, strategies as st

from surfcurves.surfaces import build_surface
from conftest import MOEBIUS, PANTS, nontrivial_words, raw_words, reduced_words
from surfcurves.words import (
    CyclicWord,
    WordError,
    check_word,
    conjugate_eq,
    cyclic,
    cyclic_classes,
    cyclic_reduce,
    free_reduce,
    invert,
    is_primitive,
    least_rotation,
    multiply,
    orientation_character,
    power,
    primitive_root,
)


@pytest.mark.parametrize("raw, expected", [("aA", ""), ("abBA", ""), ("abA", "abA"), ("", "")])
def test_free_reduce_examples(raw, expected):
    assert free_reduce(raw) == expected


def test_cyclic_reduce_examples():
    assert cyclic_reduce("Aba") == (CyclicWord("b"), "A")
    assert cyclic_reduce("ab") == (CyclicWord("ab"), "")


def test_cyclic_reduce_letter_cancelling_ends():
    # B.aa.b: the core is "aa" and the conjugator is "B"
    c, x = cyclic_reduce("Baab")
    assert (c.letters, x) == ("aa", "B")
    assert multiply(x, c.letters, invert(x)) == "Baab"


@pytest.mark.parametrize("u, v, expected", [("ab", "ba", True), ("ab", "AB", False), ("abab", "ab", False)])
def test_conjugate_eq_examples(u, v, expected):
    assert conjugate_eq(u, v) is expected


@pytest.mark.parametrize("w, root, k", [("abab", "ab", 2), ("a", "a", 1), ("ABABAB", "AB", 3)])
def test_primitive_root_examples(w, root, k):
    dec = primitive_root(w)
    assert conjugate_eq(dec.root, root) and dec.exponent == k


def test_primitive_root_of_identity():
    with pytest.raises(WordError, match="contractible has no primitive root"):
        primitive_root("")


def test_orientation_examples():
    assert orientation_character(MOEBIUS, "a") == -1
    assert orientation_character(MOEBIUS, "aa") == 1
    assert orientation_character(PANTS, "aB") == 1


def test_orientation_unknown_generator():
    with pytest.raises(WordError, match="'c'"):
        orientation_character(PANTS, "ac")


def test_bad_letter_names_position():
    with pytest.raises(WordError, match="position 1"):
        check_word("a b")


def test_canonical_order_puts_generator_before_inverse():
    assert least_rotation("Aa"[::-1]) == "aA"
    assert least_rotation("bA") == "Ab"
    assert cyclic("Ba").letters == "aB"


def test_cyclic_classes_counts():
    # conjugacy classes in F2 of length 1 and 2: a, A, b, B and aa, AA, bb, BB, ab, aB, Ab, AB
    got = cyclic_classes("ab", 2)
    assert len(got) == 12
    assert all(w.canonical for w in got)
    assert all(is_primitive(w) for w in cyclic_classes("ab", 5, primitive_only=True))


@given(raw_words(max_size=12))
def test_free_reduce_idempotent_and_shorter(raw):
    once = free_reduce(raw)
    assert free_reduce(once) == once
    assert len(once) <= len(raw)


@given(reduced_words(), reduced_words(max_size=5))
def test_cyclic_reduce_conjugation_invariant(w, x):
    assert cyclic(w) == cyclic(multiply(x, w, invert(x)))


@given(reduced_words())
def test_cyclic_reduce_reconstructs(w):
    c, x = cyclic_reduce(w)
    assert multiply(x, c.letters, invert(x)) == w
    assert c.canonical


@given(nontrivial_words(max_size=6), st.integers(1, 4))
def test_primitive_root_of_powers(w, m):
    c = cyclic(w)
    base = primitive_root(c)
    dec = primitive_root(power(c.letters, m))
    assert dec.root == base.root
    assert dec.exponent == base.exponent * m
    assert cyclic(power(dec.root.letters, dec.exponent)) == cyclic(power(c.letters, m))


TWISTED = build_surface("fatgraph:order=a+,b+,a-,b-;twists=a")


@given(raw_words(), raw_words())
def test_orientation_is_a_homomorphism(u, v):
    chi = lambda w: orientation_character(TWISTED, w)  # noqa: E731
    assert chi(u + v) == chi(u) * chi(v)
    assert chi(cyclic(free_reduce(u))) == chi(u)
