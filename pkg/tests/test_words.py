import random

import pytest

from braidsplit.words import (
    EMPTY, X, Y, Word, WordError, a, b, C, format_word, free_reduce, invert, parse_word,
    sigma, substitute, word,
)


def random_word(rng, length, gens=(a(1), b(1), sigma(1), sigma(2), C(1, 2))):
    return Word((rng.choice(gens), rng.choice([-2, -1, 1, 2])) for _ in range(length))


def test_cancellation():
    assert word(a(1), (a(1), -1)) == EMPTY
    assert word(a(1), b(1), (b(1), -1), a(1)) == word((a(1), 2))
    assert word((sigma(1), 2), (sigma(1), -1)) == word(sigma(1))


def test_trivial_c_normalizes_away():
    assert word(C(2, 2)) == EMPTY
    assert word(a(1), C(3, 3), (a(1), -1)) == EMPTY


def test_malformed_c_rejected():
    with pytest.raises(WordError):
        C(3, 2)


def test_invert_examples():
    assert invert(EMPTY) == EMPTY
    assert invert(word(a(1), b(1))) == word((b(1), -1), (a(1), -1))
    assert invert(word((sigma(1), 2))) == word((sigma(1), -2))


def test_substitute_examples():
    images = {a(1): word(a(1), X), b(1): word(b(1), Y)}
    assert format_word(substitute(word(a(1), b(1)), images)) == "a1 x b1 y"
    assert substitute(word(a(1), (a(1), -1)), {}) == EMPTY
    assert format_word(substitute(word(sigma(1)), {sigma(1): word(sigma(1), (X, 3))})) == "s1 x^3"


def test_substitute_missing_image_names_symbol():
    with pytest.raises(WordError, match="b1"):
        substitute(word(a(1), b(1)), {a(1): word(a(1))})


def test_random_word_properties():
    rng = random.Random(7)
    images = {a(1): word(b(1), a(1)), b(1): word((a(1), -1)), sigma(1): word(sigma(2), sigma(1)),
              sigma(2): word(sigma(1)), C(1, 2): word((sigma(1), 2))}
    for _ in range(300):
        u, v = random_word(rng, rng.randint(0, 8)), random_word(rng, rng.randint(0, 8))
        assert invert(invert(u)) == u
        assert u * invert(u) == EMPTY
        assert Word(free_reduce(u.letters)) == u
        assert len(Word(list(u.letters) + list(v.letters))) <= len(u) + len(v)
        assert substitute(u * v, images) == substitute(u, images) * substitute(v, images)
        assert substitute(invert(u), images) == invert(substitute(u, images))


def test_text_syntax_round_trip():
    rng = random.Random(3)
    assert parse_word("e") == EMPTY
    assert format_word(parse_word("a1^-3 C1.2 s2")) == "a1^-3 C1.2 s2"
    for _ in range(100):
        w = random_word(rng, rng.randint(0, 6))
        assert parse_word(format_word(w)) == w


def test_bad_token():
    with pytest.raises(WordError):
        parse_word("q7")
