import random

import pytest
from hypothesis import given, strategies as st

from smoothwords.errors import DomainError, NotDifferentiable, NotSmooth
from smoothwords.words import (
    as_word,
    complement,
    derivative,
    derivative_k,
    from_runs,
    height,
    is_smooth,
    letter_counts,
    runs,
    show,
)

from . import oracles

words = st.text(alphabet="12", max_size=40)


def test_runs_examples():
    assert runs("2112") == [(2, 1), (1, 2), (2, 1)]
    assert runs("") == []
    assert runs("1221121") == [(1, 1), (2, 2), (1, 2), (2, 1), (1, 1)]
    assert from_runs(runs("1221121")) == "1221121"


def test_runs_round_trip_random():
    rng = random.Random(20261016)
    for _ in range(100_000):
        w = "".join(rng.choice("12") for _ in range(rng.randrange(0, 24)))
        rs = runs(w)
        assert from_runs(rs) == w
        assert all(rs[i][0] != rs[i + 1][0] for i in range(len(rs) - 1))
        assert all(length >= 1 for _, length in rs)


@pytest.mark.parametrize("w,expected", [("12112", "21221"), ("", ""), ("22122", "11211")])
def test_complement(w, expected):
    assert complement(w) == expected
    assert complement(expected) == w


@pytest.mark.parametrize(
    "w,expected",
    [("2112", "2"), ("1", ""), ("121121221", "12112"), ("", ""), ("11", "2"), ("12", "")],
)
def test_derivative_examples(w, expected):
    assert derivative(w) == expected


@pytest.mark.parametrize("w", ["111", "222", "12221", "1211122"])
def test_derivative_rejects_cubes(w):
    with pytest.raises(NotDifferentiable):
        derivative(w)


def test_derivative_k():
    assert derivative_k("12212212", 4) == ""
    assert derivative_k("12212212", 0) == "12212212"
    assert derivative_k("12212212", 1) == "2121"
    assert derivative_k("12212212", 2) == oracles.derivative(oracles.derivative("12212212")) == "11"
    with pytest.raises(DomainError):
        derivative_k("12", -1)


def test_smooth_and_height_examples():
    assert is_smooth("22122")
    assert not is_smooth("111")
    assert is_smooth("")
    assert height("12212212") == 4
    assert height("2") == 1
    assert height("") == 0
    with pytest.raises(NotSmooth):
        height("1112")


def test_not_differentiable_and_not_smooth_are_distinct():
    # differentiable once, but the derivative contains a cube
    w = next(
        v
        for n in range(3, 12)
        for v in oracles.all_words(n)
        if oracles.derivative(v) is not None and oracles.height(v) is None
    )
    derivative(w)
    assert not is_smooth(w)
    with pytest.raises(NotSmooth):
        height(w)


@given(words)
def test_derivative_matches_oracle(w):
    d = oracles.derivative(w)
    if d is None:
        with pytest.raises(NotDifferentiable):
            derivative(w)
    else:
        assert derivative(w) == d


@given(words)
def test_derivative_strictly_shrinks(w):
    if w and oracles.derivative(w) is not None:
        assert len(derivative(w)) < len(w)


@given(words)
def test_complement_invariance(w):
    assert is_smooth(w) == is_smooth(complement(w))
    if oracles.derivative(w) is not None:
        assert derivative(complement(w)) == derivative(w)
    if is_smooth(w):
        assert height(complement(w)) == height(w)


def test_length_sandwich_exhaustive():
    # |D| + |D|_2 <= |w| <= |D| + |D|_2 + 2 for every smooth w with |w| <= 30
    from smoothwords.enumeration import smooth_words_of_length

    for n in range(1, 31):
        for w in smooth_words_of_length(n):
            d = derivative(w)
            low = len(d) + d.count("2")
            assert low <= len(w) <= low + 2, w


def test_printed_inequality_fails_on_212():
    d = derivative("212")
    assert len("212") > len(d) + d.count("2")


def test_factor_closure():
    from smoothwords.primitives import height_class

    seen = set()
    for k in range(1, 7):
        for w in height_class(k).members:
            for i in range(len(w)):
                for j in range(i + 1, len(w) + 1):
                    seen.add(w[i:j])
    assert all(is_smooth(f) for f in seen)


def test_letter_counts_and_helpers():
    assert letter_counts("12112") == (3, 2)
    assert sum(letter_counts("2212")) == 4
    assert as_word([1, 2, 2]) == "122"
    assert as_word("ε") == ""
    assert show("") == "ε"
    with pytest.raises(DomainError):
        as_word("123")
