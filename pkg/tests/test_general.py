from itertools import product

import pytest

from smoothwords import chains, enumeration, words
from smoothwords.errors import DomainError, NotDifferentiable, NotSmooth, ResourceLimitError
from smoothwords.general import (
    BASE,
    AlphabetParams,
    gen_chain_count,
    gen_chain_primitives,
    gen_chains_of_height,
    gen_complement,
    gen_derivative,
    gen_frequency_extrema,
    gen_gamma,
    gen_h1_chains,
    gen_height,
    gen_height_class,
    gen_is_smooth,
    gen_primitives,
)
from smoothwords.primitives import height_class, primitives

from . import oracles

P13 = AlphabetParams(1, 3)
P23 = AlphabetParams(2, 3)


def _all(max_len, letters):
    for n in range(max_len + 1):
        yield from map("".join, product(letters, repeat=n))


def test_params_validation():
    assert AlphabetParams.parse("1,3") == P13
    assert P23.parity_differs and not P13.parity_differs
    for bad in ("2,1", "0,2", "1,10", "3,3", "x", "1,2,3"):
        with pytest.raises(DomainError):
            AlphabetParams.parse(bad)


def test_specialization_words():
    for w in _all(12, "12"):
        try:
            d = words.derivative(w)
        except NotDifferentiable:
            with pytest.raises(NotDifferentiable):
                gen_derivative(w, BASE)
            continue
        assert gen_derivative(w, BASE) == d
        assert gen_is_smooth(w, BASE) == words.is_smooth(w)
        assert gen_complement(w, BASE) == words.complement(w)
        if words.is_smooth(w):
            assert gen_height(w, BASE) == words.height(w)
            assert gen_primitives(w, BASE) == primitives(w)


@pytest.mark.parametrize("k", range(1, 6))
def test_specialization_classes_and_chains(k):
    assert gen_height_class(k, BASE) == height_class(k).members
    assert gen_chains_of_height(k, BASE) == chains.chains_of_height(k)


def test_specialization_gamma():
    prof = gen_gamma(64, BASE, method="kernel")
    assert prof == enumeration.gamma(64)
    for n in range(0, 65):
        assert gen_gamma(n, BASE, method="kernel") == enumeration.gamma(n)
    for n in range(0, 13):
        assert gen_gamma(n, BASE) == enumeration.gamma(n)
    for n in (3, 4, 17, 64):
        assert gen_frequency_extrema(n, BASE) == enumeration.frequency_extrema(n)


def test_generalized_examples():
    assert gen_derivative("333", P13) == "3"
    assert gen_derivative("3133", P13) == "1"
    assert gen_height("333", P13) == 2
    with pytest.raises(NotDifferentiable):
        gen_derivative("3333", P13)
    with pytest.raises(NotDifferentiable):
        gen_derivative("13113", P13)  # interior run of length 2
    with pytest.raises(NotSmooth):
        gen_height("1111", P13)
    with pytest.raises(DomainError):
        gen_primitives("2", P13)
    with pytest.raises(DomainError):
        gen_is_smooth("12", P13)


def test_h1_chains_13():
    got = [str(c) for c in gen_h1_chains(P13)]
    assert got == ["1<13<133", "11<113<1133", "3<31<311", "33<331<3311"]


@pytest.mark.parametrize("p", [P13, P23])
def test_height_one_bruteforce(p):
    expected = {w for w in _all(2 * p.b, p.letters) if w and gen_is_smooth(w, p) and gen_height(w, p) == 1}
    assert gen_height_class(1, p) == expected


@pytest.mark.parametrize("p", [P13, P23])
def test_height_two_bruteforce(p):
    cls = gen_height_class(2, p)
    top = max(map(len, cls))
    found = {w for w in _all(top + 3, p.letters) if w and gen_is_smooth(w, p) and gen_height(w, p) == 2}
    assert found == cls


@pytest.mark.parametrize(
    "p,k",
    [(p, k) for p in (P13, P23) for k in range(1, 5)]
    + [(p, k) for p in (AlphabetParams(1, 4), AlphabetParams(2, 5)) for k in range(1, 4)]
    + [(AlphabetParams(4, 7), k) for k in (1, 2)],
)
def test_partition(p, k):
    fam = gen_chains_of_height(k, p)
    assert len(fam) == gen_chain_count(k, p)
    seen = set()
    for c in fam:
        assert not seen & set(c.members)
        seen |= set(c.members)
        assert all(gen_height(w, p) == k for w in c.members)
    assert seen == gen_height_class(k, p)


def test_growth_factor_five():
    sizes = [len(gen_chains_of_height(k, P13)) for k in range(1, 5)]
    assert sizes == [4, 20, 100, 500]
    assert all(b == 5 * a for a, b in zip(sizes, sizes[1:]))


def test_families_are_trees_and_paths_iff_adjacent():
    for p in (P13, AlphabetParams(1, 4)):
        fam = gen_chains_of_height(3, p)
        assert not all(c.is_linear() for c in fam)
    for p in (P23, AlphabetParams(3, 4), BASE):
        assert all(c.is_linear() for c in gen_chains_of_height(3, p))


def test_chain_primitive_multiplicity_13():
    for c in gen_chains_of_height(2, P13):
        n = len(gen_chain_primitives(c, P13))
        assert n == (4 if c.first_letter == "1" else 6)


@pytest.mark.parametrize("p", [P13, P23, AlphabetParams(1, 4)])
def test_gamma_oracle(p):
    for n in range(0, 11):
        g = gen_gamma(n, p)
        assert g == gen_gamma(n, p, method="oracle") == gen_gamma(n, p, method="kernel")
        assert g == len({w for w in map("".join, product(p.letters, repeat=n)) if gen_is_smooth(w, p)})


def test_gamma_13_example():
    assert gen_gamma(6, P13) == 24


def test_ceilings():
    with pytest.raises(ResourceLimitError):
        gen_height_class(9, P13)
    with pytest.raises(ResourceLimitError):
        gen_gamma(21, P13, method="oracle")
    with pytest.raises(DomainError):
        gen_gamma(5, P13, method="nope")


def test_base_oracle_agrees():
    for w in _all(10, "12"):
        assert gen_is_smooth(w, BASE) == (oracles.height(w) is not None)
