import pytest

from smoothwords.chains import (
    Chain,
    chain_complement,
    chain_count,
    chain_primitives,
    chains_of_height,
    simple_right_extensions,
    split_by_first_letter,
    validate_chain,
    verify_partition,
)
from smoothwords.errors import DomainError
from smoothwords.primitives import height_class, primitives

H1 = ["1<12", "2<21"]
H2_1 = ["11<112<1121", "121<1211<12112", "122<1221<12212"]
H2_2 = ["211<2112<21121", "212<2122<21221", "22<221<2212"]


def strs(chains):
    return sorted(str(c) for c in chains)


def test_simple_right_extensions():
    assert simple_right_extensions("1", 1) == {"12"}
    assert simple_right_extensions("12", 1) == set()
    assert simple_right_extensions("1211", 2) == {"12112"}
    with pytest.raises(DomainError):
        simple_right_extensions("1211", 3)
    with pytest.raises(DomainError):
        simple_right_extensions("111", 1)


def test_h1_h2_member_for_member():
    assert strs(chains_of_height(1)) == H1
    assert strs(chains_of_height(2)) == sorted(H2_1 + H2_2)
    ones, twos = split_by_first_letter(chains_of_height(2))
    assert strs(ones) == H2_1
    assert strs(twos) == H2_2
    ones, twos = split_by_first_letter(chains_of_height(1))
    assert strs(ones) == ["1<12"] and strs(twos) == ["2<21"]


def test_canonical_order():
    assert [str(c) for c in chains_of_height(1)] == H1
    firsts = [c.first for c in chains_of_height(4)]
    assert firsts == sorted(firsts)


@pytest.mark.parametrize("k", range(1, 8))
def test_counting_law_and_partition(k):
    fam = chains_of_height(k)
    cls = height_class(k).members
    assert len(fam) == chain_count(k) == 2 * 3 ** (k - 1)
    assert sum(len(c) for c in fam) == len(cls)
    assert fam.members() == cls
    ones, twos = split_by_first_letter(fam)
    assert len(ones) == len(twos) == 3 ** (k - 1)
    assert {str(chain_complement(c)) for c in twos} == {str(c) for c in ones}


@pytest.mark.parametrize("k", range(1, 9))
def test_out_degree_at_most_one(k):
    cls = height_class(k).members
    assert all(sum(u + a in cls for a in "12") <= 1 for u in cls)


@pytest.mark.parametrize("k", range(2, 8))
def test_counting_recurrence(k):
    ones, twos = split_by_first_letter(chains_of_height(k - 1))
    assert len(chains_of_height(k)) == 2 * len(ones) + 4 * len(twos)


def test_chain_complement():
    c = Chain.parse("121<1211<12112")
    assert str(chain_complement(c)) == "212<2122<21221"
    assert str(chain_complement(Chain.parse("1<12"))) == "2<21"
    assert chain_complement(chain_complement(c)) == c


def test_chain_primitives_worked_examples():
    assert strs(chain_primitives(Chain.parse("1<12"))) == ["121<1211<12112", "212<2122<21221"]
    mu = "121121<1211212<12112122<121121221"
    assert strs(chain_primitives(Chain.parse("121<1211<12112"))) == sorted(
        [mu, "212212<2122121<21221211<212212112"]
    )
    got = strs(chain_primitives(Chain.parse("212<2122<21221")))
    assert "22122<221221<2212211<22122112<221221121" in got
    # the consistent last member of the chain starting 122122
    assert "122122<1221221<12212211<122122112<1221221121" in got
    assert len(got) == 4


def test_chain_primitives_cover_member_primitives():
    for c in chains_of_height(3):
        prims = chain_primitives(c)
        pooled = set().union(*(primitives(u) for u in c))
        assert sum(len(p) for p in prims) == len(pooled)
        assert {w for p in prims for w in p} == pooled


@pytest.mark.parametrize("k", range(1, 7))
def test_chain_primitives_multiplicity_and_flattening(k):
    produced = []
    for c in chains_of_height(k):
        prims = chain_primitives(c)
        assert len(prims) == (2 if c.first_letter == "1" else 4)
        assert strs(chain_complement(p) for p in prims) == strs(prims)
        produced.extend(str(p) for p in prims)
    assert len(produced) == len(set(produced))
    assert sorted(produced) == strs(chains_of_height(k + 1))


def test_chain_primitives_rejects_invalid():
    with pytest.raises(DomainError):
        chain_primitives(Chain(("1",), 1))  # not right-maximal
    with pytest.raises(DomainError):
        chain_primitives(Chain(("1", "122"), 1))
    with pytest.raises(DomainError):
        validate_chain(Chain(("12",), 1))


@pytest.mark.parametrize("k,h,p", [(1, 2, 4), (2, 6, 18)])
def test_verify_partition_small(k, h, p):
    rep = verify_partition(k)
    assert rep.passed
    assert rep.chain_total == h and rep.class_size == p


def test_verify_partition_k8():
    rep = verify_partition(8)
    assert rep.passed, rep.lines()
    assert rep.chain_total == 4374


def test_chain_parse_and_str():
    c = Chain.parse("1≺12")
    assert str(c) == "1<12" and c.height == 1 and c.first_letter == "1"
    assert c.is_linear()
    with pytest.raises(DomainError):
        Chain((), 1)
