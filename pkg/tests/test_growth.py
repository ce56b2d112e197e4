import math
from fractions import Fraction

import pytest

from smoothwords import growth
from smoothwords.enumeration import StatsRecord, length_stats
from smoothwords.errors import DomainError, InsufficientData
from smoothwords.general import AlphabetParams


def _synthetic(fn, ns):
    return [StatsRecord(n, fn(n), 0, 1, 1, Fraction(1, 3), Fraction(2, 3)) for n in ns]


def test_theta_half_collapses_to_q():
    rep = growth.theorem6_exponents(0.5)
    assert abs(rep.lower_exponent - growth.Q) < 1e-12
    assert abs(rep.upper_exponent - growth.Q) < 1e-12
    assert rep.brackets(growth.Q)


@pytest.mark.parametrize("theta", [0.05, 0.2, 7 / 16, 0.49])
def test_frequency_bracket_monotone(theta):
    rep = growth.theorem6_exponents(theta)
    assert rep.lower_exponent < growth.Q < rep.upper_exponent
    wider = growth.theorem6_exponents(theta / 2)
    assert wider.lower_exponent < rep.lower_exponent
    assert wider.upper_exponent > rep.upper_exponent


@pytest.mark.parametrize("bad", [0, -0.1, 0.51, 1])
def test_frequency_bracket_domain(bad):
    with pytest.raises(DomainError):
        growth.theorem6_exponents(bad)


@pytest.mark.parametrize("xi", [0.1, 0.3, 0.5])
def test_alphabet_bracket_reduces_at_base(xi):
    t5 = growth.theorem5_exponents(AlphabetParams(1, 2), xi)
    t6 = growth.theorem6_exponents(xi)
    assert abs(t5.lower_exponent - t6.lower_exponent) < 1e-12
    assert abs(t5.upper_exponent - t6.upper_exponent) < 1e-12


def test_alphabet_bracket_domain():
    with pytest.raises(DomainError):
        growth.theorem5_exponents(AlphabetParams(1, 3), 1.0)


def test_sing_grid():
    for b in range(2, 9):
        for a in range(1, b):
            p = AlphabetParams(a, b)
            delta, rev = growth.sing_exponents(p)
            assert (delta == rev) == (a == b - 1)
            assert delta == math.log(a + b) / math.log((a + b) / 2)


def test_fit_synthetic():
    ns = range(10, 200)
    assert growth.fit_growth_exponent(_synthetic(lambda n: n**3, ns), 10, 199) == pytest.approx(3, abs=1e-9)
    assert growth.fit_growth_exponent(_synthetic(lambda n: 7, ns), 10, 199) == pytest.approx(0, abs=1e-9)


def test_fit_insufficient():
    with pytest.raises(InsufficientData):
        growth.fit_growth_exponent(_synthetic(lambda n: n, range(1, 8)), 1, 7)
    with pytest.raises(InsufficientData):
        growth.empirical_theta(_synthetic(lambda n: n, range(1, 8)), 32)


def test_fit_real_data():
    recs = length_stats(256)
    s = growth.fit_growth_exponent(recs, 32, 256)
    theta = growth.empirical_theta(recs, 32)
    assert theta == Fraction(7, 16)
    assert 2.2 <= s <= 3.2
    assert growth.theorem6_exponents(float(theta)).brackets(s)


def test_dekking():
    rep = growth.dekking_envelope_check(length_stats(256))
    assert rep.upper_ok and rep.passed
    assert rep.c == pytest.approx(0.35397, abs=1e-5)
    assert rep.c_at_8 == pytest.approx(34 / 8**2.15)
    bad = growth.dekking_envelope_check(_synthetic(lambda n: n**8, range(2, 20)))
    assert not bad.upper_ok and bad.upper_violations[0] == 2
