"""Growth exponents: closed-form brackets and empirical log-log fits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .enumeration import StatsRecord
from .errors import DomainError, InsufficientData
from .general import AlphabetParams

Q = math.log(3) / math.log(1.5)
CHVATAL_BAND = (0.499162, 0.500838)
DEKKING_LOWER_EXPONENT = 2.15
DEKKING_UPPER_EXPONENT = 7.2


@dataclass(frozen=True)
class ExponentReport:
    theta_or_xi: float
    lower_exponent: float
    upper_exponent: float
    reference_q: float = Q

    def brackets(self, s: float) -> bool:
        return self.lower_exponent <= s <= self.upper_exponent


def theorem6_exponents(theta: float) -> ExponentReport:
    """Exponent bracket log 3 / log(2 - θ) .. log 3 / log(1 + θ) for 0 < θ <= 1/2."""
    if not 0 < theta <= 0.5:
        raise DomainError(f"theta must lie in (0, 1/2], got {theta}")
    return ExponentReport(
        float(theta),
        math.log(3) / math.log(2 - theta),
        math.log(3) / math.log(1 + theta),
    )


def theorem5_exponents(p: AlphabetParams, xi: float) -> ExponentReport:
    if not 0 < xi < 1:
        raise DomainError(f"xi must lie in (0, 1), got {xi}")
    num = math.log(2 * p.b - 1)
    s = p.a + p.b - 2
    return ExponentReport(
        float(xi),
        num / math.log(1 + s * (1 - xi)),
        num / math.log(1 + s * xi),
    )


def sing_exponents(p: AlphabetParams) -> tuple[float, float]:
    """(δ, θ_rev): Sing's conjectured exponent and the revised one."""
    half = (p.a + p.b) / 2
    if half <= 1:
        raise DomainError(f"(a+b)/2 must exceed 1, got {half}")
    return math.log(p.a + p.b) / math.log(half), math.log(2 * p.b - 1) / math.log(half)


def _select(records: Sequence[StatsRecord], n_min: int, n_max: int) -> list[StatsRecord]:
    return [r for r in records if n_min <= r.n <= n_max]


def fit_growth_exponent(records: Sequence[StatsRecord], n_min: int, n_max: int) -> float:
    """Least-squares slope of log γ(n) against log n over [n_min, n_max]."""
    rows = _select(records, n_min, n_max)
    if len(rows) < 8:
        raise InsufficientData(f"need >= 8 records in [{n_min}, {n_max}], got {len(rows)}")
    if any(r.gamma <= 0 for r in rows):
        raise InsufficientData("γ must be positive for a log-log fit")
    x = np.log([float(r.n) for r in rows])
    y = np.log([float(r.gamma) for r in rows])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def empirical_theta(records: Sequence[StatsRecord], n0: int = 32) -> Fraction:
    """min over n >= n0 of the smallest letter-2 frequency at length n."""
    rows = [r for r in records if r.n >= n0]
    if not rows:
        raise InsufficientData(f"no records with n >= {n0}")
    return min(r.freq_min for r in rows)


@dataclass(frozen=True)
class DekkingReport:
    upper_ok: bool
    upper_violations: tuple[int, ...]
    c: float
    c_at_8: float | None
    c_at_8_ok: bool | None

    @property
    def passed(self) -> bool:
        return self.upper_ok and self.c > 0


def dekking_envelope_check(records: Sequence[StatsRecord]) -> DekkingReport:
    """γ(n) <= n^7.2 and the largest c with c·n^2.15 <= γ(n), over records with n >= 2.

    ``c_at_8`` is γ(8)/8^2.15; ``c_at_8_ok`` says whether it stays below
    γ(n)/n^2.15 for every larger recorded n.
    """
    rows = [r for r in records if r.n >= 2]
    if not rows:
        raise InsufficientData("no records with n >= 2")
    bad = tuple(r.n for r in rows if r.gamma > r.n**DEKKING_UPPER_EXPONENT)
    ratios = {r.n: r.gamma / r.n**DEKKING_LOWER_EXPONENT for r in rows}
    c = min(ratios.values())
    c8 = ratios.get(8)
    c8_ok = None if c8 is None else all(v >= c8 for n, v in ratios.items() if n >= 8)
    return DekkingReport(not bad, bad, c, c8, c8_ok)
