"""Smooth words by length: γ(n), LDE/FE words, height and frequency extrema.

All per-length statistics come from one walk of the right-extension tree in
:mod:`smoothwords.kernel`; the exhaustive 2^n filter in :func:`oracle_words`
is kept independent of it for cross-checking.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import kernel
from .chains import chain_count
from .errors import DomainError, EmptyClass, InvariantError, ResourceLimitError
from .primitives import height_class
from .words import is_smooth, show

ENUMERATION_CEILING = 256
ORACLE_CEILING = 22


@dataclass(frozen=True)
class StatsRecord:
    n: int
    gamma: int
    gamma_prime: int | None
    h1: int
    h2: int
    freq_min: Fraction
    freq_max: Fraction

    FIELDS = ("n", "gamma", "gamma_prime", "h1", "h2", "freq_min", "freq_max")

    def as_row(self) -> dict[str, str]:
        return {
            "n": str(self.n),
            "gamma": str(self.gamma),
            "gamma_prime": "" if self.gamma_prime is None else str(self.gamma_prime),
            "h1": str(self.h1),
            "h2": str(self.h2),
            "freq_min": _frac(self.freq_min),
            "freq_max": _frac(self.freq_max),
        }

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "StatsRecord":
        gp = row.get("gamma_prime", "")
        return cls(
            n=int(row["n"]),
            gamma=int(row["gamma"]),
            gamma_prime=None if gp in ("", None) else int(gp),
            h1=int(row["h1"]),
            h2=int(row["h2"]),
            freq_min=Fraction(row["freq_min"]),
            freq_max=Fraction(row["freq_max"]),
        )


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _check_n(n: int, ceiling: int) -> None:
    if n < 0:
        raise DomainError(f"length must be nonnegative, got {n}")
    if n > ceiling:
        raise ResourceLimitError(f"length {n} above enumeration ceiling {ceiling}")


_profile_lock = threading.Lock()
_profile: kernel.Profile | None = None


def length_profile(n_max: int, ceiling: int = ENUMERATION_CEILING) -> kernel.Profile:
    """Kernel profile covering at least lengths 0..n_max (memoised)."""
    global _profile
    _check_n(n_max, ceiling + 1)
    with _profile_lock:
        if _profile is None or _profile.n_max < n_max:
            _profile, _ = kernel.walk(n_max)
        return _profile


def clear_cache() -> None:
    global _profile
    with _profile_lock:
        _profile = None


def smooth_words_of_length(n: int, ceiling: int = ENUMERATION_CEILING) -> set[str]:
    """All smooth words of length ``n`` by right extension from ε."""
    _check_n(n, ceiling)
    _, words = kernel.walk(n, collect=n)
    return set(words)


def oracle_words(n: int, ceiling: int = ORACLE_CEILING) -> set[str]:
    """Exhaustive filter of all 2^n words through :func:`is_smooth`."""
    _check_n(n, ceiling)
    return {w for w in map("".join, product("12", repeat=n)) if is_smooth(w)}


def gamma(n: int, method: str = "extension") -> int:
    _check_n(n, ENUMERATION_CEILING)
    if method == "extension":
        return length_profile(n).count[n]
    if method == "oracle":
        return len(oracle_words(n))
    raise DomainError(f"unknown method {method!r}; use extension or oracle")


def gamma_prime(n: int) -> int:
    _check_n(n, ENUMERATION_CEILING)
    prof = length_profile(n + 1)
    return prof.count[n + 1] - prof.count[n]


def gamma_table(n_max: int) -> list[int]:
    """γ(0..n_max); the telescoping identity over γ' is asserted."""
    prof = length_profile(n_max)
    g = list(prof.count[: n_max + 1])
    running = g[0]
    for i in range(n_max):
        running += g[i + 1] - g[i]
        if running != g[i + 1]:
            raise InvariantError("telescoping identity for γ' failed")
    return g


def _require_smooth(w: str) -> None:
    if not is_smooth(w):
        raise DomainError(f"{show(w)} is not smooth")


def is_lde(w: str) -> bool:
    """Left doubly extendable: both 1w and 2w are smooth."""
    _require_smooth(w)
    return is_smooth("1" + w) and is_smooth("2" + w)


def is_fe(w: str) -> bool:
    """Fully extendable: xwy smooth for all letters x, y."""
    _require_smooth(w)
    return all(is_smooth(x + w + y) for x in "12" for y in "12")


def lde_count_by_height(k: int) -> int:
    return sum(1 for w in height_class(k).members if is_lde(w))


def lde_formula(k: int) -> int:
    return 4 * 3 ** (k - 1)


def fe_length_extrema(k: int) -> tuple[int, int]:
    """(A(k), B(k)): min and max length of an FE word of height k."""
    if k < 0:
        raise DomainError(f"height must be nonnegative, got {k}")
    members = {""} if k == 0 else height_class(k).members
    lengths = [len(w) for w in members if is_fe(w)]
    if not lengths:
        raise EmptyClass(f"no FE word of height {k}")
    return min(lengths), max(lengths)


def height_extrema_by_length(n: int) -> tuple[int, int]:
    if n < 1:
        raise DomainError(f"length must be positive, got {n}")
    prof = length_profile(n)
    return prof.hmin[n], prof.hmax[n]


def frequency_extrema(n: int) -> tuple[Fraction, Fraction]:
    """Exact min and max of |w|_2 / |w| over smooth words of length n."""
    if n < 1:
        raise DomainError(f"length must be positive, got {n}")
    prof = length_profile(n)
    return Fraction(prof.bmin[n], n), Fraction(prof.bmax[n], n)


def length_stats(n_max: int) -> list[StatsRecord]:
    """StatsRecord rows for n = 1..n_max; γ'(n_max) included."""
    if n_max < 1:
        raise DomainError(f"n_max must be positive, got {n_max}")
    _check_n(n_max, ENUMERATION_CEILING)
    prof = length_profile(n_max + 1)
    out = []
    for n in range(1, n_max + 1):
        gp = prof.count[n + 1] - prof.count[n]
        out.append(
            StatsRecord(
                n=n,
                gamma=prof.count[n],
                gamma_prime=gp,
                h1=prof.hmin[n],
                h2=prof.hmax[n],
                freq_min=Fraction(prof.bmin[n], n),
                freq_max=Fraction(prof.bmax[n], n),
            )
        )
    return out


def dead_ends(n_max: int) -> dict[int, int]:
    """Lengths below n_max at which some smooth word has no smooth right extension."""
    prof = length_profile(n_max)
    return {n: d for n, d in enumerate(prof.dead[:n_max]) if d}


@dataclass(frozen=True)
class BoundsReport:
    n: int
    gamma: int
    h1: int
    h2: int
    lower: int | None
    upper: int

    @property
    def status(self) -> str:
        if self.gamma > self.upper or (self.lower is not None and self.lower > self.gamma):
            return "fail"
        return "pass" if self.lower is not None else "pass (lower bound skipped)"

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def line(self) -> str:
        lo = "skipped" if self.lower is None else f"|H^{self.h1 - 1}| = {self.lower} <="
        return f"n={self.n}: {lo} γ={self.gamma} <= |H^{self.h2 + 1}| = {self.upper}  [{self.status}]"


def chain_bounds_check(n: int) -> BoundsReport:
    """|H^(h1(n)-1)| <= γ(n) <= |H^(h2(n)+1)|, chain counts from the counting law."""
    h1, h2 = height_extrema_by_length(n)
    g = gamma(n)
    lower = chain_count(h1 - 1) if h1 >= 2 else None
    return BoundsReport(n, g, h1, h2, lower, chain_count(h2 + 1))
