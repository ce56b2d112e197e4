"""Kolakoski sequence: prefixes, Shallit's iterates K_i, letter statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

from . import kernel
from .errors import DomainError, ResourceLimitError

ITERATE_CEILING = 60
ALPHA_CANDIDATE = (3 + math.sqrt(5)) / 6


def kolakoski_prefix(n: int) -> str:
    """First ``n`` letters of K = 1221121221221121122..."""
    if n < 1:
        raise DomainError(f"prefix length must be positive, got {n}")
    return kernel.kolakoski(n)


def is_self_encoding(prefix: str) -> bool:
    """Run lengths of ``prefix`` (last run dropped) are a prefix of ``prefix``."""
    lengths = [len(list(g)) for _, g in groupby(prefix)][:-1]
    return "".join(map(str, lengths)) == prefix[: len(lengths)]


@dataclass(frozen=True)
class ShallitIterate:
    i: int
    word: str

    @property
    def length(self) -> int:
        return len(self.word)


def _replicate(word: str) -> str:
    # j-th letter of word repeats the j-th letter of 1212...
    return "".join(("1" if j % 2 == 0 else "2") * int(c) for j, c in enumerate(word))


def shallit_iterate(i: int, ceiling: int = ITERATE_CEILING) -> ShallitIterate:
    """K_0 = 2; K_(i+1) replicates 1212... by the letters of K_i."""
    if i < 0:
        raise DomainError(f"iterate index must be nonnegative, got {i}")
    if i > ceiling:
        raise ResourceLimitError(f"iterate {i} above ceiling {ceiling}")
    word = "2"
    for _ in range(i):
        word = _replicate(word)
    return ShallitIterate(i, word)


def shallit_iterates(i_max: int) -> list[ShallitIterate]:
    out = [shallit_iterate(0)]
    for i in range(1, i_max + 1):
        out.append(ShallitIterate(i, _replicate(out[-1].word)))
    return out


def prefix_letter_stats(n: int) -> tuple[int, int, Fraction]:
    """(|p|_1, |p|_2, |p|_1 / n) for the length-n prefix p of K."""
    p = kolakoski_prefix(n)
    ones = p.count("1")
    return ones, n - ones, Fraction(ones, n)


def alpha_estimate(i: int) -> float:
    """|K_i| * (2/3)^i; compare with ALPHA_CANDIDATE = (3 + √5)/6."""
    return shallit_iterate(i).length * (2 / 3) ** i


def factor_complexity(n: int, window: int) -> int:
    """Distinct length-n factors of the length-``window`` prefix: a lower bound for p_K(n)."""
    if n < 1:
        raise DomainError(f"factor length must be positive, got {n}")
    if window < n:
        raise DomainError(f"window {window} shorter than factor length {n}")
    p = kolakoski_prefix(window)
    return len({p[j : j + n] for j in range(window - n + 1)})


def growth_exponent_q() -> float:
    """Conjectured exponent log 3 / log(3/2)."""
    return math.log(3) / math.log(1.5)
