"""Words over {1, 2}: runs, complement, derivative, smoothness and height.

Words are plain ``str`` objects of the digits ``"1"`` and ``"2"``; the empty
string is the empty word. A run-length view (:func:`runs` / :func:`from_runs`)
is available for callers that prefer blocks over letters.
"""

from __future__ import annotations

import random
from itertools import groupby
from typing import Iterable, Sequence

from .errors import DomainError, NotDifferentiable, NotSmooth

ALPHABET = "12"
EPSILON = ""

RunDecomposition = list[tuple[int, int]]

_SWAP = str.maketrans("12", "21")


def as_word(letters: str | Iterable[int], alphabet: str = ALPHABET) -> str:
    """Normalise ``letters`` to a digit string, rejecting foreign letters."""
    if isinstance(letters, str):
        w = "" if letters in ("", "ε", "-") else letters
    else:
        w = "".join(str(int(x)) for x in letters)
    bad = set(w) - set(alphabet)
    if bad:
        raise DomainError(
            f"word {letters!r} has letters {sorted(bad)} outside alphabet {{{','.join(alphabet)}}}"
        )
    return w


def show(w: str) -> str:
    """Printable form; the empty word is rendered as ``ε``."""
    return w if w else "ε"


def letter_counts(w: str) -> tuple[int, int]:
    """(|w|_1, |w|_2)."""
    ones = w.count("1")
    return ones, len(w) - ones


def runs(w: str) -> RunDecomposition:
    """Maximal blocks of ``w`` as ``(letter, length)`` pairs."""
    return [(int(k), len(list(g))) for k, g in groupby(w)]


def from_runs(rs: Iterable[tuple[int, int]]) -> str:
    return "".join(str(letter) * length for letter, length in rs)


def complement(w: str) -> str:
    return w.translate(_SWAP)


def derivative(w: str) -> str:
    """Run lengths of ``w``, dropping a first/last run of length one.

    Raises :class:`NotDifferentiable` if ``w`` contains ``111`` or ``222``.
    """
    lengths = [len(list(g)) for _, g in groupby(w)]
    if not lengths:
        return EPSILON
    if max(lengths) > 2:
        raise NotDifferentiable(f"{w} contains a run longer than 2")
    lo, hi = 0, len(lengths)
    if lengths[0] == 1:
        lo = 1
    if lengths[-1] == 1 and hi > lo:
        hi -= 1
    return "".join(map(str, lengths[lo:hi]))


def derivative_k(w: str, k: int) -> str:
    if k < 0:
        raise DomainError(f"iteration count must be nonnegative, got {k}")
    for _ in range(k):
        w = derivative(w)
    return w


def derivative_chain(w: str) -> list[str]:
    """``[w, D(w), D²(w), ..., ε]``; raises NotSmooth if it breaks off."""
    out = [w]
    while w:
        try:
            w = derivative(w)
        except NotDifferentiable as exc:
            raise NotSmooth(f"{show(out[0])} is not smooth: {exc}") from None
        out.append(w)
    return out


def is_smooth(w: str) -> bool:
    # terminates: |D(w)| < |w| for nonempty cube-free w
    try:
        while w:
            w = derivative(w)
    except NotDifferentiable:
        return False
    return True


def height(w: str) -> int:
    """Least k with D^k(w) = ε; ht(ε) = 0."""
    return len(derivative_chain(w)) - 1


def is_factor(u: str, w: str) -> bool:
    return u in w


def factors(w: str, n: int | None = None) -> set[str]:
    """Distinct factors of ``w`` (of length ``n`` only, when given)."""
    lengths: Sequence[int] = range(len(w) + 1) if n is None else [n]
    return {w[i : i + m] for m in lengths for i in range(len(w) - m + 1)}


def random_word(length: int, rng: random.Random) -> str:
    return "".join(rng.choice(ALPHABET) for _ in range(length))
