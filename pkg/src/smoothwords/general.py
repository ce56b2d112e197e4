"""Smooth words over a two-letter alphabet {a, b} of positive integers, a < b.

Derivative rule: take the run lengths; any run longer than b is fatal, every
interior run must have length a or b, and a boundary (first/last) run is kept
only when its length is exactly b. At {1, 2} this is the ordinary derivative.

For b > 2 the height classes are no longer split into simple right-extension
paths: the families produced by :func:`gen_chain_primitives` are rooted
right-extension trees (every member but the root extends another member by
one letter). They are paths exactly when a = b - 1, and always when b = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import groupby, product

from . import kernel
from .chains import Chain, ChainFamily, family
from .errors import DomainError, InvariantError, NotDifferentiable, NotSmooth, ResourceLimitError

HEIGHT_CEILING = 8
ENUMERATION_CEILING = 128
ORACLE_CEILING = 20


@dataclass(frozen=True)
class AlphabetParams:
    a: int = 1
    b: int = 2

    def __post_init__(self):
        if not 1 <= self.a < self.b <= 9:
            raise DomainError(f"need 1 <= a < b <= 9, got a={self.a}, b={self.b}")

    @classmethod
    def parse(cls, text: str) -> "AlphabetParams":
        try:
            a, b = (int(x) for x in text.split(","))
        except ValueError:
            raise DomainError(f"alphabet must look like 'a,b', got {text!r}") from None
        return cls(a, b)

    @property
    def parity_differs(self) -> bool:
        return (self.a + self.b) % 2 == 1

    @property
    def letters(self) -> str:
        return f"{self.a}{self.b}"

    @property
    def is_base(self) -> bool:
        return (self.a, self.b) == (1, 2)

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


BASE = AlphabetParams(1, 2)


def check_word(w: str, p: AlphabetParams) -> str:
    bad = set(w) - set(p.letters)
    if bad:
        raise DomainError(f"word {w!r} has letters outside {{{p}}}")
    return w


def gen_complement(w: str, p: AlphabetParams) -> str:
    return w.translate(str.maketrans(p.letters, p.letters[::-1]))


def gen_derivative(w: str, p: AlphabetParams) -> str:
    check_word(w, p)
    lengths = [len(list(g)) for _, g in groupby(w)]
    if not lengths:
        return ""
    if max(lengths) > p.b:
        raise NotDifferentiable(f"{w} has a run longer than {p.b}")
    if any(l != p.a and l != p.b for l in lengths[1:-1]):
        raise NotDifferentiable(f"{w} has an interior run of length outside {{{p}}}")
    lo, hi = 0, len(lengths)
    if lengths[0] != p.b:
        lo = 1
    if lengths[-1] != p.b and hi > lo:
        hi -= 1
    return "".join(map(str, lengths[lo:hi]))


def gen_is_smooth(w: str, p: AlphabetParams) -> bool:
    try:
        while w:
            w = gen_derivative(w, p)
    except NotDifferentiable:
        return False
    return True


def gen_height(w: str, p: AlphabetParams) -> int:
    k = 0
    try:
        while w:
            w = gen_derivative(w, p)
            k += 1
    except NotDifferentiable as exc:
        raise NotSmooth(str(exc)) from None
    return k


def _has_height(w: str, k: int, p: AlphabetParams) -> bool:
    try:
        return gen_height(w, p) == k
    except NotSmooth:
        return False


def gen_expand(w: str, start: str, p: AlphabetParams) -> str:
    out = []
    letter = start
    for ch in w:
        out.append(letter * int(ch))
        letter = gen_complement(letter, p)
    return "".join(out)


def _primitive_candidates(w: str, p: AlphabetParams):
    """Yield ``(start, left_len, v)`` for every v with D(v) = w, w nonempty."""
    for start in p.letters:
        core = gen_expand(w, start, p)
        head = gen_complement(core[0], p)
        tail = gen_complement(core[-1], p)
        for i in range(p.b):
            for j in range(p.b):
                v = head * i + core + tail * j
                try:
                    if gen_derivative(v, p) == w:
                        yield start, i, v
                except NotDifferentiable:
                    continue


def _height_one(p: AlphabetParams) -> list[tuple[str, ...]]:
    # ξ_i = α^i ≺ α^i ᾱ ≺ ... ≺ α^i ᾱ^(b-1), and complements
    out = []
    for alpha in p.letters:
        bar = gen_complement(alpha, p)
        for i in range(1, p.b):
            out.append(tuple(alpha * i + bar * j for j in range(p.b)))
    return out


def gen_primitives(w: str, p: AlphabetParams) -> frozenset[str]:
    if not w:
        return frozenset(v for chain in _height_one(p) for v in chain)
    if not gen_is_smooth(w, p):
        raise DomainError(f"{w} is not smooth over {{{p}}}")
    return frozenset(v for _, _, v in _primitive_candidates(w, p))


@lru_cache(maxsize=None)
def _gen_class(k: int, p: AlphabetParams) -> frozenset[str]:
    if k == 1:
        return gen_primitives("", p)
    out: set[str] = set()
    for w in _gen_class(k - 1, p):
        out.update(gen_primitives(w, p))
    return frozenset(out)


def _check_height(k: int, ceiling: int) -> None:
    if k < 1:
        raise DomainError(f"height must be >= 1, got {k}")
    if k > ceiling:
        raise ResourceLimitError(f"height {k} above ceiling {ceiling}")


def gen_height_class(k: int, p: AlphabetParams, ceiling: int = HEIGHT_CEILING) -> frozenset[str]:
    _check_height(k, ceiling)
    return _gen_class(k, p)


def _canonical(members) -> tuple[str, ...]:
    return tuple(sorted(members, key=lambda v: (len(v), v)))


def _check_family(c: Chain) -> None:
    members = set(c.members)
    roots = [w for w in c.members if w[:-1] not in members]
    if len(roots) != 1 or roots[0] != c.first:
        raise InvariantError(f"family {c} is not a rooted right-extension tree")


def gen_h1_chains(p: AlphabetParams) -> ChainFamily:
    return family(1, (Chain(m, 1) for m in _height_one(p)))


def gen_chain_primitives(c: Chain, p: AlphabetParams) -> list[Chain]:
    """Primitive families of ``c``: one per (core start letter, left attachment length).

    2(b-1) families when ``c`` starts with a, 2b when it starts with b.
    """
    groups: dict[tuple[str, int], set[str]] = {}
    for u in c.members:
        for start, i, v in _primitive_candidates(u, p):
            groups.setdefault((start, i), set()).add(v)
    out = [Chain(_canonical(g), c.height + 1) for g in groups.values()]
    for f in out:
        _check_family(f)
    expected = 2 * (p.b - 1) if c.first_letter == str(p.a) else 2 * p.b
    if len(out) != expected:
        raise InvariantError(f"{c} has {len(out)} primitive families, expected {expected}")
    return out


@lru_cache(maxsize=None)
def _gen_chains(k: int, p: AlphabetParams) -> ChainFamily:
    if k == 1:
        return gen_h1_chains(p)
    out = []
    for c in _gen_chains(k - 1, p):
        out.extend(gen_chain_primitives(c, p))
    return family(k, out)


def gen_chains_of_height(k: int, p: AlphabetParams, ceiling: int = HEIGHT_CEILING) -> ChainFamily:
    """H^k grown from H^1 by primitive families; partition of P^k is asserted."""
    _check_height(k, ceiling)
    fam = _gen_chains(k, p)
    cls = _gen_class(k, p)
    total = sum(len(c) for c in fam)
    covered = fam.members()
    if total != len(covered) or covered != cls:
        raise InvariantError(f"H^{k} over {{{p}}} does not partition P^{k}")
    return fam


def gen_chain_count(k: int, p: AlphabetParams) -> int:
    """Counting law 2(b-1) * (2b-1)^(k-1) that the construction produces."""
    return 2 * (p.b - 1) * (2 * p.b - 1) ** (k - 1)


def gen_smooth_words_of_length(n: int, p: AlphabetParams, ceiling: int = ENUMERATION_CEILING) -> set[str]:
    """Breadth-first right extension from ε under :func:`gen_is_smooth`."""
    if n < 0:
        raise DomainError(f"length must be nonnegative, got {n}")
    if n > ceiling:
        raise ResourceLimitError(f"length {n} above ceiling {ceiling}")
    frontier = {""}
    for _ in range(n):
        frontier = {w + x for w in frontier for x in p.letters if gen_is_smooth(w + x, p)}
    return frontier


def gen_oracle_words(n: int, p: AlphabetParams, ceiling: int = ORACLE_CEILING) -> set[str]:
    if n > ceiling:
        raise ResourceLimitError(f"length {n} above oracle ceiling {ceiling}")
    return {w for w in map("".join, product(p.letters, repeat=n)) if gen_is_smooth(w, p)}


def gen_gamma(n: int, p: AlphabetParams, method: str = "extension") -> int:
    if method == "extension":
        return len(gen_smooth_words_of_length(n, p))
    if method == "oracle":
        return len(gen_oracle_words(n, p))
    if method == "kernel":
        return gen_profile(n, p).count[n]
    raise DomainError(f"unknown method {method!r}")


def gen_profile(n_max: int, p: AlphabetParams) -> kernel.Profile:
    """Per-length counts, heights and letter-b extrema from the compiled walk."""
    if n_max > 256:
        raise ResourceLimitError(f"length {n_max} above ceiling 256")
    prof, _ = kernel.walk(n_max, p.a, p.b)
    return prof


def gen_frequency_extrema(n: int, p: AlphabetParams) -> tuple[Fraction, Fraction]:
    """Exact min/max of |w|_b / |w| over smooth words of length n."""
    if n < 1:
        raise DomainError(f"length must be positive, got {n}")
    prof = gen_profile(n, p)
    if prof.count[n] == 0:
        raise DomainError(f"no smooth word of length {n} over {{{p}}}")
    return Fraction(prof.bmin[n], n), Fraction(prof.bmax[n], n)
