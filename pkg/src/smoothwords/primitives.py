"""Anti-derivatives and the height classes P^k(ε)."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InvariantError, NotDifferentiable, ResourceLimitError
from .words import complement, derivative, is_smooth, show

HEIGHT_CEILING = 12

# primitives of ε, ε itself excluded
_BASE_CLASS = frozenset({"1", "2", "12", "21"})


def expand(w: str, start: str) -> str:
    """Word whose j-th run has length w[j], runs alternating from ``start``."""
    if start not in ("1", "2"):
        raise DomainError(f"start letter must be 1 or 2, got {start!r}")
    out = []
    letter = start
    for ch in w:
        out.append(letter * int(ch))
        letter = "2" if letter == "1" else "1"
    return "".join(out)


def _candidates(w: str):
    for start in ("1", "2"):
        core = expand(w, start)
        head = complement(core[0])
        tail = complement(core[-1])
        for x in ("", head):
            for y in ("", tail):
                yield x + core + y


def primitives(w: str) -> frozenset[str]:
    """All nonempty v with D(v) = w.

    Candidates are ``x + expand(w, β) + y`` with optional single-letter
    attachments; only those that actually differentiate back to ``w`` are
    kept, which leaves 2, 4 or 8 words depending on whether ``w`` starts
    and ends with 2. ``primitives("")`` is ``{1, 2, 12, 21}``.
    """
    if not w:
        return _BASE_CLASS
    if not is_smooth(w):
        raise DomainError(f"{w} is not smooth")
    out = set()
    for v in _candidates(w):
        try:
            if derivative(v) == w:
                out.add(v)
        except NotDifferentiable:
            continue
    if not out:
        raise InvariantError(f"no primitive found for smooth word {show(w)}")
    return frozenset(out)


@dataclass(frozen=True)
class HeightClass:
    k: int
    members: frozenset[str]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w: object) -> bool:
        return w in self.members

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> list[str]:
        return sorted(self.members, key=lambda v: (len(v), v))

    @property
    def max_length(self) -> int:
        return max(map(len, self.members))

    @property
    def min_length(self) -> int:
        return min(map(len, self.members))


_class_lock = threading.Lock()


@lru_cache(maxsize=None)
def _class_members(k: int) -> frozenset[str]:
    if k == 1:
        return _BASE_CLASS
    out: set[str] = set()
    for w in _class_members(k - 1):
        out.update(primitives(w))
    return frozenset(out)


def height_class(k: int, ceiling: int = HEIGHT_CEILING) -> HeightClass:
    """P^k(ε), built from P^(k-1)(ε) by taking primitives; lower classes memoised."""
    if k < 1:
        raise DomainError(f"height must be >= 1, got {k}")
    if k > ceiling:
        raise ResourceLimitError(f"height {k} above ceiling {ceiling}")
    with _class_lock:
        return HeightClass(k, _class_members(k))
