"""Backend selection for the enumeration kernel.

The compiled ``_ckernel`` is used when it imports; otherwise the pure-Python
``_pykernel`` runs the same algorithm. :func:`use_backend` switches at runtime
(tests and the benchmark compare both).
"""

from __future__ import annotations

from dataclasses import dataclass
from types import ModuleType

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernel}
if _ckernel is not None:
    BACKENDS["compiled"] = _ckernel

_active: ModuleType = _ckernel if _ckernel is not None else _pykernel


def backend_name() -> str:
    return "compiled" if _active is _ckernel and _ckernel is not None else "python"


def use_backend(name: str) -> None:
    global _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    _active = BACKENDS[name]


@dataclass(frozen=True)
class Profile:
    """Per-length aggregates from one walk of the right-extension tree.

    Lists are indexed by length 0..n_max. ``bmin``/``bmax`` count occurrences
    of the larger letter; ``dead`` counts words with no smooth extension.
    """

    a: int
    b: int
    count: tuple[int, ...]
    hmin: tuple[int, ...]
    hmax: tuple[int, ...]
    bmin: tuple[int, ...]
    bmax: tuple[int, ...]
    dead: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.count) - 1


def walk(n_max: int, a: int = 1, b: int = 2, collect: int = -1) -> tuple[Profile, list[str]]:
    count, hmin, hmax, bmin, bmax, dead, words = _active.walk(n_max, a, b, collect)
    prof = Profile(a, b, tuple(count), tuple(hmin), tuple(hmax), tuple(bmin), tuple(bmax), tuple(dead))
    return prof, words


def word_height(word: str, a: int = 1, b: int = 2) -> int:
    return _active.word_height(word, a, b)


def kolakoski(n: int) -> str:
    return _active.kolakoski(n)
