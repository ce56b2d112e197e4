"""Maximal right smooth extension (MRSE) chains and the families H^k."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError, InvariantError, NotSmooth
from .primitives import HEIGHT_CEILING, height_class, primitives
from .words import complement, height, show


def chain_count(k: int) -> int:
    """Closed-form |H^k| = 2 * 3^(k-1)."""
    if k < 1:
        raise DomainError(f"height must be >= 1, got {k}")
    return 2 * 3 ** (k - 1)


@dataclass(frozen=True, order=True)
class Chain:
    """Members u_1, u_2, ... of one height, listed shortest first.

    Over {1, 2} consecutive members differ by one appended letter. The
    generalized families built in :mod:`smoothwords.general` reuse this type
    and may branch (see :meth:`is_linear`).
    """

    members: tuple[str, ...]
    height: int = field(compare=False)

    def __post_init__(self):
        if not self.members:
            raise DomainError("a chain needs at least one member")

    @property
    def first(self) -> str:
        return self.members[0]

    @property
    def last(self) -> str:
        return self.members[-1]

    @property
    def first_letter(self) -> str:
        return self.members[0][0]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __str__(self) -> str:
        return "<".join(self.members)

    def is_linear(self) -> bool:
        m = self.members
        return all(m[i + 1][:-1] == m[i] for i in range(len(m) - 1))

    @classmethod
    def parse(cls, text: str, height: int | None = None) -> "Chain":
        members = tuple(s.strip() for s in text.replace("≺", "<").split("<"))
        if height is None:
            height = _height_or_domain_error(members[0])
        return cls(members, height)


@dataclass(frozen=True)
class ChainFamily:
    k: int
    chains: tuple[Chain, ...]

    def __len__(self) -> int:
        return len(self.chains)

    def __iter__(self):
        return iter(self.chains)

    def members(self) -> set[str]:
        return {w for c in self.chains for w in c.members}


def _height_or_domain_error(w: str) -> int:
    try:
        return height(w)
    except NotSmooth as exc:
        raise DomainError(str(exc)) from None


def family(k: int, chains: Iterable[Chain]) -> ChainFamily:
    """Family with chains in canonical order (lexicographic by first member)."""
    return ChainFamily(k, tuple(sorted(chains, key=lambda c: c.first)))


def _has_height(w: str, k: int) -> bool:
    try:
        return height(w) == k
    except NotSmooth:
        return False


def simple_right_extensions(u: str, k: int) -> set[str]:
    if _height_or_domain_error(u) != k:
        raise DomainError(f"{show(u)} does not have height {k}")
    return {u + a for a in "12" if _has_height(u + a, k)}


def _link(words: set[str] | frozenset[str], k: int) -> list[Chain]:
    """Split a prefix-linked word set into maximal paths; out-degree must be <= 1."""
    out = []
    for start in sorted(w for w in words if w[:-1] not in words):
        members = [start]
        while True:
            ext = [members[-1] + a for a in "12" if members[-1] + a in words]
            if len(ext) > 1:
                raise InvariantError(f"{members[-1]} has two simple right extensions at height {k}")
            if not ext:
                break
            members.append(ext[0])
        out.append(Chain(tuple(members), k))
    return out


def _assert_maximal(c: Chain, k: int) -> None:
    if len(c.first) > 1 and _has_height(c.first[:-1], k):
        raise InvariantError(f"chain {c} is not left-maximal")
    if simple_right_extensions(c.last, k):
        raise InvariantError(f"chain {c} is not right-maximal")


def chains_of_height(k: int, ceiling: int = HEIGHT_CEILING) -> ChainFamily:
    """H^k by parent-linking inside P^k(ε)."""
    cls = height_class(k, ceiling)
    chains = _link(cls.members, k)
    for c in chains:
        _assert_maximal(c, k)
    return family(k, chains)


def split_by_first_letter(h: ChainFamily) -> tuple[ChainFamily, ChainFamily]:
    ones = [c for c in h if c.first_letter == "1"]
    twos = [c for c in h if c.first_letter != "1"]
    return family(h.k, ones), family(h.k, twos)


def chain_complement(c: Chain) -> Chain:
    return Chain(tuple(complement(w) for w in c.members), c.height)


def validate_chain(c: Chain) -> None:
    """Raise DomainError unless ``c`` is a member of H^k for its height k."""
    if not c.is_linear():
        raise DomainError(f"{c} is not a simple right extension sequence")
    for w in c.members:
        if not _has_height(w, c.height):
            raise DomainError(f"member {show(w)} of {c} does not have height {c.height}")
    if len(c.first) > 1 and _has_height(c.first[:-1], c.height):
        raise DomainError(f"{c} is not left-maximal")
    if any(_has_height(c.last + a, c.height) for a in "12"):
        raise DomainError(f"{c} is not right-maximal")


def chain_primitives(c: Chain) -> frozenset[Chain]:
    """Chains of H^(k+1) made of exactly the primitives of ``c``'s members.

    Two chains when ``c`` starts with 1, four when it starts with 2.
    """
    validate_chain(c)
    pool: set[str] = set()
    for w in c.members:
        pool.update(primitives(w))
    out = _link(pool, c.height + 1)
    for p in out:
        _assert_maximal(p, c.height + 1)
    expected = 2 if c.first_letter == "1" else 4
    if len(out) != expected:
        raise InvariantError(f"{c} has {len(out)} primitive chains, expected {expected}")
    return frozenset(out)


@dataclass
class PartitionReport:
    k: int
    checks: dict[str, tuple[bool, str]]
    chain_total: int
    class_size: int

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.checks.values())

    def lines(self) -> list[str]:
        out = [f"{name}: {'PASS' if ok else 'FAIL'} ({detail})" for name, (ok, detail) in self.checks.items()]
        out.append(f"|H^{self.k}| = {self.chain_total}, |P^{self.k}| = {self.class_size}")
        return out


def verify_partition(k: int, ceiling: int = HEIGHT_CEILING) -> PartitionReport:
    """Check out-degree, disjoint cover and the counting law for H^k."""
    cls = height_class(k, ceiling).members
    checks: dict[str, tuple[bool, str]] = {}

    outdeg = max(sum(1 for a in "12" if u + a in cls) for u in cls)
    checks["out-degree <= 1"] = (outdeg <= 1, f"max out-degree {outdeg}")

    try:
        chains = chains_of_height(k, ceiling).chains
    except InvariantError as exc:
        checks["construction"] = (False, str(exc))
        return PartitionReport(k, checks, 0, len(cls))

    seen: set[str] = set()
    overlap = 0
    for c in chains:
        overlap += sum(1 for w in c.members if w in seen)
        seen.update(c.members)
    checks["disjoint cover"] = (
        overlap == 0 and seen == cls,
        f"overlaps {overlap}, uncovered {len(cls - seen)}, foreign {len(seen - cls)}",
    )
    law = chain_count(k)
    checks["|H^k| = 2*3^(k-1)"] = (len(chains) == law, f"{len(chains)} vs {law}")
    total = sum(len(c) for c in chains)
    checks["|P^k| = sum of chain lengths"] = (total == len(cls), f"{total} vs {len(cls)}")
    return PartitionReport(k, checks, len(chains), len(cls))
