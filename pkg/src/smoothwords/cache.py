"""Checksummed on-disk memoisation of expensive enumerations.

Each record is one JSON line in its own file, named from a hash of
``kind`` and ``key``. Writes go to a temporary file that is renamed into
place, so readers never see a partial record. Corrupt or stale records are
reported with a warning and treated as misses.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any

from .chains import Chain, ChainFamily, chains_of_height
from .enumeration import StatsRecord, length_stats
from .primitives import height_class

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
KINDS = ("stats", "height_class", "chain_family")
ENV_VAR = "SMOOTHWORDS_CACHE"


def checksum(payload: Any) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CacheRecord:
    schema_version: int
    kind: str
    key: str
    payload: Any
    checksum: str

    def to_line(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


class Cache:
    def __init__(self, root: str | os.PathLike, schema_version: int = SCHEMA_VERSION):
        self.root = Path(root)
        self.schema_version = schema_version

    @classmethod
    def from_env(cls, root: str | None = None) -> "Cache | None":
        root = root or os.environ.get(ENV_VAR)
        return cls(root) if root else None

    def path(self, kind: str, key: str) -> Path:
        digest = hashlib.sha256(f"{kind}:{key}".encode()).hexdigest()[:32]
        return self.root / f"{kind}-{digest}.jsonl"

    def write(self, kind: str, key: str, payload: Any) -> CacheRecord | None:
        if kind not in KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        rec = CacheRecord(self.schema_version, kind, key, payload, checksum(payload))
        target = self.path(kind, key)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".jsonl")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(rec.to_line() + "\n")
            os.replace(tmp, target)
        except OSError as exc:
            log.warning("cache write failed for %s %s: %s", kind, key, exc)
            return None
        return rec

    def read(self, kind: str, key: str) -> Any | None:
        path = self.path(kind, key)
        try:
            line = path.read_text(encoding="utf-8").strip()
        except FileNotFoundError:
            return None
        except OSError as exc:
            log.warning("cache read failed for %s: %s", path, exc)
            return None
        try:
            rec = CacheRecord(**json.loads(line))
        except (ValueError, TypeError) as exc:
            log.warning("ignoring unreadable cache record %s: %s", path, exc)
            return None
        if rec.schema_version != self.schema_version:
            log.warning("ignoring cache record %s with schema %s", path, rec.schema_version)
            return None
        if rec.kind != kind or rec.key != key:
            log.warning("ignoring cache record %s: key mismatch", path)
            return None
        if checksum(rec.payload) != rec.checksum:
            log.warning("ignoring cache record %s: checksum mismatch", path)
            return None
        return rec.payload


def cached_stats(cache: Cache | None, n_max: int) -> list[StatsRecord]:
    key = f"n_max={n_max}"
    if cache is not None:
        rows = cache.read("stats", key)
        if rows is not None:
            return [StatsRecord.from_row(r) for r in rows]
    records = length_stats(n_max)
    if cache is not None:
        cache.write("stats", key, [r.as_row() for r in records])
    return records


def cached_height_class(cache: Cache | None, k: int) -> list[str]:
    key = f"k={k}"
    if cache is not None:
        words = cache.read("height_class", key)
        if words is not None:
            return list(words)
    words = height_class(k).sorted()
    if cache is not None:
        cache.write("height_class", key, words)
    return words


def cached_chain_family(cache: Cache | None, k: int) -> ChainFamily:
    key = f"k={k}"
    if cache is not None:
        chains = cache.read("chain_family", key)
        if chains is not None:
            return ChainFamily(k, tuple(Chain.parse(s, k) for s in chains))
    fam = chains_of_height(k)
    if cache is not None:
        cache.write("chain_family", key, [str(c) for c in fam])
    return fam
