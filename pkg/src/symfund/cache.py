"""Append-only newline-delimited JSON store for computed expansions.

The first line is a header carrying the schema version.  Every further line
is one record::

    {"kind": "plethysm", "alpha": [2], "beta": [2],
     "expansion": {"terms": [...]}, "tool_version": "0.1.0"}

Records written by another tool version are ignored.  Unparseable lines
(for instance a torn final write) are skipped with a warning.  Readers take
a shared and writers an exclusive advisory lock on the file.
"""
from __future__ import annotations

import fcntl
import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .formats import from_json_obj, to_json_obj
from .partition import Partition
from .symfun import SchurVector

SCHEMA_VERSION = 1
HEADER = {"schema": SCHEMA_VERSION, "tool": "symfund"}
ENV_VAR = "SYMFUND_CACHE"

log = logging.getLogger(__name__)


def default_cache_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "symfund" / "cache.jsonl"


@dataclass(frozen=True)
class CacheRecord:
    kind: str
    alpha: Partition
    beta: Partition
    expansion: SchurVector
    tool_version: str = __version__

    def to_line(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "alpha": list(self.alpha),
                "beta": list(self.beta),
                "expansion": to_json_obj(self.expansion),
                "tool_version": self.tool_version,
            }
        )

    @classmethod
    def from_obj(cls, obj: dict) -> "CacheRecord":
        if obj["kind"] not in ("plethysm", "product"):
            raise ValueError(f"unknown record kind {obj['kind']!r}")
        return cls(
            obj["kind"],
            tuple(obj["alpha"]),
            tuple(obj["beta"]),
            from_json_obj(obj["expansion"]),
            obj["tool_version"],
        )


class CacheStore:
    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else default_cache_path()
        self.records: dict[tuple[str, Partition, Partition], SchurVector] = {}
        self.load()

    def load(self) -> None:
        self.records.clear()
        if not self.path.exists():
            return
        with open(self.path, "r", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_SH)
            try:
                lines = fh.read().splitlines()
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                if lineno == 1 and "schema" in obj:
                    if obj["schema"] != SCHEMA_VERSION:
                        log.warning("cache %s has schema %s; ignoring it", self.path, obj["schema"])
                        return
                    continue
                rec = CacheRecord.from_obj(obj)
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("skipping corrupt cache line %d in %s: %s", lineno, self.path, exc)
                continue
            if rec.tool_version != __version__:
                continue
            self.records[rec.kind, rec.alpha, rec.beta] = rec.expansion

    def get(self, kind: str, alpha: Partition, beta: Partition) -> SchurVector | None:
        return self.records.get((kind, tuple(alpha), tuple(beta)))

    def put(self, kind: str, alpha: Partition, beta: Partition, value: SchurVector) -> None:
        key = (kind, tuple(alpha), tuple(beta))
        if key in self.records:
            return
        self.records[key] = value
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a+", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.seek(0, os.SEEK_END)
                if fh.tell() == 0:
                    fh.write(json.dumps(HEADER) + "\n")
                else:
                    fh.seek(fh.tell() - 1)
                    if fh.read(1) != "\n":
                        fh.write("\n")
                fh.write(CacheRecord(key[0], key[1], key[2], value).to_line() + "\n")
                fh.flush()
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
