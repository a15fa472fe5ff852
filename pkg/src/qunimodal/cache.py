"""Checksummed on-disk cache for expanded coefficient rows.

Layout: one CSV dump per (family, n) pair plus a sha256 sidecar. Writes
go through a temporary file and ``os.replace`` so a crash never leaves
a half-written entry behind. Anything failing the checksum is reported
as :class:`CacheCorrupt`; callers are expected to rebuild and re-store.
"""

from __future__ import annotations

import hashlib
import os
import tempfile

from .errors import CacheCorrupt
from .polynomials import Polynomial, dump_lines, parse_dump

__all__ = ["ENV_CACHE_DIR", "cache_load", "cache_store", "resolve_cache_dir"]

ENV_CACHE_DIR = "QUNIMODAL_CACHE_DIR"


def resolve_cache_dir(explicit: str | None) -> str | None:
    """An explicit flag wins, then the environment, then no cache at all."""
    if explicit:
        return explicit
    return os.environ.get(ENV_CACHE_DIR) or None


def _entry_path(cache_dir: str, family: str, n: int) -> str:
    return os.path.join(cache_dir, f"{family}_{n:05d}.csv")


def _atomic_write(path: str, data: str) -> None:
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp_", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def cache_store(cache_dir: str, family: str, n: int, p: Polynomial) -> str:
    """Write the dump and its checksum sidecar; returns the entry path."""
    os.makedirs(cache_dir, exist_ok=True)
    path = _entry_path(cache_dir, family, n)
    payload = "\n".join(dump_lines(p)) + "\n"
    digest = hashlib.sha256(payload.encode("utf-8")).hexdigest()
    _atomic_write(path, payload)
    _atomic_write(path + ".sha256", digest + "\n")
    return path


def cache_load(cache_dir: str, family: str, n: int) -> Polynomial | None:
    """Return the cached row, None on a clean miss.

    Raises :class:`CacheCorrupt` when the entry exists but its sidecar
    is missing, the checksum disagrees, or the dump fails to parse.
    """
    path = _entry_path(cache_dir, family, n)
    if not os.path.exists(path):
        return None
    with open(path, "r", encoding="utf-8") as fh:
        payload = fh.read()
    sidecar = path + ".sha256"
    if not os.path.exists(sidecar):
        raise CacheCorrupt(f"{path} has no checksum sidecar")
    with open(sidecar, "r", encoding="utf-8") as fh:
        want = fh.read().strip()
    got = hashlib.sha256(payload.encode("utf-8")).hexdigest()
    if got != want:
        raise CacheCorrupt(f"checksum mismatch for {path}")
    try:
        return parse_dump(payload.splitlines())
    except ValueError as exc:
        raise CacheCorrupt(f"unparseable cache entry {path}: {exc}") from exc
