"""On-disk cache of primitive bases, one JSON file per degree."""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from . import __version__
from .algebra import TreeVector
from .formats import FormatError, vector_from_json, vector_to_json
from .treecode import CodeError

log = logging.getLogger(__name__)

CACHE_FORMAT = "tridend-primitive-basis"
TREE_ORDER = "packed-word-lex-v1"


class StaleCacheError(ValueError):
    """The cache file was written by another version or tree order."""


class CorruptCacheError(ValueError):
    pass


class DirectoryCache:
    """Reads and writes ``prim_<n>.json`` under ``root``.

    With ``strict=False`` (the default, used by the pipeline) stale or
    unreadable files are reported and treated as missing, so they get
    recomputed and overwritten.
    """

    def __init__(self, root: str | Path, strict: bool = False):
        self.root = Path(root)
        self.strict = strict

    def path(self, n: int) -> Path:
        return self.root / f"prim_{n}.json"

    def exists(self, n: int) -> bool:
        return self.path(n).is_file()

    def read(self, n: int) -> tuple[list[TreeVector], list[str]]:
        """Parse the file for degree n; raises on any problem."""
        try:
            data = json.loads(self.path(n).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise CorruptCacheError(f"degree {n}: cannot read cache file: {exc}") from None
        if not isinstance(data, dict):
            raise CorruptCacheError(f"degree {n}: cache file is not a JSON object")
        keys = {"format", "version", "tree_order", "degree", "basis", "provenance"}
        if set(data) != keys:
            raise CorruptCacheError(f"degree {n}: unexpected cache fields {sorted(set(data) ^ keys)}")
        if data["format"] != CACHE_FORMAT or data["version"] != __version__ \
                or data["tree_order"] != TREE_ORDER:
            raise StaleCacheError(
                f"degree {n}: cache written by {data['format']} {data['version']} "
                f"with tree order {data['tree_order']}")
        if data["degree"] != n:
            raise CorruptCacheError(f"degree {n}: file claims degree {data['degree']}")
        try:
            basis = [vector_from_json(v) for v in data["basis"]]
        except (FormatError, CodeError, TypeError) as exc:
            raise CorruptCacheError(f"degree {n}: {exc}") from None
        prov = data["provenance"]
        if not isinstance(prov, list) or len(prov) != len(basis) \
                or not all(isinstance(p, str) for p in prov):
            raise CorruptCacheError(f"degree {n}: provenance does not match the basis")
        return basis, prov

    def load(self, n: int) -> tuple[list[TreeVector], list[str]] | None:
        if not self.exists(n):
            return None
        try:
            return self.read(n)
        except (StaleCacheError, CorruptCacheError) as exc:
            if self.strict:
                raise
            log.warning("%s; recomputing", exc)
            return None

    def store(self, n: int, basis: list[TreeVector], provenance: list[str]) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        data = {
            "format": CACHE_FORMAT,
            "version": __version__,
            "tree_order": TREE_ORDER,
            "degree": n,
            "basis": [vector_to_json(v) for v in basis],
            "provenance": list(provenance),
        }
        text = json.dumps(data, indent=1) + "\n"
        tmp = self.path(n).with_suffix(".json.tmp")
        tmp.write_text(text)
        os.replace(tmp, self.path(n))
