"""
File-backed cache of computed tables.

The file is a JSON document {"version": 1, "entries": {family: {n: value}}}
where polynomial values are lists of decimal strings and scalar values
(E, S) are single decimal strings. A file written under another version is
ignored and replaced on the next save.
"""

import json
import logging
import os
import tempfile
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Dict, Optional, Union

from algebra.polyring import IntPoly
from exceptions import CacheFormatError

try:
    import fcntl
except ImportError:  # pragma: no cover - non-POSIX platforms
    fcntl = None

logger = logging.getLogger(__name__)

CACHE_VERSION = 1

Value = Union[IntPoly, int]


class Family(str, Enum):
    A = "A"
    B = "B"
    BMINUS = "Bminus"
    BPLUS = "Bplus"
    P = "P"
    Q = "Q"
    E = "E"
    S = "S"

    @property
    def scalar(self) -> bool:
        return self in (Family.E, Family.S)


class TableCache:
    """Map (family, n) to a coefficient vector or integer, persisted as JSON."""

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = Path(path) if path else None
        self._entries: Dict[Family, Dict[int, Value]] = {family: {} for family in Family}
        self.dirty = False

    def get(self, family: Union[Family, str], n: int) -> Optional[Value]:
        return self._entries[Family(family)].get(n)

    def put(self, family: Union[Family, str], n: int, value: Value):
        family = Family(family)
        if family.scalar and not isinstance(value, int):
            raise TypeError(f"{family.value} entries are integers, got {type(value).__name__}")
        if not family.scalar and not isinstance(value, IntPoly):
            raise TypeError(f"{family.value} entries are polynomials, got {type(value).__name__}")
        if self._entries[family].get(n) != value:
            self._entries[family][n] = value
            self.dirty = True

    def entries(self, family: Union[Family, str]) -> Dict[int, Value]:
        return dict(self._entries[Family(family)])

    def __len__(self) -> int:
        return sum(len(table) for table in self._entries.values())

    # -- serialization ------------------------------------------------------

    def to_document(self) -> Dict:
        document = {"version": CACHE_VERSION, "entries": {}}
        for family, table in self._entries.items():
            if not table:
                continue
            document["entries"][family.value] = {
                str(n): str(value) if family.scalar else [str(c) for c in value.coeffs]
                for n, value in sorted(table.items())
            }
        return document

    def load_document(self, document: Dict):
        if not isinstance(document, dict):
            raise CacheFormatError("cache document is not a JSON object")
        version = document.get("version")
        if version != CACHE_VERSION:
            logger.warning(f"Ignoring table cache with version {version!r} (expected {CACHE_VERSION})")
            self.dirty = True
            return
        try:
            for name, table in document.get("entries", {}).items():
                family = Family(name)
                for n, raw in table.items():
                    value = int(raw) if family.scalar else IntPoly(tuple(int(c) for c in raw))
                    self._entries[family][int(n)] = value
        except (ValueError, TypeError, AttributeError) as exc:
            raise CacheFormatError(f"malformed cache entry: {exc}")

    @contextmanager
    def _locked(self):
        lock_path = self.path.with_name(self.path.name + ".lock")
        with open(lock_path, "a") as handle:
            if fcntl is not None:
                fcntl.flock(handle, fcntl.LOCK_EX)
            try:
                yield
            finally:
                if fcntl is not None:
                    fcntl.flock(handle, fcntl.LOCK_UN)

    def load(self) -> "TableCache":
        """Read the file if it exists; a missing file is an empty cache."""
        if self.path is None or not self.path.exists():
            return self
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                document = json.load(f)
        except json.JSONDecodeError as exc:
            raise CacheFormatError(f"{self.path} is not valid JSON: {exc}")
        self.dirty = False
        self.load_document(document)
        logger.debug(f"Loaded {len(self)} cache entries from {self.path}")
        return self

    def save(self):
        """Write atomically: temporary file in the same directory, then os.replace."""
        if self.path is None:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps(self.to_document(), indent=2, sort_keys=True)
        with self._locked():
            fd, temp_path = tempfile.mkstemp(prefix=self.path.name, suffix=".tmp", dir=self.path.parent)
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as f:
                    f.write(payload + "\n")
                os.replace(temp_path, self.path)
            except BaseException:
                if os.path.exists(temp_path):
                    os.unlink(temp_path)
                raise
        self.dirty = False
        logger.debug(f"Saved {len(self)} cache entries to {self.path}")
