"""
Maxwell Quasi-Trefftz Toolkit - Cache Manager
==============================================

Thread-safe keyed cache for operator matrices, space bases and
factorizations. Each key is built by a single writer; finished entries
are read without waiting on builds of other keys.
"""

import json
import logging
import os
import threading
from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, Optional

import sys
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import CACHE_CONFIG

logger = logging.getLogger(__name__)


@dataclass
class CacheStats:
    """Hit/build counters for one cache."""
    hits: int = 0
    builds: int = 0
    disk_loads: int = 0
    disk_writes: int = 0


class CacheManager:
    """
    Memo table keyed by hashable tuples such as (op_kind, k).

    Uses a reentrant lock for the table and one lock per key for builds,
    so a builder may itself consult the cache for smaller keys.
    Optional JSON persistence is enabled by giving both an encoder and
    a decoder plus a directory.
    """

    def __init__(
        self,
        name: str,
        persist_dir: Optional[str] = None,
        encoder: Optional[Callable[[Any], Dict]] = None,
        decoder: Optional[Callable[[Dict], Any]] = None,
        key_check: Optional[Callable[[Hashable, Any], bool]] = None,
    ):
        """
        Args:
            name: Label used in logs and in persisted file names
            persist_dir: Directory for JSON dumps; None keeps the cache in memory
            encoder: value -> JSON-compatible dict
            decoder: JSON dict -> value
            key_check: (key, loaded value) -> True if the file holds that key
        """
        self.name = name
        self._lock = threading.RLock()
        self._entries: Dict[Hashable, Any] = {}
        self._key_locks: Dict[Hashable, threading.RLock] = {}
        self._persist_dir = persist_dir
        self._encoder = encoder
        self._decoder = decoder
        self._key_check = key_check
        self.enabled = CACHE_CONFIG.enabled
        self.stats = CacheStats()

    # =========================================================================
    # LOOKUP
    # =========================================================================

    def get_or_build(self, key: Hashable, builder: Callable[[], Any]) -> Any:
        """Return the cached value for `key`, building it once if absent."""
        if not self.enabled:
            return builder()

        with self._lock:
            if key in self._entries:
                self.stats.hits += 1
                return self._entries[key]
            key_lock = self._key_locks.setdefault(key, threading.RLock())

        with key_lock:
            with self._lock:
                if key in self._entries:
                    self.stats.hits += 1
                    return self._entries[key]

            value = self._load(key)
            if value is None:
                logger.debug(f"[{self.name}] building {key}")
                value = builder()
                with self._lock:
                    self.stats.builds += 1
                self._store(key, value)

            with self._lock:
                self._entries[key] = value
            return value

    def inject(self, key: Hashable, value: Any):
        """Place a value directly (fault-injection hook for self-checks)."""
        with self._lock:
            self._entries[key] = value
        logger.warning(f"[{self.name}] injected value for {key}")

    def clear(self):
        with self._lock:
            self._entries.clear()
            self._key_locks.clear()

    def __contains__(self, key: Hashable) -> bool:
        with self._lock:
            return key in self._entries

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)

    # =========================================================================
    # PERSISTENCE
    # =========================================================================

    def _path_for(self, key: Hashable) -> Optional[str]:
        if not (self._persist_dir and self._encoder and self._decoder):
            return None
        stem = "_".join(str(part) for part in (key if isinstance(key, tuple) else (key,)))
        return os.path.join(self._persist_dir, f"{self.name}_{stem}.json")

    def _load(self, key: Hashable) -> Any:
        path = self._path_for(key)
        if path is None or not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as handle:
                value = self._decoder(json.load(handle))
        except (OSError, ValueError, KeyError) as e:
            logger.warning(f"[{self.name}] ignoring unreadable cache file {path}: {e}")
            return None
        if self._key_check is not None and not self._key_check(key, value):
            logger.warning(f"[{self.name}] ignoring cache file {path}: contents do not match {key}")
            return None
        with self._lock:
            self.stats.disk_loads += 1
        return value

    def _store(self, key: Hashable, value: Any):
        path = self._path_for(key)
        if path is None:
            return
        try:
            os.makedirs(self._persist_dir, exist_ok=True)
            tmp_path = f"{path}.{threading.get_ident()}.tmp"
            with open(tmp_path, "w", encoding="utf-8") as handle:
                json.dump(self._encoder(value), handle)
            os.replace(tmp_path, path)
        except OSError as e:
            logger.warning(f"[{self.name}] could not persist {key}: {e}")
            return
        with self._lock:
            self.stats.disk_writes += 1
