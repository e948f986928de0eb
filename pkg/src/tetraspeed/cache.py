"""Plain-text cache of computed constant speeds.

One record per line, ``base<TAB>speed<TAB>policy``. Corrupt lines are
reported with a warning and ignored.
"""

from __future__ import annotations

import logging
import os
import threading
from pathlib import Path

logger = logging.getLogger(__name__)


class SpeedCache:
    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._entries: dict[tuple[str, str], int] = {}
        self._lock = threading.Lock()
        self.load()

    def load(self) -> None:
        self._entries.clear()
        if not self.path.exists():
            return
        with open(self.path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 3 or not parts[0].isdigit() or not parts[1].isdigit() or not parts[2]:
                    logger.warning("%s:%d: ignoring corrupt cache line %r", self.path, lineno, line[:80])
                    continue
                self._entries[(parts[0], parts[2])] = int(parts[1])

    def get(self, base: int | str, policy: str) -> int | None:
        return self._entries.get((str(base), policy))

    def put(self, base: int | str, speed: int, policy: str) -> None:
        key = (str(base), policy)
        with self._lock:
            if self._entries.get(key) == speed:
                return
            self._entries[key] = speed
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(f"{key[0]}\t{speed}\t{policy}\n")

    def items(self):
        return [(int(b), p, v) for (b, p), v in sorted(self._entries.items(), key=lambda kv: (len(kv[0][0]), kv[0]))]

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        base, policy = key
        return (str(base), policy) in self._entries
