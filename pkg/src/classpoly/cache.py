"""
Memory and disk cache for Hilbert class polynomials

Disk format, one file per D: a header line "D h" followed by one decimal
coefficient per line, highest degree first.
"""

import logging
import random
import threading
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from config.settings import get_cache_dir
from src.classpoly.hilbert import ClassPoly, hilbert_class_poly, reduce_mod_p
from src.errors import InvariantError, ParseError
from src.finitepoly.fppoly import FpPoly

logger = logging.getLogger(__name__)


class ClassPolyCache:
    """Shared H_{-D} store; each key is computed by exactly one writer."""

    def __init__(self, cache_dir: Optional[Path] = None):
        """Initialize the cache.

        Args:
            cache_dir: Directory for cached polynomials. None keeps them in memory only.
        """
        self.cache_dir = Path(cache_dir) if cache_dir else None
        if self.cache_dir:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
        self._polys: Dict[int, ClassPoly] = {}
        self._reduced: Dict[Tuple[int, int], FpPoly] = {}
        self._locks: Dict[int, threading.Lock] = {}
        self._guard = threading.Lock()

    def _lock_for(self, D: int) -> threading.Lock:
        with self._guard:
            return self._locks.setdefault(D, threading.Lock())

    def _path(self, D: int) -> Path:
        return self.cache_dir / f"H_{D}.txt"

    def _read(self, D: int) -> Optional[ClassPoly]:
        if not self.cache_dir:
            return None
        path = self._path(D)
        if not path.exists():
            return None
        lines = path.read_text().split()
        try:
            header_d, degree = int(lines[0]), int(lines[1])
            coeffs = tuple(int(x) for x in lines[2:])
        except (IndexError, ValueError) as exc:
            raise ParseError(f"corrupt cache file {path}") from exc
        if header_d != D or len(coeffs) != degree + 1:
            raise ParseError(f"corrupt cache file {path}")
        return ClassPoly(D, coeffs)

    def _write(self, H: ClassPoly):
        if not self.cache_dir:
            return
        body = "\n".join([f"{H.D} {H.degree}"] + [str(c) for c in H.coeffs])
        tmp = self._path(H.D).with_suffix(".tmp")
        tmp.write_text(body + "\n")
        tmp.replace(self._path(H.D))

    def get(self, D: int) -> ClassPoly:
        """H_{-D} from memory, then disk, else computed and stored."""
        cached = self._polys.get(D)
        if cached is not None:
            return cached
        with self._lock_for(D):
            cached = self._polys.get(D)
            if cached is None:
                cached = self._read(D)
                if cached is None:
                    cached = hilbert_class_poly(D)
                    self._write(cached)
                self._polys[D] = cached
        return cached

    def mod_p(self, D: int, p: int) -> FpPoly:
        key = (D, p)
        reduced = self._reduced.get(key)
        if reduced is None:
            reduced = reduce_mod_p(self.get(D), p)
            self._reduced[key] = reduced
        return reduced

    def cached_discriminants(self) -> List[int]:
        if not self.cache_dir:
            return sorted(self._polys)
        return sorted(int(path.stem[2:]) for path in self.cache_dir.glob("H_*.txt"))

    def spot_check(self, rng: Optional[random.Random] = None) -> Optional[int]:
        """Recompute one random cached polynomial and compare.

        Returns:
            The D that was checked, or None if nothing is cached
        """
        stored = self.cached_discriminants()
        if not stored:
            return None
        D = (rng or random.Random()).choice(stored)
        cached = self._read(D) if self.cache_dir else self._polys[D]
        if hilbert_class_poly(D) != cached:
            raise InvariantError(f"cached H_{{-{D}}} differs from a fresh computation")
        logger.info("cache spot check passed for D = %d", D)
        return D


_default: Optional[ClassPolyCache] = None
_default_guard = threading.Lock()


def default_cache() -> ClassPolyCache:
    """Process-wide cache, backed by QUATORDER_CACHE_DIR when set."""
    global _default
    with _default_guard:
        if _default is None:
            _default = ClassPolyCache(get_cache_dir())
        return _default
