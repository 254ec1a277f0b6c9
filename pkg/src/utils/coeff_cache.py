from fractions import Fraction
from pathlib import Path
from typing import List, Literal, Optional, Tuple
import os
import tempfile

from loguru import logger
from pydantic import BaseModel, ValidationError
from tqdm import tqdm

from ..settings import get_settings
from .dpolys import CoeffTriple, coeff_triple
from .exceptions import CacheIOError, InternalInconsistency
from .legendre_basis import LegendreSeries

settings = get_settings()

FORMAT_VERSION = 1

FractionPair = Tuple[str, str]


class CacheEntry(BaseModel):
    """On-disk form of one coefficient triple; fractions as [numerator, denominator] strings."""

    n: int
    r: List[FractionPair]
    b: List[FractionPair]
    c: List[FractionPair]
    format_version: Literal[1] = FORMAT_VERSION

    @classmethod
    def from_triple(cls, triple: CoeffTriple) -> "CacheEntry":
        def pairs(series: LegendreSeries) -> List[FractionPair]:
            return [(str(c.numerator), str(c.denominator)) for c in series.coeffs]

        return cls(n=triple.degree, r=pairs(triple.r), b=pairs(triple.b), c=pairs(triple.c))

    def to_triple(self) -> CoeffTriple:
        def series(pairs: List[FractionPair]) -> LegendreSeries:
            return LegendreSeries(tuple(Fraction(int(num), int(den)) for num, den in pairs))

        return CoeffTriple(degree=self.n, r=series(self.r), b=series(self.b), c=series(self.c)).check()


class CacheStat(BaseModel):
    path: str
    count: int
    max_n: Optional[int]


class CacheBuildResult(BaseModel):
    written: int
    skipped: int


class CoeffCache:
    """
    Directory of JSON files, one per degree, holding exact R_n, B_n, C_n.

    Files are written to a temporary name and moved into place, so a reader
    never sees a partial entry.
    """

    def __init__(self, cache_dir: Optional[Path] = None):
        """
        Initialize the cache.

        Args:
            cache_dir: Directory to use; defaults to settings.CACHE_DIR
        """
        self.cache_dir = Path(cache_dir or settings.CACHE_DIR).expanduser()
        logger.info(f"Initialized CoeffCache at {self.cache_dir}")

    def path(self, n: int) -> Path:
        return self.cache_dir / f"triple_{n:05d}.json"

    def _entries(self) -> List[Path]:
        if not self.cache_dir.is_dir():
            return []
        try:
            return sorted(self.cache_dir.glob("triple_*.json"))
        except OSError as e:
            logger.error(f"Error listing cache directory {self.cache_dir}: {str(e)}")
            raise CacheIOError(f"Cannot list {self.cache_dir}: {e}") from e

    def _read(self, n: int) -> Optional[CoeffTriple]:
        """Cached triple for n, or None if missing or invalid."""
        path = self.path(n)
        if not path.exists():
            return None
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            logger.error(f"Error reading cache entry {path}: {str(e)}")
            raise CacheIOError(f"Cannot read {path}: {e}") from e
        try:
            entry = CacheEntry.model_validate_json(text)
            if entry.n != n:
                raise InternalInconsistency(f"{path.name} holds n={entry.n}")
            return entry.to_triple()
        except (ValidationError, ValueError, InternalInconsistency) as e:
            logger.warning(f"Ignoring invalid cache entry {path.name}: {str(e)}")
            return None

    def _write(self, triple: CoeffTriple) -> None:
        path = self.path(triple.degree)
        payload = CacheEntry.from_triple(triple).model_dump_json()
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.cache_dir, prefix=".triple_", suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as f:
                    f.write(payload)
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
        except OSError as e:
            logger.error(f"Error writing cache entry {path}: {str(e)}")
            raise CacheIOError(f"Cannot write {path}: {e}") from e

    def load(self, n: int) -> Optional[CoeffTriple]:
        """
        Load the triple for degree n.

        Returns:
            The checked triple, or None if there is no valid entry
        """
        return self._read(n)

    def get_or_generate(self, n: int, store: bool = True) -> CoeffTriple:
        """
        Cached triple for n, generated on a miss.

        Args:
            n: Degree
            store: Write a freshly generated triple back to the cache
        """
        triple = self._read(n)
        if triple is None:
            triple = coeff_triple(n)
            if store:
                self._write(triple)
        return triple

    def build(self, n_max: int, progress: bool = True) -> CacheBuildResult:
        """
        Ensure entries for degrees 0..n_max exist; valid entries are left untouched.

        Args:
            n_max: Highest degree to cache
            progress: Show a progress bar on stderr
        """
        written = skipped = 0
        for n in tqdm(range(n_max + 1), desc="Caching coefficient triples", disable=not progress):
            if self._read(n) is not None:
                skipped += 1
                continue
            self._write(coeff_triple(n))
            written += 1
        logger.info(f"Cache build to n={n_max}: {written} written, {skipped} already valid")
        return CacheBuildResult(written=written, skipped=skipped)

    def clear(self) -> int:
        """Remove every cache entry; returns the number removed."""
        removed = 0
        for path in self._entries():
            try:
                path.unlink()
            except OSError as e:
                logger.error(f"Error removing cache entry {path}: {str(e)}")
                raise CacheIOError(f"Cannot remove {path}: {e}") from e
            removed += 1
        logger.info(f"Removed {removed} cache entries from {self.cache_dir}")
        return removed

    def stat(self) -> CacheStat:
        degrees = []
        for path in self._entries():
            try:
                degrees.append(int(path.stem.split("_", 1)[1]))
            except ValueError:
                continue
        return CacheStat(path=str(self.cache_dir), count=len(degrees), max_n=max(degrees) if degrees else None)
