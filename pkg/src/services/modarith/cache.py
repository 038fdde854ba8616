"""
Bernoulli cache: one UTF-8 text file per prime.

    p=<p>
    <k>,<residue>
    ...
"""

from pathlib import Path
from typing import Dict, Optional, Union

from loguru import logger
from pydantic import ValidationError

from src.exceptions import CacheFormatError, CacheIOError, PrimeMismatch
from .arithmetic import require_odd_prime
from .models import PrimeContext

PathLike = Union[str, Path]


def cache_path(cache_dir: PathLike, p: int) -> Path:
    return Path(cache_dir) / f"bernoulli_{p}.txt"


def cache_write(ctx: PrimeContext, path: PathLike) -> None:
    """Write ctx in the line-oriented format.

    Raises:
        CacheIOError: If the file cannot be written.
    """
    path = Path(path)
    lines = [f"p={ctx.p}"] + [f"{k},{ctx.bernoulli[k]}" for k in sorted(ctx.bernoulli)]
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text("\n".join(lines) + "\n", encoding="utf-8")
        tmp.replace(path)
    except OSError as e:
        raise CacheIOError(f"cannot write {path}: {e}") from e


def cache_read(path: PathLike, p: int) -> PrimeContext:
    """Read a cache file for prime p.

    Raises:
        CacheIOError: If the file cannot be read.
        CacheFormatError: If the file is corrupt or truncated.
        PrimeMismatch: If the file declares another prime.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise CacheFormatError(f"{path}: not UTF-8") from e
    except OSError as e:
        raise CacheIOError(f"cannot read {path}: {e}") from e

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].startswith("p="):
        raise CacheFormatError(f"{path}: missing 'p=' header")
    header = lines[0][2:]
    if header != header.strip():
        raise CacheFormatError(f"{path}: bad header {lines[0]!r}")
    try:
        declared = int(header)
    except ValueError as e:
        raise CacheFormatError(f"{path}: bad header {lines[0]!r}") from e
    if declared != p:
        raise PrimeMismatch(expected=p, found=declared)

    table: Dict[int, int] = {}
    previous = 0
    for line in lines[1:]:
        k_str, sep, r_str = line.partition(",")
        if not sep or line != line.strip():
            raise CacheFormatError(f"{path}: bad record {line!r}")
        try:
            k, r = int(k_str), int(r_str)
        except ValueError as e:
            raise CacheFormatError(f"{path}: bad record {line!r}") from e
        if k <= previous:
            raise CacheFormatError(f"{path}: keys not increasing at {k}")
        table[k] = r
        previous = k

    try:
        return PrimeContext(p=p, bernoulli=table)
    except ValidationError as e:
        raise CacheFormatError(f"{path}: {e.errors()[0]['msg']}") from e


def load_or_compute(p: int, cache_dir: Optional[PathLike] = None) -> PrimeContext:
    """Return the cached table for p, recomputing it when missing or corrupt."""
    require_odd_prime(p)
    if cache_dir is None:
        return PrimeContext.build(p)

    path = cache_path(cache_dir, p)
    if path.exists():
        try:
            return cache_read(path, p)
        except (CacheFormatError, PrimeMismatch) as e:
            logger.warning(f"Discarding cache {path}: {e}")

    ctx = PrimeContext.build(p)
    cache_write(ctx, path)
    logger.debug(f"Cached p={p} at {path}")
    return ctx
