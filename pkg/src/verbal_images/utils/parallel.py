"""
Data-parallel helpers.

Work is split into chunks, mapped on a thread pool and merged in chunk
order, so results never depend on scheduling. numpy releases the GIL for
the gathers that dominate the per-chunk work.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, TypeVar

import numpy as np

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def split_chunks(items: Sequence[T], chunks: int) -> List[Sequence[T]]:
    """Split items into at most `chunks` contiguous, nonempty slices."""
    if len(items) == 0:
        return []
    chunks = max(1, min(chunks, len(items)))
    bounds = np.linspace(0, len(items), chunks + 1).astype(int)
    return [items[lo:hi] for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]


def map_chunks(func: Callable[[T], R], chunks: Iterable[T], threads: int = 1) -> List[R]:
    """Apply func to every chunk; results come back in input order."""
    chunks = list(chunks)
    if threads <= 1 or len(chunks) <= 1:
        return [func(chunk) for chunk in chunks]
    logger.debug(f"Mapping {len(chunks)} chunks on {threads} threads")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, chunks))


def or_merge(bitsets: Iterable[np.ndarray], size: int) -> np.ndarray:
    """OR-merge boolean bitsets over element indices."""
    merged = np.zeros(size, dtype=bool)
    for bits in bitsets:
        merged |= bits
    return merged
