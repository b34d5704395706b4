"""
Cache service for derived group structures.
Implements an LRU cache with TTL for groups, automorphism groups and pair tables.
"""

import functools
import hashlib
import json
import logging
import time
from collections import OrderedDict
from typing import Any, Callable, Dict, Optional, Tuple

from ..config import get_setting
from ..constants import CACHE_TTL_SECONDS, MAX_CACHE_ENTRIES
from ..utils.logging_config import performance_logger

logger = logging.getLogger(__name__)


def _key_part(value: Any) -> Any:
    """Groups and subgroups are keyed by their content hash, not their repr."""
    group_id = getattr(value, 'group_id', None)
    if group_id is not None:
        return f"group:{group_id}"
    return value


class CacheService:
    """
    In-memory cache for expensive group computations.
    Uses LRU eviction and TTL expiration.
    """

    def __init__(self, max_entries: int = MAX_CACHE_ENTRIES, ttl_seconds: int = CACHE_TTL_SECONDS):
        """
        Initialize cache service.

        Args:
            max_entries: Maximum number of cached entries
            ttl_seconds: Time-to-live for cache entries in seconds
        """
        self.cache: 'OrderedDict[str, Tuple[Any, float]]' = OrderedDict()
        self.max_entries = max_entries
        self.ttl_seconds = ttl_seconds
        self.hits = 0
        self.misses = 0

    def _generate_key(self, *args: Any, **kwargs: Any) -> str:
        """Generate a cache key from function arguments."""
        key_data = {
            'args': [_key_part(a) for a in args],
            'kwargs': {k: _key_part(v) for k, v in kwargs.items()},
        }
        key_str = json.dumps(key_data, sort_keys=True, default=str)
        return hashlib.md5(key_str.encode()).hexdigest()

    def _evict_if_needed(self) -> None:
        """Evict least recently used entries beyond the entry limit."""
        while len(self.cache) >= self.max_entries and self.cache:
            oldest_key = next(iter(self.cache))
            del self.cache[oldest_key]
            logger.debug(f"Evicted cache entry: {oldest_key}")

    def get(self, key: str) -> Optional[Any]:
        """
        Retrieve item from cache if it exists and hasn't expired.

        Args:
            key: Cache key

        Returns:
            Cached value or None if not found/expired
        """
        if key not in self.cache:
            self.misses += 1
            return None

        value, timestamp = self.cache[key]

        if time.time() - timestamp > self.ttl_seconds:
            del self.cache[key]
            self.misses += 1
            logger.debug(f"Cache entry expired: {key}")
            return None

        # Move to end (most recently used)
        self.cache.move_to_end(key)
        self.hits += 1
        return value

    def set(self, key: str, value: Any) -> None:
        """
        Store item in cache.

        Args:
            key: Cache key
            value: Value to cache
        """
        if key in self.cache:
            del self.cache[key]
        self._evict_if_needed()
        self.cache[key] = (value, time.time())
        logger.debug(f"Cached entry: {key}")

    def clear(self) -> None:
        """Clear all cache entries."""
        self.cache.clear()
        logger.info("Cache cleared")

    def get_stats(self) -> Dict[str, Any]:
        """Get cache statistics."""
        total_requests = self.hits + self.misses
        hit_rate = self.hits / total_requests if total_requests > 0 else 0

        return {
            'entries': len(self.cache),
            'max_entries': self.max_entries,
            'hits': self.hits,
            'misses': self.misses,
            'hit_rate': hit_rate,
            'ttl_seconds': self.ttl_seconds,
        }


# Global cache instance
_cache_instance: Optional[CacheService] = None


def get_cache(config: Optional[Dict[str, Any]] = None) -> CacheService:
    """
    Get or create the global cache instance.

    A config resizes the existing instance in place; entries over the new
    limit are evicted on the next insert.
    """
    global _cache_instance
    max_entries = get_setting('max_cache_entries', config)
    ttl_seconds = get_setting('cache_ttl_seconds', config)
    if _cache_instance is None:
        _cache_instance = CacheService(max_entries, ttl_seconds)
    elif config is not None:
        _cache_instance.max_entries = max_entries
        _cache_instance.ttl_seconds = ttl_seconds
    return _cache_instance


def cached(prefix: str = "") -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """
    Decorator for caching function results.

    Args:
        prefix: Optional prefix for cache keys

    Example:
        @cached("aut")
        def automorphisms(self, G):
            # expensive operation
            return result
    """
    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            cache = get_cache()

            key_parts = [prefix, func.__name__] if prefix else [func.__name__]
            # bound services are skipped; their state is global
            key_parts.extend(args[1:] if args and hasattr(args[0], '_cacheable') else args)
            key = cache._generate_key(*key_parts, **kwargs)

            result = cache.get(key)
            if result is not None:
                logger.debug(f"Cache hit for {func.__name__}")
                performance_logger.log_cache_hit(prefix or func.__name__, cache.get_stats()['hit_rate'])
                return result

            result = func(*args, **kwargs)
            cache.set(key, result)
            return result

        return wrapper
    return decorator
