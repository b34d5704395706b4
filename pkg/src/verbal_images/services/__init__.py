"""
Services module for verbal-images.
Provides cached, stateful access to groups and their derived structures.
"""

from .cache_service import CacheService, cached, get_cache
from .file_service import FileService
from .group_service import GroupService, get_group_service

__all__ = [
    'CacheService',
    'FileService',
    'GroupService',
    'cached',
    'get_cache',
    'get_group_service',
]
