"""
Utilities module for verbal-images.
Logging configuration and data-parallel helpers.
"""

from .logging_config import log_execution_time, performance_logger, setup_logging
from .parallel import map_chunks, or_merge, split_chunks

__all__ = [
    'log_execution_time',
    'map_chunks',
    'or_merge',
    'performance_logger',
    'setup_logging',
    'split_chunks',
]
