"""
Logging configuration for verbal-images.
Provides structured logging with different levels and handlers.
"""

import functools
import logging
import logging.handlers
import os
import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Optional, TypeVar

F = TypeVar('F', bound=Callable[..., Any])

# Log directory; created on first use, never at import
LOGS_DIR = Path(os.environ.get('VERBAL_IMAGES_LOG_DIR', 'logs'))

# Log format configurations
DETAILED_FORMAT = (
    '%(asctime)s - %(name)s - %(levelname)s - '
    '%(filename)s:%(lineno)d - %(funcName)s() - %(message)s'
)
SIMPLE_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
CONSOLE_FORMAT = '%(levelname)s - %(name)s - %(message)s'

# Color codes for console output
COLORS = {
    'DEBUG': '\033[36m',    # Cyan
    'INFO': '\033[32m',     # Green
    'WARNING': '\033[33m',  # Yellow
    'ERROR': '\033[31m',    # Red
    'CRITICAL': '\033[35m', # Magenta
    'RESET': '\033[0m'      # Reset
}


def _log_file(name: str) -> Path:
    LOGS_DIR.mkdir(parents=True, exist_ok=True)
    return LOGS_DIR / name


class ColoredConsoleHandler(logging.StreamHandler):
    """Console handler with colored output."""

    def emit(self, record: logging.LogRecord) -> None:
        """Emit a colored log record."""
        try:
            levelname = record.levelname
            if levelname in COLORS:
                record.levelname = f"{COLORS[levelname]}{levelname}{COLORS['RESET']}"

            super().emit(record)

            record.levelname = levelname
        except Exception:
            self.handleError(record)


class PerformanceLogger:
    """Logger for operation timings (group loading, searches, sweeps)."""

    def __init__(self, logger_name: str = "verbal_images.performance"):
        self.logger = logging.getLogger(logger_name)
        self.logger.setLevel(logging.INFO)
        self._file_attached = False

    def attach_file(self) -> None:
        """Write timings to logs/performance.log as well."""
        if self._file_attached:
            return
        handler = logging.handlers.RotatingFileHandler(
            _log_file("performance.log"),
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5
        )
        handler.setFormatter(logging.Formatter(DETAILED_FORMAT))
        self.logger.addHandler(handler)
        self._file_attached = True

    def log_operation(self, operation: str, duration_ms: float,
                      details: Optional[dict] = None) -> None:
        """Log a performance metric."""
        message = f"Operation: {operation} - Duration: {duration_ms:.2f}ms"
        if details:
            message += f" - Details: {details}"
        self.logger.info(message)

    def log_cache_hit(self, cache_name: str, hit_rate: float) -> None:
        """Log cache performance."""
        self.logger.info(f"Cache: {cache_name} - Hit rate: {hit_rate:.2%}")


def setup_logging(
    level: str = "WARNING",
    console: bool = True,
    file: bool = False,
    colored: bool = True
) -> None:
    """
    Set up logging configuration for the command-line tool.

    Console output goes to stderr; stdout is reserved for reports.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        console: Enable console output
        file: Enable rotating file output under logs/
        colored: Use colored console output
    """
    package_logger = logging.getLogger('verbal_images')
    package_logger.setLevel(getattr(logging, level.upper()))

    # Remove existing handlers
    package_logger.handlers.clear()

    if console:
        if colored and sys.platform != 'win32' and sys.stderr.isatty():
            console_handler: logging.Handler = ColoredConsoleHandler(sys.stderr)
        else:
            console_handler = logging.StreamHandler(sys.stderr)

        console_handler.setLevel(getattr(logging, level.upper()))
        console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
        package_logger.addHandler(console_handler)

    if file:
        file_handler = logging.handlers.RotatingFileHandler(
            _log_file(f"verbal_images_{datetime.now().strftime('%Y%m%d')}.log"),
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(DETAILED_FORMAT))
        package_logger.addHandler(file_handler)

        error_handler = logging.handlers.RotatingFileHandler(
            _log_file("errors.log"),
            maxBytes=5*1024*1024,  # 5MB
            backupCount=3
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(logging.Formatter(DETAILED_FORMAT))
        package_logger.addHandler(error_handler)
        performance_logger.attach_file()

    package_logger.info(f"Logging initialized - Level: {level}, Console: {console}, File: {file}")


performance_logger = PerformanceLogger()


def log_execution_time(func: F) -> F:
    """Decorator to log function execution time."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        start = time.perf_counter()
        try:
            result = func(*args, **kwargs)
            duration = (time.perf_counter() - start) * 1000
            performance_logger.log_operation(
                f"{func.__module__}.{func.__name__}",
                duration
            )
            return result
        except Exception as e:
            duration = (time.perf_counter() - start) * 1000
            performance_logger.log_operation(
                f"{func.__module__}.{func.__name__} (failed)",
                duration,
                {"error": str(e)}
            )
            raise

    return wrapper  # type: ignore[return-value]
