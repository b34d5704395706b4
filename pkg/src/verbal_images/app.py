"""
Command-line entry point for verbal-images.

Reports go to stdout (JSON with --json), logs and errors to stderr. Exit
codes: 0 success, 1 verification failure, 2 usage or input error, 3 a cap
or budget was exceeded.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional, Sequence

from . import __version__
from .commands import register_all_commands
from .commands.output import emit_error
from .config import load_config
from .constants import EXIT_USAGE
from .exceptions import VerbalImagesError
from .services.cache_service import get_cache
from .services.group_service import get_group_service
from .utils.logging_config import setup_logging

APP_TITLE = "verbal-images"

logger = logging.getLogger(__name__)

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def _common_options() -> argparse.ArgumentParser:
    """Options accepted before or after the subcommand name."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', default=argparse.SUPPRESS,
                        help="Write the report (and errors) as JSON")
    common.add_argument('--threads', type=int, default=argparse.SUPPRESS,
                        help="Worker threads for data-parallel sweeps (default from config)")
    common.add_argument('--budget', type=int, default=argparse.SUPPRESS,
                        help="Word-evaluation budget (default from config)")
    common.add_argument('--config', default=argparse.SUPPRESS,
                        help="Path of a config.json overriding the defaults")
    common.add_argument('--log-level', choices=LOG_LEVELS, default=argparse.SUPPRESS)
    common.add_argument('--log-file', action='store_true', default=argparse.SUPPRESS,
                        help="Also log to rotating files under logs/")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog=APP_TITLE, parents=[common],
        description="Verbal images of word maps over small finite groups. "
                    "File formats are described in FORMATS.md.")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.set_defaults(json=False, threads=None, budget=None, config=None,
                        log_level=None, log_file=False)
    subparsers = parser.add_subparsers(dest='command', required=True)
    register_all_commands(subparsers, [common])
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    level = args.log_level or os.environ.get('VERBAL_IMAGES_LOG_LEVEL', 'WARNING').upper()
    if level not in LOG_LEVELS:
        level = 'WARNING'
    setup_logging(level=level, file=args.log_file)

    try:
        service = get_group_service(load_config(args.config))
        if args.threads is None:
            args.threads = service.setting('threads')
        if args.budget is None:
            args.budget = service.setting('evaluation_budget')
        if args.threads < 1 or args.budget < 0:
            raise VerbalImagesError("--threads must be positive and --budget non-negative")
        logger.info(f"Running {args.command} with threads={args.threads}")
        code = args.handler(args, service)
        logger.info(f"Cache stats: {get_cache().get_stats()}")
        return code
    except VerbalImagesError as e:
        logger.debug(f"{type(e).__name__}: {e}")
        emit_error(args, e)
        return e.exit_code


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point for the application."""
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
