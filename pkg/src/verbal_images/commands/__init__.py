"""
Commands module for verbal-images.
Organizes CLI subcommands by functional domain.
"""

import argparse
import logging
from typing import Any, List

from .bounds_commands import register_bounds_commands
from .construct_commands import register_construct_commands
from .group_commands import register_group_commands


def register_all_commands(subparsers: Any, parents: List[argparse.ArgumentParser]) -> None:
    """
    Register every subcommand on the top-level parser.

    Args:
        subparsers: The object returned by add_subparsers()
        parents: Parsers holding the options shared by all subcommands
    """
    logger = logging.getLogger(__name__)

    register_group_commands(subparsers, parents)
    register_construct_commands(subparsers, parents)
    register_bounds_commands(subparsers, parents)
    logger.debug("All commands registered")


__all__ = [
    'register_all_commands',
    'register_bounds_commands',
    'register_construct_commands',
    'register_group_commands',
]
