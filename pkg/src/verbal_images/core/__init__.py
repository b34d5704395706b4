"""
Core module for verbal-images.
Groups, words, automorphisms, verbal images, constructions and bounds.
"""

from .groups import FiniteGroup, GroupKind
from .subsets import SubsetSpec
from .words import Word, format_word, parse_word

__all__ = [
    'FiniteGroup',
    'GroupKind',
    'SubsetSpec',
    'Word',
    'format_word',
    'parse_word',
]
