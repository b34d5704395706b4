"""verbal-images - word maps and their images over small finite groups.

This package provides exact computations for:
- permutation, matrix and Cayley-table groups with stabilizer chains
- words in free groups and their verbal images w(G)
- automorphism groups, Aut-invariant subsets and generating-pair tables
- the classification of verbal images of symmetric groups, with witness words
- exact evaluation of the class-number and generation bounds for simple groups

Author: Verbal Images Team
Version: 1.0.0
"""

__version__ = "1.0.0"
__author__ = "Verbal Images Team"
