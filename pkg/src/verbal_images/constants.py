"""
Constants module for verbal-images.
Contains caps, conventions, exit codes and message templates.
"""

# Report schema
SCHEMA_VERSION = 1

# Conventions echoed in every report
COMPOSITION_CONVENTION = "left-to-right: g*h applies g first, then h"
COMMUTATOR_CONVENTION = "[u,v] = u^-1 v^-1 u v"

# Group capacity limits
MAX_GROUP_ORDER = 1_000_000  # Elements enumerated by load_group
MAX_AUT_ORDER = 10_000  # |G| cap for brute-force Aut(G)
MAX_PAIR_TABLE_ORDER = 1_000  # |G| cap for the |G|^2 pair sweep
MAX_TABLE_ORDER = 6_000  # Full multiplication table materialised up to this order
MAX_FIELD_SIZE = 2 ** 16  # Largest q for log/antilog tables
MAX_WORD_RANK = 16

# Enumeration and search budgets
EVALUATION_BUDGET = 10 ** 9  # |G|^k word evaluations
SEARCH_STATE_CAP = 2_000_000  # States kept by find_word
DEFAULT_MAX_NULLS = 8  # Null constraints passed to find_word by default
DEFAULT_THREADS = 1

# Cayley table validation
CAYLEY_FULL_ASSOCIATIVITY_MAX = 512  # Full cubic check up to this order
CAYLEY_ASSOCIATIVITY_SAMPLES = 20_000  # Sampled triples above it

# File Processing Limits
MAX_FILE_SIZE_MB = 10
ALLOWED_FILE_EXTENSIONS = {'.txt', '.grp', '.json', '.set', ''}

# Cache Configuration
CACHE_TTL_SECONDS = 3600
MAX_CACHE_ENTRIES = 256

# Bounds constants
SL_SMALL_RANK_CONSTANT = 10 ** 10  # c for n <= 9
SL_LARGE_RANK_CONSTANT = 36  # c for n >= 10
SL_SMALL_RANK_Q_THRESHOLD = 10 ** 15
SL_LARGE_RANK_Q_THRESHOLD = 4
LIE_CLASS_COEFFICIENT_NUM = 136  # 27.2 = 136/5
LIE_CLASS_COEFFICIENT_DEN = 5
LOG2_DENOMINATOR_BITS = 10  # log2(q) upper bounds have denominator 2^10
ALT_EXACT_CLASS_MAX_DEGREE = 7
ALT_EXACT_PAIRS_MAX_DEGREE = 6
EXACT_CLASS_NUMBER_MAX_ORDER = 10 ** 4  # exact k(SL(2,p)) cross-checks up to this order
LIE_CONSTANT_CAVEAT = "constant user-supplied, not rigorous"

# Exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

# Error Messages
ERROR_CAPACITY = "{what} needs {needed} but the cap is {cap}"
ERROR_UNKNOWN_BUILTIN = "Unknown builtin group '{}'; expected sym:n, alt:n, sl:n:q or cyclic:n"
ERROR_NOT_PERFECT = "{} is not perfect; a quasisimple group is required"
ERROR_NOT_SYMMETRIC = "Classification and realization need a symmetric group of degree n >= 5"
NOT_FOUND_MESSAGE = "no witness within budget"
