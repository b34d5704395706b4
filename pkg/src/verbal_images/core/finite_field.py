"""
Finite fields GF(p^r) via log/antilog tables.

Elements are the integers 0..q-1; the integer sum(c_i * p^i) stands for the
polynomial sum(c_i * x^i) reduced modulo the field polynomial. Addition is
digit-wise mod p, multiplication goes through the discrete log of a
primitive element. All operations accept numpy arrays and broadcast.
"""

import functools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

import numpy as np
from sympy import factorint
from sympy.ntheory import primitive_root

from ..constants import MAX_FIELD_SIZE
from ..exceptions import CapacityError, FormatError

logger = logging.getLogger(__name__)


def prime_power(q: int) -> Tuple[int, int]:
    """Return (p, r) with q = p^r, or raise FormatError."""
    if q < 2:
        raise FormatError(f"Field size must be a prime power >= 2, got {q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise FormatError(f"Field size {q} is not a prime power")
    (p, r), = factors.items()
    return int(p), int(r)


def _times_x(digits: list, poly: Tuple[int, ...], p: int) -> list:
    """Multiply a digit vector by x modulo the monic polynomial `poly`."""
    r = len(digits)
    top = digits[-1]
    shifted = [0] + digits[:-1]
    # x^r = -(poly[0] + poly[1] x + ... + poly[r-1] x^(r-1))
    return [(shifted[i] - top * poly[i]) % p for i in range(r)]


def _primitive_polynomial(p: int, r: int) -> Tuple[Tuple[int, ...], np.ndarray]:
    """
    Lexicographically first monic degree-r polynomial over GF(p) for which x
    has multiplicative order p^r - 1, together with the antilog table.

    The polynomial is returned as its low-order coefficients (the leading 1
    is implicit).
    """
    q = p ** r
    weights = [p ** i for i in range(r)]
    for code in range(1, q):
        poly = tuple((code // p ** i) % p for i in range(r))
        if poly[0] == 0:
            continue
        exp_table = np.zeros(q - 1, dtype=np.int64)
        digits = [1] + [0] * (r - 1)
        period = 0
        for k in range(q - 1):
            value = sum(d * w for d, w in zip(digits, weights))
            if k > 0 and value == 1:
                period = k
                break
            exp_table[k] = value
            digits = _times_x(digits, poly, p)
        if period == 0 and sum(d * w for d, w in zip(digits, weights)) == 1:
            return poly, exp_table
    raise FormatError(f"No primitive polynomial of degree {r} over GF({p})")  # unreachable for prime p


@dataclass(frozen=True)
class FieldTable:
    """Arithmetic tables for GF(q)."""

    q: int
    p: int
    r: int
    polynomial: Tuple[int, ...]  # low-order coefficients of the monic field polynomial
    exp_table: np.ndarray = field(repr=False, compare=False)
    log_table: np.ndarray = field(repr=False, compare=False)
    digits: np.ndarray = field(repr=False, compare=False)
    weights: np.ndarray = field(repr=False, compare=False)

    # --- vectorised arithmetic ---
    def add(self, a: Any, b: Any) -> Any:
        a, b = np.asarray(a), np.asarray(b)
        if self.r == 1:
            return (a + b) % self.p
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.weights

    def neg(self, a: Any) -> Any:
        a = np.asarray(a)
        if self.r == 1:
            return (-a) % self.p
        return ((-self.digits[a]) % self.p) @ self.weights

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def mul(self, a: Any, b: Any) -> Any:
        a, b = np.asarray(a), np.asarray(b)
        zero = (a == 0) | (b == 0)
        prod = self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]
        return np.where(zero, 0, prod)

    def inv(self, a: Any) -> Any:
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("0 has no inverse in a field")
        return self.exp_table[(-self.log_table[a]) % (self.q - 1)]

    @property
    def primitive_element(self) -> int:
        return int(self.exp_table[1 % (self.q - 1)]) if self.q > 2 else 1

    def describe(self) -> Dict[str, Any]:
        """Field parameters echoed into reports so results are reproducible."""
        poly_terms = [f"{c}*x^{i}" for i, c in enumerate(self.polynomial) if c]
        return {
            'q': self.q,
            'p': self.p,
            'r': self.r,
            'polynomial': ' + '.join([f"x^{self.r}"] + poly_terms[::-1]),
            'element_encoding': 'integer sum(c_i p^i) for polynomial sum(c_i x^i)',
        }

    def verify(self) -> None:
        """Check a*a^-1 = 1 everywhere; distributivity exhaustively for q <= 64."""
        nonzero = np.arange(1, self.q)
        if not np.all(self.mul(nonzero, self.inv(nonzero)) == 1):
            raise AssertionError(f"GF({self.q}): inverse table is inconsistent")
        if self.q <= 64:
            a, b, c = np.meshgrid(np.arange(self.q), np.arange(self.q), np.arange(self.q),
                                  indexing='ij')
            lhs = self.mul(a, self.add(b, c))
            rhs = self.add(self.mul(a, b), self.mul(a, c))
            if not np.array_equal(lhs, rhs):
                raise AssertionError(f"GF({self.q}): distributivity fails")


@functools.lru_cache(maxsize=32)
def get_field(q: int) -> FieldTable:
    """Build (once) the log/antilog tables for GF(q)."""
    if q > MAX_FIELD_SIZE:
        raise CapacityError("field size", q, MAX_FIELD_SIZE)
    p, r = prime_power(q)
    if r == 1:
        g = int(primitive_root(p)) if p > 2 else 1
        exp_table = np.array([pow(g, k, p) for k in range(q - 1)], dtype=np.int64)
        polynomial: Tuple[int, ...] = ((-g) % p,)
    else:
        polynomial, exp_table = _primitive_polynomial(p, r)
    log_table = np.zeros(q, dtype=np.int64)
    log_table[exp_table] = np.arange(q - 1)
    weights = p ** np.arange(r, dtype=np.int64)
    digits = (np.arange(q, dtype=np.int64)[:, None] // weights[None, :]) % p
    for arr in (exp_table, log_table, digits, weights):
        arr.setflags(write=False)
    table = FieldTable(q, p, r, polynomial, exp_table, log_table, digits, weights)
    logger.debug(f"Built GF({q}) tables with polynomial {table.describe()['polynomial']}")
    return table
