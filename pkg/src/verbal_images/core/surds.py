"""
Exact numbers of the form c * sqrt(r) with c rational and r a positive integer.

Enough to hold 3^((n-1)/2) for every n and to compare it with rationals
by squaring, never through floating point.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Surd:
    coefficient: Fraction
    radicand: int = 1

    def __post_init__(self) -> None:
        if self.radicand < 1:
            raise ValueError(f"Radicand must be positive, got {self.radicand}")
        object.__setattr__(self, 'coefficient', Fraction(self.coefficient))
        root = math.isqrt(self.radicand)
        if root * root == self.radicand and self.radicand != 1:
            object.__setattr__(self, 'coefficient', self.coefficient * root)
            object.__setattr__(self, 'radicand', 1)

    @classmethod
    def power_half(cls, base: int, numerator: int) -> 'Surd':
        """base^(numerator/2) exactly."""
        if numerator >= 0 and numerator % 2 == 0:
            return cls(Fraction(base ** (numerator // 2)))
        if numerator >= 0:
            return cls(Fraction(base ** (numerator // 2)), base)
        raise ValueError("Negative exponents are not needed")

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def scale(self, factor: Rational) -> 'Surd':
        return Surd(self.coefficient * Fraction(factor), self.radicand)

    def square(self) -> Fraction:
        return self.coefficient * self.coefficient * self.radicand

    def __float__(self) -> float:
        return float(self.coefficient) * math.sqrt(self.radicand)

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.coefficient)
        return f"{self.coefficient}*sqrt({self.radicand})"

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.coefficient


def ge(a: Union[Rational, Surd], b: Union[Rational, Surd]) -> bool:
    """a >= b exactly, for rationals and nonnegative-coefficient surds."""
    a = a if isinstance(a, Surd) else Surd(Fraction(a))
    b = b if isinstance(b, Surd) else Surd(Fraction(b))
    if a.is_rational and b.is_rational:
        return a.coefficient >= b.coefficient
    sign_a = (a.coefficient > 0) - (a.coefficient < 0)
    sign_b = (b.coefficient > 0) - (b.coefficient < 0)
    if sign_a != sign_b:
        return sign_a > sign_b
    if sign_a == 0:
        return True
    # same sign: compare squares, reversed for negatives
    if sign_a > 0:
        return a.square() >= b.square()
    return a.square() <= b.square()
