"""
Numeric bounds behind property (*): d(S) >= k(S).

d(S) is bounded below through the probability p(S) that a random pair
generates, k(S) above through class-number estimates. Every verdict is
decided with Fractions and exact surds; a float recomputation runs next
to it and any disagreement is flagged.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from sympy import isprime

from ..constants import (
    LIE_CLASS_COEFFICIENT_DEN, LIE_CLASS_COEFFICIENT_NUM, LIE_CONSTANT_CAVEAT,
    LOG2_DENOMINATOR_BITS, SCHEMA_VERSION, SL_LARGE_RANK_CONSTANT, SL_LARGE_RANK_Q_THRESHOLD,
    SL_SMALL_RANK_CONSTANT, SL_SMALL_RANK_Q_THRESHOLD,
)
from ..exceptions import UnsupportedInputError
from .finite_field import prime_power
from .groups import sl_order
from .surds import Surd, ge

logger = logging.getLogger(__name__)

Number = Union[int, Fraction, Surd]


# --- helpers ---
def log2_upper(q: int) -> Tuple[Fraction, bool]:
    """
    An upper bound for log2(q) and whether it is exact.

    Exact when q is a power of 2; otherwise m / 2^10 with the least m such
    that 2^m >= q^(2^10).
    """
    p, r = prime_power(q)
    if p == 2:
        return Fraction(r), True
    scale = 1 << LOG2_DENOMINATOR_BITS
    m = (q ** scale - 1).bit_length()
    return Fraction(m, scale), False


def approximate(value: Optional[Number]) -> Union[float, str, None]:
    """A float for display; values beyond float range become a scientific-notation string."""
    if value is None:
        return None
    try:
        return float(value)
    except OverflowError:
        exponent = _log10_abs(value)
        sign = '-' if _sign(value) < 0 else ''
        mantissa = 10 ** (exponent - math.floor(exponent))
        return f"{sign}{mantissa:.6f}e+{math.floor(exponent)}"


def _sign(value: Number) -> int:
    c = value.coefficient if isinstance(value, Surd) else Fraction(value)
    return (c > 0) - (c < 0)


def _log10_abs(value: Number) -> float:
    if isinstance(value, Surd):
        return _log10_abs(value.coefficient) + 0.5 * math.log10(value.radicand)
    value = abs(Fraction(value))
    return math.log10(value.numerator) - math.log10(value.denominator)


def float_ge(a: Number, b: Number) -> bool:
    """a >= b recomputed in floating point, through logarithms when floats overflow."""
    try:
        return float(a) >= float(b)
    except OverflowError:
        sa, sb = _sign(a), _sign(b)
        if sa != sb or sa == 0:
            return sa >= sb
        la, lb = _log10_abs(a), _log10_abs(b)
        return la >= lb if sa > 0 else la <= lb


def _text(value: Optional[Number]) -> Optional[str]:
    return None if value is None else str(value)


# --- reports ---
@dataclass
class BoundReport:
    """One instance of d_lower >= k_upper; the verdict is derived from the stored numbers."""

    family: str
    parameters: Dict[str, Any]
    d_lower: Optional[Fraction]
    k_upper: Surd
    p_lower: Optional[Fraction] = None
    p_upper: Optional[Fraction] = None
    in_claimed_regime: Optional[bool] = None
    caveats: List[str] = field(default_factory=list)
    exact: Dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.d_lower is not None and ge(self.d_lower, self.k_upper)

    @property
    def float_verdict(self) -> bool:
        return self.d_lower is not None and float_ge(self.d_lower, self.k_upper)

    @property
    def float_agrees(self) -> bool:
        return self.verdict == self.float_verdict

    @property
    def consistent(self) -> bool:
        """Exact cross-checks hold and the float recomputation agrees."""
        checks = [v for key, v in self.exact.items() if key.endswith('_holds')]
        return self.float_agrees and all(checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema': SCHEMA_VERSION,
            'command': 'bounds',
            'family': self.family,
            'parameters': self.parameters,
            'd_lower': _text(self.d_lower),
            'k_upper': _text(self.k_upper),
            'p_lower': _text(self.p_lower),
            'p_upper': _text(self.p_upper),
            'approx': {
                'd_lower': approximate(self.d_lower),
                'k_upper': approximate(self.k_upper),
                'p_lower': approximate(self.p_lower),
                'p_upper': approximate(self.p_upper),
            },
            'verdict': self.verdict,
            'in_claimed_regime': self.in_claimed_regime,
            'float_agrees': self.float_agrees,
            'exact': self.exact,
            'caveats': self.caveats,
        }


def alternating_p_interval(n: int) -> Tuple[Fraction, Fraction]:
    """(lower, upper] for the generating-pair probability of A_n."""
    return (1 - Fraction(1, n) - Fraction(13, n * n),
            1 - Fraction(1, n) + Fraction(2, 3 * n * n))


def alt_cover_report(n: int, class_number: Optional[int] = None,
                     cover_class_number: Optional[int] = None,
                     generating_pairs: Optional[Tuple[int, int]] = None) -> BoundReport:
    """
    Covers Z.A_n of the alternating groups.

    Optional exact inputs tighten the report: `class_number` is k(A_n),
    `cover_class_number` is k of the Schur cover itself, and
    `generating_pairs` is (l, r) from the pair table of A_n: the number of
    generating pairs and of their Aut-orbits.
    """
    if n < 5:
        raise UnsupportedInputError(f"alt_cover_report needs n >= 5, got {n}")
    z = 6 if n in (6, 7) else 2
    order = math.factorial(n) // 2
    out = 4 if n == 6 else 2
    p_lower, p_upper = alternating_p_interval(n)

    k_upper = Surd.power_half(3, n - 1).scale(z)
    d_lower = p_lower * order / out
    exact: Dict[str, Any] = {'center_order': z, 'out_order': out, 'group_order': order,
                             'k_formula': str(k_upper), 'd_formula': str(d_lower)}

    if class_number is not None:
        exact['k_alternating'] = class_number
        exact['maroti_holds'] = ge(Surd.power_half(3, n - 1), class_number)
        k_upper = Surd(Fraction(z * class_number))
    if cover_class_number is not None:
        exact['k_cover'] = cover_class_number
        exact['cover_bound_holds'] = ge(k_upper, cover_class_number)
        k_upper = Surd(Fraction(cover_class_number))
    if generating_pairs is not None:
        l, r = generating_pairs
        p_exact = Fraction(l, order * order)
        exact.update({
            'generating_pairs': l,
            'aut_orbits': r,
            'p_exact': str(p_exact),
            'p_interval_holds': p_lower < p_exact <= p_upper,
            'd_formula_holds': r >= d_lower,
        })
        d_lower = Fraction(r)

    caveats = ["2/3n^2 read as 2/(3n^2)",
               "k(Z.A_n) <= |Z| k(A_n) used as the cover bound"]
    if n in (6, 7):
        caveats.append("6.7 read as the product 6*7")
    report = BoundReport('alt-cover', {'n': n}, d_lower, k_upper, p_lower, p_upper,
                         in_claimed_regime=True, caveats=caveats, exact=exact)
    logger.debug(f"alt_cover_report({n}): d_lower={d_lower}, k_upper={k_upper}")
    return report


def sl_constant(n: int) -> int:
    return SL_LARGE_RANK_CONSTANT if n >= 10 else SL_SMALL_RANK_CONSTANT


def sl_report(n: int, q: int) -> BoundReport:
    """
    d(S) >= (q^(n-1) - c n^3 log2(q)^2) |SL(n,q)| / (2 q^(n-1) (n,q-1)^2 log_p q)
    against k(S) <= q^(n-1) + 3 q^(n-2), for S = SL(n, q).
    """
    if n < 2:
        raise UnsupportedInputError(f"sl_report needs n >= 2, got {n}")
    p, r = prime_power(q)
    c = sl_constant(n)
    log2q, log_exact = log2_upper(q)
    top = q ** (n - 1)
    numerator = top - c * n ** 3 * log2q ** 2
    g = math.gcd(n, q - 1)
    d_lower = numerator * sl_order(n, q) / (2 * top * g * g * r)
    k_upper = Surd(Fraction(q ** (n - 1) + 3 * q ** (n - 2)))
    regime = (n >= 10 and q >= SL_LARGE_RANK_Q_THRESHOLD) or \
             (n <= 9 and q >= SL_SMALL_RANK_Q_THRESHOLD)
    caveats = []
    if not log_exact:
        caveats.append(f"log2(q) replaced by the upper bound {log2q}")
    return BoundReport(
        'sl-nq', {'n': n, 'q': q, 'p': p, 'r': r, 'c': c}, d_lower, k_upper,
        p_lower=numerator / top, in_claimed_regime=regime, caveats=caveats,
        exact={'log2_q': str(log2q), 'log2_q_exact': log_exact, 'gcd_n_q_minus_1': g},
    )


def sl2p_report(p: int, class_number: Optional[int] = None) -> BoundReport:
    """(p^2 - p - 10)(p^3 - p) / (p^2 (2,p-1)^2) >= p + 4 >= k(SL(2,p))."""
    if not isprime(p):
        raise UnsupportedInputError(f"sl2p_report needs a prime, got {p}")
    g = math.gcd(2, p - 1)
    d_lower = Fraction((p * p - p - 10) * (p ** 3 - p), p * p * g * g)
    k_upper = Surd(Fraction(p + 4))
    exact: Dict[str, Any] = {}
    if class_number is not None:
        exact['k_exact'] = class_number
        exact['class_bound_holds'] = class_number <= p + 4
    return BoundReport(
        'sl-2p', {'p': p}, d_lower, k_upper,
        p_lower=1 - Fraction(1, p) - Fraction(10, p * p),
        in_claimed_regime=p >= 5, exact=exact,
    )


def lie_report(rank: int, q: int, c: Union[int, Fraction],
               group_order: Optional[int] = None, out_order: Optional[int] = None) -> BoundReport:
    """
    p(S) >= 1 - c rk^3 log2(q)^2 / q^rk with a caller-supplied constant c,
    against k(S) <= 27.2 q^rk. Without |S| there is no d to compare.
    """
    if rank < 1:
        raise UnsupportedInputError(f"lie_report needs rank >= 1, got {rank}")
    c = Fraction(c)
    if c <= 0:
        raise UnsupportedInputError(f"lie_report needs a positive constant, got {c}")
    p, r = prime_power(q)
    log2q, log_exact = log2_upper(q)
    p_lower = 1 - c * rank ** 3 * log2q ** 2 / Fraction(q ** rank)
    k_upper = Surd(Fraction(LIE_CLASS_COEFFICIENT_NUM, LIE_CLASS_COEFFICIENT_DEN) * q ** rank)
    caveats = [LIE_CONSTANT_CAVEAT]
    if not log_exact:
        caveats.append(f"log2(q) replaced by the upper bound {log2q}")
    d_lower = None
    if group_order is not None:
        d_lower = max(p_lower, Fraction(0)) * group_order / (out_order or 1)
    else:
        caveats.append("no group order supplied, d not evaluated")
    return BoundReport(
        'lie-type',
        {'rank': rank, 'q': q, 'c': str(c), 'group_order': group_order, 'out_order': out_order},
        d_lower, k_upper, p_lower=p_lower, in_claimed_regime=None, caveats=caveats,
        exact={'log2_q': str(log2q), 'p_lower_positive': p_lower > 0},
    )


@dataclass
class ClassNumberReport:
    """Exact k(G) against 3^((n-1)/2) for a subgroup G of Sym(n)."""

    group: str
    degree: int
    class_number: int

    @property
    def bound(self) -> Surd:
        return Surd.power_half(3, self.degree - 1)

    @property
    def holds(self) -> bool:
        return ge(self.bound, self.class_number)

    @property
    def float_agrees(self) -> bool:
        return self.holds == float_ge(self.bound, self.class_number)

    @property
    def consistent(self) -> bool:
        return self.holds and self.float_agrees

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema': SCHEMA_VERSION,
            'command': 'bounds',
            'family': 'maroti',
            'group': self.group,
            'degree': self.degree,
            'class_number': self.class_number,
            'bound': str(self.bound),
            'approx_bound': approximate(self.bound),
            'holds': self.holds,
            'float_agrees': self.float_agrees,
        }


def class_number_report(group: str, degree: int, class_number: int) -> ClassNumberReport:
    if degree < 1:
        raise UnsupportedInputError(f"Degree must be positive, got {degree}")
    return ClassNumberReport(group, degree, class_number)
