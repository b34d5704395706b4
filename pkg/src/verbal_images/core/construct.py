"""
Verbal images of symmetric groups and the quasisimple reduction.

classify_subset decides which subsets A of Sym(n) are verbal images:
those containing e, Aut-invariant, and either inside Alt(n) or
containing every 2-power element. realize turns that answer into a word:
a target table is built on representatives of generating pairs, a
witness word is searched for, and the word's image is computed exactly
and compared with A.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..constants import (
    COMMUTATOR_CONVENTION, COMPOSITION_CONVENTION, DEFAULT_MAX_NULLS, ERROR_NOT_PERFECT,
    ERROR_NOT_SYMMETRIC, EVALUATION_BUDGET, NOT_FOUND_MESSAGE, SCHEMA_VERSION, SEARCH_STATE_CAP,
)
from ..exceptions import CapacityError, HypothesisViolation, UnsupportedInputError
from ..utils.logging_config import log_execution_time
from .automorphisms import AutAction, aut_orbits, is_invariant
from .groups import FiniteGroup
from .pair_table import PairMode, PairTable
from .subgroups import (
    class_number, closure_mask, conjugacy_classes, is_perfect, two_part, whole_group,
)
from .subsets import SubsetSpec, two_power_set
from .verbal_image import verbal_image
from .word_search import Constraint, TargetAssignment, find_word
from .words import Word, compose, format_word, power, random_reduced_word

logger = logging.getLogger(__name__)

CASE_I = 'case-i'
CASE_II = 'case-ii'
NOT_REALIZABLE = 'not-realizable'

CONJUGATE_AUDIT_MAX_DEGREE = 8


def symmetric_exponent(n: int) -> int:
    """exp(Sym(n)) = lcm(1, ..., n)."""
    return math.lcm(*range(1, n + 1)) if n > 1 else 1


def _require_symmetric(n: int, G: FiniteGroup) -> None:
    if n < 5:
        raise UnsupportedInputError(ERROR_NOT_SYMMETRIC)
    if not (G.is_full_symmetric and G.degree == n):
        raise UnsupportedInputError(f"{G.name} is not Sym({n})")


@dataclass
class ClassificationResult:
    n: int
    case: str
    subset_size: int
    contains_identity: bool
    aut_invariant: bool
    inside_alt: bool
    contains_two_power: bool
    invariant_part: Optional[SubsetSpec] = field(default=None, repr=False)
    failed_condition: Optional[str] = None

    @property
    def realizable(self) -> bool:
        return self.case != NOT_REALIZABLE

    def to_dict(self, G: Optional[FiniteGroup] = None) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'n': self.n,
            'case': self.case,
            'subset_size': self.subset_size,
            'contains_identity': self.contains_identity,
            'aut_invariant': self.aut_invariant,
            'inside_alt': self.inside_alt,
            'contains_two_power': self.contains_two_power,
            'failed_condition': self.failed_condition,
        }
        if self.invariant_part is not None:
            data['invariant_part'] = self.invariant_part.to_dict(G)
        return data


def classify_subset(n: int, A: SubsetSpec, G: FiniteGroup, act: AutAction) -> ClassificationResult:
    """
    case-i: e in A, A invariant, A inside Alt(n).
    case-ii: e in A, A invariant, A leaves Alt(n) and contains C.
    Anything else is not a verbal image; the first failing condition is named.
    """
    _require_symmetric(n, G)
    odd = G.parities()
    C = two_power_set(G)
    has_e = A.contains_identity
    invariant = is_invariant(act, A)
    inside_alt = not bool(odd[A.members].any())
    has_c = C.issubset(A)

    case, failed, part = NOT_REALIZABLE, None, None
    if not has_e:
        failed = 'identity missing'
    elif not invariant:
        failed = 'not Aut(Sym(n))-invariant'
    elif inside_alt:
        case = CASE_I
    elif has_c:
        case = CASE_II
        part = A.difference(C).union(SubsetSpec.from_indices(G, [0]))
        part.label = 'invariant part B'
        is_invariant(act, part)
        aut_orbits(act, part)
    else:
        missing = np.setdiff1d(C.members, A.members)
        failed = (f"contains odd permutations but misses {missing.size} element(s) of 2-power "
                  f"order, e.g. {G.literal(int(missing[0]))}")
    return ClassificationResult(n, case, A.size, has_e, invariant, inside_alt, has_c, part, failed)


def compose_theorem_a(n: int, v: Word) -> Word:
    """x^(e/e_2) v, with e the exponent of Sym(n)."""
    if v.k != 2:
        raise UnsupportedInputError(f"v must have rank 2, got {v.k}")
    e = symmetric_exponent(n)
    return compose(power(Word(2, (1,)), e // two_part(e)), v)


def _cycle_lengths(rows: np.ndarray) -> np.ndarray:
    """Per-point cycle length, sorted per row; equal rows <=> equal cycle type."""
    count, degree = rows.shape
    lengths = np.zeros((count, degree), dtype=np.int64)
    points = np.broadcast_to(np.arange(degree), (count, degree))
    current = rows.copy()
    for t in range(1, degree + 1):
        hit = (current == points) & (lengths == 0)
        lengths[hit] = t
        current = np.take_along_axis(rows, current, axis=1)
    return np.sort(lengths, axis=1)


def _row_powers(rows: np.ndarray, m: int) -> np.ndarray:
    result = np.broadcast_to(np.arange(rows.shape[1]), rows.shape).copy()
    base = rows.copy()
    while m:
        if m & 1:
            result = np.take_along_axis(base, result, axis=1)
        base = np.take_along_axis(base, base, axis=1)
        m >>= 1
    return result


@log_execution_time
def conjugate_power_audit(n: int, G: FiniteGroup) -> Dict[str, Any]:
    """
    For every a in Sym(n): gcd(e/e_2 + o(a)_2, o(a)) = 1 and a^(e/e_2 + o(a)_2)
    has the cycle type of a.
    """
    if n > CONJUGATE_AUDIT_MAX_DEGREE:
        raise CapacityError("exhaustive conjugate power audit degree", n, CONJUGATE_AUDIT_MAX_DEGREE)
    if not (G.is_full_symmetric and G.degree == n):
        raise UnsupportedInputError(f"{G.name} is not Sym({n})")
    e = symmetric_exponent(n)
    odd_part = e // two_part(e)
    orders = G.element_orders
    two_parts = orders & -orders
    exponents = odd_part + two_parts
    coprime = np.gcd(exponents, orders) == 1

    same_type = np.ones(G.order, dtype=bool)
    for m in np.unique(exponents):
        idx = np.nonzero(exponents == m)[0]
        rows = G.elements[idx].astype(np.int64)
        powered = _row_powers(rows, int(m))
        same_type[idx] = np.all(_cycle_lengths(rows) == _cycle_lengths(powered), axis=1)

    bad = np.nonzero(~(coprime & same_type))[0]
    samples = []
    for cls in conjugacy_classes(G):
        a = cls.representative
        m = int(exponents[a])
        samples.append({'element': G.literal(a), 'cycle_type': list(G.cycle_type(a)),
                        'order': int(orders[a]),
                        'order_two_part': int(two_parts[a]), 'exponent': m,
                        'power': G.literal(G.power(a, m))})
    return {
        'n': n,
        'exponent': e,
        'exponent_two_part': two_part(e),
        'odd_part': odd_part,
        'elements_checked': G.order,
        'coprime_failures': int((~coprime).sum()),
        'cycle_type_failures': int((~same_type).sum()),
        'counterexamples': [G.literal(int(a)) for a in bad[:10]],
        'per_cycle_type': samples,
        'passes': bad.size == 0,
    }


# --- targets ---
def _pair_for(G: FiniteGroup, table: PairTable, z: int) -> Tuple[int, int]:
    partners = table.partners(z)
    if partners.size == 0:
        raise HypothesisViolation(f"{G.literal(z)} lies on no generating pair of {G.name}")
    return z, int(partners[0])


def _null_constraints(table: PairTable, used_labels: set) -> List[Constraint]:
    gen = [int(p) for p in table.representatives if int(table.labels[p]) not in used_labels]
    proper = [int(p) for p in table.proper_representatives if p != 0]
    nulls = []
    for provenance, reps in (('unused generating orbit', gen), ('proper pair orbit', proper)):
        for p in reps:
            nulls.append(Constraint(table.pair(p), 0, provenance))
    return nulls


def build_target(G: FiniteGroup, A: SubsetSpec, table: PairTable, act: AutAction
                 ) -> TargetAssignment:
    """
    Place each Aut-orbit representative z of A' = A minus e on a generating
    pair (z, b) with required value z; every other pair orbit must map to e.
    """
    if table.group_id != G.group_id or A.group_id != G.group_id:
        raise UnsupportedInputError("Subset, pair table and group do not match")
    if not A.contains_identity:
        raise HypothesisViolation("The target subset must contain the identity")
    if not is_invariant(act, A):
        raise HypothesisViolation("The target subset is not Aut-invariant")
    constraints, used = [], set()
    nonidentity = SubsetSpec(A.group_id, A.order, A.nonidentity())
    for orbit in aut_orbits(act, nonidentity):
        z = int(orbit[0])
        a, b = _pair_for(G, table, z)
        used.add(int(table.labels[table.index(a, b)]))
        constraints.append(Constraint((a, b), z, f"Aut-orbit of {G.literal(z)}"))
    return TargetAssignment(G.group_id, 2, constraints, _null_constraints(table, used))


def theorem_a_target(n: int, A: SubsetSpec, G: FiniteGroup, table: PairTable, act: AutAction
                     ) -> TargetAssignment:
    """
    The table for v in the case where A leaves Alt(n), on pairs generating
    over Alt(n):

        a in A, a even, o(a) odd   ->  a
        a in A, a even, o(a) even  ->  a^(-e/e_2) a
        a in A, a odd              ->  a^(o(a)_2)
        otherwise                  ->  1

    so that x^(e/e_2) v maps (a, b) to a, a, a conjugate of a, or into C.
    """
    if table.mode is not PairMode.ALMOST_SIMPLE:
        raise UnsupportedInputError("theorem_a_target needs an almost-simple pair table")
    e = symmetric_exponent(n)
    odd_part = e // two_part(e)
    odd = G.parities()
    in_a = A.mask
    constraints, nulls, used = [], [], set()
    for orbit in aut_orbits(act, SubsetSpec(G.group_id, G.order, np.arange(1, G.order))):
        a = int(orbit[0])
        pair = _pair_for(G, table, a)
        used.add(int(table.labels[table.index(*pair)]))
        order = G.element_order(a)
        if not in_a[a]:
            nulls.append(Constraint(pair, 0, f"{G.literal(a)} outside A"))
            continue
        if not odd[a] and order % 2 == 1:
            value = a
        elif not odd[a]:
            value = G.mul(G.power(a, -odd_part), a)
        else:
            value = G.power(a, two_part(order))
        target = Constraint(pair, value, f"Aut-orbit of {G.literal(a)}")
        if value == 0:
            nulls.append(target)
        else:
            constraints.append(target)
    nulls.extend(c for c in _null_constraints(table, used)
                 if c.provenance == 'proper pair orbit')
    return TargetAssignment(G.group_id, 2, constraints, nulls)


def single_class_target(G: FiniteGroup, table: PairTable, act: AutAction, z: int
                        ) -> Tuple[SubsetSpec, TargetAssignment]:
    """A = {e} together with the Aut-orbit of z, and its target table."""
    labels = act.element_labels()
    mask = labels == labels[z]
    mask[0] = True
    A = SubsetSpec.from_mask(G, mask, f"e + Aut-orbit of {G.literal(z)}")
    return A, build_target(G, A, table, act)


# --- realization pipeline ---
@log_execution_time
def realize(n: int, A: SubsetSpec, G: FiniteGroup, act: AutAction, table: PairTable,
            max_len: int, strategy: str = 'bfs', seed: int = 0,
            max_nulls: int = DEFAULT_MAX_NULLS, state_cap: int = SEARCH_STATE_CAP,
            threads: int = 1, budget: int = EVALUATION_BUDGET) -> Dict[str, Any]:
    """classify -> target -> find_word -> exact image check."""
    result = classify_subset(n, A, G, act)
    report: Dict[str, Any] = {
        'schema': SCHEMA_VERSION,
        'command': 'realize',
        'n': n,
        'subset': A.to_dict(G),
        'classification': result.to_dict(G),
        'max_len': max_len,
        'strategy': strategy,
        'seed': seed,
        'max_nulls': max_nulls,
        'state_cap': state_cap,
        'conventions': {'composition': COMPOSITION_CONVENTION, 'commutator': COMMUTATOR_CONVENTION},
    }
    if not result.realizable:
        report['status'] = NOT_REALIZABLE
        return report

    if result.case == CASE_I:
        target = build_target(G, A, table, act)
    else:
        target = theorem_a_target(n, A, G, table, act)
    searched = target.restricted(max_nulls)
    report['target'] = searched.to_dict(G)
    report['nulls_available'] = len(target.nulls)
    search = find_word(searched, G, max_len, strategy, seed=seed, state_cap=state_cap)
    report['search'] = search.to_dict()
    if search.word is None:
        report['status'] = 'no-witness-within-budget'
        report['message'] = NOT_FOUND_MESSAGE
        return report

    w = search.word if result.case == CASE_I else compose_theorem_a(n, search.word)
    image = verbal_image(w, G, 'class-reduced', threads=threads, budget=budget)
    report['word'] = format_word(w)
    report['image_size'] = image.size
    report['status'] = 'realized' if image.same_members(A) else 'image-mismatch'
    if report['status'] == 'image-mismatch':
        report['extra_elements'] = int(np.setdiff1d(image.members, A.members).size)
        report['missing_elements'] = int(np.setdiff1d(A.members, image.members).size)
    return report


# --- property (*) ---
def star_check(S: FiniteGroup, act: AutAction, table: PairTable) -> Dict[str, Any]:
    """r (generating pairs modulo Aut and the center) against the nonidentity Aut-orbit count."""
    if not is_perfect(whole_group(S)):
        raise HypothesisViolation(ERROR_NOT_PERFECT.format(S.name))
    if table.mode is not PairMode.QUASISIMPLE:
        raise UnsupportedInputError("star_check needs a quasisimple pair table")
    k_worst = len(aut_orbits(act)) - 1
    return {
        'schema': SCHEMA_VERSION,
        'command': 'star',
        'group': S.describe(),
        'center_order': table.center_order,
        'aut_order': act.order,
        'class_number': class_number(S),
        'l': table.l,
        'r': table.r,
        'free_action': table.free_action,
        'k_worst': k_worst,
        'star_holds': table.r >= k_worst,
    }


# --- audits ---
@log_execution_time
def audit_images(n: int, G: FiniteGroup, act: AutAction, count: int, max_len: int, seed: int = 0,
                 words: Optional[Sequence[Word]] = None, threads: int = 1,
                 budget: int = EVALUATION_BUDGET) -> Dict[str, Any]:
    """
    Classify the images of random words (lengths uniform in 1..max_len,
    words uniform among reduced words of that length). Every image should be
    case-i or case-ii.
    """
    _require_symmetric(n, G)
    rng = np.random.default_rng(seed)
    if words is None:
        words = [random_reduced_word(2, int(rng.integers(1, max_len + 1)), rng)
                 for _ in range(count)]
    tally = {CASE_I: 0, CASE_II: 0, NOT_REALIZABLE: 0}
    violations = []
    for w in words:
        image = verbal_image(w, G, 'class-reduced', threads=threads, budget=budget)
        result = classify_subset(n, image, G, act)
        tally[result.case] += 1
        if not result.realizable:
            violations.append({'word': format_word(w), 'image_size': image.size,
                               'failed_condition': result.failed_condition})
    logger.info(f"audit Sym({n}): {len(words)} words, {len(violations)} violations")
    return {
        'schema': SCHEMA_VERSION,
        'command': 'audit',
        'n': n,
        'count': len(words),
        'max_len': max_len,
        'seed': seed,
        'cases': tally,
        'violations': violations,
        'passes': not violations,
    }


def sample_independent_family(table: PairTable, copies: int, rng: np.random.Generator,
                              G: Optional[FiniteGroup] = None) -> List[Tuple[int, int]]:
    """
    `copies` generating pairs from pairwise distinct orbits, each uniform in
    its orbit. With G given, only orbits of pairs generating all of G are used.
    """
    pool = table.representatives
    if G is not None:
        pool = np.array([p for p in pool if closure_mask(G, table.pair(int(p))).all()],
                        dtype=np.int64)
    if copies > pool.size:
        raise CapacityError("independent generating pairs", copies, int(pool.size))
    reps = rng.choice(pool, size=copies, replace=False)
    family = []
    for rep in reps:
        members = table.orbit(int(rep))
        family.append(table.pair(int(members[int(rng.integers(members.size))])))
    return family
