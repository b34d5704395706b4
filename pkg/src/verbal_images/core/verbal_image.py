"""
Verbal images w(G) = {w(g_1, ..., g_k)}.

The tuple space G^k is walked in fixed-size blocks of consecutive tuple
numbers; each block evaluates the word letter by letter on whole index
vectors and marks the values in a local bitset. Bitsets are OR-merged in
block order, so the result does not depend on the thread count.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..constants import (
    COMMUTATOR_CONVENTION, COMPOSITION_CONVENTION, EVALUATION_BUDGET, SCHEMA_VERSION,
)
from ..exceptions import CapacityError, HypothesisViolation, UnsupportedInputError
from ..utils.logging_config import log_execution_time
from ..utils.parallel import map_chunks, or_merge
from .automorphisms import AutAction, is_invariant
from .groups import FiniteGroup
from .subgroups import conjugacy_classes, conjugacy_labels
from .subsets import SubsetSpec, two_power_set
from .words import Word, exponent_sum, format_word

logger = logging.getLogger(__name__)

STRATEGIES = ('naive', 'class-reduced', 'sample')
TABLE_BLOCK = 1 << 20
ROW_BLOCK = 1 << 14
DEFAULT_SAMPLES = 100_000


def _evaluate_tuples(G: FiniteGroup, w: Word, values: List[np.ndarray]) -> np.ndarray:
    """Word values (element indices) for the tuples given column-wise."""
    size = values[0].size if values else 1
    if G.mul_table is not None:
        table, inverses = G.mul_table, G.inverses
        acc = np.zeros(size, dtype=np.int64)
        for letter in w.letters:
            g = values[abs(letter) - 1]
            acc = table[acc, g if letter > 0 else inverses[g]]
        return acc.astype(np.int64)
    elements, inverses = G.elements, G.inverses
    acc_rows = np.broadcast_to(np.arange(G.degree, dtype=elements.dtype), (size, G.degree)).copy()
    for letter in w.letters:
        g = values[abs(letter) - 1]
        rows = elements[g if letter > 0 else inverses[g]]
        acc_rows = np.take_along_axis(rows, acc_rows, axis=1)
    return G.lookup_rows(acc_rows)


def _block_values(G: FiniteGroup, k: int, first: np.ndarray, lo: int, hi: int) -> List[np.ndarray]:
    """Decode tuple numbers lo..hi-1; the first coordinate runs over `first`."""
    t = np.arange(lo, hi, dtype=np.int64)
    n = G.order
    values = []
    for i in range(k - 1, 0, -1):
        values.append(t % n)
        t = t // n
    values.append(first[t])
    return values[::-1]


def evaluation_count(G: FiniteGroup, w: Word, strategy: str = 'naive') -> int:
    first = len(conjugacy_classes(G)) if strategy == 'class-reduced' else G.order
    return first * G.order ** (w.k - 1)


@log_execution_time
def verbal_image(w: Word, G: FiniteGroup, strategy: str = 'naive', threads: int = 1,
                 budget: int = EVALUATION_BUDGET, samples: int = DEFAULT_SAMPLES,
                 seed: int = 0) -> SubsetSpec:
    """
    The image of the word map of w on G.

    'naive' walks all of G^k. 'class-reduced' lets the first variable run
    over class representatives only and closes the result under
    conjugation. 'sample' evaluates `samples` random tuples and is not exact.
    """
    if strategy not in STRATEGIES:
        raise UnsupportedInputError(f"Unknown strategy '{strategy}'; expected one of {STRATEGIES}")
    label = f"{format_word(w)} over {G.name}"
    if w.is_empty():
        return SubsetSpec.from_indices(G, [0], label)

    if strategy == 'sample':
        rng = np.random.default_rng(seed)
        values = [rng.integers(G.order, size=samples) for _ in range(w.k)]
        image = np.zeros(G.order, dtype=bool)
        image[0] = True
        image[_evaluate_tuples(G, w, values)] = True
        return SubsetSpec.from_mask(G, image, f"{label} (sampled)")

    needed = evaluation_count(G, w, strategy)
    if needed > budget:
        raise CapacityError(f"evaluating {format_word(w)} over {G.name}", needed, budget)

    if strategy == 'class-reduced':
        first = np.array([c.representative for c in conjugacy_classes(G)], dtype=np.int64)
    else:
        first = np.arange(G.order, dtype=np.int64)
    block = TABLE_BLOCK if G.mul_table is not None else ROW_BLOCK
    bounds = [(lo, min(lo + block, needed)) for lo in range(0, needed, block)]

    def run(bound: Any) -> np.ndarray:
        bits = np.zeros(G.order, dtype=bool)
        bits[_evaluate_tuples(G, w, _block_values(G, w.k, first, *bound))] = True
        return bits

    image = or_merge(map_chunks(run, bounds, threads), G.order)
    if strategy == 'class-reduced':
        labels = conjugacy_labels(G)
        image = np.isin(labels, labels[image])
    logger.debug(f"w(G) for {label}: {int(image.sum())} elements from {needed} evaluations")
    return SubsetSpec.from_mask(G, image, label)


def class_decomposition(G: FiniteGroup, image: SubsetSpec) -> List[Dict[str, Any]]:
    """Conjugacy classes met by the image, with how much of each is covered."""
    mask = image.mask
    rows = []
    for cls in conjugacy_classes(G):
        covered = int(mask[cls.members].sum())
        if covered:
            rows.append({
                'representative': G.literal(cls.representative),
                'element_order': G.element_order(cls.representative),
                'class_size': cls.size,
                'covered': covered,
            })
    return rows


def image_report(w: Word, G: FiniteGroup, strategy: str = 'naive',
                 act: Optional[AutAction] = None, threads: int = 1,
                 budget: int = EVALUATION_BUDGET, samples: int = DEFAULT_SAMPLES,
                 seed: int = 0) -> Dict[str, Any]:
    image = verbal_image(w, G, strategy, threads=threads, budget=budget, samples=samples, seed=seed)
    report: Dict[str, Any] = {
        'schema': SCHEMA_VERSION,
        'command': 'image',
        'word': format_word(w),
        'rank': w.k,
        'group': G.describe(),
        'strategy': strategy,
        'exact': strategy != 'sample',
        'budget': budget,
        'threads': threads,
        'image_size': image.size,
        'image': image.to_dict(G),
        'classes': class_decomposition(G, image),
        'conventions': {'composition': COMPOSITION_CONVENTION,
                        'commutator': COMMUTATOR_CONVENTION},
    }
    if strategy == 'sample':
        report.update({'samples': samples, 'seed': seed})
    else:
        report['evaluations'] = evaluation_count(G, w, strategy)
    if act is not None:
        report['aut_invariant'] = is_invariant(act, image)
    return report


def parity_check(w: Word, G: FiniteGroup, threads: int = 1,
                 budget: int = EVALUATION_BUDGET) -> Dict[str, Any]:
    """
    Exponent-sum parities of w against the image facts over Sym(n).

    All sums even forces w(G) into Alt(n); an odd sum puts an odd
    permutation in the image, which then contains every 2-power element.
    """
    if not G.is_full_symmetric:
        raise HypothesisViolation(f"parity_check needs a full symmetric group, got {G.name}")
    sums = [exponent_sum(w, i) for i in range(1, w.k + 1)]
    all_even = all(s % 2 == 0 for s in sums)
    image = verbal_image(w, G, 'class-reduced', threads=threads, budget=budget)
    odd = G.parities()
    image_in_alt = not bool(odd[image.members].any())
    contains_c = two_power_set(G).issubset(image)
    implications = (not all_even or image_in_alt) and (all_even or contains_c)
    return {
        'word': format_word(w),
        'group': G.name,
        'exponent_sums': sums,
        'all_sums_even': all_even,
        'image_in_alt': image_in_alt,
        'contains_C': contains_c,
        'image_size': image.size,
        'implications_hold': implications,
    }


def images_agree(w: Word, G: FiniteGroup, strategies: Sequence[str] = ('naive', 'class-reduced')
                 ) -> bool:
    """Byte-identical canonical images across exact strategies."""
    images = [verbal_image(w, G, s).members.tobytes() for s in strategies]
    return all(img == images[0] for img in images)
