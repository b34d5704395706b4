"""
Subdirect products generated by independent tuples.

Given m tuples (g_1^j, ..., g_k^j) of a group G, one per copy j, the
elements h_i = (g_i^1, ..., g_i^m) generate H <= G^m. H is realised as a
permutation group on m blocks of the permutation degree of G and handled
through a stabilizer chain, so |G|^m is never enumerated. When each tuple
generates over the socle S and no two tuples are related by an
automorphism, H contains S^m; this module checks exactly that.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..constants import SCHEMA_VERSION
from ..exceptions import CapacityError, HypothesisViolation
from ..utils.logging_config import log_execution_time
from .automorphisms import AutAction
from .groups import FiniteGroup
from .subgroups import PermutationSubgroup, Subgroup, closure_mask

logger = logging.getLogger(__name__)

MAX_PRODUCT_DEGREE = 5_000


def aut_related(act: AutAction, s: Sequence[int], t: Sequence[int]) -> bool:
    """Is there an automorphism sending tuple s to tuple t coordinate-wise?"""
    images = act.automorphisms[:, list(s)]
    return bool(np.all(images == np.asarray(t)[None, :], axis=1).any())


def _block_row(G: FiniteGroup, copies: int, entries: Sequence[int]) -> np.ndarray:
    d = G.degree
    row = np.empty(copies * d, dtype=np.int64)
    for j, g in enumerate(entries):
        row[j * d:(j + 1) * d] = G.elements[g].astype(np.int64) + j * d
    return row


@log_execution_time
def lemma22_check(G: FiniteGroup, S: Subgroup, tuples: Sequence[Sequence[int]], s: int,
                  act: AutAction, max_degree: int = MAX_PRODUCT_DEGREE) -> Dict[str, Any]:
    """
    The first `s` tuples must generate G, the rest must generate a subgroup
    containing S, and the tuples must be pairwise Aut-independent; then
    H = <h_1, ..., h_k> is checked to contain every factor S_j.
    """
    tuples = [tuple(int(x) for x in t) for t in tuples]
    copies = len(tuples)
    if copies == 0:
        raise HypothesisViolation("lemma22_check needs at least one tuple")
    k = len(tuples[0])
    if any(len(t) != k for t in tuples):
        raise HypothesisViolation("All tuples must have the same length")
    if copies * G.degree > max_degree:
        raise CapacityError("product permutation degree", copies * G.degree, max_degree)

    s_targets = np.array(S.generators if S.generators else [0])
    for j, t in enumerate(tuples):
        mask = closure_mask(G, t)
        if j < s and not mask.all():
            raise HypothesisViolation(f"Tuple {j} does not generate {G.name}")
        if not mask[s_targets].all():
            raise HypothesisViolation(f"Tuple {j} does not generate a subgroup containing S")
    for i in range(copies):
        for j in range(i + 1, copies):
            if aut_related(act, tuples[i], tuples[j]):
                raise HypothesisViolation(f"Tuples {i} and {j} are related by an automorphism")

    H = PermutationSubgroup(copies * G.degree, [
        _block_row(G, copies, [t[i] for t in tuples]) for i in range(k)
    ])
    factor_checks: List[bool] = []
    for j in range(copies):
        entries: List[int] = [0] * copies
        ok = True
        for g in S.generators:
            entries[j] = g
            ok = ok and H.contains(_block_row(G, copies, entries))
        factor_checks.append(ok)

    h_order = H.order
    s_power = S.order ** copies
    report = {
        'schema': SCHEMA_VERSION,
        'command': 'lemma22',
        'group': G.name,
        'copies': copies,
        'tuple_length': k,
        'generating_G': min(s, copies),
        'generating_over_S': copies - min(s, copies),
        'points': copies * G.degree,
        'tuples': [[G.literal(x) for x in t] for t in tuples],
        'H_order': h_order,
        'S_power_order': s_power,
        'factors_contained': factor_checks,
        'passes': all(factor_checks) and h_order % s_power == 0,
    }
    logger.info(f"lemma22 on {G.name}^{copies}: |H|={h_order}, passes={report['passes']}")
    return report


def lemma22_suite(G: FiniteGroup, S: Subgroup, families: Sequence[Sequence[Sequence[int]]],
                  act: AutAction, s: Optional[int] = None) -> Dict[str, Any]:
    """Run lemma22_check over several families; all must pass."""
    reports = [lemma22_check(G, S, family, len(family) if s is None else s, act)
               for family in families]
    return {
        'families': len(reports),
        'passed': sum(r['passes'] for r in reports),
        'H_orders': [r['H_order'] for r in reports],
        'passes': all(r['passes'] for r in reports),
    }
