"""
The ordered-pair table of a group.

All |G|^2 ordered pairs (a, b) are indexed as p = a*|G| + b, split into
pairs generating over the distinguished subgroup S and proper pairs, and
partitioned into orbits of the acting group:

- plain / almost-simple: Aut(G) acting diagonally;
- quasisimple: Aut(S) acting diagonally together with independent
  translations (a, b) -> (a*z1, b*z2) by central elements.

Generation is decided once per orbit (on its minimal pair) and copied to
the rest of the orbit; both properties are invariant under the action.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..constants import ERROR_NOT_PERFECT, MAX_PAIR_TABLE_ORDER
from ..exceptions import CapacityError, HypothesisViolation
from ..utils.logging_config import log_execution_time
from ..utils.parallel import map_chunks, split_chunks
from .automorphisms import AutAction
from .groups import FiniteGroup
from .orbits import orbit_labels
from .subgroups import (
    Subgroup, center, centralizer_mask, closure_mask, is_normal, is_perfect, socle_candidate,
    whole_group,
)

logger = logging.getLogger(__name__)


class PairMode(str, Enum):
    PLAIN = 'plain'
    ALMOST_SIMPLE = 'almost-simple'
    QUASISIMPLE = 'quasisimple'


@dataclass
class PairTable:
    group_id: str
    group_name: str
    mode: PairMode
    order: int
    socle_order: int
    center_order: int
    generates: np.ndarray = field(repr=False)  # bool per pair index
    labels: np.ndarray = field(repr=False)  # minimal pair index of each orbit
    acting_order: int
    representatives: np.ndarray  # generating orbits, by minimal pair
    proper_representatives: np.ndarray  # non-generating orbits, by minimal pair
    free_action: bool
    non_free_representatives: List[int]
    socle_embeds_in_aut: Optional[bool]

    @property
    def l(self) -> int:  # noqa: E743
        return int(self.generates.sum())

    @property
    def r(self) -> int:
        return int(self.representatives.size)

    @property
    def proper_count(self) -> int:
        return int(self.generates.size) - self.l

    def pair(self, p: int) -> Tuple[int, int]:
        return int(p) // self.order, int(p) % self.order

    def index(self, a: int, b: int) -> int:
        return int(a) * self.order + int(b)

    def orbit(self, p: int) -> np.ndarray:
        return np.nonzero(self.labels == self.labels[p])[0]

    def orbit_sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.labels.size)[self.representatives]

    def generation_probability(self) -> Fraction:
        return Fraction(self.l, self.order ** 2)

    def partners(self, a: int) -> np.ndarray:
        """All b with (a, b) generating."""
        return np.nonzero(self.generates[a * self.order:(a + 1) * self.order])[0]

    def to_dict(self, G: Optional[FiniteGroup] = None, list_limit: int = 100) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'mode': self.mode.value,
            'group_order': self.order,
            'socle_order': self.socle_order,
            'center_order': self.center_order,
            'l': self.l,
            'proper_count': self.proper_count,
            'r': self.r,
            'acting_order': self.acting_order,
            'generation_probability': str(self.generation_probability()),
            'free_action': self.free_action,
            'non_free_representatives': self.non_free_representatives[:list_limit],
            'socle_embeds_in_aut': self.socle_embeds_in_aut,
        }
        if G is not None and self.r <= list_limit:
            data['representatives'] = [
                [G.literal(a), G.literal(b)] for a, b in map(self.pair, self.representatives)
            ]
        return data


def _pair_perms(G: FiniteGroup, act: AutAction, translations: List[int]) -> List[np.ndarray]:
    n = G.order
    pairs = np.arange(n * n, dtype=np.int64)
    first, second = pairs // n, pairs % n
    perms = [sigma[first] * n + sigma[second] for sigma in act.generator_perms]
    for z in translations:
        right = np.asarray(G.right_perm(z), dtype=np.int64)
        perms.append(right[first] * n + second)
        perms.append(first * n + right[second])
    return perms


@log_execution_time
def pair_table(G: FiniteGroup, act: AutAction, mode: PairMode = PairMode.PLAIN,
               S: Optional[Subgroup] = None, max_order: int = MAX_PAIR_TABLE_ORDER,
               threads: int = 1) -> PairTable:
    """
    Classify all ordered pairs and their orbits.

    In almost-simple mode S defaults to the last term of the derived series
    and must be a nontrivial normal subgroup. In quasisimple mode G itself
    must be perfect; pairs are taken modulo the center.
    """
    mode = PairMode(mode)
    if G.order > max_order:
        raise CapacityError(f"pair table for {G.name}", G.order, max_order)
    n = G.order

    translations: List[int] = []
    z_order = 1
    if mode is PairMode.ALMOST_SIMPLE:
        S = S if S is not None else socle_candidate(G)
        if S.is_trivial():
            raise HypothesisViolation(f"{G.name} has a trivial derived-series limit; no socle")
        if not is_normal(S):
            raise HypothesisViolation(f"The distinguished subgroup is not normal in {G.name}")
    else:
        S = whole_group(G)
    if mode is PairMode.QUASISIMPLE:
        if not is_perfect(S):
            raise HypothesisViolation(ERROR_NOT_PERFECT.format(G.name))
        Z = center(G)
        translations = list(Z.generators)
        z_order = Z.order

    labels = orbit_labels(_pair_perms(G, act, translations), n * n)
    reps = np.unique(labels)
    targets = np.array(S.generators if S.generators else [0])

    def test(chunk: np.ndarray) -> np.ndarray:
        out = np.zeros(chunk.size, dtype=bool)
        for i, p in enumerate(chunk):
            a, b = divmod(int(p), n)
            mask = closure_mask(G, (a, b), stop_when=targets)
            out[i] = bool(mask[targets].all())
        return out

    results = map_chunks(test, split_chunks(reps, max(1, threads) * 4), threads)
    rep_generates = np.concatenate(results) if results else np.zeros(0, dtype=bool)
    lookup = np.zeros(n * n, dtype=bool)
    lookup[reps] = rep_generates
    generates = lookup[labels]

    acting_order = act.order * z_order ** 2
    gen_reps = reps[rep_generates]
    sizes = np.bincount(labels, minlength=n * n)[gen_reps]
    non_free = gen_reps[sizes != acting_order]
    if non_free.size:
        logger.warning(f"{G.name}: action on generating pairs is not free on "
                       f"{non_free.size} orbit(s)")

    embeds: Optional[bool] = None
    if mode is not PairMode.QUASISIMPLE:
        embeds = bool(centralizer_mask(G, S.generators).sum() == 1)

    table = PairTable(
        group_id=G.group_id,
        group_name=G.name,
        mode=mode,
        order=n,
        socle_order=S.order,
        center_order=z_order,
        generates=generates,
        labels=labels,
        acting_order=acting_order,
        representatives=gen_reps,
        proper_representatives=reps[~rep_generates],
        free_action=not non_free.size,
        non_free_representatives=[int(p) for p in non_free],
        socle_embeds_in_aut=embeds,
    )
    logger.info(f"Pair table {G.name} ({mode.value}): l={table.l}, r={table.r}, "
                f"{reps.size} orbits tested")
    return table


def guralnick_kantor_check(G: FiniteGroup, table: PairTable) -> Dict[str, Any]:
    """Does every nonidentity element lie in some generating pair (a, b)?"""
    rows = table.generates.reshape(table.order, table.order)
    has_partner = rows.any(axis=1)
    lonely = [int(a) for a in np.nonzero(~has_partner)[0] if a != 0]
    return {
        'group': G.name,
        'mode': table.mode.value,
        'elements_checked': G.order - 1,
        'elements_without_partner': [G.literal(a) for a in lonely],
        'holds': not lonely,
    }
