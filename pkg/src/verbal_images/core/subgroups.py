"""
Subgroups of an enumerated group: closure, conjugacy classes, center,
derived series and exponent.

Subgroups are index masks over the ambient element list. Permutation
groups additionally carry a sympy stabilizer chain, which answers order
and membership without walking the mask.
"""

import functools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

from ..constants import MAX_GROUP_ORDER
from ..exceptions import CapacityError
from .groups import FiniteGroup, GroupKind, permutation_group_of
from .orbits import orbit_labels, orbits_from_labels

logger = logging.getLogger(__name__)


def closure_mask(G: FiniteGroup, generators: Sequence[int],
                 stop_when: Optional[np.ndarray] = None) -> np.ndarray:
    """
    Breadth-first closure of <generators> inside G as a boolean mask.

    With `stop_when`, returns as soon as all of those indices are reached;
    the mask is then partial.
    """
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens = sorted({int(g) for g in generators if g != 0})
    if not gens:
        return mask
    if G.mul_table is not None:
        table = G.mul_table
        gen_arr = np.array(gens)

        def step(frontier: np.ndarray) -> np.ndarray:
            return table[frontier[:, None], gen_arr[None, :]].ravel()
    else:
        rights = np.stack([G.right_perm(g) for g in gens])

        def step(frontier: np.ndarray) -> np.ndarray:
            return rights[:, frontier].ravel()

    frontier = np.array([0])
    while frontier.size:
        nxt = step(frontier)
        nxt = np.unique(nxt[~mask[nxt]])
        mask[nxt] = True
        if stop_when is not None and mask[stop_when].all():
            break
        frontier = nxt
    return mask


class Subgroup:
    """Handle on <generators> inside an ambient enumerated group."""

    def __init__(self, ambient: FiniteGroup, generators: Iterable[int],
                 mask: Optional[np.ndarray] = None):
        self.ambient = ambient
        self.generators = tuple(sorted({int(g) for g in generators if g != 0}))
        self._mask = mask
        self._chain: Optional[PermutationGroup] = None

    @property
    def mask(self) -> np.ndarray:
        if self._mask is None:
            self._mask = closure_mask(self.ambient, self.generators)
            self._mask.setflags(write=False)
        return self._mask

    @property
    def chain(self) -> Optional[PermutationGroup]:
        if self.ambient.kind is not GroupKind.PERMUTATION:
            return None
        if self._chain is None:
            rows = self.ambient.elements[list(self.generators)]
            self._chain = permutation_group_of(rows, self.ambient.degree)
        return self._chain

    @property
    def order(self) -> int:
        if self._mask is None and self.chain is not None:
            return int(self.chain.order())
        return int(self.mask.sum())

    def contains(self, g: int) -> bool:
        if self._mask is None and self.chain is not None:
            return bool(self.chain.contains(Permutation(self.ambient.elements[g].tolist())))
        return bool(self.mask[g])

    def elements(self) -> np.ndarray:
        return np.nonzero(self.mask)[0]

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        return f"Subgroup(of={self.ambient.name!r}, gens={len(self.generators)}, order={self.order})"


class PermutationSubgroup:
    """<T> for raw permutations that share a degree but no enumerated ambient."""

    def __init__(self, degree: int, rows: Sequence[np.ndarray]):
        self.degree = degree
        self.rows = [np.asarray(r) for r in rows]
        self.chain = permutation_group_of(np.array(self.rows).reshape(len(self.rows), degree), degree)

    @property
    def order(self) -> int:
        return int(self.chain.order())

    def contains(self, row: np.ndarray) -> bool:
        return bool(self.chain.contains(Permutation(np.asarray(row).tolist())))

    def elements(self, max_order: int = MAX_GROUP_ORDER) -> np.ndarray:
        if self.order > max_order:
            raise CapacityError("subgroup enumeration", self.order, max_order)
        return np.array(list(self.chain.generate_schreier_sims(af=True)), dtype=np.int32)


def closure(G: FiniteGroup, T: Iterable[int]) -> Subgroup:
    """<T> inside G."""
    return Subgroup(G, T)


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, G.generators, mask=np.ones(G.order, dtype=bool))


# --- conjugacy ---
@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: np.ndarray

    @property
    def size(self) -> int:
        return int(self.members.size)


@functools.lru_cache(maxsize=16)
def conjugacy_labels(G: FiniteGroup) -> np.ndarray:
    """Minimal class member for each element."""
    perms = [G.conj_perm(g) for g in G.generators]
    labels = orbit_labels(perms, G.order)
    labels.setflags(write=False)
    return labels


def conjugacy_classes(G: FiniteGroup) -> List[ConjugacyClass]:
    """Classes ordered by minimal member; the identity class comes first."""
    classes = [ConjugacyClass(int(orbit[0]), orbit) for orbit in orbits_from_labels(conjugacy_labels(G))]
    logger.debug(f"{G.name}: {len(classes)} conjugacy classes")
    return classes


def class_number(G: FiniteGroup) -> int:
    return int(np.unique(conjugacy_labels(G)).size)


def conjugate(G: FiniteGroup, a: int, g: int) -> int:
    """a^g = g^-1 a g."""
    return G.mul(G.mul(G.inv(g), a), g)


def center(G: FiniteGroup) -> Subgroup:
    mask = np.ones(G.order, dtype=bool)
    for g in G.generators:
        mask &= np.asarray(G.right_perm(g)) == np.asarray(G.left_perm(g))
    members = np.nonzero(mask)[0]
    return Subgroup(G, members.tolist(), mask=mask)


# --- derived series ---
def normal_closure(G: FiniteGroup, generators: Iterable[int], by: Sequence[int]) -> Subgroup:
    """Smallest subgroup containing `generators` and normalised by <by>."""
    gens = sorted({int(g) for g in generators if g != 0})
    mask = closure_mask(G, gens)
    changed = True
    while changed:
        changed = False
        for k in list(gens):
            for h in by:
                c = conjugate(G, k, h)
                if not mask[c]:
                    gens.append(c)
                    mask = closure_mask(G, gens)
                    changed = True
    return Subgroup(G, gens, mask=mask)


def derived_subgroup(H: Subgroup) -> Subgroup:
    G = H.ambient
    comms = {G.commutator(a, b) for i, a in enumerate(H.generators) for b in H.generators[i + 1:]}
    return normal_closure(G, comms, H.generators)


def derived_series(H: Subgroup) -> List[Subgroup]:
    """
    [H, H', H'', ...] up to stabilization.

    A series that stabilises at a nontrivial (perfect) term lists that term
    twice, so perfect groups report [H, H]; a series reaching 1 ends there.
    """
    series = [H]
    while not series[-1].is_trivial():
        nxt = derived_subgroup(series[-1])
        series.append(nxt)
        if nxt.order == series[-2].order:
            break
    return series


def is_normal(H: Subgroup, K: Optional[Subgroup] = None) -> bool:
    """Is H normalised by K (default: the whole ambient group)?"""
    G = H.ambient
    by = K.generators if K is not None else G.generators
    return all(H.mask[conjugate(G, h, g)] for h in H.generators for g in by)


def is_perfect(H: Subgroup) -> bool:
    return derived_subgroup(H).order == H.order


# --- orders ---
def exponent(G: FiniteGroup) -> int:
    return int(np.lcm.reduce(G.element_orders))


def two_part(m: int) -> int:
    """Largest power of 2 dividing m."""
    if m < 1:
        raise ValueError(f"two_part needs a positive integer, got {m}")
    return m & -m


def element_order(G: FiniteGroup, g: int) -> int:
    return G.element_order(g)


def socle_candidate(G: FiniteGroup) -> Subgroup:
    """Last term of the derived series; the simple socle when G is almost simple."""
    return derived_series(whole_group(G))[-1]


def centralizer_mask(G: FiniteGroup, generators: Sequence[int]) -> np.ndarray:
    mask = np.ones(G.order, dtype=bool)
    for g in generators:
        mask &= np.asarray(G.right_perm(g)) == np.asarray(G.left_perm(g))
    return mask
