"""
Brute-force automorphism groups.

Aut(G) is found by choosing a small generating set of G, listing
candidate images for each generator (same element order, same class
size, plus order checks on products and commutators for pairs) and
extending every candidate tuple multiplicatively along a breadth-first
spanning tree. An extension is kept when it is a bijection satisfying
phi(x*g) = phi(x)*phi(g) for all x and every generator g.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..constants import MAX_AUT_ORDER
from ..exceptions import CapacityError
from ..utils.logging_config import log_execution_time
from .groups import FiniteGroup
from .orbits import orbit_labels, orbits_from_labels
from .subgroups import center, closure_mask, conjugacy_labels
from .subsets import SubsetSpec

logger = logging.getLogger(__name__)

PAIR_BASE_ATTEMPTS = 5000


@dataclass(frozen=True)
class AutAction:
    """Aut(G) as permutations of the element indices of G."""

    group_id: str
    automorphisms: np.ndarray = field(repr=False)  # (|Aut|, |G|); row 0 is the identity
    base: Tuple[int, ...]  # generating set of G whose images determine an automorphism
    generator_images: np.ndarray = field(repr=False)  # (|Aut|, len(base))
    generators: Tuple[int, ...]  # row indices generating Aut(G)
    inner_count: int

    @property
    def order(self) -> int:
        return int(self.automorphisms.shape[0])

    @property
    def outer_count(self) -> int:
        return self.order // self.inner_count

    @property
    def generator_perms(self) -> List[np.ndarray]:
        return [self.automorphisms[i] for i in self.generators]

    def element_labels(self) -> np.ndarray:
        """Minimal Aut-orbit member for each element."""
        return orbit_labels(self.generator_perms, self.automorphisms.shape[1])

    def to_dict(self) -> Dict[str, object]:
        return {
            'order': self.order,
            'inner_count': self.inner_count,
            'outer_count': self.outer_count,
            'base': list(self.base),
            'generator_count': len(self.generators),
        }


# --- choosing a base ---
def _signatures(G: FiniteGroup) -> np.ndarray:
    """(element order, class size) packed into one integer per element."""
    labels = conjugacy_labels(G)
    sizes = np.bincount(labels, minlength=G.order)[labels]
    return G.element_orders * (G.order + 1) + sizes


def _generates(G: FiniteGroup, gens: Sequence[int]) -> bool:
    return bool(closure_mask(G, gens).all())


def choose_base(G: FiniteGroup) -> Tuple[int, ...]:
    """A generating set with few candidate images: one element, a pair, or a reduced set."""
    if G.order == 1:
        return ()
    signatures = _signatures(G)
    _, inverse, counts = np.unique(signatures, return_inverse=True, return_counts=True)
    candidate_count = counts[inverse]

    cyclic = np.nonzero(G.element_orders == G.order)[0]
    if cyclic.size:
        return (int(cyclic[np.argmin(candidate_count[cyclic])]),)

    labels = conjugacy_labels(G)
    reps = np.unique(labels)
    reps = reps[reps != 0]
    reps = reps[np.argsort(candidate_count[reps], kind='stable')]
    by_cost = np.argsort(candidate_count, kind='stable')
    by_cost = by_cost[by_cost != 0]
    best: Optional[Tuple[int, int]] = None
    best_cost = None
    attempts = 0
    for a in reps:
        for b in by_cost:
            cost = int(candidate_count[a]) * int(candidate_count[b])
            if best_cost is not None and cost >= best_cost:
                break
            attempts += 1
            if _generates(G, (int(a), int(b))):
                best, best_cost = (int(a), int(b)), cost
                break
            if attempts >= PAIR_BASE_ATTEMPTS:
                break
        if attempts >= PAIR_BASE_ATTEMPTS:
            break
    if best is not None:
        return best

    gens = list(G.generators)
    for g in list(gens):
        trial = [h for h in gens if h != g]
        if trial and _generates(G, trial):
            gens = trial
    return tuple(gens)


# --- extension ---
def _spanning_tree(G: FiniteGroup, base: Sequence[int]) -> List[Tuple[int, np.ndarray, np.ndarray]]:
    """Breadth-first levels as (base position, children, parents) triples."""
    rights = [np.asarray(G.right_perm(g)) for g in base]
    seen = np.zeros(G.order, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    levels = []
    while frontier.size:
        next_frontier = []
        for pos, right in enumerate(rights):
            children = right[frontier]
            fresh = ~seen[children]
            children, parents = children[fresh], frontier[fresh]
            children, first = np.unique(children, return_index=True)
            parents = parents[first]
            seen[children] = True
            if children.size:
                levels.append((pos, children, parents))
                next_frontier.append(children)
        frontier = np.concatenate(next_frontier) if next_frontier else np.array([], dtype=np.int64)
    return levels


class _Extender:
    def __init__(self, G: FiniteGroup, base: Sequence[int]):
        self.G = G
        self.base = tuple(base)
        self.levels = _spanning_tree(G, self.base)
        self.base_rights = [np.asarray(G.right_perm(g)) for g in self.base]
        self._rights: Dict[int, np.ndarray] = {}

    def right(self, h: int) -> np.ndarray:
        r = self._rights.get(h)
        if r is None:
            r = np.asarray(self.G.right_perm(h))
            self._rights[h] = r
        return r

    def extend(self, images: Sequence[int]) -> Optional[np.ndarray]:
        img = np.zeros(self.G.order, dtype=np.int64)
        rights = [self.right(h) for h in images]
        for pos, children, parents in self.levels:
            img[children] = rights[pos][img[parents]]
        for base_right, right in zip(self.base_rights, rights):
            if not np.array_equal(img[base_right], right[img]):
                return None
        if np.unique(img).size != self.G.order:
            return None
        return img


def _aut_generators(automorphisms: np.ndarray) -> Tuple[int, ...]:
    """Greedy generating subset of a permutation group given as a full list."""
    count = automorphisms.shape[0]
    if count == 1:
        return ()
    index = {row.tobytes(): i for i, row in enumerate(automorphisms)}
    reached = np.zeros(count, dtype=bool)
    reached[0] = True
    chosen: List[int] = []
    for i in range(1, count):
        if reached[i]:
            continue
        chosen.append(i)
        frontier = list(np.nonzero(reached)[0])
        while frontier:
            new = []
            for j in frontier:
                for c in chosen:
                    k = index[automorphisms[c][automorphisms[j]].tobytes()]
                    if not reached[k]:
                        reached[k] = True
                        new.append(k)
            frontier = new
        if reached.all():
            break
    return tuple(chosen)


@log_execution_time
def automorphism_group(G: FiniteGroup, max_order: int = MAX_AUT_ORDER) -> AutAction:
    """All automorphisms of G by brute-force extension of generator images."""
    if G.order > max_order:
        raise CapacityError(f"automorphism search for {G.name}", G.order, max_order)
    base = choose_base(G)
    extender = _Extender(G, base)
    signatures = _signatures(G)
    candidates = [np.nonzero(signatures == signatures[g])[0] for g in base]

    if len(base) == 2:
        a, b = base
        ab_order = G.element_order(G.mul(a, b))
        comm_order = G.element_order(G.commutator(a, b))
        tuples = (
            (int(x), int(y)) for x in candidates[0] for y in candidates[1]
            if G.element_order(G.mul(int(x), int(y))) == ab_order
            and G.element_order(G.commutator(int(x), int(y))) == comm_order
        )
    else:
        tuples = itertools.product(*[[int(c) for c in cs] for cs in candidates])

    found: List[np.ndarray] = []
    images: List[Tuple[int, ...]] = []
    identity_images = tuple(base)
    for choice in tuples:
        img = extender.extend(choice)
        if img is not None:
            if choice == identity_images:
                found.insert(0, img)
                images.insert(0, choice)
            else:
                found.append(img)
                images.append(choice)
    if not found:
        found, images = [np.arange(G.order)], [identity_images]

    automorphisms = np.array(found, dtype=np.int64)
    automorphisms.setflags(write=False)
    z_order = int(center(G).mask.sum())
    action = AutAction(
        group_id=G.group_id,
        automorphisms=automorphisms,
        base=base,
        generator_images=np.array(images, dtype=np.int64).reshape(len(found), len(base)),
        generators=_aut_generators(automorphisms),
        inner_count=G.order // z_order,
    )
    logger.info(f"Aut({G.name}): order {action.order}, inner {action.inner_count}, "
                f"base size {len(base)}, {sum(len(c) for c in candidates)} candidate images")
    return action


# --- orbits and invariance ---
def aut_orbits(act: AutAction, A: Optional[SubsetSpec] = None) -> List[np.ndarray]:
    """Aut-orbits meeting A (default: all of G), as sorted index arrays restricted to A."""
    labels = act.element_labels()
    if A is None:
        return orbits_from_labels(labels)
    members = A.members
    orbits = orbits_from_labels(labels[members])
    result = [members[o] for o in orbits]
    A.orbits = result
    return result


def is_invariant(act: AutAction, A: SubsetSpec) -> bool:
    """sigma(A) = A for every automorphism; records the flag on A."""
    mask = A.mask
    invariant = all(bool(mask[perm[A.members]].all()) for perm in act.generator_perms)
    A.aut_invariant = invariant
    return invariant


def invariant_closure(act: AutAction, A: SubsetSpec) -> SubsetSpec:
    """Smallest Aut-invariant superset of A."""
    labels = act.element_labels()
    mask = np.isin(labels, np.unique(labels[A.members]))
    closed = SubsetSpec(A.group_id, A.order, np.nonzero(mask)[0].astype(np.int64),
                        f"aut-closure({A.label})")
    closed.aut_invariant = True
    return closed
