"""
Orbit computation by label propagation.

Labels start as the point itself and repeatedly take the minimum over
images and preimages under every generator, with pointer jumping to
shortcut long chains. At the fixed point every point is labelled with
the smallest point of its orbit, which doubles as the canonical
orbit representative.
"""

from typing import List, Sequence

import numpy as np


def inverse_perm(perm: np.ndarray) -> np.ndarray:
    inverse = np.empty_like(perm)
    inverse[perm] = np.arange(perm.shape[0], dtype=perm.dtype)
    return inverse


def orbit_labels(perms: Sequence[np.ndarray], size: int) -> np.ndarray:
    """Minimal orbit member for every point of 0..size-1."""
    labels = np.arange(size, dtype=np.int64)
    moves: List[np.ndarray] = []
    for perm in perms:
        perm = np.asarray(perm, dtype=np.int64)
        moves.append(perm)
        moves.append(inverse_perm(perm))
    while True:
        new = labels.copy()
        for move in moves:
            np.minimum(new, labels[move], out=new)
        new = new[new]
        if np.array_equal(new, labels):
            return labels
        labels = new


def orbits_from_labels(labels: np.ndarray) -> List[np.ndarray]:
    """Orbits as sorted index arrays, ordered by their minimal member."""
    if labels.size == 0:
        return []
    order = np.argsort(labels, kind='stable')
    sorted_labels = labels[order]
    cuts = np.nonzero(np.diff(sorted_labels))[0] + 1
    return [np.sort(chunk) for chunk in np.split(order, cuts)]
