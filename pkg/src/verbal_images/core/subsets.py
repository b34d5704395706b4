"""
Subsets of an enumerated group and the subset description language.

A subset document is either a JSON list or one item per line (inline
specs may use ';' instead of newlines). Items:

    <index> | <literal>          a single element
    identity | all | two-power   named sets
    even                         even permutations (permutation groups)
    class-of: <literal>          the conjugacy class of an element
    aut-orbit-of: <literal>      the Aut(G)-orbit of an element
    union: [item, item, ...]     union of nested items

The document denotes the union of its items.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from ..exceptions import FormatError
from .groups import FiniteGroup, GroupKind
from .subgroups import conjugacy_labels

logger = logging.getLogger(__name__)

NAMED_SETS = ('identity', 'all', 'two-power', 'even')


@dataclass
class SubsetSpec:
    """Sorted, deduplicated element indices of one group, with cached flags."""

    group_id: str
    order: int
    members: np.ndarray
    label: str = ''
    aut_invariant: Optional[bool] = None  # None = unchecked
    orbits: Optional[List[np.ndarray]] = field(default=None, repr=False)

    @classmethod
    def from_indices(cls, G: FiniteGroup, indices: Any, label: str = '') -> 'SubsetSpec':
        members = np.unique(np.asarray(indices, dtype=np.int64).ravel())
        if members.size and (members[0] < 0 or members[-1] >= G.order):
            raise FormatError(f"Subset indices must lie in 0..{G.order - 1}")
        return cls(G.group_id, G.order, members, label)

    @classmethod
    def from_mask(cls, G: FiniteGroup, mask: np.ndarray, label: str = '') -> 'SubsetSpec':
        return cls(G.group_id, G.order, np.nonzero(mask)[0].astype(np.int64), label)

    @property
    def size(self) -> int:
        return int(self.members.size)

    @property
    def contains_identity(self) -> bool:
        return bool(self.members.size) and int(self.members[0]) == 0

    @property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.order, dtype=bool)
        mask[self.members] = True
        return mask

    def nonidentity(self) -> np.ndarray:
        return self.members[self.members != 0]

    def issubset(self, other: 'SubsetSpec') -> bool:
        return bool(np.all(other.mask[self.members]))

    def union(self, other: 'SubsetSpec') -> 'SubsetSpec':
        self._check_same_group(other)
        return SubsetSpec(self.group_id, self.order, np.union1d(self.members, other.members))

    def difference(self, other: 'SubsetSpec') -> 'SubsetSpec':
        self._check_same_group(other)
        return SubsetSpec(self.group_id, self.order, np.setdiff1d(self.members, other.members))

    def same_members(self, other: 'SubsetSpec') -> bool:
        return self.group_id == other.group_id and np.array_equal(self.members, other.members)

    def _check_same_group(self, other: 'SubsetSpec') -> None:
        if self.group_id != other.group_id:
            raise FormatError("Subsets belong to different groups")

    def to_dict(self, G: Optional[FiniteGroup] = None, list_limit: int = 200) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'label': self.label,
            'size': self.size,
            'contains_identity': self.contains_identity,
            'aut_invariant': self.aut_invariant,
            'members': self.members.tolist() if self.size <= list_limit else None,
        }
        if G is not None and self.size <= list_limit:
            data['literals'] = [G.literal(int(i)) for i in self.members]
        if self.orbits is not None:
            data['orbit_representatives'] = [int(o[0]) for o in self.orbits]
            data['orbit_sizes'] = [int(o.size) for o in self.orbits]
        return data


# --- named sets ---
def identity_set(G: FiniteGroup) -> SubsetSpec:
    return SubsetSpec.from_indices(G, [0], 'identity')


def whole_set(G: FiniteGroup) -> SubsetSpec:
    return SubsetSpec.from_indices(G, np.arange(G.order), 'all')


def two_power_set(G: FiniteGroup) -> SubsetSpec:
    """Elements of 2-power order, identity included."""
    orders = G.element_orders
    return SubsetSpec.from_mask(G, (orders & (orders - 1)) == 0, 'two-power')


def even_set(G: FiniteGroup) -> SubsetSpec:
    if G.kind is not GroupKind.PERMUTATION:
        raise FormatError(f"'even' needs a permutation group, {G.name} is {G.kind.value}")
    return SubsetSpec.from_mask(G, G.parities() == 0, 'even')


def class_of(G: FiniteGroup, g: int) -> SubsetSpec:
    labels = conjugacy_labels(G)
    return SubsetSpec.from_mask(G, labels == labels[g], f"class-of: {G.literal(g)}")


# --- document parsing ---
def _split_top_level(text: str) -> List[str]:
    """Split on commas that are not nested inside () or []."""
    parts, depth, start = [], 0, 0
    for i, char in enumerate(text):
        if char in '([':
            depth += 1
        elif char in ')]':
            depth -= 1
            if depth < 0:
                raise FormatError(f"Unbalanced brackets in '{text}'")
        elif char == ',' and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise FormatError(f"Unbalanced brackets in '{text}'")
    parts.append(text[start:])
    return [p.strip() for p in parts if p.strip()]


class SubsetResolver:
    """Turns subset documents into SubsetSpecs for one group."""

    def __init__(self, G: FiniteGroup, aut_labels: Optional[Callable[[], np.ndarray]] = None):
        self.G = G
        self._aut_labels = aut_labels

    def parse(self, text: str, label: str = '') -> SubsetSpec:
        stripped = text.strip()
        if stripped.startswith('[') and not stripped.startswith('[['):
            try:
                items = json.loads(stripped)
            except json.JSONDecodeError:
                items = None
            if isinstance(items, list):
                return self._union([self._json_item(item) for item in items], label or 'document')
        lines = [line.split('#', 1)[0].strip() for line in stripped.replace(';', '\n').splitlines()]
        items_masks = [self._text_item(line) for line in lines if line]
        if not items_masks:
            raise FormatError("Subset document is empty")
        return self._union(items_masks, label or stripped.replace('\n', '; '))

    def _union(self, masks: List[np.ndarray], label: str) -> SubsetSpec:
        total = np.zeros(self.G.order, dtype=bool)
        for mask in masks:
            total |= mask
        return SubsetSpec.from_mask(self.G, total, label)

    def _json_item(self, item: Any) -> np.ndarray:
        if isinstance(item, bool):
            raise FormatError(f"Unsupported subset item {item!r}")
        if isinstance(item, int):
            return self._element_mask(str(item))
        if isinstance(item, str):
            return self._text_item(item)
        if isinstance(item, dict) and len(item) == 1:
            (key, value), = item.items()
            if key == 'union':
                if not isinstance(value, list):
                    raise FormatError("'union' expects a list")
                masks = [self._json_item(v) for v in value]
                return np.logical_or.reduce(masks) if masks else np.zeros(self.G.order, bool)
            return self._text_item(f"{key}: {value}")
        raise FormatError(f"Unsupported subset item {item!r}")

    def _text_item(self, text: str) -> np.ndarray:
        text = text.strip()
        if text in NAMED_SETS:
            return self._named(text)
        if ':' in text and not text.startswith(('(', '[')):
            key, value = (s.strip() for s in text.split(':', 1))
            if key == 'class-of':
                return class_of(self.G, self.G.parse_element(value)).mask
            if key == 'aut-orbit-of':
                if self._aut_labels is None:
                    raise FormatError("'aut-orbit-of' needs the automorphism group")
                labels = self._aut_labels()
                return labels == labels[self.G.parse_element(value)]
            if key == 'union':
                body = value
                if not (body.startswith('[') and body.endswith(']')):
                    raise FormatError(f"'union' expects [item, ...], got '{value}'")
                masks = [self._text_item(part) for part in _split_top_level(body[1:-1])]
                return np.logical_or.reduce(masks) if masks else np.zeros(self.G.order, bool)
            raise FormatError(f"Unknown subset keyword '{key}'")
        return self._element_mask(text)

    def _named(self, name: str) -> np.ndarray:
        if name == 'identity':
            return identity_set(self.G).mask
        if name == 'all':
            return np.ones(self.G.order, dtype=bool)
        if name == 'two-power':
            return two_power_set(self.G).mask
        return even_set(self.G).mask

    def _element_mask(self, text: str) -> np.ndarray:
        mask = np.zeros(self.G.order, dtype=bool)
        mask[self.G.parse_element(text)] = True
        return mask
