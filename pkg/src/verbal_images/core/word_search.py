"""
Witness-word search.

A target assignment asks for a word w with w(t_j) = v_j on finitely many
tuples t_j. The search state is the vector of current values on all
tuples at once; appending a letter multiplies every coordinate on the
right by that letter's value. States are deduplicated by the bytes of the
value vector, which is the vector itself, so there are no false merges.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..constants import NOT_FOUND_MESSAGE, SEARCH_STATE_CAP
from ..exceptions import CapacityError, FormatError, UnsupportedInputError
from ..utils.logging_config import log_execution_time
from .groups import FiniteGroup
from .words import Word, enumerate_reduced_words, evaluate, format_word

logger = logging.getLogger(__name__)

SEARCH_STRATEGIES = ('bfs', 'bidirectional', 'random-walk')


@dataclass(frozen=True)
class Constraint:
    values: Tuple[int, ...]
    target: int
    provenance: str = ''


@dataclass
class TargetAssignment:
    """Value constraints and null constraints (tuples that must map to e)."""

    group_id: str
    k: int
    constraints: List[Constraint] = field(default_factory=list)
    nulls: List[Constraint] = field(default_factory=list)

    def __post_init__(self) -> None:
        seen: Dict[Tuple[int, ...], int] = {}
        for c in self.constraints + self.nulls:
            if len(c.values) != self.k:
                raise FormatError(f"Tuple {c.values} does not have {self.k} entries")
            previous = seen.setdefault(c.values, c.target)
            if previous != c.target:
                raise FormatError(f"Tuple {c.values} is required to map to both "
                                  f"{previous} and {c.target}")

    def all_constraints(self) -> List[Constraint]:
        return self.constraints + self.nulls

    def restricted(self, max_nulls: int) -> 'TargetAssignment':
        """Same value constraints, only the first `max_nulls` null constraints."""
        return TargetAssignment(self.group_id, self.k, list(self.constraints),
                                list(self.nulls[:max_nulls]))

    def satisfied_by(self, w: Word, G: FiniteGroup) -> bool:
        return all(evaluate(w, c.values, G) == c.target for c in self.all_constraints())

    def to_dict(self, G: FiniteGroup) -> Dict[str, Any]:
        def row(c: Constraint) -> Dict[str, Any]:
            return {'tuple': [G.literal(v) for v in c.values], 'target': G.literal(c.target),
                    'provenance': c.provenance}
        return {'constraints': [row(c) for c in self.constraints],
                'nulls': [row(c) for c in self.nulls]}

    @classmethod
    def from_document(cls, G: FiniteGroup, text: str, k: int = 2) -> 'TargetAssignment':
        """
        JSON target document: a list of {"tuple": [...], "target": ...}
        items, optionally with {"nulls": [[...], ...]} items; or an object
        {"constraints": [...], "nulls": [...]}.
        """
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"Target document is not valid JSON: {e}")
        if isinstance(doc, dict):
            items = list(doc.get('constraints', [])) + [{'nulls': doc.get('nulls', [])}]
        elif isinstance(doc, list):
            items = doc
        else:
            raise FormatError("Target document must be a JSON list or object")

        def element(value: Any) -> int:
            return G.parse_element(str(value))

        constraints, nulls = [], []
        for n, item in enumerate(items):
            if not isinstance(item, dict):
                raise FormatError(f"Target item {n} must be an object")
            if 'nulls' in item:
                for tup in item['nulls']:
                    nulls.append(Constraint(tuple(element(v) for v in tup), 0, 'null'))
            elif 'tuple' in item and 'target' in item:
                constraints.append(Constraint(tuple(element(v) for v in item['tuple']),
                                              element(item['target']),
                                              str(item.get('provenance', f'item {n}'))))
            else:
                raise FormatError(f"Target item {n} needs 'tuple' and 'target' or 'nulls'")
        return cls(G.group_id, k, constraints, nulls)


@dataclass
class SearchResult:
    word: Optional[Word]
    strategy: str
    budget: int
    states: int
    seed: Optional[int] = None

    @property
    def found(self) -> bool:
        return self.word is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'found': self.found,
            'word': format_word(self.word) if self.word is not None else None,
            'length': len(self.word) if self.word is not None else None,
            'strategy': self.strategy,
            'budget': self.budget,
            'states_explored': self.states,
            'seed': self.seed,
            'message': None if self.found else NOT_FOUND_MESSAGE,
        }


class _Search:
    """Shared letter tables for one assignment."""

    def __init__(self, G: FiniteGroup, t: TargetAssignment, state_cap: int):
        if G.mul_table is None:
            raise CapacityError(f"word search over {G.name} (needs a multiplication table)",
                                G.order, 0)
        self.G = G
        self.k = t.k
        self.table = G.mul_table
        rows = t.all_constraints()
        tuples = np.array([c.values for c in rows], dtype=np.int64).reshape(len(rows), t.k)
        self.letters = [s * i for i in range(1, t.k + 1) for s in (1, -1)]
        self.letter_values = {}
        for letter in self.letters:
            col = tuples[:, abs(letter) - 1]
            self.letter_values[letter] = col if letter > 0 else G.inverses[col]
        self.start = np.zeros(len(rows), dtype=np.int64)
        self.target = np.array([c.target for c in rows], dtype=np.int64)
        self.state_cap = state_cap

    def step(self, states: np.ndarray, letter: int) -> np.ndarray:
        return self.table[states, self.letter_values[letter][None, :]].astype(np.int64)

    def check_cap(self, count: int) -> None:
        if count > self.state_cap:
            raise CapacityError("word search states", count, self.state_cap)


def _trace(parents: List[Tuple[int, int]], node: int) -> List[int]:
    letters = []
    while node:
        node, letter = parents[node]
        letters.append(letter)
    return letters[::-1]


def _bfs(search: _Search, budget: int) -> Tuple[Optional[List[int]], int]:
    target_key = search.target.tobytes()
    visited = {search.start.tobytes(): 0}
    parents: List[Tuple[int, int]] = [(-1, 0)]
    if search.start.tobytes() == target_key:
        return [], 1
    frontier, frontier_ids = search.start[None, :], np.array([0])
    for _ in range(budget):
        new_states, new_ids = [], []
        for letter in search.letters:
            nxt = search.step(frontier, letter)
            for row, parent in zip(nxt, frontier_ids):
                key = row.tobytes()
                if key in visited:
                    continue
                node = len(parents)
                visited[key] = node
                parents.append((int(parent), letter))
                if key == target_key:
                    return _trace(parents, node), len(parents)
                new_states.append(row)
                new_ids.append(node)
            search.check_cap(len(parents))
        if not new_states:
            break
        frontier, frontier_ids = np.array(new_states), np.array(new_ids)
    return None, len(parents)


def _bidirectional(search: _Search, budget: int) -> Tuple[Optional[List[int]], int]:
    """Meet in the middle: forward from e, backward from the target by inverse letters."""
    sides = []
    for origin in (search.start, search.target):
        sides.append({
            'visited': {origin.tobytes(): 0},
            'parents': [(-1, 0)],
            'frontier': origin[None, :],
            'ids': np.array([0]),
        })
    forward, backward = sides
    meet = backward['visited'].get(search.start.tobytes())
    if meet is not None:
        return [], 2
    depth = 0
    while depth < budget:
        side_index = 0 if forward['frontier'].shape[0] <= backward['frontier'].shape[0] else 1
        side, other = sides[side_index], sides[1 - side_index]
        new_states, new_ids = [], []
        for letter in search.letters:
            step_letter = letter if side_index == 0 else -letter
            nxt = search.step(side['frontier'], step_letter)
            for row, parent in zip(nxt, side['ids']):
                key = row.tobytes()
                if key in side['visited']:
                    continue
                node = len(side['parents'])
                side['visited'][key] = node
                side['parents'].append((int(parent), letter))
                hit = other['visited'].get(key)
                if hit is not None:
                    f_node, b_node = (node, hit) if side_index == 0 else (hit, node)
                    prefix = _trace(forward['parents'], f_node)
                    suffix = _trace(backward['parents'], b_node)[::-1]
                    return prefix + suffix, len(forward['parents']) + len(backward['parents'])
                new_states.append(row)
                new_ids.append(node)
        search.check_cap(len(forward['parents']) + len(backward['parents']))
        if not new_states:
            break
        side['frontier'], side['ids'] = np.array(new_states), np.array(new_ids)
        depth += 1
    return None, len(forward['parents']) + len(backward['parents'])


def _random_walk(search: _Search, budget: int, rng: np.random.Generator
                 ) -> Tuple[Optional[List[int]], int]:
    if np.array_equal(search.start, search.target):
        return [], 1
    if budget == 0:
        return None, 1
    walks = max(1, search.state_cap // budget)
    target_key = search.target.tobytes()
    explored = 0
    for _ in range(walks):
        state = search.start[None, :]
        letters: List[int] = []
        for _ in range(budget):
            choices = [x for x in search.letters if not letters or x != -letters[-1]]
            letter = choices[int(rng.integers(len(choices)))]
            letters.append(letter)
            state = search.step(state, letter)
            explored += 1
            if state[0].tobytes() == target_key:
                return letters, explored
    return None, explored


@log_execution_time
def find_word(t: TargetAssignment, G: FiniteGroup, budget: int, strategy: str = 'bfs',
              seed: int = 0, state_cap: int = SEARCH_STATE_CAP) -> SearchResult:
    """
    Search for a word satisfying every constraint of t, up to length `budget`.

    'bfs' returns a shortest witness. A result without a word only means
    no witness was found within the budget.
    """
    if strategy not in SEARCH_STRATEGIES:
        raise UnsupportedInputError(
            f"Unknown search strategy '{strategy}'; expected {SEARCH_STRATEGIES}")
    if budget < 0:
        raise UnsupportedInputError("Search budget must be non-negative")
    if t.group_id != G.group_id:
        raise FormatError("Target assignment belongs to a different group")
    if not t.all_constraints():
        return SearchResult(Word(t.k, ()), strategy, budget, 0, seed)

    search = _Search(G, t, state_cap)
    if strategy == 'bfs':
        letters, states = _bfs(search, budget)
    elif strategy == 'bidirectional':
        letters, states = _bidirectional(search, budget)
    else:
        letters, states = _random_walk(search, budget, np.random.default_rng(seed))

    word = None
    if letters is not None:
        word = Word.from_letters(t.k, letters)
        if not t.satisfied_by(word, G):
            raise AssertionError(f"Search produced {format_word(word)}, which fails verification")
    logger.info(f"find_word[{strategy}] on {G.name}: "
                f"{'found ' + format_word(word) if word is not None else NOT_FOUND_MESSAGE} "
                f"after {states} states")
    return SearchResult(word, strategy, budget, states, seed if strategy == 'random-walk' else None)


def exhaustive_shortest(t: TargetAssignment, G: FiniteGroup, max_length: int) -> Optional[int]:
    """Length of the shortest reduced word satisfying t, by plain enumeration."""
    for w in enumerate_reduced_words(t.k, max_length):
        if t.satisfied_by(w, G):
            return len(w)
    return None
