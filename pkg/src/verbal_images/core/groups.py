"""
Concrete finite groups.

Every group, whatever its surface encoding, is enumerated once through a
faithful permutation representation:

- permutation groups act on their own points;
- matrix groups act on the nonzero row vectors of GF(q)^n (v -> v*M);
- Cayley-table groups act on themselves by right multiplication.

Elements get dense indices 0..order-1 in breadth-first order from the
identity (index 0). Products follow the left-to-right convention: g*h
applies g first, then h, so for permutation rows (g*h)[i] = h[g[i]].
"""

import hashlib
import json
import logging
import math
import re
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

from ..constants import MAX_GROUP_ORDER, MAX_TABLE_ORDER
from ..exceptions import CapacityError, FormatError, GroupValidationError
from ..utils.logging_config import log_execution_time
from .finite_field import FieldTable, get_field

logger = logging.getLogger(__name__)

CYCLE_PATTERN = re.compile(r'\(([^()]*)\)')
IDENTITY_LITERALS = {'e', 'id', '()'}


class GroupKind(str, Enum):
    PERMUTATION = 'perm'
    MATRIX = 'matrix'
    CAYLEY = 'cayley'


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class FiniteGroup:
    """
    A fully enumerated finite group.

    Immutable after construction; safe to share between worker threads.
    """

    def __init__(self, name: str, kind: GroupKind, elements: np.ndarray,
                 generators: Tuple[int, ...], index: Dict[bytes, int],
                 right_generators: np.ndarray, parents: Optional[np.ndarray] = None,
                 parent_generators: Optional[np.ndarray] = None,
                 field: Optional[FieldTable] = None, dimension: Optional[int] = None,
                 table: Optional[np.ndarray] = None, max_table_order: int = MAX_TABLE_ORDER):
        self.name = name
        self.kind = kind
        self.elements = _readonly(elements)
        self.generators = tuple(int(g) for g in generators)
        self._index = index
        self.right_generators = _readonly(right_generators)
        self.field = field
        self.dimension = dimension
        self.order = int(elements.shape[0])
        self.degree = int(elements.shape[1])
        self.group_id = hashlib.md5(
            json.dumps([name, kind.value, self.degree, self.order]).encode()
            + elements[list(self.generators)].tobytes()
        ).hexdigest()[:16]

        if table is None and self.order <= max_table_order:
            table = self._table_from_tree(parents, parent_generators)
        self.mul_table = _readonly(table) if table is not None else None
        self.inverses = _readonly(self._compute_inverses())
        self.element_orders = _readonly(self._compute_orders())
        self._chain: Optional[PermutationGroup] = None
        self._parities: Optional[np.ndarray] = None
        logger.info(f"Enumerated {name}: kind={kind.value}, order={self.order}, "
                    f"degree={self.degree}, table={'yes' if self.mul_table is not None else 'no'}")

    # --- element lookup ---
    def index_of(self, perm: np.ndarray) -> int:
        """Dense index of a permutation row; raises KeyError if absent."""
        row = np.ascontiguousarray(perm, dtype=self.elements.dtype)
        return self._index[row.tobytes()]

    def find(self, perm: np.ndarray) -> Optional[int]:
        row = np.ascontiguousarray(perm, dtype=self.elements.dtype)
        return self._index.get(row.tobytes())

    def lookup_rows(self, rows: np.ndarray) -> np.ndarray:
        rows = np.ascontiguousarray(rows, dtype=self.elements.dtype)
        return np.fromiter((self._index[r.tobytes()] for r in rows), dtype=np.int64,
                           count=rows.shape[0])

    # --- arithmetic on indices ---
    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return int(self.mul_table[a, b])
        return self.index_of(self.elements[b][self.elements[a]])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, m: int) -> int:
        if m < 0:
            a, m = self.inv(a), -m
        result, base = 0, a
        while m:
            if m & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            m >>= 1
        return result

    def commutator(self, a: int, b: int) -> int:
        """[a,b] = a^-1 b^-1 a b."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def element_order(self, a: int) -> int:
        return int(self.element_orders[a])

    def right_perm(self, g: int) -> np.ndarray:
        """Index permutation x -> x*g."""
        if self.mul_table is not None:
            return self.mul_table[:, g]
        if g in self.generators:
            return self.right_generators[self.generators.index(g)]
        return self.lookup_rows(self.elements[g][self.elements])

    def left_perm(self, g: int) -> np.ndarray:
        """Index permutation x -> g*x."""
        if self.mul_table is not None:
            return self.mul_table[g, :]
        return self.lookup_rows(self.elements[:, self.elements[g]])

    def conj_perm(self, g: int) -> np.ndarray:
        """Index permutation x -> g^-1 x g."""
        return self.right_perm(g)[self.left_perm(self.inv(g))]

    def random_element(self, rng: np.random.Generator) -> int:
        return int(rng.integers(self.order))

    # --- permutation-specific structure ---
    @property
    def stabilizer_chain(self) -> Optional[PermutationGroup]:
        """Schreier-Sims backend; present for permutation groups only."""
        if self.kind is not GroupKind.PERMUTATION:
            return None
        if self._chain is None:
            self._chain = permutation_group_of(self.elements[list(self.generators)], self.degree)
        return self._chain

    @property
    def is_full_symmetric(self) -> bool:
        return (self.kind is GroupKind.PERMUTATION
                and self.order == math.factorial(self.degree))

    def parities(self) -> np.ndarray:
        """0 for even, 1 for odd permutations of the underlying points."""
        if self._parities is None:
            self._parities = _readonly(np.array(
                [Permutation(row.tolist()).parity() for row in self.elements], dtype=np.int8))
        return self._parities

    def cycle_type(self, a: int) -> Tuple[int, ...]:
        """Cycle lengths of the underlying permutation, descending, fixed points included."""
        structure = Permutation(self.elements[a].tolist()).cycle_structure
        lengths: List[int] = []
        for length, count in structure.items():
            lengths.extend([length] * count)
        return tuple(sorted(lengths, reverse=True))

    # --- literals ---
    def literal(self, a: int) -> str:
        if self.kind is GroupKind.PERMUTATION:
            return format_cycles(self.elements[a])
        if self.kind is GroupKind.MATRIX:
            return format_matrix(self.matrix_of(a))
        return str(int(a))

    def parse_element(self, text: str) -> int:
        """Resolve an index, cycle literal or matrix literal to an element index."""
        text = text.strip()
        if text.isdigit():
            idx = int(text)
            if not 0 <= idx < self.order:
                raise FormatError(f"Element index {idx} out of range for {self.name}")
            return idx
        if text in IDENTITY_LITERALS:
            return 0
        if self.kind is GroupKind.PERMUTATION:
            perm = parse_cycles(text, self.degree)
        elif self.kind is GroupKind.MATRIX:
            perm = self._matrix_action(parse_matrix(text, self.dimension or 0, self.field))
        else:
            raise FormatError(f"Cayley-table elements are referred to by index, got '{text}'")
        idx = self.find(perm)
        if idx is None:
            raise FormatError(f"'{text}' is not an element of {self.name}")
        return idx

    # --- matrix groups ---
    def matrix_of(self, a: int) -> np.ndarray:
        """Recover the matrix of element a from the images of the basis vectors."""
        if self.kind is not GroupKind.MATRIX or self.field is None or self.dimension is None:
            raise TypeError(f"{self.name} is not a matrix group")
        n, q = self.dimension, self.field.q
        rows = []
        for i in range(n):
            basis_index = q ** (n - 1 - i) - 1
            rows.append(decode_vector(int(self.elements[a][basis_index]), n, q))
        return np.array(rows, dtype=np.int64)

    def _matrix_action(self, matrix: np.ndarray) -> np.ndarray:
        assert self.field is not None and self.dimension is not None
        return matrix_permutation(matrix, self.field, self.dimension)

    def describe(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'name': self.name,
            'kind': self.kind.value,
            'order': self.order,
            'degree': self.degree,
            'generators': [self.literal(g) for g in self.generators],
        }
        if self.field is not None:
            data['dimension'] = self.dimension
            data['field'] = self.field.describe()
        return data

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, kind={self.kind.value}, order={self.order})"

    # --- construction helpers ---
    def _table_from_tree(self, parents: Optional[np.ndarray],
                         parent_generators: Optional[np.ndarray]) -> np.ndarray:
        """mul[:, h] = R_g[mul[:, parent(h)]] where h = parent(h)*g."""
        n = self.order
        dtype = np.int16 if n < 2 ** 15 else np.int32
        table = np.empty((n, n), dtype=dtype)
        table[:, 0] = np.arange(n)
        if n == 1:
            return table
        assert parents is not None and parent_generators is not None
        for h in range(1, n):
            table[:, h] = self.right_generators[parent_generators[h]][table[:, parents[h]]]
        return table

    def _compute_inverses(self) -> np.ndarray:
        if self.mul_table is not None:
            rows, cols = np.nonzero(self.mul_table == 0)
            inverses = np.empty(self.order, dtype=np.int64)
            inverses[rows] = cols
            return inverses
        return self.lookup_rows(np.argsort(self.elements, axis=1))

    def _compute_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        pending = np.arange(self.order)
        k = 1
        if self.mul_table is not None:
            current = pending.copy()
            while pending.size:
                hit = current == 0
                orders[pending[hit]] = k
                pending, current = pending[~hit], current[~hit]
                current = self.mul_table[current, pending].astype(np.int64)
                k += 1
            return orders
        identity = np.arange(self.degree)
        current = self.elements.copy()
        base = self.elements
        while pending.size:
            hit = np.all(current == identity, axis=1)
            orders[pending[hit]] = k
            pending, current, base = pending[~hit], current[~hit], base[~hit]
            current = np.take_along_axis(base, current, axis=1)
            k += 1
        return orders


# --- permutation helpers ---
def permutation_group_of(rows: np.ndarray, degree: int) -> PermutationGroup:
    gens = [Permutation(row.tolist()) for row in rows]
    if not gens:
        gens = [Permutation(list(range(degree)))]
    return PermutationGroup(gens)


def format_cycles(row: np.ndarray) -> str:
    cycles = Permutation(row.tolist()).cyclic_form
    if not cycles:
        return '()'
    return ''.join('(' + ' '.join(str(p + 1) for p in cycle) + ')' for cycle in cycles)


def parse_cycles(text: str, degree: int) -> np.ndarray:
    """
    Parse cycle notation with 1-based points into an image array.

    Cycles are multiplied left to right, so '(1 2)(2 3)' applies (1 2) first.
    """
    stripped = text.strip()
    if CYCLE_PATTERN.sub('', stripped).strip():
        raise FormatError(f"Not a cycle literal: '{text}'")
    result = np.arange(degree)
    for body in CYCLE_PATTERN.findall(stripped):
        tokens = body.replace(',', ' ').split()
        try:
            points = [int(t) - 1 for t in tokens]
        except ValueError:
            raise FormatError(f"Non-integer point in cycle '({body})'")
        if len(set(points)) != len(points):
            raise GroupValidationError(f"Cycle '({body})' repeats a point: not a bijection")
        if any(p < 0 or p >= degree for p in points):
            raise GroupValidationError(f"Cycle '({body})' leaves the points 1..{degree}")
        cycle = np.arange(degree)
        for i, p in enumerate(points):
            cycle[p] = points[(i + 1) % len(points)]
        result = cycle[result]
    return result


def check_permutation(row: np.ndarray, degree: int) -> None:
    if row.shape != (degree,) or not np.array_equal(np.sort(row), np.arange(degree)):
        raise GroupValidationError(f"Not a bijection of 1..{degree}: {(row + 1).tolist()}")


# --- matrix helpers ---
def decode_vector(index: int, n: int, q: int) -> List[int]:
    value = index + 1
    digits = []
    for _ in range(n):
        digits.append(value % q)
        value //= q
    return digits[::-1]


def all_nonzero_vectors(n: int, q: int) -> np.ndarray:
    values = np.arange(1, q ** n, dtype=np.int64)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (values[:, None] // powers[None, :]) % q


def matrix_permutation(matrix: np.ndarray, field: FieldTable, n: int) -> np.ndarray:
    """Permutation of nonzero vectors (0-based index = encoded value - 1) induced by v -> v*M."""
    q = field.q
    vectors = all_nonzero_vectors(n, q)
    image = np.zeros_like(vectors)
    for j in range(n):
        col = np.zeros(vectors.shape[0], dtype=np.int64)
        for i in range(n):
            col = field.add(col, field.mul(vectors[:, i], int(matrix[i, j])))
        image[:, j] = col
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (image @ powers - 1).astype(np.int32)


def determinant(matrix: np.ndarray, field: FieldTable) -> int:
    """Determinant over GF(q) by Gaussian elimination."""
    m = [[int(x) for x in row] for row in matrix]
    n = len(m)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = int(field.neg(det))
        det = int(field.mul(det, m[col][col]))
        inv = int(field.inv(m[col][col]))
        for r in range(col + 1, n):
            if m[r][col]:
                factor = int(field.mul(m[r][col], inv))
                for c in range(col, n):
                    m[r][c] = int(field.sub(m[r][c], field.mul(factor, m[col][c])))
    return det


def format_matrix(matrix: np.ndarray) -> str:
    return '[' + ','.join('[' + ','.join(str(int(x)) for x in row) + ']' for row in matrix) + ']'


def parse_matrix(text: str, n: int, field: Optional[FieldTable]) -> np.ndarray:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError:
        raise FormatError(f"Not a matrix literal: '{text}'")
    matrix = np.array(rows, dtype=np.int64) if isinstance(rows, list) else None
    if matrix is None or matrix.shape != (n, n):
        raise FormatError(f"Expected a {n}x{n} matrix literal, got '{text}'")
    if field is not None and (matrix.min() < 0 or matrix.max() >= field.q):
        raise FormatError(f"Matrix entries must lie in 0..{field.q - 1}: '{text}'")
    return matrix


# --- construction ---
def _enumerate(name: str, kind: GroupKind, generator_rows: Sequence[np.ndarray], degree: int,
               max_order: int, field: Optional[FieldTable] = None,
               dimension: Optional[int] = None, max_table_order: int = MAX_TABLE_ORDER
               ) -> FiniteGroup:
    """Breadth-first enumeration from the identity under right multiplication."""
    identity = np.arange(degree, dtype=np.int32)
    gens: List[np.ndarray] = []
    seen_gens = {identity.tobytes()}
    for row in generator_rows:
        row = np.ascontiguousarray(row, dtype=np.int32)
        if row.tobytes() not in seen_gens:
            seen_gens.add(row.tobytes())
            gens.append(row)

    chain = permutation_group_of(np.array(gens).reshape(len(gens), degree), degree)
    expected = int(chain.order())
    if expected > max_order:
        raise CapacityError(f"enumerating {name}", expected, max_order)

    elements = [identity]
    index = {identity.tobytes(): 0}
    parents, parent_gens = [-1], [-1]
    right: List[List[int]] = [[] for _ in gens]
    i = 0
    while i < len(elements):
        x = elements[i]
        for gi, g in enumerate(gens):
            y = g[x]
            key = y.tobytes()
            j = index.get(key)
            if j is None:
                j = len(elements)
                index[key] = j
                elements.append(y)
                parents.append(i)
                parent_gens.append(gi)
            right[gi].append(j)
        i += 1

    if len(elements) != expected:
        raise GroupValidationError(
            f"{name}: stabilizer chain order {expected} disagrees with closure count {len(elements)}")
    generators = tuple(index[g.tobytes()] for g in gens)
    right_arr = np.array(right, dtype=np.int64).reshape(len(gens), len(elements))
    return FiniteGroup(name, kind, np.array(elements, dtype=np.int32), generators, index,
                       right_arr, np.array(parents), np.array(parent_gens), field=field,
                       dimension=dimension, max_table_order=max_table_order)


@log_execution_time
def from_permutations(name: str, degree: int, generators: Sequence[np.ndarray],
                      max_order: int = MAX_GROUP_ORDER,
                      max_table_order: int = MAX_TABLE_ORDER) -> FiniteGroup:
    """Permutation group on points 0..degree-1 (1-based in literals)."""
    if degree < 1:
        raise GroupValidationError(f"Degree must be positive, got {degree}")
    rows = [np.asarray(g) for g in generators]
    for row in rows:
        check_permutation(row, degree)
    return _enumerate(name, GroupKind.PERMUTATION, rows, degree, max_order,
                      max_table_order=max_table_order)


@log_execution_time
def from_matrices(name: str, dimension: int, q: int, matrices: Sequence[np.ndarray],
                  special: bool = False, max_order: int = MAX_GROUP_ORDER,
                  max_table_order: int = MAX_TABLE_ORDER) -> FiniteGroup:
    """Matrix group over GF(q), enumerated through its action on nonzero vectors."""
    field = get_field(q)
    if dimension < 1:
        raise GroupValidationError(f"Dimension must be positive, got {dimension}")
    if q ** dimension - 1 > 2 ** 31 - 1:
        raise CapacityError("natural module size", q ** dimension - 1, 2 ** 31 - 1)
    rows = []
    for matrix in matrices:
        matrix = np.asarray(matrix, dtype=np.int64)
        det = determinant(matrix, field)
        if det == 0:
            raise GroupValidationError(f"Matrix {format_matrix(matrix)} is not invertible")
        if special and det != 1:
            raise GroupValidationError(f"Matrix {format_matrix(matrix)} has determinant {det} != 1")
        rows.append(matrix_permutation(matrix, field, dimension))
    return _enumerate(name, GroupKind.MATRIX, rows, q ** dimension - 1, max_order, field=field,
                      dimension=dimension, max_table_order=max_table_order)


@log_execution_time
def from_cayley_table(name: str, table: np.ndarray, max_order: int = MAX_GROUP_ORDER,
                      full_check_max: int = 512, samples: int = 20_000,
                      seed: int = 0) -> FiniteGroup:
    """
    Group given by its multiplication table on indices, identity = 0.

    Identity and inverses are checked exhaustively (Latin square with an
    identity row and column); associativity in full up to `full_check_max`
    elements, on seeded random triples above that.
    """
    table = np.asarray(table, dtype=np.int64)
    n = table.shape[0]
    if table.ndim != 2 or table.shape != (n, n) or n == 0:
        raise GroupValidationError("Cayley table must be a nonempty square array")
    if n > max_order:
        raise CapacityError(f"enumerating {name}", n, max_order)
    if table.min() < 0 or table.max() >= n:
        raise GroupValidationError(f"Cayley table entries must lie in 0..{n - 1}")
    ar = np.arange(n)
    if not (np.array_equal(table[0], ar) and np.array_equal(table[:, 0], ar)):
        raise GroupValidationError("Index 0 must be the identity of the Cayley table")
    sorted_rows = np.sort(table, axis=1)
    sorted_cols = np.sort(table, axis=0)
    if not (np.all(sorted_rows == ar) and np.all(sorted_cols == ar[:, None])):
        raise GroupValidationError("Cayley table is not a Latin square: inverses fail")
    if n <= full_check_max:
        for a in range(n):
            if not np.array_equal(table[table[a]], table[a][table]):
                raise GroupValidationError(f"Cayley table is not associative (left factor {a})")
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(n, size=(3, samples))
        if not np.array_equal(table[table[a, b], c], table[a, table[b, c]]):
            raise GroupValidationError("Cayley table is not associative on sampled triples")
        logger.warning(f"{name}: associativity checked on {samples} sampled triples only")

    # right-regular representation: element g is the permutation x -> x*g
    elements = np.ascontiguousarray(table.T, dtype=np.int32)
    index = {row.tobytes(): i for i, row in enumerate(elements)}
    generators = _greedy_generators(table)
    right = np.array([table[:, g] for g in generators], dtype=np.int64).reshape(len(generators), n)
    dtype = np.int16 if n < 2 ** 15 else np.int32
    return FiniteGroup(name, GroupKind.CAYLEY, elements, generators, index, right,
                       table=table.astype(dtype))


def _greedy_generators(table: np.ndarray) -> Tuple[int, ...]:
    """Add elements outside the current closure until everything is generated."""
    n = table.shape[0]
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    gens: List[int] = []
    for candidate in range(1, n):
        if mask[candidate]:
            continue
        gens.append(candidate)
        frontier = np.nonzero(mask)[0]
        gen_arr = np.array(gens)
        while frontier.size:
            nxt = table[frontier[:, None], gen_arr[None, :]].ravel()
            nxt = np.unique(nxt[~mask[nxt]])
            mask[nxt] = True
            frontier = nxt
        if mask.all():
            break
    return tuple(gens)


# --- builtins ---
def _cycle(points: Sequence[int], degree: int) -> np.ndarray:
    row = np.arange(degree)
    for i, p in enumerate(points):
        row[p] = points[(i + 1) % len(points)]
    return row


def symmetric_group(n: int, **kwargs: Any) -> FiniteGroup:
    gens = []
    if n >= 2:
        gens = [_cycle(list(range(n)), n), _cycle([0, 1], n)]
    return from_permutations(f"sym:{n}", n, gens, **kwargs)


def alternating_group(n: int, **kwargs: Any) -> FiniteGroup:
    gens = []
    if n >= 3:
        gens.append(_cycle([0, 1, 2], n))
        if n >= 4:
            long_cycle = list(range(n)) if n % 2 == 1 else list(range(1, n))
            gens.append(_cycle(long_cycle, n))
    return from_permutations(f"alt:{n}", n, gens, **kwargs)


def special_linear_group(n: int, q: int, **kwargs: Any) -> FiniteGroup:
    """SL(n,q) generated by root elements x_{i,i+1}(t), x_{i+1,i}(t) for t in an additive basis."""
    field = get_field(q)
    basis = [int(field.exp_table[k % (q - 1)]) for k in range(field.r)] if q > 2 else [1]
    gens = []
    for i in range(n - 1):
        for t in basis:
            for (row, col) in ((i, i + 1), (i + 1, i)):
                m = np.eye(n, dtype=np.int64)
                m[row, col] = t
                gens.append(m)
    return from_matrices(f"sl:{n}:{q}", n, q, gens, special=True, **kwargs)


def cyclic_group(n: int, **kwargs: Any) -> FiniteGroup:
    ar = np.arange(n)
    return from_cayley_table(f"cyclic:{n}", (ar[:, None] + ar[None, :]) % n, **kwargs)


def sl_order(n: int, q: int) -> int:
    """|SL(n,q)| = q^C(n,2) * prod_{i=2..n} (q^i - 1)."""
    order = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        order *= q ** i - 1
    return order


def _matrix_power_order(matrix: np.ndarray, field: FieldTable, cap: int) -> int:
    """Multiplicative order of a matrix by repeated multiplication over GF(q)."""
    n = matrix.shape[0]
    identity = np.eye(n, dtype=np.int64)
    current = matrix.copy()
    for k in range(1, cap + 1):
        if np.array_equal(current, identity):
            return k
        nxt = np.zeros_like(current)
        for i in range(n):
            for j in range(n):
                acc = 0
                for t in range(n):
                    acc = int(field.add(acc, field.mul(int(current[i, t]), int(matrix[t, j]))))
                nxt[i, j] = acc
        current = nxt
    raise GroupValidationError(f"Matrix order exceeds {cap}")


@log_execution_time
def matrix_to_perm(G: FiniteGroup, samples: int = 100, seed: int = 0
                   ) -> Tuple[FiniteGroup, np.ndarray]:
    """
    Permutation group on the q^n - 1 nonzero vectors plus the index map.

    Matrix groups are already stored as their action on nonzero vectors, and
    a linear action on all of them has trivial kernel. The result therefore
    reuses G's element list and the map is the identity on indices. What is
    verified: the stabilizer chain order of the image, and for the generators
    and `samples` random products, that the matrix recovered from each row
    acts by that row and that its order, found by matrix powering, matches
    the permutation order.
    """
    if G.kind is not GroupKind.MATRIX or G.field is None or G.dimension is None:
        raise TypeError(f"{G.name} is not a matrix group")
    field, n = G.field, G.dimension

    perm = FiniteGroup(f"perm({G.name})", GroupKind.PERMUTATION, G.elements.copy(),
                       G.generators, dict(G._index), G.right_generators.copy(),
                       table=None if G.mul_table is None else G.mul_table.copy(),
                       max_table_order=0)
    iso = np.arange(G.order)
    chain_order = int(perm.stabilizer_chain.order())
    if chain_order != G.order:
        raise GroupValidationError(f"Permutation image has order {chain_order}, expected {G.order}")

    rng = np.random.default_rng(seed)
    checks = list(G.generators)
    for _ in range(samples):
        a, b = rng.integers(G.order, size=2)
        checks.append(G.mul(int(a), int(b)))
    for a in checks:
        matrix = G.matrix_of(a)
        if not np.array_equal(matrix_permutation(matrix, field, n), perm.elements[iso[a]]):
            raise GroupValidationError(f"Isomorphism check failed at {G.literal(a)}")
        if _matrix_power_order(matrix, field, G.order) != perm.element_order(int(iso[a])):
            raise GroupValidationError(f"Element order not preserved at {G.literal(a)}")
    logger.info(f"matrix_to_perm({G.name}): degree {perm.degree}, order {perm.order}, "
                f"{len(checks)} elements verified")
    return perm, iso
