"""
Words in the free group F_k and their word maps.

Surface grammar (whitespace separates terms, juxtaposition also works):

    word := term+
    term := atom ('^' signed-int)?
    atom := gen | '1' | '(' word ')' | '[' word ',' word ']'
    gen  := 'x' | 'y' | 'x' digits          (x = x1, y = x2)

'1' is the empty word. Commutators follow [u,v] = u^-1 v^-1 u v.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from ..constants import MAX_WORD_RANK
from ..exceptions import FormatError, WordSyntaxError
from .groups import FiniteGroup


def free_reduce(letters: Sequence[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def _check_rank(k: int) -> None:
    if not 1 <= k <= MAX_WORD_RANK:
        raise FormatError(f"Word rank must lie in 1..{MAX_WORD_RANK}, got {k}")


@dataclass(frozen=True)
class Word:
    """A freely reduced element of F_k; letters are signed generator indices."""

    k: int
    letters: Tuple[int, ...]

    def __post_init__(self) -> None:
        _check_rank(self.k)
        if any(letter == 0 or abs(letter) > self.k for letter in self.letters):
            raise FormatError(f"Letters must lie in ±1..±{self.k}: {self.letters}")
        if free_reduce(self.letters) != self.letters:
            raise FormatError(f"Letters are not freely reduced: {self.letters}")

    @classmethod
    def from_letters(cls, k: int, letters: Sequence[int]) -> 'Word':
        """Reduce, then build."""
        return cls(k, free_reduce(tuple(int(x) for x in letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def is_empty(self) -> bool:
        return not self.letters

    def inverse(self) -> 'Word':
        return Word(self.k, tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: 'Word') -> 'Word':
        return compose(self, other)


# --- parsing ---
class _Parser:
    def __init__(self, text: str, k: int):
        self.text = text
        self.k = k
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            found = self._peek() or 'end of input'
            raise WordSyntaxError(f"Expected '{char}', found '{found}'", self.pos)
        self.pos += 1

    def parse(self) -> List[int]:
        letters = self.word()
        if self._peek():
            raise WordSyntaxError(f"Unexpected '{self._peek()}'", self.pos)
        return letters

    def word(self) -> List[int]:
        letters: List[int] = []
        if self._peek() in ('', ')', ',', ']'):
            raise WordSyntaxError("Expected a term", self.pos)
        while self._peek() not in ('', ')', ',', ']'):
            letters.extend(self.term())
        return letters

    def term(self) -> List[int]:
        base = self.atom()
        if self._peek() != '^':
            return base
        self.pos += 1
        self._skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in '+-':
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start:self.pos]
        try:
            m = int(token)
        except ValueError:
            raise WordSyntaxError("Exponent must be a signed integer", start)
        return _power_letters(base, m)

    def atom(self) -> List[int]:
        char = self._peek()
        start = self.pos
        if char == '(':
            self.pos += 1
            inner = self.word()
            self._expect(')')
            return inner
        if char == '[':
            self.pos += 1
            u = self.word()
            self._expect(',')
            v = self.word()
            self._expect(']')
            return _commutator_letters(u, v)
        if char == '1':
            self.pos += 1
            return []
        if char == 'y':
            self.pos += 1
            return [self._generator(2, start)]
        if char == 'x':
            self.pos += 1
            digits_start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            digits = self.text[digits_start:self.pos]
            return [self._generator(int(digits) if digits else 1, start)]
        if not char:
            raise WordSyntaxError("Unexpected end of input", self.pos)
        raise WordSyntaxError(f"Unknown generator '{char}'", self.pos)

    def _generator(self, index: int, position: int) -> int:
        if not 1 <= index <= self.k:
            raise WordSyntaxError(f"Generator x{index} exceeds rank {self.k}", position)
        return index


def _invert_letters(letters: Sequence[int]) -> List[int]:
    return [-x for x in reversed(letters)]


def _power_letters(letters: Sequence[int], m: int) -> List[int]:
    if m < 0:
        return _invert_letters(letters) * (-m)
    return list(letters) * m


def _commutator_letters(u: Sequence[int], v: Sequence[int]) -> List[int]:
    return _invert_letters(u) + _invert_letters(v) + list(u) + list(v)


def parse_word(text: str, k: int = 2) -> Word:
    """Parse the surface grammar into a freely reduced Word of rank k."""
    _check_rank(k)
    return Word.from_letters(k, _Parser(text, k).parse())


def generator_name(index: int) -> str:
    return {1: 'x', 2: 'y'}.get(index, f"x{index}")


def format_word(w: Word) -> str:
    """Run-length form, e.g. 'x^3 y^-2'; the empty word prints as '1'."""
    if not w.letters:
        return '1'
    parts = []
    for letter, run in itertools.groupby(w.letters):
        count = len(list(run))
        exponent = count if letter > 0 else -count
        name = generator_name(abs(letter))
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
    return ' '.join(parts)


# --- algebra ---
def _check_same_rank(u: Word, v: Word) -> None:
    if u.k != v.k:
        raise FormatError(f"Rank mismatch: {u.k} vs {v.k}")


def compose(prefix: Word, suffix: Word) -> Word:
    _check_same_rank(prefix, suffix)
    return Word.from_letters(prefix.k, prefix.letters + suffix.letters)


def power(w: Word, m: int) -> Word:
    return Word.from_letters(w.k, _power_letters(w.letters, m))


def commutator(u: Word, v: Word) -> Word:
    _check_same_rank(u, v)
    return Word.from_letters(u.k, _commutator_letters(u.letters, v.letters))


def generator(k: int, i: int) -> Word:
    return Word(k, (i,))


def exponent_sum(w: Word, i: int) -> int:
    """Signed count of occurrences of generator i (1-based)."""
    if not 1 <= i <= w.k:
        raise FormatError(f"Generator index {i} out of range 1..{w.k}")
    return sum(1 if x == i else -1 if x == -i else 0 for x in w.letters)


def evaluate(w: Word, values: Sequence[int], G: FiniteGroup) -> int:
    """Substitute values[i-1] for generator i and multiply left to right."""
    if len(values) != w.k:
        raise FormatError(f"Word of rank {w.k} needs {w.k} values, got {len(values)}")
    for value in values:
        if not 0 <= int(value) < G.order:
            raise FormatError(f"Element index {value} does not belong to {G.name}")
    acc = 0
    for letter in w.letters:
        g = int(values[abs(letter) - 1])
        acc = G.mul(acc, g if letter > 0 else G.inv(g))
    return acc


def evaluate_letters(letters: Sequence[int], values: Sequence[int], G: FiniteGroup) -> int:
    """Evaluate a possibly unreduced letter sequence."""
    acc = 0
    for letter in letters:
        g = int(values[abs(letter) - 1])
        acc = G.mul(acc, g if letter > 0 else G.inv(g))
    return acc


# --- generation ---
def _alphabet(k: int) -> List[int]:
    return [s * i for i in range(1, k + 1) for s in (1, -1)]


def random_reduced_word(k: int, length: int, rng: np.random.Generator) -> Word:
    """Uniform among reduced words of the given length."""
    _check_rank(k)
    alphabet = _alphabet(k)
    letters: List[int] = []
    while len(letters) < length:
        letter = alphabet[int(rng.integers(len(alphabet)))]
        if letters and letters[-1] == -letter:
            continue
        letters.append(letter)
    return Word(k, tuple(letters))


def random_letters(k: int, length: int, rng: np.random.Generator) -> List[int]:
    """Possibly unreduced letter sequence."""
    alphabet = _alphabet(k)
    return [alphabet[int(i)] for i in rng.integers(len(alphabet), size=length)]


def enumerate_reduced_words(k: int, max_length: int) -> Iterator[Word]:
    """All reduced words by length, then in the order x, x^-1, y, y^-1, ..."""
    _check_rank(k)
    alphabet = _alphabet(k)
    level: List[Tuple[int, ...]] = [()]
    yield Word(k, ())
    for _ in range(max_length):
        nxt = []
        for letters in level:
            for letter in alphabet:
                if letters and letters[-1] == -letter:
                    continue
                nxt.append(letters + (letter,))
        for letters in nxt:
            yield Word(k, letters)
        level = nxt
