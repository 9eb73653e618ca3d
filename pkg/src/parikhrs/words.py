"""Ordered alphabets, words, scattered-subword counts and anagram classes.

Words in the public API are glyph strings such as ``"abcbac"``; the empty
string is the empty word.  Internally a word is ``bytes`` of letter indices,
which is what the kernels consume.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import CapExceededError, InvalidInputError

MAX_ALPHABET = 8
DEFAULT_CLASS_LIMIT = 500_000

__all__ = [
    "Alphabet",
    "anagrams",
    "count_subword",
    "multinomial",
    "parikh_vector",
    "parikh_vectors",
    "project",
]


@dataclass(frozen=True)
class Alphabet:
    """A totally ordered alphabet; ``letters[0] < letters[1] < ...``."""

    letters: str
    _index: dict = field(init=False, repr=False, compare=False)
    _encode: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        letters = self.letters
        if not isinstance(letters, str) or not letters:
            raise InvalidInputError("alphabet must be a nonempty glyph string")
        if len(set(letters)) != len(letters):
            raise InvalidInputError(f"alphabet {letters!r} repeats a letter")
        if len(letters) > MAX_ALPHABET:
            raise InvalidInputError(
                f"alphabet {letters!r} has more than {MAX_ALPHABET} letters"
            )
        if "-" in letters:
            raise InvalidInputError("'-' is reserved for the empty word")
        index = {c: i for i, c in enumerate(letters)}
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_encode", {ord(c): i for c, i in index.items()})

    @property
    def size(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, glyph) -> bool:
        return glyph in self._index

    def index(self, glyph: str) -> int:
        try:
            return self._index[glyph]
        except KeyError:
            raise InvalidInputError(
                f"letter {glyph!r} is not in alphabet {self.letters!r}"
            ) from None

    def encode(self, word: str) -> bytes:
        """Glyph string -> bytes of letter indices."""
        if isinstance(word, (bytes, bytearray)):
            word = bytes(word)
            if word and max(word) >= self.size:
                raise InvalidInputError("letter index out of range")
            return word
        bad = set(word) - self._index.keys()
        if bad:
            raise InvalidInputError(
                f"word {word!r} uses letters {''.join(sorted(bad))!r} "
                f"outside alphabet {self.letters!r}"
            )
        return word.translate(self._encode).encode("latin-1")

    def decode(self, word: bytes) -> str:
        letters = self.letters
        return "".join(letters[i] for i in word)

    def restrict(self, glyphs: Iterable[str]) -> "Alphabet":
        """Sub-alphabet with the induced order."""
        keep = set(glyphs)
        for g in keep:
            self.index(g)
        return Alphabet("".join(c for c in self.letters if c in keep))

    def factor(self, i: int, j: int) -> str:
        """The ascending run ``letters[i] ... letters[j]`` (0-based, inclusive)."""
        if not 0 <= i <= j < self.size:
            raise InvalidInputError(f"no ascending run from {i} to {j}")
        return self.letters[i : j + 1]

    def __str__(self) -> str:
        return "<".join(self.letters)


def _as_bytes_pair(w, u) -> tuple[bytes, bytes]:
    if isinstance(w, bytes) and isinstance(u, bytes):
        return w, u
    if isinstance(w, bytes) or isinstance(u, bytes):
        raise TypeError("mix of encoded and glyph words")
    table = {}
    for c in w + u:
        if c not in table:
            table[c] = len(table)
    if len(table) > 256:
        raise InvalidInputError("too many distinct letters")
    enc = {ord(c): i for c, i in table.items()}
    return (w.translate(enc).encode("latin-1"), u.translate(enc).encode("latin-1"))


def count_subword(w, u) -> int:
    """Number of scattered occurrences of ``u`` in ``w``.

    >>> count_subword("aabab", "ab")
    5
    >>> count_subword("baacbc", "abc")
    2

    Raises ``OverflowError`` when the count leaves the unsigned 64-bit range.
    """
    bw, bu = _as_bytes_pair(w, u)
    return kernels.count_subword(bw, bu)


def project(w: str, gamma: Iterable[str]) -> str:
    """Delete every letter of ``w`` outside ``gamma``, keeping order."""
    keep = set(gamma)
    return "".join(c for c in w if c in keep)


def parikh_vector(alphabet: Alphabet, w) -> tuple[int, ...]:
    counts = [0] * alphabet.size
    for i in alphabet.encode(w):
        counts[i] += 1
    return tuple(counts)


def multinomial(counts: Sequence[int]) -> int:
    out = factorial(sum(counts))
    for c in counts:
        out //= factorial(c)
    return out


def _anagram_bytes(counts: Sequence[int]) -> Iterator[bytes]:
    # lexicographic multiset permutations via the next-permutation step
    a = bytearray(i for i, c in enumerate(counts) for _ in range(c))
    n = len(a)
    while True:
        yield bytes(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1 :] = a[i + 1 :][::-1]


def check_class_size(counts: Sequence[int], limit: int) -> int:
    if any(c < 0 for c in counts):
        raise InvalidInputError("negative letter count")
    size = multinomial(counts)
    if size > limit:
        raise CapExceededError(
            f"anagram class of {tuple(counts)} has {size} words (limit {limit})",
            limit,
        )
    return size


def anagram_bytes(counts: Sequence[int], limit: int = DEFAULT_CLASS_LIMIT) -> Iterator[bytes]:
    check_class_size(counts, limit)
    return _anagram_bytes(counts)


def anagrams(
    alphabet: Alphabet, counts: Sequence[int], limit: int = DEFAULT_CLASS_LIMIT
) -> Iterator[str]:
    """Every word with Parikh vector ``counts``, lexicographically by letter index."""
    if len(counts) != alphabet.size:
        raise InvalidInputError(
            f"Parikh vector {tuple(counts)} does not match alphabet {alphabet.letters!r}"
        )
    for w in anagram_bytes(counts, limit):
        yield alphabet.decode(w)


def parikh_vectors(s: int, length: int) -> Iterator[tuple[int, ...]]:
    """All ``s``-tuples of nonnegative integers summing to ``length``,
    in ascending lexicographic order."""
    if s == 1:
        yield (length,)
        return
    for first in range(length + 1):
        for rest in parikh_vectors(s - 1, length - first):
            yield (first,) + rest
