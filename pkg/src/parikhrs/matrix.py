"""Parikh matrices, M-equivalence and M-classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .words import (
    DEFAULT_CLASS_LIMIT,
    Alphabet,
    anagram_bytes,
    count_subword,
)

__all__ = [
    "ParikhMatrix",
    "m_ambiguous",
    "m_class",
    "m_equivalent",
    "matrix_key",
    "parikh_matrix",
    "parikh_matrix_product",
    "verify_matrix_theorem",
]

_U64_MAX = (1 << 64) - 1


@dataclass(frozen=True)
class ParikhMatrix:
    """An upper unitriangular nonnegative integer matrix."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.rows)
        if k < 2 or any(len(r) != k for r in self.rows):
            raise ValueError("Parikh matrices are square of size at least 2")
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if (j < i and v != 0) or (j == i and v != 1) or v < 0:
                    raise ValueError("matrix is not upper unitriangular")

    @classmethod
    def identity(cls, dim: int) -> "ParikhMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @classmethod
    def elementary(cls, s: int, q: int) -> "ParikhMatrix":
        """Image of the letter with index ``q`` (identity plus 1 at ``(q, q+1)``)."""
        return cls(
            tuple(
                tuple(int(i == j or (i == q and j == q + 1)) for j in range(s + 1))
                for i in range(s + 1)
            )
        )

    @classmethod
    def from_entries(cls, s: int, entries: Sequence[int]) -> "ParikhMatrix":
        it = iter(entries)
        rows = []
        for i in range(s + 1):
            rows.append(
                tuple(0 if j < i else 1 if j == i else next(it) for j in range(s + 1))
            )
        return cls(tuple(rows))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "ParikhMatrix") -> "ParikhMatrix":
        k = self.dimension
        if other.dimension != k:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(k):
            row = []
            for j in range(k):
                v = sum(self.rows[i][t] * other.rows[t][j] for t in range(i, j + 1))
                if v > _U64_MAX:
                    raise OverflowError("Parikh matrix entry exceeds 64-bit range")
                row.append(v)
            out.append(tuple(row))
        return ParikhMatrix(tuple(out))

    def second_diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i + 1] for i in range(self.dimension - 1))

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def pretty(self) -> str:
        width = max(len(str(v)) for r in self.rows for v in r)
        lines = [" ".join(str(v).rjust(width) for v in r) for r in self.rows]
        if len(lines) == 1:
            return f"( {lines[0]} )"
        out = []
        for n, line in enumerate(lines):
            left, right = ("/", "\\") if n == 0 else (
                ("\\", "/") if n == len(lines) - 1 else ("|", "|")
            )
            out.append(f"{left} {line} {right}")
        return "\n".join(out)


def matrix_key(alphabet: Alphabet, w: bytes) -> tuple[int, ...]:
    """Strictly-upper entries of the Parikh matrix of an encoded word."""
    return kernels.parikh_entries(w, alphabet.size)


def parikh_matrix(alphabet: Alphabet, w) -> ParikhMatrix:
    """Image of ``w`` under the Parikh matrix morphism of ``alphabet``."""
    return ParikhMatrix.from_entries(
        alphabet.size, kernels.parikh_entries(alphabet.encode(w), alphabet.size)
    )


def parikh_matrix_product(alphabet: Alphabet, w) -> ParikhMatrix:
    """Same value as :func:`parikh_matrix`, by explicit left-to-right product."""
    s = alphabet.size
    out = ParikhMatrix.identity(s + 1)
    elementary = [ParikhMatrix.elementary(s, q) for q in range(s)]
    for q in alphabet.encode(w):
        out = out @ elementary[q]
    return out


def m_equivalent(alphabet: Alphabet, w, w2) -> bool:
    a, b = alphabet.encode(w), alphabet.encode(w2)
    if len(a) != len(b):
        return False
    return matrix_key(alphabet, a) == matrix_key(alphabet, b)


def m_class_bytes(alphabet: Alphabet, w: bytes, limit: int = DEFAULT_CLASS_LIMIT) -> list[bytes]:
    counts = [0] * alphabet.size
    for q in w:
        counts[q] += 1
    key = matrix_key(alphabet, w)
    s = alphabet.size
    entries = kernels.parikh_entries
    return [v for v in anagram_bytes(counts, limit) if entries(v, s) == key]


def m_class(alphabet: Alphabet, w, limit: int = DEFAULT_CLASS_LIMIT) -> list[str]:
    """All words M-equivalent to ``w``, sorted by letter index."""
    return [alphabet.decode(v) for v in m_class_bytes(alphabet, alphabet.encode(w), limit)]


def m_ambiguous(alphabet: Alphabet, w, limit: int = DEFAULT_CLASS_LIMIT) -> bool:
    return len(m_class_bytes(alphabet, alphabet.encode(w), limit)) >= 2


def verify_matrix_theorem(alphabet: Alphabet, w) -> bool:
    """Check every entry of the product matrix against direct subword counts.

    Entry ``(i, j+1)`` must count the ascending run ``letters[i..j]``;
    the diagonal is 1 and everything below it 0.
    """
    m = parikh_matrix_product(alphabet, w)
    enc = alphabet.encode(w)
    s = alphabet.size
    for i in range(s + 1):
        for j in range(s + 1):
            if j < i and m[i, j] != 0:
                return False
            if j == i and m[i, j] != 1:
                return False
            if j > i and m[i, j] != count_subword(
                enc, alphabet.encode(alphabet.factor(i, j - 1))
            ):
                return False
    return True

