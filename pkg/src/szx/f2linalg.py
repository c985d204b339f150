"""Dense linear algebra over the two-element field.

Matrices are immutable and stored row-major as packed Python integers: bit
``j`` of ``words[i]`` is entry ``(i, j)``.  Row operations during Gaussian
elimination are therefore single XORs on machine words (or bignums for very
wide matrices, which never occur at desk scale).

>>> a = F2Matrix([[1, 0], [1, 1]])
>>> (a + a).tolist()
[[0, 0], [0, 0]]
>>> mul(F2Matrix([[1, 1], [0, 1]]), a).tolist()
[[0, 1], [1, 1]]
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError, ShapeError

__all__ = [
    "F2Matrix",
    "add",
    "mul",
    "transpose",
    "vstack",
    "hstack",
    "rank",
    "is_injective",
    "is_surjective",
    "apply",
    "popcount",
    "column",
]


class F2Matrix:
    """A ``rows x cols`` matrix over GF(2), both dimensions at least one."""

    __slots__ = ("_rows", "_cols", "_words")

    def __init__(self, entries: Sequence[Sequence[int]]):
        entries = [list(r) for r in entries]
        if not entries or not entries[0]:
            raise ShapeError("F2Matrix needs at least one row and one column")
        cols = len(entries[0])
        words = []
        for i, row in enumerate(entries):
            if len(row) != cols:
                raise ShapeError(f"ragged row {i}: expected {cols} entries, got {len(row)}")
            w = 0
            for j, bit in enumerate(row):
                if bit not in (0, 1):
                    raise ShapeError(f"entry ({i}, {j}) is {bit!r}, not a bit")
                if bit:
                    w |= 1 << j
            words.append(w)
        self._rows = len(entries)
        self._cols = cols
        self._words = tuple(words)

    @classmethod
    def from_words(cls, words: Iterable[int], cols: int) -> "F2Matrix":
        words = tuple(words)
        if not words or cols < 1:
            raise ShapeError("F2Matrix needs at least one row and one column")
        mask = (1 << cols) - 1
        if any(w & ~mask for w in words):
            raise ShapeError("word has bits beyond the column count")
        obj = cls.__new__(cls)
        obj._rows = len(words)
        obj._cols = cols
        obj._words = words
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        return cls.from_words([0] * rows, cols)

    @classmethod
    def ones(cls, rows: int, cols: int) -> "F2Matrix":
        return cls.from_words([(1 << cols) - 1] * rows, cols)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls.from_words([1 << i for i in range(n)], n)

    @classmethod
    def from_array(cls, array) -> "F2Matrix":
        array = np.asarray(array)
        if array.ndim != 2:
            raise ShapeError(f"expected a 2-d array, got {array.ndim} dimensions")
        return cls(array.astype(int).tolist())

    @classmethod
    def random(cls, rng: np.random.Generator, rows: int, cols: int, p: float = 0.5) -> "F2Matrix":
        return cls((rng.random((rows, cols)) < p).astype(int).tolist())

    @classmethod
    def from_text(cls, text: str) -> "F2Matrix":
        """Parse one row per line of ``0``/``1`` characters; blank lines are skipped."""
        rows = []
        width = None
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            for col, ch in enumerate(line, start=1):
                if ch not in "01":
                    raise ParseError(f"unexpected character {ch!r} in matrix", lineno, col)
            if width is None:
                width = len(line)
            elif len(line) != width:
                raise ParseError(f"ragged row: expected {width} columns, got {len(line)}", lineno, 1)
            rows.append([int(ch) for ch in line])
        if not rows:
            raise ParseError("empty matrix", 1, 1)
        return cls(rows)

    @classmethod
    def from_compact(cls, text: str) -> "F2Matrix":
        """Parse ``"10;01"`` style rows separated by semicolons."""
        return cls.from_text("\n".join(text.split(";")))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def words(self) -> tuple[int, ...]:
        return self._words

    @property
    def T(self) -> "F2Matrix":
        return transpose(self)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(index)
        return (self._words[i] >> j) & 1

    def tolist(self) -> list[list[int]]:
        return [[(w >> j) & 1 for j in range(self._cols)] for w in self._words]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.tolist(), dtype=np.uint8)

    def to_text(self) -> str:
        return "\n".join("".join(str(b) for b in row) for row in self.tolist())

    def to_compact(self) -> str:
        return ";".join("".join(str(b) for b in row) for row in self.tolist())

    def column_bits(self) -> tuple[int, ...]:
        """Entries of a one-column matrix as a tuple."""
        if self._cols != 1:
            raise ShapeError(f"expected a column vector, got shape {self.shape}")
        return tuple(w & 1 for w in self._words)

    def __add__(self, other: "F2Matrix") -> "F2Matrix":
        return add(self, other)

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        return mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.shape == other.shape and self._words == other._words

    def __hash__(self) -> int:
        return hash((self._cols, self._words))

    def __repr__(self) -> str:
        return f"F2Matrix({self.tolist()!r})"


def column(bits: Sequence[int]) -> F2Matrix:
    """Column vector from a sequence of bits."""
    return F2Matrix([[int(b)] for b in bits])


def add(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    if a.shape != b.shape:
        raise ShapeError(f"cannot add {a.shape} and {b.shape} matrices")
    return F2Matrix.from_words((x ^ y for x, y in zip(a.words, b.words)), a.cols)


def mul(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    out = []
    for w in a.words:
        acc = 0
        j = 0
        while w:
            if w & 1:
                acc ^= b.words[j]
            w >>= 1
            j += 1
        out.append(acc)
    return F2Matrix.from_words(out, b.cols)


def transpose(a: F2Matrix) -> F2Matrix:
    out = []
    for j in range(a.cols):
        w = 0
        for i, row in enumerate(a.words):
            if (row >> j) & 1:
                w |= 1 << i
        out.append(w)
    return F2Matrix.from_words(out, a.rows)


def vstack(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    if a.cols != b.cols:
        raise ShapeError(f"vstack needs equal column counts, got {a.cols} and {b.cols}")
    return F2Matrix.from_words(a.words + b.words, a.cols)


def hstack(c: F2Matrix, d: F2Matrix) -> F2Matrix:
    if c.rows != d.rows:
        raise ShapeError(f"hstack needs equal row counts, got {c.rows} and {d.rows}")
    return F2Matrix.from_words((x | (y << c.cols) for x, y in zip(c.words, d.words)), c.cols + d.cols)


def rank(a: F2Matrix) -> int:
    """Rank by Gaussian elimination on packed rows."""
    rows = list(a.words)
    r = 0
    for j in range(a.cols):
        bit = 1 << j
        pivot = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        r += 1
        if r == len(rows):
            break
    return r


def is_injective(a: F2Matrix) -> bool:
    return rank(a) == a.cols


def is_surjective(a: F2Matrix) -> bool:
    return rank(a) == a.rows


def apply(a: F2Matrix, x: F2Matrix) -> F2Matrix:
    """Matrix-vector product ``Ax`` with ``x`` a one-column matrix."""
    if x.cols != 1:
        raise ShapeError(f"expected a column vector, got shape {x.shape}")
    if a.cols != x.rows:
        raise ShapeError(f"cannot apply {a.shape} matrix to a vector of length {x.rows}")
    return mul(a, x)


def apply_int(a: F2Matrix, x: int) -> int:
    """``Ax`` with vectors packed as integers (bit ``j`` is coordinate ``j``)."""
    out = 0
    for i, w in enumerate(a.words):
        if bin(w & x).count("1") & 1:
            out |= 1 << i
    return out


def popcount(a: F2Matrix) -> int:
    return sum(bin(w).count("1") for w in a.words)
