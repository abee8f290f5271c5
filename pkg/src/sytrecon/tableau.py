"""Partitions, cell coordinates and standard Young tableaux.

Coordinates are 1-indexed ``(row, col)`` pairs, rows counted from the top.
Internally a tableau is a tuple of row tuples; the same representation is
used by the fast paths in :mod:`sytrecon.taquin` and :mod:`sytrecon.minors`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    AlphabetViolation,
    EmptyShape,
    InvalidCoord,
    InvalidPartition,
    NotStandard,
    ShapeMismatch,
    SizeOutOfRange,
)

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive row lengths."""

    rows: tuple[int, ...]
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        for i, r in enumerate(rows):
            if r < 1:
                raise InvalidPartition(f"row lengths must be positive: {rows}")
            if i and r > rows[i - 1]:
                raise InvalidPartition(f"row lengths must weakly decrease: {rows}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "size", sum(rows))

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.rows)) + ")"

    def cells(self) -> list[CellCoord]:
        return [CellCoord(r, c) for r, length in enumerate(self.rows, 1)
                for c in range(1, length + 1)]

    def contains_cell(self, cell: tuple[int, int]) -> bool:
        r, c = cell
        return 1 <= r <= len(self.rows) and 1 <= c <= self.rows[r - 1]

    def contains(self, other: Partition) -> bool:
        """True if ``other`` fits inside this diagram."""
        if len(other.rows) > len(self.rows):
            return False
        return all(a <= b for a, b in zip(other.rows, self.rows))

    def transpose(self) -> Partition:
        if not self.rows:
            return self
        return Partition(tuple(sum(1 for r in self.rows if r > j)
                               for j in range(self.rows[0])))


class CellCoord(NamedTuple):
    row: int
    col: int


class Tableau:
    """An immutable standard Young tableau over the alphabet ``[1, alphabet_max]``.

    Build one with :func:`validate_tableau` or :meth:`Tableau.from_rows`; both
    check standardness. Equality and hashing use the rows and the alphabet.
    """

    __slots__ = ("rows", "alphabet_max", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]], alphabet_max: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = sum(len(r) for r in rows)
        if alphabet_max is None:
            alphabet_max = n
        _check_standard(rows, alphabet_max)
        self.rows = rows
        self.alphabet_max = alphabet_max
        self._hash = None

    @classmethod
    def from_rows(cls, rows, alphabet_max=None) -> Tableau:
        return cls(rows, alphabet_max)

    @classmethod
    def _trusted(cls, rows: Rows, alphabet_max: int) -> Tableau:
        # skips validation; callers guarantee a standard filling
        t = object.__new__(cls)
        t.rows = rows
        t.alphabet_max = alphabet_max
        t._hash = None
        return t

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def entries(self) -> list[int]:
        return [x for row in self.rows for x in row]

    @property
    def is_dense(self) -> bool:
        return self.alphabet_max == self.n

    @property
    def key(self) -> str:
        return "/".join(" ".join(map(str, row)) for row in self.rows)

    def position(self, m: int) -> CellCoord | None:
        for r, row in enumerate(self.rows, 1):
            if m in row:
                return CellCoord(r, row.index(m) + 1)
        return None

    def at(self, cell: tuple[int, int]) -> int | None:
        """Entry at ``cell``, or None when the cell is outside the shape."""
        r, c = cell
        if 1 <= r <= len(self.rows) and 1 <= c <= len(self.rows[r - 1]):
            return self.rows[r - 1][c - 1]
        return None

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.rows == other.rows and self.alphabet_max == other.alphabet_max

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.alphabet_max))
        return self._hash

    def __lt__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.key < other.key

    def __repr__(self):
        return f"Tableau({self.key!r})"

    def __str__(self):
        return "\n".join(" ".join(map(str, row)) for row in self.rows)


def _check_standard(rows: Rows, alphabet_max: int) -> None:
    lengths = [len(r) for r in rows]
    if any(x == 0 for x in lengths):
        raise ShapeMismatch("empty rows are not allowed")
    try:
        Partition(tuple(lengths))
    except InvalidPartition as exc:
        raise ShapeMismatch(str(exc)) from None
    n = sum(lengths)
    if alphabet_max < n:
        raise AlphabetViolation(f"alphabet [1, {alphabet_max}] is smaller than size {n}")
    seen = set()
    for r, row in enumerate(rows):
        for c, x in enumerate(row):
            if not 1 <= x <= alphabet_max:
                raise AlphabetViolation(f"entry {x} outside [1, {alphabet_max}]")
            if x in seen:
                raise NotStandard(f"entry {x} repeated")
            seen.add(x)
            if c and row[c - 1] >= x:
                raise NotStandard(f"row {r + 1} does not increase at column {c + 1}")
            if r and rows[r - 1][c] >= x:
                raise NotStandard(f"column {c + 1} does not increase at row {r + 1}")


def validate_tableau(shape: Partition | Sequence[int], entries: Sequence[int],
                     alphabet_max: int | None = None) -> Tableau:
    """Check a row-major filling of ``shape`` and return it as a Tableau."""
    if not isinstance(shape, Partition):
        shape = Partition(tuple(shape))
    if len(entries) != shape.size:
        raise ShapeMismatch(f"{len(entries)} entries for a shape of size {shape.size}")
    if alphabet_max is None:
        alphabet_max = shape.size
    rows, i = [], 0
    for length in shape.rows:
        rows.append(tuple(entries[i:i + length]))
        i += length
    return Tableau(rows, alphabet_max)


def outer_corners(shape: Partition) -> list[CellCoord]:
    rows = shape.rows
    if not rows:
        raise EmptyShape("the empty shape has no outer corners")
    return [CellCoord(r, rows[r - 1]) for r in range(1, len(rows) + 1)
            if r == len(rows) or rows[r - 1] > rows[r]]


def addable_cells(shape: Partition) -> list[CellCoord]:
    """Cells that can be appended while keeping a partition, top to bottom."""
    rows = shape.rows
    out = [CellCoord(r, rows[r - 1] + 1) for r in range(1, len(rows) + 1)
           if r == 1 or rows[r - 1] < rows[r - 2]]
    out.append(CellCoord(len(rows) + 1, 1))
    return out


def regions(shape: Partition, c: tuple[int, int]) -> tuple[set[CellCoord], set[CellCoord]]:
    """Split the cells of ``shape`` into the inner area of ``c`` and its outer area.

    The inner area holds the cells weakly above and weakly left of ``c``
    (``c`` included); the outer area is everything else.
    """
    if not shape.contains_cell(c):
        raise InvalidCoord(f"{tuple(c)} is not a cell of {shape}")
    r0, c0 = c
    inner, outer = set(), set()
    for cell in shape.cells():
        (inner if cell.row <= r0 and cell.col <= c0 else outer).add(cell)
    return inner, outer


def out_size(shape: Partition, c: tuple[int, int]) -> int:
    r0, c0 = c
    return shape.size - r0 * c0


def _enumerate_rows(n: int) -> Iterator[Rows]:
    if n == 0:
        yield ()
        return
    for rows in _enumerate_rows(n - 1):
        for r in range(len(rows) + 1):
            if r == len(rows):
                yield rows + ((n,),)
            elif r == 0 or len(rows[r]) < len(rows[r - 1]):
                yield rows[:r] + (rows[r] + (n,),) + rows[r + 1:]


def enumerate_syt(n: int) -> Iterator[Tableau]:
    """Yield every standard Young tableau with entries ``1..n``.

    Order: recursion on size ``n - 1``, placing ``n`` in the addable cells
    from top to bottom. The order is stable across runs.
    """
    if n < 0:
        raise SizeOutOfRange(f"n must be non-negative, got {n}")
    for rows in _enumerate_rows(n):
        yield Tableau._trusted(rows, n)


def enumerate_syt_of_shape(shape: Partition) -> Iterator[Tableau]:
    """Yield the standard tableaux of one shape, largest entry placed last."""
    n = shape.size

    def rec(lengths):
        m = sum(lengths)
        if m == 0:
            yield [[] for _ in lengths]
            return
        for r in range(len(lengths)):
            below = lengths[r + 1] if r + 1 < len(lengths) else 0
            if lengths[r] > below:
                lengths[r] -= 1
                for filling in rec(lengths):
                    filling[r].append(m)
                    yield filling
                    filling[r].pop()
                lengths[r] += 1

    for filling in rec(list(shape.rows)):
        yield Tableau._trusted(tuple(tuple(row) for row in filling), n)


def count_syt(n: int) -> int:
    """Number of standard tableaux of size n (the involution numbers)."""
    if n < 0:
        raise SizeOutOfRange(f"n must be non-negative, got {n}")
    prev, cur = 1, 1
    for i in range(2, n + 1):
        prev, cur = cur, cur + (i - 1) * prev
    return cur


def partitions_of(n: int, bound: int | None = None) -> Iterator[Partition]:
    """All partitions of n with parts at most ``bound``, in reverse lexicographic order."""
    def rec(m, b):
        if m == 0:
            yield ()
            return
        for first in range(min(m, b), 0, -1):
            for rest in rec(m - first, first):
                yield (first,) + rest

    for rows in rec(n, n if bound is None else bound):
        yield Partition(rows)


def contained_partitions(shape: Partition, m: int) -> frozenset[Partition]:
    """All partitions of size ``m`` whose diagram fits inside ``shape``."""
    if not 0 <= m <= shape.size:
        raise SizeOutOfRange(f"m={m} outside [0, {shape.size}]")
    lam = shape.rows
    out = set()

    def rec(i, remaining, cap, acc):
        if remaining == 0:
            out.add(Partition(tuple(acc)))
            return
        if i == len(lam):
            return
        # the remaining rows can hold at most this much
        room = sum(min(cap, x) for x in lam[i:])
        if room < remaining:
            return
        for part in range(min(cap, lam[i], remaining), 0, -1):
            acc.append(part)
            rec(i + 1, remaining - part, part, acc)
            acc.pop()

    rec(0, m, m, [])
    return frozenset(out)
