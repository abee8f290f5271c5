"""Recovering a tableau (or parts of it) from its k-minors.

Two kinds of procedures live here. Direct ones locate entries from the
minors alone: shape recovery, top-entry peeling, locating the maximum, and
the k = 1 promotion shortcut. Search-backed ones pin as much as possible
directly and then test the remaining candidates against the input. Every
``Unique`` answer is checked by recomputing its minors.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    InconsistentDiff,
    KTooLarge,
    NoCandidate,
    NoSurvivingMinor,
    PreconditionUnmet,
    ShapeAmbiguous,
    ShapeMismatch,
    SytError,
)
from .minors import MinorMultiset, MinorSet, apply_remove_range, minor_multiset, minor_set
from .tableau import (
    CellCoord,
    Partition,
    Tableau,
    contained_partitions,
    enumerate_syt_of_shape,
    outer_corners,
    out_size,
    partitions_of,
)
from .taquin import promotion

UNIQUE = "unique"
AMBIGUOUS = "ambiguous"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class ReconstructionResult:
    status: str
    tableaux: tuple[Tableau, ...] = ()

    @classmethod
    def unique(cls, T: Tableau) -> ReconstructionResult:
        return cls(UNIQUE, (T,))

    @classmethod
    def ambiguous(cls, ts: Iterable[Tableau]) -> ReconstructionResult:
        return cls(AMBIGUOUS, tuple(sorted(ts)))

    @classmethod
    def inconsistent(cls) -> ReconstructionResult:
        return cls(INCONSISTENT)

    @property
    def is_unique(self) -> bool:
        return self.status == UNIQUE

    @property
    def tableau(self) -> Tableau:
        if self.status != UNIQUE:
            raise ValueError(f"result is {self.status}, not unique")
        return self.tableaux[0]


@dataclass(frozen=True)
class OcClassification:
    """What the minors reveal about one corner of the square-minus-corner shape.

    ``value`` is the exact entry when it lies in ``[n-k, n-2]``; None means
    the corner holds ``n - 1`` or ``n``.
    """

    corner: CellCoord
    value: int | None

    @property
    def top_pair(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class BoundReport:
    k: int
    eq41_min_n: int
    closed_form_bound: float
    cubic_bound: float

    @property
    def closed_form_min_n(self) -> int:
        return math.floor(self.closed_form_bound) + 1

    @property
    def cubic_min_n(self) -> int:
        return math.floor(self.cubic_bound) + 1


# --------------------------------------------------------------------------
# shapes

@lru_cache(maxsize=None)
def _containment_set(shape: Partition, m: int) -> frozenset[Partition]:
    return contained_partitions(shape, m)


def shape_candidates(minor_shapes: Iterable[Partition], n: int, k: int) -> list[Partition]:
    """Every shape of size n whose size-(n-k) subshapes are exactly ``minor_shapes``."""
    target = frozenset(minor_shapes)
    for mu in target:
        if mu.size != n - k:
            raise ShapeMismatch(f"minor shape {mu} has size {mu.size}, expected {n - k}")
    return [lam for lam in partitions_of(n) if _containment_set(lam, n - k) == target]


def recover_shape(minor_shapes: Iterable[Partition], n: int, k: int) -> Partition:
    """Recover the shape of T from the shapes of its k-minors.

    Raises ShapeAmbiguous (carrying every candidate) when more than one shape
    fits, which can only happen for ``n < k**2 + 2k``.
    """
    found = shape_candidates(minor_shapes, n, k)
    if not found:
        raise NoCandidate("no shape has this containment set")
    if len(found) > 1:
        raise ShapeAmbiguous(found)
    return found[0]


def monks_shape_guarantee(n: int, k: int) -> bool:
    """True when n has no expression (a+1)b + c - 1 with a <= c <= k and b + (c mod a) <= k."""
    for a in range(1, k + 1):
        for c in range(a, k + 1):
            for b in range(1, k - c % a + 1):
                if (a + 1) * b + c - 1 == n:
                    return False
    return True


def _cell_difference(big: Partition, small: Partition) -> CellCoord:
    if not big.contains(small) or big.size != small.size + 1:
        raise InconsistentDiff(f"{small} is not {big} minus one cell")
    for r, length in enumerate(big.rows, 1):
        if r > len(small.rows) or small.rows[r - 1] < length:
            return CellCoord(r, length)
    raise InconsistentDiff(f"{small} is not {big} minus one cell")  # pragma: no cover


# --------------------------------------------------------------------------
# locating large entries

def _check_minors(S: MinorSet, n: int, k: int) -> None:
    if k < 1:
        raise KTooLarge(f"k must be at least 1, got {k}")
    if S.n_minor != n - k:
        raise ShapeMismatch(f"minors have size {S.n_minor}, expected {n - k}")


def locate_top_entries(S: MinorSet, n: int, k: int) -> dict[int, CellCoord]:
    """Cells of the entries ``(k+1)**2 .. n``, found by peeling one maximum at a time."""
    _check_minors(S, n, k)
    if n < k * k + 2 * k + 1:
        raise PreconditionUnmet(f"need n >= {k * k + 2 * k + 1}, got n={n}")
    prev = recover_shape(S.shapes(), n, k)
    cur_set = S
    out = {}
    for m in range(n, (k + 1) ** 2 - 1, -1):
        # minors of the tableau with m..n removed
        cur_set = apply_remove_range(cur_set, m - k)
        cur = recover_shape(cur_set.shapes(), m - 1, k)
        out[m] = _cell_difference(prev, cur)
        prev = cur
    return out


def square_minus_corner(k: int) -> Partition:
    return Partition((k + 1,) * k + (k,))


def classify_corners(S: MinorSet, n: int, k: int) -> list[OcClassification]:
    """Classify both corners of the shape ``((k+1)^k, k)`` from its k-minors.

    For each corner, look along its arm (the column above the upper corner,
    the row left of the lower corner) for the farthest cell that holds
    ``n - k`` in some minor. Reaching the far end means the corner holds
    ``n - 1`` or ``n``; stopping at position p (counted from the corner)
    means it holds ``n - (k - p + 1)``.
    """
    _check_minors(S, n, k)
    if n != k * k + 2 * k:
        raise PreconditionUnmet(f"corner classification needs n = {k * k + 2 * k}")
    upper, lower = CellCoord(k, k + 1), CellCoord(k + 1, k)
    arms = {
        upper: [CellCoord(k - p + 1, k + 1) for p in range(1, k + 1)],
        lower: [CellCoord(k + 1, k - p + 1) for p in range(1, k + 1)],
    }
    target = n - k
    result = []
    for corner in (upper, lower):
        reach = 0
        for p, cell in enumerate(arms[corner], 1):
            if any(t.at(cell) == target for t in S):
                reach = p
        if reach == 0:
            raise NoSurvivingMinor(f"no minor holds {target} along the arm of {tuple(corner)}")
        value = None if reach == k else n - (k - reach + 1)
        result.append(OcClassification(corner, value))
    return result


def _locate_on_square(S: MinorSet, n: int, k: int) -> CellCoord:
    upper, lower = CellCoord(k, k + 1), CellCoord(k + 1, k)
    cls = classify_corners(S, n, k)
    for c in cls:
        if not c.top_pair:
            return lower if c.corner == upper else upper

    # both corners hold n-1 and n: find the cell of n-k first
    low = n - 2 * k
    seen_min: dict[CellCoord, int] = {}
    hits: set[CellCoord] = set()
    for t in S:
        for r, row in enumerate(t.rows, 1):
            for c, x in enumerate(row, 1):
                cell = CellCoord(r, c)
                if x < seen_min.get(cell, x + 1):
                    seen_min[cell] = x
                if x == low:
                    hits.add(cell)
    pool = {c for c in hits if seen_min[c] >= low}
    critical = CellCoord(k, k)
    others = pool - {critical}
    if len(others) > 1:
        raise InconsistentDiff(f"several cells qualify for {n - k}: {sorted(others)}")
    if others:
        star = others.pop()
    elif critical in pool:
        star = critical
    else:
        raise InconsistentDiff(f"no cell qualifies for {n - k}")
    witness = next(t for t in S if t.at(star) == low)
    row_top = witness.position(n - k).row
    row_next = witness.position(n - 1 - k).row
    return lower if row_top > row_next else upper


def locate_n(S: MinorSet, n: int, k: int) -> CellCoord:
    """Cell of the maximum entry of T, for ``n >= k**2 + 2k``.

    Corners with outer area above k are tested directly: the corner holding n
    is the one whose smallest surviving value is exactly ``n - k``. If at
    most one corner has a small outer area it is decided by elimination; two
    or more force the square-minus-corner shape, handled separately.
    """
    _check_minors(S, n, k)
    if n < k * k + 2 * k:
        raise PreconditionUnmet(f"need n >= {k * k + 2 * k}, got n={n}")
    shape = recover_shape(S.shapes(), n, k)
    corners = outer_corners(shape)
    small = [c for c in corners if out_size(shape, c) <= k]
    if len(small) >= 2:
        if k < 2 or shape != square_minus_corner(k):
            raise PreconditionUnmet(f"shape {shape} has several corners with small outer area")
        return _locate_on_square(S, n, k)

    for c in corners:
        if c in small:
            continue
        seen = [x for x in (t.at(c) for t in S) if x is not None]
        if not seen:
            raise NoSurvivingMinor(f"corner {tuple(c)} never survives")
        if min(seen) == n - k:
            return c
    if small:
        return small[0]
    raise InconsistentDiff("no corner can hold n")


# --------------------------------------------------------------------------
# reconstruction

def _as_minor_set(minors) -> MinorSet:
    return minors.support() if isinstance(minors, MinorMultiset) else minors


def search_reconstruct(minors: MinorSet | MinorMultiset, n: int, k: int,
                       shapes: Sequence[Partition] | None = None) -> ReconstructionResult:
    """Brute force: every tableau of a compatible shape whose minors equal the input."""
    support = _as_minor_set(minors)
    if support.n_minor != n - k or not 0 <= k < n:
        return ReconstructionResult.inconsistent()
    multiset = isinstance(minors, MinorMultiset)
    if shapes is None:
        shapes = shape_candidates(support.shapes(), n, k)
    hits = []
    for lam in shapes:
        for T in enumerate_syt_of_shape(lam):
            got = minor_multiset(T, k) if multiset else minor_set(T, k)
            if got == minors:
                hits.append(T)
    if not hits:
        return ReconstructionResult.inconsistent()
    if len(hits) == 1:
        return ReconstructionResult.unique(hits[0])
    return ReconstructionResult.ambiguous(hits)


def _initial_string(t: Tableau) -> tuple[str, int]:
    if t.n < 2:
        return ("row", t.n)
    if t.at((1, 2)) == 2:
        first = t.rows[0]
        length = 0
        while length < len(first) and first[length] == length + 1:
            length += 1
        return ("row", length)
    length = 0
    while length < len(t.rows) and t.rows[length][0] == length + 1:
        length += 1
    return ("col", length)


def _first_deletion(S: MinorSet, shape: Partition) -> Tableau | None:
    """Pick ``T - 1`` out of the 1-minors of T."""
    members = list(S)
    strings = [_initial_string(t) for t in members]
    for i, (d, length) in enumerate(strings):
        if all(d2 == d and length < l2 for j, (d2, l2) in enumerate(strings) if j != i):
            return members[i]
    if len(members) >= 3:
        groups = defaultdict(list)
        for t in members:
            groups[t.position(2)].append(t)
        lone = [g[0] for g in groups.values() if len(g) == 1]
        return lone[0] if len(lone) == 1 else None
    if len(members) == 2:
        n = shape.size
        if shape.rows == (n - 1, 1):
            return next((t for t in members if len(t.rows) == 1), None)
        if shape.rows == (2,) + (1,) * (n - 2):
            return next((t for t in members if len(t.rows[0]) == 1), None)
    return None


def _add_cell(rows: tuple[tuple[int, ...], ...], cell: CellCoord, value: int):
    r, c = cell
    if r == len(rows) + 1 and c == 1:
        return rows + ((value,),)
    if r <= len(rows) and c == len(rows[r - 1]) + 1 and (r == 1 or len(rows[r - 2]) >= c):
        return rows[:r - 1] + (rows[r - 1] + (value,),) + rows[r:]
    raise InconsistentDiff(f"cannot add cell {tuple(cell)} to shape {[len(x) for x in rows]}")


def reconstruct_from_1minors(S: MinorSet, n: int) -> ReconstructionResult:
    """Rebuild T from its 1-minors by identifying ``T - 1`` and undoing dual promotion."""
    if S.n_minor != n - 1:
        return ReconstructionResult.inconsistent()
    if n < 5:
        return search_reconstruct(S, n, 1)
    try:
        shape = recover_shape(S.shapes(), n, 1)
        t1 = _first_deletion(S, shape)
        if t1 is None:
            return ReconstructionResult.inconsistent()
        cell = _cell_difference(shape, t1.shape)
        promoted = Tableau._trusted(_add_cell(t1.rows, cell, n), n)
        T = promotion(promoted)
    except SytError:
        return ReconstructionResult.inconsistent()
    if minor_set(T, 1) != S:
        return ReconstructionResult.inconsistent()
    return ReconstructionResult.unique(T)


def inner_filter(candidate: Tableau, minor: Tableau, c: tuple[int, int], m: int) -> bool:
    """True iff every entry below m sits in the same cell of ``candidate`` and ``minor``.

    This must hold whenever c is an outer corner of the candidate holding m
    and the minor still has m at c: no entry below m was deleted, and
    nothing slides into an outer corner.
    """
    for row_a, row_b in zip(candidate.rows, minor.rows):
        for a, b in zip(row_a, row_b):
            if (a < m or b < m) and a != b:
                return False
    # an entry below m in a cell present in only one of them
    for bigger, smaller in ((candidate.rows, minor.rows), (minor.rows, candidate.rows)):
        for r, row in enumerate(bigger):
            start = len(smaller[r]) if r < len(smaller) else 0
            if any(x < m for x in row[start:]):
                return False
    return True


def _search_size8(S8: MinorSet, shape8: Partition, cell8: CellCoord) -> list[Tableau]:
    corners = outer_corners(shape8)
    index: dict[tuple[CellCoord, int], list[Tableau]] = defaultdict(list)
    for t in S8:
        for c in corners:
            x = t.at(c)
            if x is not None:
                index[(c, x)].append(t)
    rest = shape8.rows[:cell8.row - 1] + (shape8.rows[cell8.row - 1] - 1,) + shape8.rows[cell8.row:]
    rest = Partition(tuple(x for x in rest if x))
    found = []
    for base in enumerate_syt_of_shape(rest):
        cand = Tableau._trusted(_add_cell(base.rows, cell8, 8), 8)
        if not all(inner_filter(cand, t, c, cand.at(c))
                   for c in corners for t in index.get((c, cand.at(c)), ())):
            continue
        if minor_set(cand, 2) == S8:
            found.append(cand)
    return found


def reconstruct_from_2minors(S: MinorSet, n: int) -> ReconstructionResult:
    """Rebuild T from its 2-minors.

    Entries 9..n are located by peeling, the maximum of the size-8 core by
    :func:`locate_n`, and the rest of the core by a pruned search over
    tableaux of the recovered shape. Sizes below 8 fall back to full search
    and may legitimately come back ambiguous.
    """
    if S.n_minor != n - 2:
        return ReconstructionResult.inconsistent()
    if n < 8:
        return search_reconstruct(S, n, 2)
    try:
        tops = locate_top_entries(S, n, 2) if n >= 9 else {}
        S8 = apply_remove_range(S, 7)
        shape8 = recover_shape(S8.shapes(), 8, 2)
        cell8 = locate_n(S8, 8, 2)
    except SytError:
        return ReconstructionResult.inconsistent()
    found = _search_size8(S8, shape8, cell8)
    if not found:
        return ReconstructionResult.inconsistent()
    if len(found) > 1:
        return ReconstructionResult.ambiguous(found)
    rows = found[0].rows
    try:
        for m in range(9, n + 1):
            rows = _add_cell(rows, tops[m], m)
    except SytError:
        return ReconstructionResult.inconsistent()
    T = Tableau._trusted(rows, n)
    if minor_set(T, 2) != S:
        return ReconstructionResult.inconsistent()
    return ReconstructionResult.unique(T)


def _binom(a: int, k: int) -> int:
    return math.comb(a, k) if a >= k >= 0 else 0


def counting_bound_holds(n: int, k: int) -> bool:
    """Plurality-vote condition: 2 C(n - k^2 - 2k, k) > C(n, k)."""
    return 2 * _binom(n - k * k - 2 * k, k) > _binom(n, k)


def falling_factorial(n: int, k: int) -> int:
    return math.perm(n, k)


def _tableau_from_cells(cells: dict[int, CellCoord], n: int) -> Tableau:
    grid: dict[int, dict[int, int]] = defaultdict(dict)
    for m, (r, c) in cells.items():
        grid[r][c] = m
    rows = []
    for r in range(1, len(grid) + 1):
        if r not in grid:
            raise InconsistentDiff("located cells leave an empty row")
        row = grid[r]
        if sorted(row) != list(range(1, len(row) + 1)):
            raise InconsistentDiff("located cells leave a gap in a row")
        rows.append(tuple(row[c] for c in range(1, len(row) + 1)))
    return Tableau(rows, n)


def reconstruct_multiset(mS: MinorMultiset, n: int, k: int) -> ReconstructionResult:
    """Rebuild T from its k-minor multiset.

    When the plurality condition holds, large entries are peeled from the
    support and every small entry m is placed at the cell where m appears
    with the largest total multiplicity. Otherwise, or if that answer does
    not reproduce the input, fall back to exhaustive search.
    """
    if mS.n_minor != n - k or k < 1 or mS.total != falling_factorial(n, k):
        return ReconstructionResult.inconsistent()
    if counting_bound_holds(n, k):
        try:
            cells = dict(locate_top_entries(mS.support(), n, k))
            for m in range(1, k * k + 2 * k + 1):
                tally: dict[CellCoord, int] = defaultdict(int)
                for t, c in mS.items():
                    tally[t.position(m)] += c
                best = max(tally.values())
                winners = [cell for cell, c in tally.items() if c == best]
                if len(winners) != 1:
                    raise InconsistentDiff(f"no plurality location for {m}")
                cells[m] = winners[0]
            T = _tableau_from_cells(cells, n)
            if minor_multiset(T, k) == mS:
                return ReconstructionResult.unique(T)
        except SytError:
            pass
    return search_reconstruct(mS, n, k)


def reconstruct(minors: MinorSet | MinorMultiset, n: int, k: int) -> ReconstructionResult:
    """Dispatch to the best available procedure for the input kind and k."""
    if isinstance(minors, MinorMultiset):
        return reconstruct_multiset(minors, n, k)
    if k == 1:
        return reconstruct_from_1minors(minors, n)
    if k == 2:
        return reconstruct_from_2minors(minors, n)
    return search_reconstruct(minors, n, k)


def bound_report(k: int) -> BoundReport:
    """Three sufficient sizes for multiset reconstruction, each computed on its own."""
    if k < 1:
        raise KTooLarge(f"k must be at least 1, got {k}")
    n = 1
    while not counting_bound_holds(n, k):
        n += 1
    closed = k * k + 3 * k - 1 + (k * k + 2 * k) / (2 ** (1 / k) - 1)
    ln2 = math.log(2)
    cubic = (k ** 3 + 2 * k ** 2) / ln2 + k * k / 2 + 2 * k - 1 + ln2 / 12 * (k + 2)
    return BoundReport(k, n, closed, cubic)
