"""Jeu de taquin deletion, top-range removal, and (dual) promotion."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EntryAbsent, RangeInvalid
from .tableau import CellCoord, Rows, Tableau


@dataclass(frozen=True)
class DeletionTrace:
    deleted_entry: int
    slide_path: tuple[CellCoord, ...]
    terminal_corner: CellCoord


def _find(rows: Rows, m: int) -> tuple[int, int]:
    for r, row in enumerate(rows):
        if m in row:
            return r, row.index(m)
    raise EntryAbsent(f"{m} is not an entry of the tableau")


def _slide_out(grid: list[list[int]], r: int, c: int, path: list | None = None):
    """Move the hole at (r, c) right/down until it reaches an outer corner.

    Zero-indexed; returns the final hole position. The hole cell is left
    holding stale data and must be removed by the caller.
    """
    nrows = len(grid)
    while True:
        row = grid[r]
        right = row[c + 1] if c + 1 < len(row) else None
        below = grid[r + 1][c] if r + 1 < nrows and c < len(grid[r + 1]) else None
        if right is None and below is None:
            return r, c
        if below is None or (right is not None and right < below):
            row[c] = right
            c += 1
        else:
            row[c] = below
            r += 1
        if path is not None:
            path.append(CellCoord(r + 1, c + 1))


def delete_rows(rows: Rows, m: int) -> tuple[Rows, tuple[int, int]]:
    """Raw-row jeu de taquin deletion; returns new rows and the emptied corner (0-indexed)."""
    r, c = _find(rows, m)
    grid = [list(row) for row in rows]
    r, c = _slide_out(grid, r, c)
    del grid[r][c]
    if not grid[r]:
        grid.pop(r)
    return tuple(tuple(x - 1 if x > m else x for x in row) for row in grid), (r, c)


def jdt_delete(T: Tableau, m: int) -> Tableau:
    """Return ``T - m``: delete entry m, slide the hole out, relabel entries above m."""
    rows, _ = delete_rows(T.rows, m)
    return Tableau._trusted(rows, T.alphabet_max - 1)


def jdt_delete_traced(T: Tableau, m: int) -> tuple[Tableau, DeletionTrace]:
    r, c = _find(T.rows, m)
    grid = [list(row) for row in T.rows]
    path = [CellCoord(r + 1, c + 1)]
    r, c = _slide_out(grid, r, c, path)
    del grid[r][c]
    if not grid[r]:
        grid.pop(r)
    rows = tuple(tuple(x - 1 if x > m else x for x in row) for row in grid)
    trace = DeletionTrace(m, tuple(path), CellCoord(r + 1, c + 1))
    return Tableau._trusted(rows, T.alphabet_max - 1), trace


def truncate_rows(rows: Rows, d: int) -> Rows:
    """Keep only entries below d (no slides: each removed entry is the running maximum)."""
    out = []
    for row in rows:
        kept = tuple(x for x in row if x < d)
        if not kept:
            break
        out.append(kept)
    return tuple(out)


def remove_top_range(T: Tableau, d: int) -> Tableau:
    """Strip the entries ``d..n`` from a dense tableau."""
    n = T.n
    if T.alphabet_max != n:
        raise RangeInvalid("top-range removal needs a tableau over [1, n]")
    if not 1 <= d <= n + 1:
        raise RangeInvalid(f"d={d} outside [1, {n + 1}]")
    rows = truncate_rows(T.rows, d)
    if __debug__:
        slow = T.rows
        for m in range(n, d - 1, -1):
            slow, _ = delete_rows(slow, m)
        assert slow == rows, (T, d)
    return Tableau._trusted(rows, d - 1)


def dual_promotion(T: Tableau) -> Tableau:
    """Delete 1 by jeu de taquin and refill the emptied corner with n."""
    n = T.n
    if n < 1 or T.alphabet_max != n:
        raise RangeInvalid("dual promotion needs a non-empty tableau over [1, n]")
    rows, (r, _) = delete_rows(T.rows, 1)
    if r == len(rows):
        rows = rows + ((n,),)
    else:
        rows = rows[:r] + (rows[r] + (n,),) + rows[r + 1:]
    return Tableau._trusted(rows, n)


def promotion(T: Tableau) -> Tableau:
    """Inverse of :func:`dual_promotion`.

    Removes n, slides the hole up/left by moving the larger of the upper and
    left neighbours into it, shifts every entry up by one and writes 1 into
    the top-left cell.
    """
    n = T.n
    if n < 1 or T.alphabet_max != n:
        raise RangeInvalid("promotion needs a non-empty tableau over [1, n]")
    r, c = _find(T.rows, n)
    grid = [list(row) for row in T.rows]
    while r or c:
        up = grid[r - 1][c] if r else None
        left = grid[r][c - 1] if c else None
        if left is None or (up is not None and up > left):
            grid[r][c] = up
            r -= 1
        else:
            grid[r][c] = left
            c -= 1
    grid[0][0] = 0
    return Tableau._trusted(tuple(tuple(x + 1 for x in row) for row in grid), n)
