"""Sets and multisets of k-minors, canonical keys, and set-level top-range removal."""
from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable, Mapping

from .errors import KTooLarge, MalformedKey, RangeInvalid, ShapeMismatch
from .tableau import Partition, Rows, Tableau
from .taquin import delete_rows, truncate_rows

DeleteFn = Callable[[Rows, int], tuple[Rows, tuple[int, int]]]


def canonical_encode(T: Tableau) -> str:
    """``"1 2/3"`` style key: rows joined by ``/``, entries by single spaces."""
    return T.key


def canonical_decode(key: str) -> Tableau:
    if not isinstance(key, str):
        raise MalformedKey(f"expected a string key, got {type(key).__name__}")
    if key == "":
        return Tableau(())
    rows = []
    for part in key.split("/"):
        tokens = part.split(" ")
        if not part or any(not t.isdigit() for t in tokens):
            raise MalformedKey(f"malformed key {key!r}")
        rows.append(tuple(int(t) for t in tokens))
    n = sum(len(r) for r in rows)
    return Tableau(rows, max(n, max(max(r) for r in rows)))


class MinorSet:
    """A deduplicated collection of same-size tableaux, iterated in key order."""

    def __init__(self, members: Iterable[Tableau], n_minor: int | None = None):
        uniq = {t.key: t for t in members}
        self._members = tuple(uniq[k] for k in sorted(uniq))
        sizes = {t.n for t in self._members}
        if len(sizes) > 1:
            raise ShapeMismatch(f"minor set mixes sizes {sorted(sizes)}")
        if n_minor is None:
            if not sizes:
                raise ShapeMismatch("an empty minor set needs an explicit n_minor")
            n_minor = sizes.pop()
        elif sizes and sizes != {n_minor}:
            raise ShapeMismatch(f"members have size {sizes.pop()}, expected {n_minor}")
        self.n_minor = n_minor
        self._keys = frozenset(uniq)

    @property
    def members(self) -> tuple[Tableau, ...]:
        return self._members

    @property
    def keys(self) -> frozenset[str]:
        return self._keys

    def shapes(self) -> frozenset[Partition]:
        return frozenset(t.shape for t in self._members)

    def __iter__(self):
        return iter(self._members)

    def __len__(self):
        return len(self._members)

    def __contains__(self, item):
        if isinstance(item, Tableau):
            item = item.key
        return item in self._keys

    def __eq__(self, other):
        if not isinstance(other, MinorSet):
            return NotImplemented
        return self.n_minor == other.n_minor and self._keys == other._keys

    def __hash__(self):
        return hash((self.n_minor, self._keys))

    def __repr__(self):
        return f"MinorSet(n_minor={self.n_minor}, size={len(self)})"


class MinorMultiset:
    """Minors with multiplicities; counts are ordered deletion sequences."""

    def __init__(self, counts: Mapping[Tableau, int], n_minor: int | None = None):
        merged: dict[str, int] = defaultdict(int)
        by_key: dict[str, Tableau] = {}
        for t, c in counts.items():
            if c <= 0:
                raise ValueError(f"multiplicities must be positive, got {c}")
            merged[t.key] += c
            by_key[t.key] = t
        self._support = MinorSet(by_key.values(), n_minor)
        self.n_minor = self._support.n_minor
        self._counts = {k: merged[k] for k in sorted(merged)}
        self._by_key = by_key

    @property
    def counts(self) -> dict[str, int]:
        return dict(self._counts)

    def items(self):
        """(Tableau, count) pairs in key order."""
        return [(self._by_key[k], c) for k, c in self._counts.items()]

    def count(self, T: Tableau | str) -> int:
        key = T.key if isinstance(T, Tableau) else T
        return self._counts.get(key, 0)

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def support(self) -> MinorSet:
        return self._support

    def __len__(self):
        return len(self._counts)

    def __eq__(self, other):
        if not isinstance(other, MinorMultiset):
            return NotImplemented
        return self.n_minor == other.n_minor and self._counts == other._counts

    def __hash__(self):
        return hash((self.n_minor, tuple(self._counts.items())))

    def __repr__(self):
        return f"MinorMultiset(n_minor={self.n_minor}, distinct={len(self)}, total={self.total})"


def minor_rows(rows: Rows, k: int, delete: DeleteFn = delete_rows) -> set[Rows]:
    level = {rows}
    for _ in range(k):
        nxt = set()
        for t in level:
            for row in t:
                for m in row:
                    nxt.add(delete(t, m)[0])
        level = nxt
    return level


def minor_row_counts(rows: Rows, k: int, delete: DeleteFn = delete_rows) -> dict[Rows, int]:
    level = {rows: 1}
    for _ in range(k):
        nxt: dict[Rows, int] = defaultdict(int)
        for t, c in level.items():
            for row in t:
                for m in row:
                    nxt[delete(t, m)[0]] += c
        level = nxt
    return dict(level)


def _check_k(T: Tableau, k: int) -> None:
    if k < 0:
        raise KTooLarge(f"k must be non-negative, got {k}")
    if k >= T.n:
        raise KTooLarge(f"k={k} must be smaller than n={T.n}")


def minor_set(T: Tableau, k: int) -> MinorSet:
    """The set of tableaux reachable from T by k jeu de taquin deletions."""
    _check_k(T, k)
    N = T.alphabet_max - k
    return MinorSet((Tableau._trusted(r, N) for r in minor_rows(T.rows, k)), T.n - k)


def minor_multiset(T: Tableau, k: int) -> MinorMultiset:
    _check_k(T, k)
    N = T.alphabet_max - k
    counts = {Tableau._trusted(r, N): c for r, c in minor_row_counts(T.rows, k).items()}
    return MinorMultiset(counts, T.n - k)


def apply_remove_range(S: MinorSet, d: int) -> MinorSet:
    """Strip the entries ``d..n_minor`` from every member and re-deduplicate."""
    if not 1 <= d <= S.n_minor + 1:
        raise RangeInvalid(f"d={d} outside [1, {S.n_minor + 1}]")
    if d == S.n_minor + 1:
        return S
    return MinorSet((Tableau._trusted(truncate_rows(t.rows, d), d - 1) for t in S), d - 1)
