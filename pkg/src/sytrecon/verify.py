"""Exhaustive injectivity sweeps and identity checks."""
from __future__ import annotations

import hashlib
import json
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice

from .errors import CeilingExceeded, IdentityViolated, KTooLarge
from .minors import DeleteFn, minor_multiset, minor_row_counts, minor_rows, minor_set
from .tableau import Tableau, count_syt, enumerate_syt
from .taquin import delete_rows, dual_promotion, promotion, truncate_rows

DEFAULT_CEILING = 10
HARD_CEILING = 12
MODES = ("set", "multiset")
CONJECTURES = ("k_plus_4", "k2_plus_2k")


def size_ceiling() -> int:
    """Largest n a sweep may touch; ``SYT_CEILING`` overrides, capped at 12."""
    raw = os.environ.get("SYT_CEILING")
    value = int(raw) if raw else DEFAULT_CEILING
    if value > HARD_CEILING:
        raise CeilingExceeded(f"SYT_CEILING={value} exceeds the hard limit {HARD_CEILING}")
    return value


def _check_ceiling(n: int, ceiling: int | None) -> None:
    limit = size_ceiling() if ceiling is None else ceiling
    if limit > HARD_CEILING:
        raise CeilingExceeded(f"ceiling {limit} exceeds the hard limit {HARD_CEILING}")
    if n > limit:
        raise CeilingExceeded(f"n={n} exceeds the size ceiling {limit}")


@dataclass(frozen=True)
class SweepReport:
    n: int
    k: int
    mode: str
    total: int
    injective: bool
    collision_classes: tuple[tuple[str, ...], ...]
    elapsed_ms: float = field(default=0.0, compare=False)

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "total": self.total,
            "injective": self.injective,
            "collisions": [list(c) for c in self.collision_classes],
        }
        if timing:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def to_text(self) -> str:
        verdict = "injective" if self.injective else "not injective"
        lines = [f"n={self.n} k={self.k} mode={self.mode} total={self.total}: {verdict}"]
        for i, cls in enumerate(self.collision_classes, 1):
            lines.append(f"collision {i}: " + " | ".join(cls))
        return "\n".join(lines)


def fingerprint(T: Tableau, k: int, mode: str) -> bytes:
    """Digest of the sorted minor keys (with counts in multiset mode)."""
    if mode == "set":
        keys = sorted("/".join(" ".join(map(str, r)) for r in m) for m in minor_rows(T.rows, k))
        text = "\n".join(keys)
    else:
        pairs = sorted(("/".join(" ".join(map(str, r)) for r in m), c)
                       for m, c in minor_row_counts(T.rows, k).items())
        text = "\n".join(f"{key}#{c}" for key, c in pairs)
    return hashlib.sha256(text.encode()).digest()


def _minors_of(T: Tableau, k: int, mode: str):
    return minor_set(T, k) if mode == "set" else minor_multiset(T, k)


def _sweep_chunk(args) -> list[tuple[bytes, str]]:
    n, k, mode, start, stop = args
    return [(fingerprint(T, k, mode), T.key)
            for T in islice(enumerate_syt(n), start, stop)]


# (n, k, mode) -> injective, for the set => multiset implication check
_completed: dict[tuple[int, int, str], tuple[bool, tuple]] = {}


def _check_implication(n: int, k: int) -> None:
    s = _completed.get((n, k, "set"))
    m = _completed.get((n, k, "multiset"))
    if s and m and s[0] and not m[0]:
        raise IdentityViolated("set-injectivity implies multiset-injectivity",
                               m[1][0][0], f"n={n}, k={k}")


def injectivity_sweep(n: int, k: int, mode: str = "set", jobs: int = 1,
                      ceiling: int | None = None) -> SweepReport:
    """Group all of YT(n) by their k-minor set (or multiset) and report collisions."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if not 1 <= k < n:
        raise KTooLarge(f"need 1 <= k < n, got k={k}, n={n}")
    _check_ceiling(n, ceiling)
    started = time.perf_counter()
    total = count_syt(n)
    jobs = max(1, jobs)
    step = -(-total // jobs)
    chunks = [(n, k, mode, s, min(s + step, total)) for s in range(0, total, step)]
    if jobs == 1 or len(chunks) == 1:
        parts = [_sweep_chunk(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sweep_chunk, chunks))

    groups: dict[bytes, list[str]] = defaultdict(list)
    seen = 0
    for part in parts:
        for digest, key in part:
            groups[digest].append(key)
            seen += 1
    assert seen == total

    classes = []
    for keys in groups.values():
        if len(keys) < 2:
            continue
        # re-verify by full equality; splits any digest collision
        exact: dict = defaultdict(list)
        for key in keys:
            exact[_minors_of(_decode(key, n), k, mode)].append(key)
        classes.extend(tuple(sorted(v)) for v in exact.values() if len(v) > 1)
    classes.sort()
    report = SweepReport(n, k, mode, total, not classes, tuple(classes),
                         (time.perf_counter() - started) * 1000)
    _completed[(n, k, mode)] = (report.injective, report.collision_classes)
    _check_implication(n, k)
    return report


def _decode(key: str, n: int) -> Tableau:
    rows = tuple(tuple(int(x) for x in part.split(" ")) for part in key.split("/"))
    return Tableau._trusted(rows, n)


@dataclass(frozen=True)
class IdentityReport:
    n_max: int
    checks: dict[str, int]

    def to_dict(self) -> dict:
        return {"n_max": self.n_max, "checks": dict(self.checks), "passed": True}

    def to_text(self) -> str:
        lines = [f"all identities hold for n <= {self.n_max}"]
        lines += [f"  {name}: {count} cases" for name, count in self.checks.items()]
        return "\n".join(lines)


def check_identities(n_max: int, delete: DeleteFn = delete_rows) -> IdentityReport:
    """Exhaustively check the top-range removal identity and the promotion identities.

    ``delete`` is the raw-row deletion rule; tests swap in a broken rule to
    make sure violations are caught.
    """
    if n_max > 9:
        raise CeilingExceeded(f"identity checks are limited to n_max <= 9, got {n_max}")
    checks = {"removal": 0, "promotion_inverse": 0, "dual_promotion_inverse": 0,
              "first_deletion": 0}
    for n in range(1, n_max + 1):
        for T in enumerate_syt(n):
            if promotion(dual_promotion(T)) != T:
                raise IdentityViolated("promotion after dual promotion", T)
            checks["promotion_inverse"] += 1
            if dual_promotion(promotion(T)) != T:
                raise IdentityViolated("dual promotion after promotion", T)
            checks["dual_promotion_inverse"] += 1
            if delete(T.rows, 1)[0] != truncate_rows(dual_promotion(T).rows, n):
                raise IdentityViolated("T - 1 equals dual promotion with n removed", T)
            checks["first_deletion"] += 1
            for k in (1, 2):
                if k >= n:
                    continue
                minors = minor_rows(T.rows, k, delete)
                for d in range(k + 1, n + 1):
                    lhs = minor_rows(truncate_rows(T.rows, d), k, delete)
                    rhs = {truncate_rows(m, d - k) for m in minors}
                    if lhs != rhs:
                        raise IdentityViolated("minors commute with top-range removal", T,
                                               f"k={k}, d={d}")
                    checks["removal"] += 1
    return IdentityReport(n_max, checks)


@dataclass(frozen=True)
class ConjectureReport:
    which: str
    k: int
    n_values: tuple[int, ...]
    sweeps: tuple[SweepReport, ...]

    @property
    def verdicts(self) -> dict[int, str]:
        return {s.n: "holds" if s.injective else "collision" for s in self.sweeps}

    @property
    def holds(self) -> bool:
        return all(s.injective for s in self.sweeps)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "conjecture": self.which,
            "k": self.k,
            "n_values": list(self.n_values),
            "verdicts": {str(n): v for n, v in self.verdicts.items()},
            "sweeps": [s.to_dict(timing) for s in self.sweeps],
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"conjecture {self.which}, k={self.k}"]
        for s in self.sweeps:
            verdict = "holds" if s.injective else "collision found"
            lines.append(f"  n={s.n}: {verdict} ({s.total} tableaux)")
            for cls in s.collision_classes:
                lines.append("    certificate: " + " | ".join(cls))
        return "\n".join(lines)


def default_conjecture_range(which: str, k: int, ceiling: int | None = None) -> list[int]:
    limit = size_ceiling() if ceiling is None else ceiling
    if which == "k_plus_4":
        return list(range(k + 4, min(k + 6, limit) + 1))
    if which == "k2_plus_2k":
        low = k * k + 2 * k
        return list(range(low, min(low + 1, limit) + 1))
    raise ValueError(f"unknown conjecture {which!r}")


def verify_conjecture(which: str, k: int, n_values, jobs: int = 1,
                      ceiling: int | None = None) -> ConjectureReport:
    """Run the sweeps backing one conjecture: multiset sweeps for ``k_plus_4``, set sweeps otherwise."""
    if which not in CONJECTURES:
        raise ValueError(f"unknown conjecture {which!r}; expected one of {CONJECTURES}")
    n_values = tuple(n_values)
    for n in n_values:
        if n <= k:
            raise KTooLarge(f"n={n} must exceed k={k}")
        _check_ceiling(n, ceiling)
    mode = "multiset" if which == "k_plus_4" else "set"
    sweeps = tuple(injectivity_sweep(n, k, mode, jobs, ceiling) for n in n_values)
    return ConjectureReport(which, k, n_values, sweeps)
