"""Plain-text formats for tableaux, minor files, shapes and reconstruction results.

A tableau is written one row per line, entries separated by spaces, top
row first. Several tableaux are separated by a single blank line. A
multiset file puts a ``count: <c>`` line before each block. A result file
starts with its status line (``unique``, ``ambiguous`` or
``inconsistent``) followed by the tableau blocks.
"""
from __future__ import annotations

from .errors import MalformedKey
from .minors import MinorMultiset, MinorSet
from .reconstruction import AMBIGUOUS, INCONSISTENT, UNIQUE, ReconstructionResult
from .tableau import Partition, Tableau

STATUSES = (UNIQUE, AMBIGUOUS, INCONSISTENT)


def _blocks(text: str) -> list[list[str]]:
    blocks, cur = [], []
    for line in text.splitlines():
        line = line.strip()
        if line:
            cur.append(line)
        elif cur:
            blocks.append(cur)
            cur = []
    if cur:
        blocks.append(cur)
    return blocks


def _parse_block(lines: list[str]) -> Tableau:
    try:
        rows = [tuple(int(x) for x in line.split()) for line in lines]
    except ValueError:
        raise MalformedKey(f"non-integer entry in tableau block {lines!r}") from None
    n = sum(len(r) for r in rows)
    return Tableau(rows, max([n] + [max(r) for r in rows]))


def format_tableau(T: Tableau) -> str:
    return str(T)


def parse_tableaux(text: str) -> list[Tableau]:
    return [_parse_block(b) for b in _blocks(text)]


def parse_tableau(text: str) -> Tableau:
    found = parse_tableaux(text)
    if len(found) != 1:
        raise MalformedKey(f"expected exactly one tableau, found {len(found)}")
    return found[0]


def format_tableaux(ts) -> str:
    return "\n\n".join(str(t) for t in ts) + "\n"


def format_minor_set(S: MinorSet) -> str:
    return format_tableaux(S)


def format_minor_multiset(mS: MinorMultiset) -> str:
    return "\n\n".join(f"count: {c}\n{t}" for t, c in mS.items()) + "\n"


def parse_minors(text: str) -> MinorSet | MinorMultiset:
    """Read either minor file flavour; ``count:`` lines select the multiset form."""
    blocks = _blocks(text)
    if not blocks:
        raise MalformedKey("no tableaux in minor file")
    has_counts = [b[0].startswith("count:") for b in blocks]
    if not any(has_counts):
        return MinorSet(_parse_block(b) for b in blocks)
    if not all(has_counts):
        raise MalformedKey("either every block or no block may carry a count line")
    counts: dict[Tableau, int] = {}
    for b in blocks:
        try:
            c = int(b[0].split(":", 1)[1])
        except ValueError:
            raise MalformedKey(f"bad count line {b[0]!r}") from None
        t = _parse_block(b[1:])
        counts[t] = counts.get(t, 0) + c
    return MinorMultiset(counts)


def parse_shapes(text: str) -> list[Partition]:
    """One partition per line, row lengths separated by spaces or commas."""
    out = []
    for line in text.splitlines():
        line = line.strip().strip("()")
        if not line:
            continue
        try:
            out.append(Partition(tuple(int(x) for x in line.replace(",", " ").split())))
        except ValueError:
            raise MalformedKey(f"bad shape line {line!r}") from None
    return out


def format_shapes(shapes) -> str:
    return "".join(" ".join(map(str, p.rows)) + "\n" for p in shapes)


def format_result(result: ReconstructionResult) -> str:
    if not result.tableaux:
        return result.status + "\n"
    return result.status + "\n\n" + format_tableaux(result.tableaux)


def parse_result(text: str) -> ReconstructionResult:
    lines = text.splitlines()
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines or lines[0].strip() not in STATUSES:
        raise MalformedKey("result must start with a status line")
    status = lines[0].strip()
    ts = tuple(parse_tableaux("\n".join(lines[1:])))
    return ReconstructionResult(status, ts)
