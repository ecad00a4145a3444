"""Text formats for triple systems and Cayley tables.

STS format: optional ``#`` comment lines, a first data line holding the point
count ``v``, then one block per line as three 0-based ascending point
indices.  Table format: first data line the order ``m``, then ``m`` lines of
``m`` space-separated element indices; for loop files index 0 must be the
identity.  Readers are lenient about comments, blank lines and extra spacing;
writers always emit the canonical form (sorted blocks, single spaces,
trailing newline), so write(read(text)) is a canonicalizer.
"""

from __future__ import annotations

from typing import Union

from .algebra import LoopTable, QuasigroupTable, TripleSystem

TableOrSystem = Union[TripleSystem, LoopTable, QuasigroupTable]


def _data_lines(text: str) -> list[list[int]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            rows.append([int(tok) for tok in stripped.split()])
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {stripped!r}") from None
    return rows


def dumps_sts(s: TripleSystem) -> str:
    lines = [str(s.v)]
    lines.extend(" ".join(map(str, block)) for block in s.blocks)
    return "\n".join(lines) + "\n"


def loads_sts(text: str) -> TripleSystem:
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 1:
        raise ValueError("first data line must be the point count")
    v = rows[0][0]
    for row in rows[1:]:
        if len(row) != 3:
            raise ValueError(f"block line must have 3 points, got {row}")
    return TripleSystem.from_blocks(v, rows[1:])


def dumps_table(t: LoopTable | QuasigroupTable) -> str:
    lines = [str(t.order)]
    lines.extend(" ".join(map(str, row)) for row in t.table)
    return "\n".join(lines) + "\n"


def loads_table(text: str, kind: str = "auto") -> LoopTable | QuasigroupTable:
    """Parse a Cayley table; ``kind`` is 'auto', 'loop' or 'quasigroup'.

    Auto-detection makes the table a loop exactly when element 0 acts as a
    two-sided identity.
    """
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 1:
        raise ValueError("first data line must be the table order")
    m = rows[0][0]
    body = rows[1:]
    if len(body) != m or any(len(row) != m for row in body):
        raise ValueError(f"expected {m} rows of {m} entries")
    if kind == "auto":
        identity = (m > 0 and body[0] == list(range(m))
                    and all(body[x][0] == x for x in range(m)))
        kind = "loop" if identity else "quasigroup"
    if kind == "loop":
        return LoopTable(m, tuple(tuple(row) for row in body))
    if kind == "quasigroup":
        return QuasigroupTable(m, tuple(tuple(row) for row in body))
    raise ValueError(f"unknown table kind {kind!r}")


def dumps(obj: TableOrSystem) -> str:
    if isinstance(obj, TripleSystem):
        return dumps_sts(obj)
    return dumps_table(obj)


def detect_kind(text: str) -> str:
    """Classify file content as 'sts', 'loop' or 'quasigroup' by line shape."""
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 1:
        raise ValueError("first data line must be a single integer")
    head = rows[0][0]
    body = rows[1:]
    if len(body) == head and head > 0 and all(len(row) == head for row in body):
        identity = body[0] == list(range(head)) and all(body[x][0] == x for x in range(head))
        return "loop" if identity else "quasigroup"
    if all(len(row) == 3 for row in body) and len(body) == head * (head - 1) // 6:
        return "sts"
    raise ValueError("content matches neither the STS nor the table format")


def loads(text: str, kind: str = "auto") -> TableOrSystem:
    """Parse either format, inferring the kind unless one is forced."""
    if kind == "auto":
        kind = detect_kind(text)
    if kind == "sts":
        return loads_sts(text)
    return loads_table(text, kind)
