"""Triple systems, Steiner quasigroups and Steiner loops as Cayley tables.

A Steiner triple system on ``v`` points is a family of 3-element blocks such
that every pair of distinct points lies in exactly one block.  Each system
corresponds to an idempotent commutative quasigroup (``xy = z`` whenever
``{x, y, z}`` is a block, ``xx = x``) and, after adjoining a two-sided
identity, to a commutative loop of exponent 2.  This module holds the three
data types, validation of their defining identities

    quasigroup:  xy = yx,  x(xy) = y,  xx = x
    loop:        xy = yx,  x(xy) = y

and the conversions between them.

Conventions (fixed so that serialized tables and golden files are stable):

* the loop identity is always element 0; quasigroup element ``i`` becomes
  loop element ``i + 1``;
* blocks are stored sorted ascending, and the block list is sorted
  lexicographically.

All values are immutable after construction and every operation is a pure
function, so everything here is safe for unrestricted concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import InvalidSystemError, InvalidTableError, NotSteinerError

# Reports list at most this many violations; the rest are only counted.
VIOLATION_CAP = 100

Block = tuple[int, int, int]


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a non-raising validation pass.

    ``violations`` holds ``(rule, witness)`` pairs; ``suppressed`` counts
    violations beyond the reporting cap.  ``valid`` iff no violations at all.
    """

    valid: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]
    suppressed: int = 0


def validate_sts(v: int, blocks: Iterable[Sequence[int]]) -> ValidationReport:
    """Check raw block data against the triple-system invariants.

    Never raises: every failure is reported as a violation.  Rules:
    ``point-count`` (bad v), ``block-shape`` (not three distinct integers),
    ``point-range``, ``pair-covered-twice`` and ``pair-uncovered`` (with the
    offending pair as witness, in lexicographic order).
    """
    violations: list[tuple[str, tuple[int, ...]]] = []
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        violations.append(("point-count", (v,)))
        return _capped(violations)

    pair_count: dict[tuple[int, int], int] = {}
    for raw in blocks:
        try:
            block = tuple(raw)
        except TypeError:
            violations.append(("block-shape", (raw,)))
            continue
        if (len(block) != 3
                or not all(isinstance(p, int) and not isinstance(p, bool) for p in block)
                or len(set(block)) != 3):
            violations.append(("block-shape", block))
            continue
        if not all(0 <= p < v for p in block):
            violations.append(("point-range", tuple(sorted(block))))
            continue
        a, b, c = sorted(block)
        for pair in ((a, b), (a, c), (b, c)):
            pair_count[pair] = pair_count.get(pair, 0) + 1

    for pair in combinations(range(v), 2):
        n = pair_count.get(pair, 0)
        if n == 0:
            violations.append(("pair-uncovered", pair))
        elif n > 1:
            violations.append(("pair-covered-twice", pair))

    return _capped(violations)


def _capped(violations: list[tuple[str, tuple[int, ...]]]) -> ValidationReport:
    kept = tuple(violations[:VIOLATION_CAP])
    return ValidationReport(valid=not violations, violations=kept,
                            suppressed=max(0, len(violations) - VIOLATION_CAP))


@dataclass(frozen=True)
class TripleSystem:
    """A Steiner triple system in canonical form.

    Construction validates the invariants and raises
    :class:`InvalidSystemError` otherwise; use :func:`validate_sts` to inspect
    bad data without raising, and :meth:`from_blocks` to build from unsorted
    input.  ``v`` in {0, 1} is admitted with an empty block list so the loops
    of order <= 2 stay constructible.
    """

    v: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        if blocks != canon:
            raise InvalidSystemError(
                "blocks must be sorted ascending and listed lexicographically "
                "(use TripleSystem.from_blocks to canonicalize)")
        report = validate_sts(self.v, blocks)
        if not report.valid:
            rule, witness = report.violations[0]
            raise InvalidSystemError(
                f"not a triple system: {rule} at {witness}"
                + (f" (+{len(report.violations) - 1 + report.suppressed} more)"
                   if len(report.violations) > 1 or report.suppressed else ""))

    @classmethod
    def from_blocks(cls, v: int, blocks: Iterable[Sequence[int]]) -> "TripleSystem":
        canon = sorted(tuple(sorted(int(p) for p in b)) for b in blocks)
        return cls(v, tuple(canon))

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_set(self) -> frozenset[Block]:
        return frozenset(self.blocks)

    def third_map(self) -> dict[tuple[int, int], int]:
        """Map every ordered pair of distinct points to the third block point."""
        third: dict[tuple[int, int], int] = {}
        for a, b, c in self.blocks:
            third[a, b] = third[b, a] = c
            third[a, c] = third[c, a] = b
            third[b, c] = third[c, b] = a
        return third


def _check_latin(table: tuple[tuple[int, ...], ...], n: int, what: str) -> None:
    ref = list(range(n))
    if len(table) != n or any(len(row) != n for row in table):
        raise InvalidTableError(f"{what}: table is not {n}x{n}")
    for i, row in enumerate(table):
        if sorted(row) != ref:
            raise InvalidTableError(f"{what}: row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if sorted(row[j] for row in table) != ref:
            raise InvalidTableError(f"{what}: column {j} is not a permutation of 0..{n - 1}")


@dataclass(frozen=True)
class QuasigroupTable:
    """Cayley table of a quasigroup on elements 0..n-1 (a Latin square)."""

    n: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        if self.n < 1:
            raise InvalidTableError("quasigroup order must be >= 1")
        _check_latin(table, self.n, "quasigroup")

    @property
    def order(self) -> int:
        return self.n

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def flat(self) -> list[int]:
        return [e for row in self.table for e in row]


@dataclass(frozen=True)
class LoopTable:
    """Cayley table of a loop on elements 0..m-1 with identity fixed at 0."""

    m: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        if self.m < 1:
            raise InvalidTableError("loop order must be >= 1")
        _check_latin(table, self.m, "loop")
        for x in range(self.m):
            if table[0][x] != x or table[x][0] != x:
                raise InvalidTableError(f"element 0 is not a two-sided identity (at {x})")

    @property
    def order(self) -> int:
        return self.m

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def flat(self) -> list[int]:
        return [e for row in self.table for e in row]


CayleyTable = Union[QuasigroupTable, LoopTable]


def is_steiner_loop(t: LoopTable) -> bool:
    """True iff ``xy = yx`` and ``x(xy) = y`` hold at every pair."""
    if not isinstance(t, LoopTable):
        raise TypeError("is_steiner_loop expects a LoopTable")
    tab = t.table
    for x in range(t.m):
        row = tab[x]
        for y in range(t.m):
            if row[y] != tab[y][x] or tab[x][row[y]] != y:
                return False
    return True


def is_steiner_quasigroup(t: QuasigroupTable) -> bool:
    """True iff ``xy = yx``, ``x(xy) = y`` and ``xx = x`` hold everywhere."""
    if not isinstance(t, QuasigroupTable):
        raise TypeError("is_steiner_quasigroup expects a QuasigroupTable")
    tab = t.table
    for x in range(t.n):
        if tab[x][x] != x:
            return False
        row = tab[x]
        for y in range(t.n):
            if row[y] != tab[y][x] or tab[x][row[y]] != y:
                return False
    return True


def sts_to_quasigroup(s: TripleSystem) -> QuasigroupTable:
    """Steiner quasigroup of a system: ``xy = z`` iff {x,y,z} is a block."""
    if s.v < 1:
        raise InvalidSystemError("need at least one point to form a quasigroup")
    table = [[x if x == y else -1 for y in range(s.v)] for x in range(s.v)]
    for a, b, c in s.blocks:
        table[a][b] = table[b][a] = c
        table[a][c] = table[c][a] = b
        table[b][c] = table[c][b] = a
    return QuasigroupTable(s.v, tuple(tuple(row) for row in table))


def quasigroup_to_sts(q: QuasigroupTable) -> TripleSystem:
    """Inverse of :func:`sts_to_quasigroup`; blocks are {x, y, xy} for x != y."""
    if not is_steiner_quasigroup(q):
        raise NotSteinerError("table is not a Steiner quasigroup")
    blocks = {tuple(sorted((x, y, q.table[x][y])))
              for x in range(q.n) for y in range(x + 1, q.n)}
    return TripleSystem(q.n, tuple(sorted(blocks)))


def quasigroup_to_loop(q: QuasigroupTable) -> LoopTable:
    """Adjoin a new identity 0; quasigroup element i becomes loop element i+1.

    The quasigroup diagonal ``xx = x`` is replaced by ``xx = 1`` (every
    non-identity element squares to the identity).
    """
    if not is_steiner_quasigroup(q):
        raise NotSteinerError("table is not a Steiner quasigroup")
    m = q.n + 1
    table = [[0] * m for _ in range(m)]
    for x in range(m):
        table[0][x] = table[x][0] = x
    for x in range(q.n):
        for y in range(q.n):
            table[x + 1][y + 1] = 0 if x == y else q.table[x][y] + 1
    return LoopTable(m, tuple(tuple(row) for row in table))


def loop_to_quasigroup(t: LoopTable) -> QuasigroupTable:
    """Remove the identity and restore the idempotent diagonal (exact inverse)."""
    if not is_steiner_loop(t):
        raise NotSteinerError("table is not a Steiner loop")
    if t.m < 2:
        raise InvalidTableError("need order >= 2 to remove the identity")
    n = t.m - 1
    table = [[x if x == y else t.table[x + 1][y + 1] - 1 for y in range(n)]
             for x in range(n)]
    return QuasigroupTable(n, tuple(tuple(row) for row in table))
