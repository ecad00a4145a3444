"""Deciders for the Moufang-theorem property of a finite loop.

A loop *satisfies Moufang's theorem* (MT) when for all x, y, z with
``x(yz) = (xy)z`` the subloop generated by x, y, z is a group.  Three
independent deciders are implemented:

* ``definition``  - literally test the implication on every triple;
* ``prop1``       - for Steiner loops only: MT holds iff every associating
                    triple also satisfies ``x(yz) = y(xz)``;
* ``fano``        - for Steiner loops only: MT holds iff every Pasch
                    configuration of the corresponding triple system
                    generates an order-7 subsystem (a Fano plane).

The three agree on Steiner loops; ``definition`` is the only decider that
accepts arbitrary loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .algebra import LoopTable, is_steiner_loop, loop_to_quasigroup, quasigroup_to_sts
from .configurations import every_pasch_generates_fano
from .errors import NotSteinerError
from .terms import MOUFANG, CheckReport, check_identity


@dataclass(frozen=True)
class MTReport:
    """Verdict of one Moufang-theorem decider.

    ``counterexample`` is the first (lexicographic) failing triple:
    an associating triple whose generated subloop is not a group
    (``definition``), violating ``x(yz) = y(xz)`` (``prop1``), or failing
    Fano closure (``fano``).  ``triples_examined`` counts the triples that
    reached the decider's core test.
    """

    satisfies: bool
    method: str
    counterexample: tuple[int, int, int] | None
    triples_examined: int


def subloop_generated(t: LoopTable, generators: Iterable[int]) -> frozenset[int]:
    """Subloop generated by a set of elements.

    Closing under multiplication alone suffices: the generated subset H is
    finite, and for a fixed a in H the translations x -> ax and x -> xa are
    injective on H, hence bijections of H onto itself, so left and right
    divisions land inside H as well.
    """
    gens = set(generators)
    if any(not (0 <= g < t.m) for g in gens):
        raise ValueError(f"elements out of range 0..{t.m - 1}")
    tab = t.table
    closed = gens | {0}
    frontier = list(closed)
    while frontier:
        x = frontier.pop()
        row = tab[x]
        for y in tuple(closed):
            for p in (row[y], tab[y][x]):
                if p not in closed:
                    closed.add(p)
                    frontier.append(p)
    return frozenset(closed)


def is_group_on(t: LoopTable, subset: Iterable[int]) -> bool:
    """Is the restriction of the loop to ``subset`` an associative group?

    ``subset`` must contain the identity and be closed under the product
    (so it is a subloop); a ValueError is raised otherwise.
    """
    sub = sorted(set(subset))
    if 0 not in sub:
        raise ValueError("subset must contain the identity 0")
    tab = t.table
    members = set(sub)
    for x in sub:
        for y in sub:
            if tab[x][y] not in members:
                raise ValueError(f"subset not closed under the product at ({x}, {y})")
    for x in sub:
        row = tab[x]
        for y in sub:
            xy = tab[x][y]
            row_y = tab[y]
            for z in sub:
                if row[row_y[z]] != tab[xy][z]:
                    return False
    return True


def _definition_sweep_steiner(t: LoopTable) -> MTReport:
    # Steiner fast path: triples containing the identity, with repeats, or
    # collinear (xy = z) generate a subloop of order <= 4 that is elementary
    # abelian, hence a group; only the remaining Pasch triples can fail.
    tab = t.table
    m = t.m
    memo: dict[frozenset[int], bool] = {}
    examined = 0
    for x in range(1, m):
        row_x = tab[x]
        for y in range(1, m):
            if y == x:
                continue
            xy = row_x[y]
            for z in range(1, m):
                if z == x or z == y or z == xy:
                    continue
                if row_x[tab[y][z]] != tab[xy][z]:
                    continue
                examined += 1
                key = frozenset((x, y, z))
                good = memo.get(key)
                if good is None:
                    good = is_group_on(t, subloop_generated(t, key))
                    memo[key] = good
                if not good:
                    return MTReport(False, "definition", (x, y, z), examined)
    return MTReport(True, "definition", None, examined)


def _definition_sweep_general(t: LoopTable) -> MTReport:
    # General loops get no shortcuts: even triples containing the identity
    # carry content (z = 1 always associates, so MT forces every 2-generated
    # subloop to be a group).
    tab = t.table
    m = t.m
    closure_memo: dict[frozenset[int], bool] = {}
    examined = 0
    for x, y, z in product(range(m), repeat=3):
        if tab[x][tab[y][z]] != tab[tab[x][y]][z]:
            continue
        examined += 1
        key = frozenset((x, y, z)) - {0}
        good = closure_memo.get(key)
        if good is None:
            good = is_group_on(t, subloop_generated(t, key))
            closure_memo[key] = good
        if not good:
            return MTReport(False, "definition", (x, y, z), examined)
    return MTReport(True, "definition", None, examined)


def satisfies_mt_definition(t: LoopTable) -> MTReport:
    """Test Moufang's theorem literally on every associating triple.

    Works for arbitrary loops.  Steiner loops take a pruned sweep over
    non-degenerate triples; subloop closures are memoized per generator set
    either way.
    """
    if is_steiner_loop(t):
        return _definition_sweep_steiner(t)
    return _definition_sweep_general(t)


def satisfies_mt_prop1(t: LoopTable) -> MTReport:
    """Steiner-loop criterion: every associating triple satisfies x(yz) = y(xz).

    Equivalent to the definitional test on Steiner loops, at O(m^3) lookups
    with no subloop closures.  Rejects non-Steiner input: the equivalence is
    only proven for Steiner loops.
    """
    if not is_steiner_loop(t):
        raise NotSteinerError("prop1 criterion applies to Steiner loops only")
    tab = t.table
    m = t.m
    examined = 0
    # Degenerate triples (identity, repeats, collinear) satisfy both sides
    # of the implication automatically in a Steiner loop.
    for x in range(1, m):
        row_x = tab[x]
        for y in range(1, m):
            if y == x:
                continue
            xy = row_x[y]
            row_y = tab[y]
            for z in range(1, m):
                if z == x or z == y or z == xy:
                    continue
                yz = row_y[z]
                if row_x[yz] != tab[xy][z]:
                    continue
                examined += 1
                if row_x[yz] != row_y[row_x[z]]:
                    return MTReport(False, "prop1", (x, y, z), examined)
    return MTReport(True, "prop1", None, examined)


def satisfies_mt_fano(t: LoopTable) -> MTReport:
    """Steiner-loop criterion via the triple system: Pasch forces Fano.

    Delegates to :func:`every_pasch_generates_fano` on the corresponding
    system; the counterexample triple is translated back to loop elements
    (system point i is loop element i + 1).
    """
    if not is_steiner_loop(t):
        raise NotSteinerError("fano criterion applies to Steiner loops only")
    if t.m < 2:
        raise NotSteinerError("fano criterion needs order >= 2")
    s = quasigroup_to_sts(loop_to_quasigroup(t))
    report = every_pasch_generates_fano(s)
    if report.holds:
        return MTReport(True, "fano", None, report.assignments_checked)
    ce = report.counterexample
    triple = (ce["x"] + 1, ce["y"] + 1, ce["z"] + 1)
    return MTReport(False, "fano", triple, report.assignments_checked)


def is_moufang(t: LoopTable) -> CheckReport:
    """Check the Moufang identity x(y(xz)) = ((xy)x)z by brute force."""
    return check_identity(MOUFANG, t)
