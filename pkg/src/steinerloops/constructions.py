"""Constructions of concrete systems and exhaustive enumeration.

Generators for the classical small objects (Fano plane, the affine system of
order 9 and its loop of order 10, binary projective systems, Bose systems,
elementary abelian 2-groups), a seeded hill-climbing generator of random
systems, isomorphism testing, and exhaustive enumeration of triple systems up
to isomorphism for v <= 13.

Point indexing is fixed per construction so serialized outputs are stable:

* ``affine_ag23``: point (i, j) of Z3 x Z3 has index 3i + j;
* ``projective``: nonzero bit vectors as integers, point = value - 1;
* ``bose``: point (a, i) with a in Z_{2k+1}, i in {0,1,2} has index 3a + i.
"""

from __future__ import annotations

import random
from collections import Counter

from .algebra import LoopTable, TripleSystem, quasigroup_to_loop, sts_to_quasigroup
from .configurations import find_pasch_configs

Block = tuple[int, int, int]

_FANO_BLOCKS = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
                (1, 4, 6), (2, 3, 6), (2, 4, 5))


def fano() -> TripleSystem:
    """The 7-point, 7-block system (unique up to isomorphism)."""
    return TripleSystem(7, _FANO_BLOCKS)


def affine_ag23() -> TripleSystem:
    """The affine system of order 9: blocks are zero-sum triples over Z3 x Z3.

    Its quasigroup satisfies ``xy = -x - y`` componentwise mod 3, and it
    contains no Pasch configuration.
    """
    def index(i, j):
        return 3 * i + j

    blocks = set()
    for p in range(9):
        for q in range(p + 1, 9):
            pi, pj = divmod(p, 3)
            qi, qj = divmod(q, 3)
            r = index((-pi - qi) % 3, (-pj - qj) % 3)
            blocks.add(tuple(sorted((p, q, r))))
    return TripleSystem(9, tuple(sorted(blocks)))


def steiner_loop_10() -> LoopTable:
    """The Steiner loop of order 10 (loop of the unique order-9 system)."""
    return quasigroup_to_loop(sts_to_quasigroup(affine_ag23()))


def projective(n: int) -> TripleSystem:
    """Binary projective system of dimension n: blocks {x, y, x XOR y}.

    Points are the nonzero bit vectors of length n + 1, indexed by integer
    value minus 1; the order is 2**(n+1) - 1.  The corresponding loop is the
    elementary abelian group of order 2**(n+1).
    """
    if not 1 <= n <= 5:
        raise ValueError("projective dimension must be in 1..5")
    v = 2 ** (n + 1) - 1
    blocks = set()
    for x in range(1, v + 1):
        for y in range(x + 1, v + 1):
            z = x ^ y
            blocks.add(tuple(sorted((x - 1, y - 1, z - 1))))
    return TripleSystem(v, tuple(sorted(blocks)))


def bose(k: int) -> TripleSystem:
    """Bose system of order 6k + 3.

    Built from the commutative idempotent quasigroup on Z_{2k+1} with
    ``a o b = (a + b)(k + 1) mod (2k+1)``, crossed with three levels: blocks
    are the verticals {(a,0),(a,1),(a,2)} and the mixed triples
    {(a,i),(b,i),(a o b, i+1 mod 3)} for a < b.
    """
    if not 1 <= k <= 10:
        raise ValueError("bose parameter must be in 1..10")
    m = 2 * k + 1
    half = k + 1  # multiplicative inverse of 2 mod m

    def index(a, i):
        return 3 * a + i

    blocks = [tuple(sorted((index(a, 0), index(a, 1), index(a, 2)))) for a in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            c = ((a + b) * half) % m
            for i in range(3):
                blocks.append(tuple(sorted((index(a, i), index(b, i),
                                            index(c, (i + 1) % 3)))))
    return TripleSystem(3 * m, tuple(sorted(blocks)))


def elementary_abelian_loop(n: int) -> LoopTable:
    """The group (Z2)^n as a loop table: x * y = x XOR y on 2**n elements."""
    if not 1 <= n <= 6:
        raise ValueError("exponent must be in 1..6")
    size = 2 ** n
    return LoopTable(size, tuple(tuple(x ^ y for y in range(size)) for x in range(size)))


# ---------------------------------------------------------------------------
# randomized systems (test utility)


def random_sts(v: int, seed=None) -> TripleSystem:
    """Random system of order v by hill climbing; deterministic per seed.

    Repeatedly covers a live (uncovered) pair, stealing a block when the
    completing pair is already used.  Converges quickly for the small orders
    used in tests.
    """
    if v % 6 not in (1, 3) and v not in (0, 1):
        raise ValueError(f"no triple system of order {v}")
    if v <= 1:
        return TripleSystem(v, ())
    if v == 3:
        return TripleSystem(3, ((0, 1, 2),))
    rng = random.Random(seed)
    live = [set(range(v)) - {x} for x in range(v)]
    block_of: dict[tuple[int, int], Block] = {}
    blocks: set[Block] = set()
    target = v * (v - 1) // 6

    def add(block: Block):
        blocks.add(block)
        a, b, c = block
        for x, y in ((a, b), (a, c), (b, c)):
            block_of[x, y] = block
            live[x].discard(y)
            live[y].discard(x)

    def remove(block: Block):
        blocks.discard(block)
        a, b, c = block
        for x, y in ((a, b), (a, c), (b, c)):
            del block_of[x, y]
            live[x].add(y)
            live[y].add(x)

    steps = 0
    limit = 10_000 * v * v
    while len(blocks) < target:
        steps += 1
        if steps > limit:
            raise RuntimeError(f"hill climbing did not converge for v={v}")
        x = rng.choice([p for p in range(v) if live[p]])
        y, z = rng.sample(sorted(live[x]), 2)
        lo, hi = min(y, z), max(y, z)
        taken = block_of.get((lo, hi))
        if taken is not None:
            remove(taken)
        add(tuple(sorted((x, y, z))))
    return TripleSystem(v, tuple(sorted(blocks)))


# ---------------------------------------------------------------------------
# isomorphism


def _third_table(s: TripleSystem) -> list[list[int]]:
    third = [[-1] * s.v for _ in range(s.v)]
    for a, b, c in s.blocks:
        third[a][b] = third[b][a] = c
        third[a][c] = third[c][a] = b
        third[b][c] = third[c][b] = a
    return third


def _pair_cycle_lengths(third: list[list[int]], v: int, x: int, y: int) -> tuple[int, ...]:
    # Cycle structure of the permutation p -> third(y, third(x, p)) on the
    # points outside the block {x, y, xy}; an isomorphism invariant of pairs.
    z = third[x][y]
    seen = [False] * v
    seen[x] = seen[y] = seen[z] = True
    lengths = []
    row_x, row_y = third[x], third[y]
    for p0 in range(v):
        if seen[p0]:
            continue
        length = 0
        p = p0
        while not seen[p]:
            seen[p] = True
            length += 1
            p = row_y[row_x[p]]
        lengths.append(length)
    return tuple(sorted(lengths))


def _point_profiles(s: TripleSystem):
    """Per-point invariant: sorted cycle structures of all pairs through it."""
    v = s.v
    third = _third_table(s)
    per_point: list[list[tuple[int, ...]]] = [[] for _ in range(v)]
    for x in range(v):
        for y in range(x + 1, v):
            cycles = _pair_cycle_lengths(third, v, x, y)
            per_point[x].append(cycles)
            per_point[y].append(cycles)
    return [tuple(sorted(p)) for p in per_point]


def cycle_signature(s: TripleSystem):
    """Whole-system isomorphism invariant derived from pair cycle structures."""
    return tuple(sorted(Counter(_point_profiles(s)).items()))


def _iso_search(s1: TripleSystem, s2: TripleSystem, keys1, keys2, find_all=False):
    """Backtracking point-map search with forced closure propagation.

    Once two points are mapped, the third point of their block is forced;
    propagation drives most of the mapping, so the branching is shallow.
    Yields complete bijections (as tuples) in deterministic order.
    """
    v = s1.v
    if v != s2.v or len(s1.blocks) != len(s2.blocks):
        return
    if sorted(keys1) != sorted(keys2):
        return
    if v == 0:
        yield ()
        return
    third1, third2 = _third_table(s1), _third_table(s2)
    mapping = [-1] * v
    inverse = [-1] * v

    def assign(p: int, q: int, trail: list[int]) -> bool:
        queue = [(p, q)]
        while queue:
            a, b = queue.pop()
            if mapping[a] == b:
                continue
            if mapping[a] != -1 or inverse[b] != -1 or keys1[a] != keys2[b]:
                return False
            mapping[a] = b
            inverse[b] = a
            trail.append(a)
            for r in range(v):
                if r != a and mapping[r] != -1:
                    t1 = third1[a][r]
                    if t1 == -1:
                        continue
                    t2 = third2[b][mapping[r]]
                    if t2 == -1:
                        return False
                    queue.append((t1, t2))
        return True

    def undo(trail: list[int]):
        for a in trail:
            inverse[mapping[a]] = -1
            mapping[a] = -1

    def solve():
        try:
            p = mapping.index(-1)
        except ValueError:
            yield tuple(mapping)
            return
        for q in range(v):
            if inverse[q] == -1 and keys1[p] == keys2[q]:
                trail: list[int] = []
                if assign(p, q, trail):
                    yield from solve()
                undo(trail)

    for result in solve():
        yield result
        if not find_all:
            return


def are_isomorphic(s1: TripleSystem, s2: TripleSystem) -> tuple[int, ...] | None:
    """A point bijection mapping blocks of s1 onto blocks of s2, or None.

    Prunes with per-point Pasch-membership counts and pair cycle structures
    before searching; the returned mapping sends point i of s1 to
    ``mapping[i]`` in s2.
    """
    if s1.v != s2.v or len(s1.blocks) != len(s2.blocks):
        return None
    pasch1, pasch2 = _pasch_point_counts(s1), _pasch_point_counts(s2)
    if sorted(pasch1) != sorted(pasch2):
        return None
    keys1 = [(pasch1[i], prof) for i, prof in enumerate(_point_profiles(s1))]
    keys2 = [(pasch2[i], prof) for i, prof in enumerate(_point_profiles(s2))]
    for mapping in _iso_search(s1, s2, keys1, keys2):
        return mapping
    return None


def automorphism_count(s: TripleSystem) -> int:
    """Order of the automorphism group (exhaustive search)."""
    keys = _point_profiles(s)
    return sum(1 for _ in _iso_search(s, s, keys, keys, find_all=True))


def _pasch_point_counts(s: TripleSystem) -> list[int]:
    counts = [0] * max(s.v, 1)
    for config in find_pasch_configs(s):
        for p in config.points():
            counts[p] += 1
    return counts[: s.v] if s.v else []


# ---------------------------------------------------------------------------
# exhaustive enumeration


def enumerate_sts(v: int, allow_slow: bool = False, progress=None) -> list[TripleSystem]:
    """All systems of order v up to isomorphism, as canonical representatives.

    Orders 1, 3, 7 and 9 run instantly; 13 takes minutes and must be enabled
    with ``allow_slow`` (pass a ``progress`` callable to watch it work: it is
    called periodically with a stats dict).  Representatives carry the
    lexicographically least block list over all relabelings.

    Search strategy: up to relabeling, the blocks through point 0 are exactly
    {0,1,2}, {0,3,4}, ..., {0,v-2,v-1}, and the block covering the pair
    {1,3} may be taken to be {1,3,5}.  Backtracking always completes the
    smallest uncovered pair, so every completion arrives with its block list
    already sorted.  Every isomorphism class contains labelings with this
    prefix, including its lexicographically least labeling, so taking the
    minimum block list over each class's completions yields the canonical
    representative.  Classes are separated by an isomorphism test (invariant
    bucketing first, then explicit search), never by invariants alone.
    """
    if v % 6 not in (1, 3) or v < 0:
        raise ValueError(f"inadmissible order {v}: no triple system exists")
    if v not in (1, 3, 7, 9, 13):
        raise ValueError(f"enumeration of order {v} is not supported (max 13)")
    if v == 13 and not allow_slow:
        raise ValueError("order 13 enumeration is slow; enable it explicitly")
    if v == 1:
        return [TripleSystem(1, ())]
    if v == 3:
        return [TripleSystem(3, ((0, 1, 2),))]

    classes: dict = {}  # signature -> list of [profiles, system, min_blocks]
    stats = {"completions": 0, "classes": 0}

    def record(blocks: tuple[Block, ...]):
        system = TripleSystem(v, blocks)
        profiles = _point_profiles(system)
        signature = tuple(sorted(Counter(profiles).items()))
        bucket = classes.setdefault(signature, [])
        for entry in bucket:
            if next(_iso_search(system, entry[1], profiles, entry[0]), None) is not None:
                if blocks < entry[2]:
                    entry[2] = blocks
                break
        else:
            bucket.append([profiles, system, blocks])
        stats["completions"] += 1
        stats["classes"] = sum(len(b) for b in classes.values())
        if progress is not None and stats["completions"] % 500 == 0:
            progress(dict(stats))

    _complete_systems(v, record)
    if progress is not None:
        progress(dict(stats))
    reps = [TripleSystem(v, tuple(entry[2]))
            for bucket in classes.values() for entry in bucket]
    return sorted(reps, key=lambda s: s.blocks)


def _complete_systems(v: int, record) -> None:
    """Backtrack over all completions of the canonical prefix (v >= 7)."""
    spokes = [(0, 2 * i + 1, 2 * i + 2) for i in range((v - 1) // 2)]
    prefix = spokes + [(1, 3, 5)]
    covered = [1 << x for x in range(v)]  # covered[a] bit b: pair {a,b} done
    for a, b, c in prefix:
        covered[a] |= (1 << b) | (1 << c)
        covered[b] |= (1 << a) | (1 << c)
        covered[c] |= (1 << a) | (1 << b)
    full = (1 << v) - 1
    found: list[Block] = []

    def descend(a_start: int):
        a = a_start
        while a < v and covered[a] == full:
            a += 1
        if a >= v:
            record(tuple(prefix + found))
            return
        rest = full & ~covered[a]
        b = (rest & -rest).bit_length() - 1
        candidates = full & ~covered[a] & ~covered[b] & ~((1 << (b + 1)) - 1)
        while candidates:
            low = candidates & -candidates
            c = low.bit_length() - 1
            candidates ^= low
            old = (covered[a], covered[b], covered[c])
            covered[a] |= (1 << b) | (1 << c)
            covered[b] |= (1 << a) | (1 << c)
            covered[c] |= (1 << a) | (1 << b)
            found.append((a, b, c))
            descend(a)
            found.pop()
            covered[a], covered[b], covered[c] = old

    descend(1)


# ---------------------------------------------------------------------------
# packaged order-13 representatives


def sts13_pair() -> tuple[TripleSystem, TripleSystem]:
    """The two systems of order 13, loaded from packaged canonical files.

    These are the ``enumerate_sts(13)`` outputs, frozen so that the slow
    enumeration is not needed at test or run time.
    """
    from importlib.resources import files

    from .fileio import loads_sts

    data = files("steinerloops").joinpath("data")
    first = loads_sts(data.joinpath("sts13-1.sts").read_text())
    second = loads_sts(data.joinpath("sts13-2.sts").read_text())
    return first, second
