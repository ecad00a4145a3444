"""Search for identities separating one Steiner loop from others.

The equational theory of the variety generated by a single finite Steiner
loop is not known in general; this module is a search tool, not a decision
procedure.  It enumerates small loop words, finds pairs that agree everywhere
on a target loop, filters out consequences of the Steiner axioms themselves
(via a normal form under ``aa -> 1``, ``a(ab) -> b``, ``1a -> a``), and keeps
an identity only when some witness loop violates it.  Failure in a witness
Steiner loop certifies semantically that the identity does not follow from
the Steiner axioms alone; identities holding in every supplied witness are
reported separately as unseparated candidates, not as discoveries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import sweeps
from .algebra import LoopTable, is_steiner_loop
from .errors import NotSteinerError
from .terms import (
    ONE,
    Identity,
    One,
    Product,
    Term,
    Variable,
    compile_rpn,
    leaf_count,
    term_key,
)

MAX_LEAVES = 8
DEFAULT_LEAVES = 6


def enumerate_terms(variables: Sequence[str], max_leaves: int) -> Iterator[Term]:
    """All product trees over the variables, deduplicated modulo commutativity.

    Variables may repeat; the constant 1 is excluded (it is expressible in a
    Steiner loop as xx anyway).  Commutative duplicates are avoided by always
    putting the smaller child (by :func:`term_key`) on the left, recursively.
    Terms stream in deterministic order: by leaf count, then by key.
    """
    if max_leaves > MAX_LEAVES:
        raise ValueError(f"max_leaves capped at {MAX_LEAVES}")
    by_size: list[list[Term]] = [[]]
    by_size.append(sorted((Variable(v) for v in dict.fromkeys(variables)), key=term_key))
    yield from by_size[1]
    for size in range(2, max_leaves + 1):
        level: list[Term] = []
        for left_size in range(1, size // 2 + 1):
            right_size = size - left_size
            if left_size < right_size:
                level.extend(Product(a, b)
                             for a in by_size[left_size] for b in by_size[right_size])
            else:
                smaller = by_size[left_size]
                level.extend(Product(smaller[i], smaller[j])
                             for i in range(len(smaller)) for j in range(i, len(smaller)))
        level.sort(key=term_key)
        by_size.append(level)
        yield from level


def steiner_normalize(t: Term) -> Term:
    """Normal form modulo the Steiner loop axioms.

    Exhaustively applies ``aa -> 1``, ``a(ab) -> b`` (matching modulo
    commutativity) and ``1a -> a``, then orders commutative children
    canonically.  Idempotent, and value-preserving in every Steiner loop.
    """
    if not isinstance(t, Product):
        return t
    left = steiner_normalize(t.left)
    right = steiner_normalize(t.right)
    if left == right:
        return ONE
    if isinstance(left, One):
        return right
    if isinstance(right, One):
        return left
    if isinstance(right, Product):
        if left == right.left:
            return right.right
        if left == right.right:
            return right.left
    if isinstance(left, Product):
        if right == left.left:
            return left.right
        if right == left.right:
            return left.left
    if term_key(left) <= term_key(right):
        return Product(left, right)
    return Product(right, left)


@dataclass(frozen=True)
class SeparatingIdentity:
    """An identity holding in the target and failing in a named witness."""

    identity: Identity
    witness: int  # index into the witness list


@dataclass(frozen=True)
class ExplorationResult:
    """Output of :func:`find_identities`.

    ``separating`` are the certified identities; ``unseparated`` hold in the
    target and are not Steiner-trivial, but no supplied witness violates
    them, so nothing is claimed about them.
    """

    separating: tuple[SeparatingIdentity, ...]
    unseparated: tuple[Identity, ...]


def find_identities(target: LoopTable, witnesses: Sequence[LoopTable],
                    max_leaves: int = DEFAULT_LEAVES,
                    variables: Sequence[str] = ("x", "y", "z")) -> ExplorationResult:
    """Identities of the target loop that some witness loop violates.

    Both sides are drawn from :func:`enumerate_terms`; a pair qualifies when
    (a) the two sides agree under every assignment in the target, (b) the
    sides have distinct Steiner normal forms, and (c) at least one witness
    fails the identity (the first such witness is recorded).  Results are
    sorted by total leaf count, then lexicographically.
    """
    if not is_steiner_loop(target):
        raise NotSteinerError("target must be a Steiner loop")
    for w in witnesses:
        if not is_steiner_loop(w):
            raise NotSteinerError("witnesses must be Steiner loops")
    var_order = {name: i for i, name in enumerate(dict.fromkeys(variables))}
    k = len(var_order)
    n = target.order
    flat = target.flat()

    # Terms with equal value vectors over the full assignment sweep of the
    # target are exactly the sides of identities the target satisfies.
    buckets: dict[bytes, list[tuple[Term, list[int]]]] = {}
    for term in enumerate_terms(variables, max_leaves):
        code = compile_rpn(term, var_order)
        buckets.setdefault(sweeps.fingerprint(code, n, flat, k), []).append((term, code))

    witness_flats = [(w.order, w.flat()) for w in witnesses]
    separating: list[tuple[tuple[int, str], SeparatingIdentity]] = []
    unseparated: list[tuple[tuple[int, str], Identity]] = []
    for group in buckets.values():
        for i in range(len(group)):
            lhs, lhs_code = group[i]
            for j in range(i + 1, len(group)):
                rhs, rhs_code = group[j]
                if steiner_normalize(lhs) == steiner_normalize(rhs):
                    continue
                ident = Identity(lhs, rhs)
                rank = (leaf_count(lhs) + leaf_count(rhs), str(ident))
                for w_index, (wn, wflat) in enumerate(witness_flats):
                    if sweeps.first_divergence(lhs_code, rhs_code, wn, wflat, k) >= 0:
                        separating.append((rank, SeparatingIdentity(ident, w_index)))
                        break
                else:
                    unseparated.append((rank, ident))
    separating.sort(key=lambda item: item[0])
    unseparated.sort(key=lambda item: item[0])
    return ExplorationResult(tuple(found for _, found in separating),
                             tuple(ident for _, ident in unseparated))


def default_witnesses() -> list[tuple[str, LoopTable]]:
    """The stock witness corpus: both order-13 system loops, the binary
    projective loop of order 16, and the Bose loop of order 16."""
    from .algebra import quasigroup_to_loop, sts_to_quasigroup
    from .constructions import bose, projective, sts13_pair

    s13a, s13b = sts13_pair()

    def loop_of(s):
        return quasigroup_to_loop(sts_to_quasigroup(s))

    return [
        ("sts13-1", loop_of(s13a)),
        ("sts13-2", loop_of(s13b)),
        ("pg3", loop_of(projective(3))),
        ("bose2", loop_of(bose(2))),
    ]
