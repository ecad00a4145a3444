import pytest

from steinerloops.algebra import quasigroup_to_loop, sts_to_quasigroup
from steinerloops.constructions import (
    affine_ag23,
    bose,
    elementary_abelian_loop,
    fano,
    projective,
    steiner_loop_10,
    sts13_pair,
)


def loop_of(system):
    return quasigroup_to_loop(sts_to_quasigroup(system))


@pytest.fixture(scope="session")
def corpus_loops():
    """The Steiner-loop corpus: orders 2, 4, 8, 10, 14, 14, 16, 16."""
    s13a, s13b = sts13_pair()
    return {
        "ea1": elementary_abelian_loop(1),
        "klein": elementary_abelian_loop(2),
        "ea3": elementary_abelian_loop(3),
        "loop10": steiner_loop_10(),
        "sts13-1": loop_of(s13a),
        "sts13-2": loop_of(s13b),
        "pg3": loop_of(projective(3)),
        "bose2": loop_of(bose(2)),
    }


@pytest.fixture(scope="session")
def corpus_systems():
    from steinerloops.algebra import TripleSystem

    s13a, s13b = sts13_pair()
    return {
        "sts3": TripleSystem(3, ((0, 1, 2),)),
        "fano": fano(),
        "ag9": affine_ag23(),
        "sts13-1": s13a,
        "sts13-2": s13b,
        "pg3": projective(3),
        "bose2": bose(2),
    }


@pytest.fixture(scope="session")
def group_loops(corpus_loops):
    """The corpus members whose tables are groups (all elementary abelian)."""
    return {name: corpus_loops[name] for name in ("ea1", "klein", "ea3", "pg3")}
