from itertools import permutations, product

import pytest

from steinerloops.algebra import LoopTable, sts_to_quasigroup
from steinerloops.configurations import associating_triples, triple_closes_fano
from steinerloops.constructions import (
    elementary_abelian_loop,
    projective,
    steiner_loop_10,
)
from steinerloops.errors import NotSteinerError
from steinerloops.moufang import (
    is_group_on,
    is_moufang,
    satisfies_mt_definition,
    satisfies_mt_fano,
    satisfies_mt_prop1,
    subloop_generated,
)
from steinerloops.terms import ID4, check_identity

CYCLIC4 = LoopTable(4, tuple(tuple((x + y) % 4 for y in range(4)) for x in range(4)))

# Expected corpus verdicts, shared by all three deciders.
MT_EXPECTED = {
    "ea1": True, "klein": True, "ea3": True, "loop10": True,
    "sts13-1": False, "sts13-2": False, "pg3": True, "bose2": True,
}


def find_nonassociative_order5_loop():
    # smallest nonassociative loops have order 5; locate one by completing
    # a normalized Latin square with identity row/column
    for row1 in permutations([0, 2, 3, 4]):
        for row2 in permutations([0, 1, 3, 4]):
            rows = [list(range(5)), [1, *row1], [2, *row2]]
            if any(len({rows[r][c] for r in range(3)}) < 3 for c in range(5)):
                continue
            for row3 in permutations([0, 1, 2, 4]):
                rows3 = rows + [[3, *row3]]
                if any(len({row[c] for row in rows3}) < 4 for c in range(5)):
                    continue
                last = [[x for x in range(5) if x not in {row[c] for row in rows3}][0]
                        for c in range(5)]
                table = tuple(tuple(r) for r in rows3 + [last])
                loop = LoopTable(5, table)
                if any(table[x][table[y][z]] != table[table[x][y]][z]
                       for x, y, z in product(range(5), repeat=3)):
                    return loop
    raise AssertionError("no nonassociative order-5 loop found")


class TestSubloopGenerated:
    def test_single_generator(self):
        loop = steiner_loop_10()
        assert subloop_generated(loop, {3}) == frozenset({0, 3})

    def test_two_generators_klein(self):
        # any two distinct non-identity elements of a Steiner loop span a
        # Klein group of order 4
        loop = steiner_loop_10()
        sub = subloop_generated(loop, {1, 2})
        assert sub == frozenset({0, 1, 2, loop.table[1][2]})
        assert is_group_on(loop, sub)

    def test_noncollinear_triple_in_loop10_spans_everything(self):
        # derived by running the closure: the order-9 system has no proper
        # subsystem on more than 3 points, so the subloop is the whole loop
        loop = steiner_loop_10()
        q = sts_to_quasigroup_of(loop)
        x, y, z = 1, 2, 4
        assert q.table[x - 1][y - 1] != z - 1
        assert len(subloop_generated(loop, {x, y, z})) == 10

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            subloop_generated(steiner_loop_10(), {10})


def sts_to_quasigroup_of(loop):
    from steinerloops.algebra import loop_to_quasigroup

    return loop_to_quasigroup(loop)


class TestIsGroupOn:
    def test_order_two_subgroup(self):
        loop = steiner_loop_10()
        assert is_group_on(loop, {0, 5})

    def test_full_loop10_is_not_a_group(self):
        loop = steiner_loop_10()
        assert not is_group_on(loop, range(10))

    def test_full_pg3_loop_is_a_group(self, corpus_loops):
        assert is_group_on(corpus_loops["pg3"], range(16))

    def test_rejects_non_closed_subset(self):
        with pytest.raises(ValueError):
            is_group_on(steiner_loop_10(), {0, 1, 2})
        with pytest.raises(ValueError):
            is_group_on(steiner_loop_10(), {1, 2})


class TestDeciders:
    def test_corpus_verdicts_and_agreement(self, corpus_loops):
        for name, loop in corpus_loops.items():
            d = satisfies_mt_definition(loop)
            p = satisfies_mt_prop1(loop)
            f = satisfies_mt_fano(loop)
            assert d.satisfies == p.satisfies == f.satisfies == MT_EXPECTED[name], name
            assert (d.counterexample is None) == d.satisfies
            assert d.method == "definition" and p.method == "prop1" and f.method == "fano"

    def test_sts13_counterexamples_are_associating_non_group_triples(self, corpus_loops):
        loop = corpus_loops["sts13-1"]
        report = satisfies_mt_definition(loop)
        x, y, z = report.counterexample
        t = loop.table
        assert t[x][t[y][z]] == t[t[x][y]][z]
        assert not is_group_on(loop, subloop_generated(loop, {x, y, z}))

    def test_prop1_counterexample_violates_good_equation(self, corpus_loops):
        loop = corpus_loops["sts13-2"]
        report = satisfies_mt_prop1(loop)
        x, y, z = report.counterexample
        t = loop.table
        assert t[x][t[y][z]] == t[t[x][y]][z]
        assert t[x][t[y][z]] != t[y][t[x][z]]

    def test_fano_counterexample_maps_back_to_system_points(self, corpus_loops):
        loop = corpus_loops["sts13-1"]
        report = satisfies_mt_fano(loop)
        x, y, z = report.counterexample
        q = sts_to_quasigroup_of(loop)
        assert (x - 1, y - 1, z - 1) in set(associating_triples(q))
        assert not triple_closes_fano(q, x - 1, y - 1, z - 1)

    def test_general_loop_accepted_by_definition_only(self):
        report = satisfies_mt_definition(CYCLIC4)
        assert report.satisfies  # groups associate everywhere
        with pytest.raises(NotSteinerError):
            satisfies_mt_prop1(CYCLIC4)
        with pytest.raises(NotSteinerError):
            satisfies_mt_fano(CYCLIC4)

    def test_nonassociative_general_loop_fails_definition(self):
        # a nonassociative 2-generated loop of order 5: the premise holds
        # for triples containing 1, but <x, y> is the whole loop
        loop = find_nonassociative_order5_loop()
        report = satisfies_mt_definition(loop)
        assert not report.satisfies

    def test_trivial_and_small_loops(self):
        assert satisfies_mt_definition(LoopTable(1, ((0,),))).satisfies
        assert satisfies_mt_definition(elementary_abelian_loop(1)).satisfies


class TestCorpusProperties:
    def test_id4_forces_mt_property(self, corpus_loops):
        for name, loop in corpus_loops.items():
            if check_identity(ID4, loop).holds:
                assert satisfies_mt_definition(loop).satisfies, name

    def test_moufang_implies_mt(self, corpus_loops):
        for name, loop in corpus_loops.items():
            if is_moufang(loop).holds:
                assert satisfies_mt_definition(loop).satisfies, name

    def test_fano_closing_triple_spans_elementary_abelian_eight(self, corpus_loops):
        loop = corpus_loops["pg3"]
        q = sts_to_quasigroup_of(loop)
        x, y, z = associating_triples(q)[0]
        assert triple_closes_fano(q, x, y, z)
        sub = subloop_generated(loop, {x + 1, y + 1, z + 1})
        assert len(sub) == 8
        assert is_group_on(loop, sub)
        assert all(loop.table[e][e] == 0 for e in sub)


class TestIsMoufang:
    def test_loop10_not_moufang(self):
        assert not is_moufang(steiner_loop_10()).holds

    def test_groups_are_moufang(self, group_loops):
        for loop in group_loops.values():
            assert is_moufang(loop).holds
        assert is_moufang(CYCLIC4).holds

    def test_order_two(self):
        assert is_moufang(elementary_abelian_loop(1)).holds
