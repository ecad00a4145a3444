import pytest

from steinerloops.algebra import LoopTable, QuasigroupTable, TripleSystem, sts_to_quasigroup
from steinerloops.constructions import affine_ag23, elementary_abelian_loop, fano, steiner_loop_10
from steinerloops.fileio import (
    detect_kind,
    dumps,
    dumps_sts,
    dumps_table,
    loads,
    loads_sts,
    loads_table,
)


class TestStsFormat:
    def test_canonical_write(self):
        text = dumps_sts(TripleSystem(3, ((0, 1, 2),)))
        assert text == "3\n0 1 2\n"

    def test_round_trip_corpus(self, corpus_systems):
        for s in corpus_systems.values():
            assert loads_sts(dumps_sts(s)) == s

    def test_comments_blanks_and_spacing_tolerated(self):
        text = "# a comment\n\n 7 \n0 1 2\n0  3 4\n0 5 6\n1 3 5\n1 4 6\n# mid\n2 3 6\n2 4 5\n"
        assert loads_sts(text) == fano()

    def test_unsorted_input_is_canonicalized(self):
        assert loads_sts("3\n2 1 0\n") == TripleSystem(3, ((0, 1, 2),))

    def test_degenerate(self):
        assert loads_sts("1\n").v == 1
        assert dumps_sts(TripleSystem(0, ())) == "0\n"

    def test_malformed(self):
        with pytest.raises(ValueError):
            loads_sts("")
        with pytest.raises(ValueError):
            loads_sts("3\n0 1\n")
        with pytest.raises(ValueError):
            loads_sts("x\n")


class TestTableFormat:
    def test_round_trip(self):
        loop = steiner_loop_10()
        assert loads_table(dumps_table(loop)).table == loop.table

    def test_loop_detection(self):
        text = dumps_table(elementary_abelian_loop(2))
        assert isinstance(loads_table(text), LoopTable)

    def test_quasigroup_detection(self):
        text = dumps_table(sts_to_quasigroup(affine_ag23()))
        assert isinstance(loads_table(text), QuasigroupTable)

    def test_kind_override(self):
        text = dumps_table(elementary_abelian_loop(1))
        forced = loads_table(text, kind="quasigroup")
        assert isinstance(forced, QuasigroupTable)

    def test_wrong_shape(self):
        with pytest.raises(ValueError):
            loads_table("2\n0 1\n")


class TestDetection:
    def test_sts_vs_table_of_order_three(self):
        # both formats start with a lone integer; line count and arity decide
        assert detect_kind("3\n0 1 2\n") == "sts"
        assert detect_kind("3\n0 2 1\n2 1 0\n1 0 2\n") == "quasigroup"
        assert detect_kind(dumps_table(elementary_abelian_loop(2))) == "loop"

    def test_loads_dispatch(self, corpus_systems):
        s = corpus_systems["bose2"]
        assert loads(dumps(s)) == s
        loop = steiner_loop_10()
        assert loads(dumps(loop)).table == loop.table

    def test_undetectable(self):
        with pytest.raises(ValueError):
            detect_kind("4\n0 1 2\n")
