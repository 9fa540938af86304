import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import oracle_queue_apply
from spectral_mlq import core
from spectral_mlq.core import IllDefinedMerge, format_word, parse_word


def W(text):
    return parse_word(text)


class TestWords:
    def test_parse_and_format(self):
        assert parse_word("346613321") == (3, 4, 6, 6, 1, 3, 3, 2, 1)
        assert parse_word("10,2,1") == (10, 2, 1)
        assert format_word((10, 2, 1)) == "10,2,1"
        assert format_word((3, 1, 2)) == "312"

    def test_rejects_bad_letters(self):
        with pytest.raises(ValueError):
            parse_word("120")
        with pytest.raises(ValueError):
            parse_word("1a")

    def test_queue_parsing(self):
        assert core.parse_queue("9,1,4,8", 9) == (1, 4, 8, 9)
        assert core.parse_queue("", 3) == ()
        with pytest.raises(ValueError):
            core.make_queue([0, 2], 4)
        with pytest.raises(ValueError):
            core.make_queue([5], 4)


class TestTypes:
    def test_word_type(self):
        assert core.word_type(W("346613321")) == (2, 1, 3, 1, 0, 2)
        assert core.word_type(W("11111")) == (5,)
        assert core.word_type(W("2312")) == (1, 2, 1)

    def test_partial_sums(self):
        m = (2, 1, 3, 1, 0, 2)
        assert core.partial_sum(m, 2) == 3
        assert core.partial_sum(m, 3) == 6
        assert core.partial_sum(m, 0) == 0
        assert core.partial_sum(m, 6) == 9

    def test_packed(self):
        assert core.is_packed(W("2312"))
        assert not core.is_packed(W("346613321"))

    def test_counts(self):
        assert sum(1 for _ in core.compositions(4)) == 8
        assert len(core.words_of_type((1, 2, 1))) == 12
        assert sum(1 for _ in core.packed_words(3)) == 13

    def test_queue_type_change(self):
        # splitting class 3 of (2,1,3,1,0,2) at r = 4
        assert core.queue_type_change((2, 1, 3, 1, 0, 2), 4) == (2, 1, 1, 2, 1, 0, 2)


class TestQueueApply:
    def test_first_queue_example(self):
        assert core.queue_apply((1, 4, 8, 9), W("346613321")) == W("277344511")

    def test_merge_example_queue(self):
        assert core.queue_apply((1, 4, 5, 9, 10), W("3455313321")) == W("2663344511")

    def test_trivial_queues(self):
        assert core.queue_apply((), W("1111")) == W("2222")
        assert core.queue_apply((1, 2, 3, 4), W("3142")) == W("3142")

    def test_every_admissible_order(self):
        u = W("346613321")
        results = {core.queue_apply((1, 4, 8, 9), u, order) for order in core.admissible_orders(u)}
        assert results == {W("277344511")}

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 7).flatmap(lambda n: st.tuples(
        st.lists(st.integers(1, 4), min_size=n, max_size=n),
        st.sets(st.integers(1, n)))))
    def test_matches_oracle(self, data):
        u, q = data
        assert core.queue_apply(sorted(q), u) == oracle_queue_apply(sorted(q), u)


class TestMerges:
    def test_merge_classes(self):
        assert core.merge_classes(W("3566413321"), 3) == W("3455313321")
        assert core.merge_classes(W("2773345611"), 4) == W("2663344511")
        assert core.merge_classes(W("121"), 2) == W("121")

    def test_merge_at(self):
        assert core.merge_at(W("2773345611"), 6) == W("2663344511")
        u = W("2312")
        assert core.merge_at(u, 4) == u
        with pytest.raises(IllDefinedMerge):
            core.merge_at(u, 2)

    def test_merge_many_order(self):
        u = W("13245")
        assert core.merge_many(u, (1, 3)) == W("12123")
        assert core.merge_many(u, (3, 1)) == W("12123")


class TestSymmetries:
    def test_contragredient(self):
        assert core.contragredient_word(W("2312"), 3) == W("2312")
        assert core.contragredient_queue((1, 4, 8, 9), 9) == (3, 4, 5, 7, 8)
        assert core.contragredient_queue((), 5) == (1, 2, 3, 4, 5)

    def test_contragredient_example(self):
        q, u = (1, 4, 8, 9), W("346613321")
        lhs = core.contragredient_word(core.queue_apply(q, u), 7)
        rhs = core.queue_apply(core.contragredient_queue(q, 9), core.contragredient_word(u, 6))
        assert lhs == rhs

    def test_rotation(self):
        assert core.rotate_word(W("2312")) == W("3122")
        assert core.rotate_queue((1, 4, 8, 9), 9) == (3, 7, 8, 9)
        assert core.rotate_word(W("2312"), 4) == W("2312")

    def test_rotation_commutes_with_queues(self):
        for u in core.packed_words(4):
            for mask in range(16):
                q = tuple(j + 1 for j in range(4) if mask >> j & 1)
                assert core.rotate_word(core.queue_apply(q, u)) == \
                    core.queue_apply(core.rotate_queue(q, 4), core.rotate_word(u))
