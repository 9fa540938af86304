import random

import pytest

from oracles import oracle_queue_apply
from spectral_mlq import core, rmx
from spectral_mlq.core import parse_word
from spectral_mlq.mlq import MLQ

C20 = rmx.Configuration(20, (1, 2, 5, 6, 8, 11, 13, 14, 17, 18, 19), (2, 12, 15, 16, 18, 19, 20))


class TestParentheses:
    def test_twenty_site_example(self):
        rec = rmx.sp_record(C20)
        assert rec.unbalanced_sites == (1, 5, 6, 8)
        assert all(rec.symbols[k][0] == "(" for k in rec.unmatched)

    def test_equal_sizes_balanced(self):
        assert rmx.sp_record(rmx.Configuration(5, (1, 3), (2, 4))).unmatched == ()

    def test_wraparound_pair(self):
        rec = rmx.sp_record(rmx.Configuration(2, (2,), (1,)))
        assert rec.unmatched == () and len(rec.pairs) == 1

    def test_two_site_example(self):
        rec = rmx.sp_record(rmx.Configuration(2, (1,), (2,)))
        assert rec.unmatched == () and len(rec.pairs) == 1

    def test_shared_sites_self_match(self):
        rec = rmx.sp_record(rmx.Configuration(3, (2,), (2,)))
        assert rec.pairs == ((0, 1),)

    def test_trace_format(self):
        trace = rmx.sp_record(rmx.Configuration(3, (1, 2), (3,))).trace()
        assert trace.count("*") == 1


class TestDual:
    def test_twenty_site_dual(self):
        d = rmx.dual_configuration(C20)
        assert d.q1 == tuple(sorted(set(C20.q1) - {1, 5, 6, 8}))
        assert d.q2 == tuple(sorted(set(C20.q2) | {1, 5, 6, 8}))

    def test_nine_site_example(self):
        assert rmx.dual_pair(9, (1, 4, 5, 6), (2, 3, 4, 6, 7, 8)) == ((1, 3, 4, 5, 6, 8), (2, 4, 6, 7))

    def test_equal_sizes_fixed(self):
        c = rmx.Configuration(6, (1, 4, 5), (2, 3, 6))
        assert rmx.dual_configuration(c) == c

    def test_random_large_configurations(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(7, 12)
            a = tuple(sorted(rng.sample(range(1, n + 1), rng.randint(0, n))))
            b = tuple(sorted(rng.sample(range(1, n + 1), rng.randint(0, n))))
            c = rmx.Configuration(n, a, b)
            d = rmx.dual_configuration(c)
            assert rmx.dual_configuration(d) == c
            assert d.weight() == c.weight()
            assert len(d.q1) == len(b) and len(d.q2) == len(a)
            for _ in range(3):
                w = tuple(rng.randint(1, 3) for _ in range(n))
                assert oracle_queue_apply(b, oracle_queue_apply(a, w)) == \
                    oracle_queue_apply(d.q2, oracle_queue_apply(d.q1, w))


class TestAction:
    def test_example(self):
        q = MLQ(4, ((3,), (1, 3, 4)))
        image = rmx.s_action(1, q)
        assert image.queues == ((1, 3, 4), (3,))
        assert image.twist == (2, 1)
        assert rmx.s_action(1, image) == q

    def test_equal_sizes_identity(self):
        q = MLQ(4, ((1, 2), (2, 4), (1, 2, 3)))
        assert rmx.s_action(1, q).queues == q.queues

    def test_generator_range(self):
        with pytest.raises(ValueError):
            rmx.s_action(2, MLQ(3, ((1,), (2,))))

    def test_apply_perm(self):
        q = MLQ(5, ((1, 3), (2,), (2, 5)))
        assert rmx.apply_perm((), q) == q
        assert rmx.apply_perm((2, 2), q) == q
        assert rmx.apply_perm((1, 2, 1), q) == rmx.apply_perm((2, 1, 2), q)
        assert rmx.apply_perm((1, 2), q) == rmx.s_action(1, rmx.s_action(2, q))

    def test_braid_random_depth_four(self):
        rng = random.Random(11)
        for _ in range(300):
            n = rng.randint(1, 7)
            q = MLQ(n, tuple(tuple(sorted(rng.sample(range(1, n + 1), rng.randint(0, n)))) for _ in range(4)))
            assert rmx.apply_perm((2, 3, 2), q) == rmx.apply_perm((3, 2, 3), q)
            assert rmx.apply_perm((1, 3), q) == rmx.apply_perm((3, 1), q)

    def test_cyclic_shift(self):
        q = MLQ(9, ((1, 4, 8, 9),))
        assert rmx.cyclic_shift(q).queues == ((3, 7, 8, 9),)
        assert rmx.cyclic_shift(q, 9) == q
        assert rmx.cyclic_shift(parse_word("2312")) == parse_word("3122")


class TestWordEncoding:
    def test_displayed_encoding(self):
        q = MLQ(5, ((1, 3), (2,), (2, 5)))
        assert rmx.format_encoding(rmx.word_encoding(q)) == "1∘∘∘231∘∘∘∘∘∘∘3"

    def test_empty(self):
        assert rmx.word_encoding(MLQ(3, ((), ()))) == (rmx.EMPTY,) * 6

    def test_balanced_word_unchanged(self):
        word = tuple("1∘21∘2")
        assert rmx.sigma_i_word(1, word) == word

    def test_swap_of_unmatched_block(self):
        # unmatched ")(((" becomes ")))(" : a = 1 closer, b = 3 openers
        assert rmx.sigma_i_word(1, tuple("2111")) == tuple("2221")

    def test_decoding_round_trip(self):
        q = MLQ(5, ((1, 3), (2,), (2, 5)))
        assert rmx.word_decoding(rmx.word_encoding(q), 5, 3).queues == q.queues

    def test_oracle(self):
        rng = random.Random(3)
        for _ in range(300):
            n = rng.randint(1, 8)
            q = MLQ(n, tuple(tuple(sorted(rng.sample(range(1, n + 1), rng.randint(0, n)))) for _ in range(3)))
            for i in (1, 2):
                assert rmx.oracle_agrees(i, q)


class TestLowerSets:
    def test_examples(self):
        w = parse_word("2312")
        assert rmx.lower_set(w, 1) == (3,)
        assert rmx.lower_set(w, 0) == ()
        assert rmx.lower_set(w, 3) == (1, 3, 4)
        with pytest.raises(rmx.IllDefinedLowerSet):
            rmx.lower_set(w, 2)

    def test_proposition_on_example(self):
        u = parse_word("346613321")
        q = (1, 4, 8, 9)
        v = core.queue_apply(q, u)
        for k in (0,) + core.partial_sums(core.word_type(u)):
            assert rmx.dual_pair(9, rmx.lower_set(u, k), q)[1] == rmx.lower_set(v, k)
