import json

import pytest

from oracles import oracle_weights, symbols, sympy_equal
from spectral_mlq import core, mlq
from spectral_mlq.core import parse_word
from spectral_mlq.mlq import MLQ
from spectral_mlq.poly import Poly

GENERIC = MLQ(15, ((2, 4, 9, 12), (1, 5, 6, 8, 12, 15), (1, 2, 4, 5, 8, 9, 13, 14)))
INTERLACING = MLQ(15, ((9, 12, 13), (7, 8, 11, 12, 14), (1, 3, 5, 6, 8, 10, 11, 14, 15)))
APPENDIX = MLQ(4, ((2,), (1, 2, 3), (2, 3, 4)))


def test_application_and_weight():
    q = MLQ(4, ((3,), (1, 3, 4)))
    assert mlq.mlq_apply(q) == parse_word("2312")
    assert mlq.mlq_weight(q) == Poly.monomial(4, (1, 0, 2, 1))
    assert mlq.mlq_weight(MLQ(4, ((2,), (1, 3, 4)))) == Poly.monomial(4, (1, 1, 1, 1))
    assert mlq.mlq_apply(MLQ(3, ())) == (1, 1, 1)
    assert mlq.mlq_weight(MLQ(3, ())) == Poly.one(3)


def test_parse_and_json():
    q = mlq.parse_mlq("3;1,3,4", 4)
    assert q == MLQ(4, ((3,), (1, 3, 4)))
    assert mlq.format_mlq(q) == "3;1,3,4"
    assert MLQ.from_json_obj(json.loads(json.dumps(q.to_json_obj()))) == q


def test_twist_validation():
    with pytest.raises(ValueError):
        MLQ(4, ((1,), (2,)), (1, 1))


def test_counts():
    assert mlq.count_mlqs((1, 2, 1)) == 16
    assert mlq.count_mlqs((4,)) == 1
    assert mlq.count_mlqs((2, 2)) == 6
    assert sum(1 for _ in mlq.enumerate_mlqs((1, 2, 1), (2, 1))) == 16


def test_spectral_weight_example():
    x1, x2, x3, x4 = symbols(4)
    expected = x1 * x3**2 * x4 + x1 * x2 * x3 * x4
    assert sympy_equal(mlq.spectral_weight(parse_word("2312")), expected)
    assert sympy_equal(mlq.spectral_weight(parse_word("2312"), (2, 1)), expected)
    assert mlq.spectral_weight((1, 1, 1)) == Poly.one(3)


def test_spectral_weight_13234():
    x1, x2, x3, x4, x5 = symbols(5)
    expected = x1 * x2 * x3**2 * x4 * (x1**2 + x1 * x4 + x1 * x5 + x4 * x5 + x5**2)
    assert sympy_equal(mlq.spectral_weight(parse_word("13234")), expected)


def test_twisted_mlqs_of_2312_are_images_of_ordinary_ones():
    from spectral_mlq import rmx

    u = parse_word("2312")
    ordinary = [q for q in mlq.enumerate_mlqs((1, 2, 1)) if mlq.mlq_apply(q) == u]
    twisted = [q for q in mlq.enumerate_mlqs((1, 2, 1), (2, 1)) if mlq.mlq_apply(q) == u]
    assert sorted(rmx.s_action(1, q).queues for q in ordinary) == sorted(q.queues for q in twisted)


@pytest.mark.parametrize("m", [(1, 2, 1), (2, 1, 1), (1, 1, 1, 1), (2, 2, 0), (1, 1, 2, 0)])
def test_transfer_matches_oracle(m):
    assert mlq.spectral_weights(m) == oracle_weights(m)


def test_bruteforce_matches_transfer():
    for u in core.packed_words(4):
        assert mlq.spectral_weight_bruteforce(u) == mlq.spectral_weight(u)


def test_witness():
    for u in core.packed_words(4):
        q = mlq.witness_mlq(u)
        assert mlq.mlq_apply(q) == u
        assert mlq.mlq_weight(q) == Poly.monomial(4, [max(u) - a for a in u])


class TestBlocks:
    def test_generic_example(self):
        blocks = mlq.block_decomposition(GENERIC)
        assert blocks[0] == ((2, 4, 9, 12),)
        assert blocks[1] == ((6, 8, 12, 15), (1, 5))
        assert blocks[2] == ((8, 9, 13, 14), (4, 5), (1, 2))
        assert not mlq.is_interlacing(GENERIC)

    def test_interlacing_example(self):
        blocks = mlq.block_decomposition(INTERLACING)
        assert blocks[2] == ((11, 14, 15), (8, 10), (1, 3, 5, 6))
        assert mlq.is_interlacing(INTERLACING)

    def test_interlacing_labels_follow_blocks(self):
        labels = mlq.canonical_labeling(INTERLACING)
        for i, row in enumerate(mlq.block_decomposition(INTERLACING)):
            for j, block in enumerate(row, start=1):
                assert all(labels[i][s] == j for s in block)

    def test_single_queue(self):
        q = MLQ(5, ((2, 4),))
        assert mlq.block_decomposition(q) == (((2, 4),),)
        assert mlq.is_interlacing(q)

    def test_relations(self):
        assert mlq.dominates((3, 5), (1, 4))
        assert mlq.strictly_above((6, 8), (1, 5))
        assert not mlq.strictly_above((2, 8), (1, 5))
        for a in [(1, 3), (2, 5), (4, 5), (1, 2)]:
            for b in [(1, 3), (2, 5), (4, 5), (1, 2)]:
                assert mlq.dominates(a, b) == mlq.dominates_by_matching(a, b)


def test_weakly_decreasing():
    assert mlq.weakly_decreasing_up_to(parse_word("5455433252215"), 4)
    assert mlq.weakly_decreasing_up_to(parse_word("12"), 0)
    assert not mlq.weakly_decreasing_up_to(parse_word("12"), 2)


class TestLabeling:
    def test_appendix_example(self):
        labels = mlq.canonical_labeling(APPENDIX)
        assert labels == ({2: 1}, {1: 2, 2: 1, 3: 2}, {2: 1, 3: 2, 4: 2})
        assert mlq.mlq_apply(APPENDIX) == parse_word("4122")
        assert labels == mlq.canonical_labeling_recursive(APPENDIX)

    def test_generic_example_labels(self):
        labels = mlq.canonical_labeling(GENERIC)
        assert labels[1] == {1: 2, 5: 1, 6: 1, 8: 2, 12: 1, 15: 1}
        assert labels[2] == {1: 1, 2: 2, 4: 3, 5: 1, 8: 1, 9: 2, 13: 1, 14: 3}

    def test_single_queue(self):
        assert mlq.canonical_labeling(MLQ(5, ((1, 4),))) == ({1: 1, 4: 1},)


class TestRendering:
    def test_queue_diagram(self):
        text = mlq.render_queue_diagram((1, 4, 8, 9), parse_word("346613321"))
        bottom = text.splitlines()[1]
        assert bottom == "(2) [ ] [ ] (3) [ ] [ ] [ ] (1) (1)"

    def test_graveyard(self):
        assert mlq.render_graveyard(MLQ(4, ((3,), (1, 3, 4)))) == "[ ] [ ] (1) [ ]\n(2) [ ] (1) (2)"
        assert mlq.render_graveyard(MLQ(4, ())) == ""
        assert mlq.render_graveyard(GENERIC).isascii()
