import itertools

import pytest

from latreg.errors import DimensionError, ParseError
from latreg.ring_core import (
    Binomial,
    Grading,
    MonomialOrder,
    compare,
    parse_binomial,
    render_binomial,
    split_parts,
    standard_grading,
    weighted_degree,
)


def test_weighted_degree_examples():
    assert weighted_degree((0, 0), Grading((2, 3))) == 0
    assert weighted_degree((3, 0), Grading((2, 3))) == 6
    assert weighted_degree((1, 2, 1), Grading((1, 1, 1))) == 4


def test_weighted_degree_dimension_error():
    with pytest.raises(DimensionError):
        weighted_degree((1, 2, 3), Grading((1, 1)))


def test_split_parts_examples():
    assert split_parts((3, -2, 0)) == ((3, 0, 0), (0, 2, 0))
    assert split_parts((0, 0)) == ((0, 0), (0, 0))
    assert split_parts((-1, -1)) == ((0, 0), (1, 1))


def test_split_parts_round_trip():
    for c in itertools.product(range(-3, 4), repeat=3):
        plus, minus = split_parts(c)
        assert tuple(p - m for p, m in zip(plus, minus)) == c
        assert all(p == 0 or m == 0 for p, m in zip(plus, minus))


def test_compare_examples():
    std = MonomialOrder.grevlex(standard_grading(2))
    assert compare(std, (2, 0), (0, 2)) == 1  # earlier variable wins ties
    assert compare(std, (1, 1), (1, 1)) == 0
    w = MonomialOrder.grevlex(Grading((2, 3)))
    assert compare(w, (3, 0), (0, 1)) == 1  # degree 6 beats degree 3
    assert compare(w, (3, 0), (0, 2)) == 1  # degree tie, last nonzero of b-a positive


def test_compare_total_and_multiplicative():
    order = MonomialOrder.grevlex(Grading((2, 1, 3)))
    vecs = list(itertools.product(range(4), repeat=3))
    keys = {v: order.key(v) for v in vecs}
    for a in vecs:
        for b in vecs:
            c = compare(order, a, b)
            assert c == -compare(order, b, a)
            assert (c == 0) == (a == b)
            # consistency with the sort key
            assert c == (keys[a] > keys[b]) - (keys[a] < keys[b])
    shifts = [(1, 0, 0), (0, 2, 1), (1, 1, 1)]
    for a, b in itertools.combinations(vecs, 2):
        c = compare(order, a, b)
        for sft in shifts:
            aa = tuple(x + y for x, y in zip(a, sft))
            bb = tuple(x + y for x, y in zip(b, sft))
            assert compare(order, aa, bb) == c


def test_one_is_minimal():
    for order in (
        MonomialOrder.grevlex(Grading((2, 1, 3))),
        MonomialOrder.lex(),
        MonomialOrder.elimination(1, standard_grading(3)),
    ):
        zero = (0, 0, 0)
        for v in itertools.product(range(3), repeat=3):
            if v != zero:
                assert compare(order, v, zero) == 1


def test_elimination_order_blocks():
    order = MonomialOrder.elimination(2, standard_grading(4))
    # anything touching the first block beats anything entirely in the second
    assert compare(order, (1, 0, 0, 0), (0, 0, 5, 5)) == 1
    assert compare(order, (0, 1, 0, 0), (0, 0, 9, 0)) == 1
    # ties on the first block fall through to the second
    assert compare(order, (1, 0, 2, 0), (1, 0, 0, 2)) == 1


def test_binomial_canonical():
    b = Binomial((2, 1, 0), (0, 1, 3))
    assert not b.is_canonical()
    c = b.canonical()
    assert c == Binomial((2, 0, 0), (0, 0, 3))
    assert c.is_canonical()
    assert c.canonical() == c
    z = Binomial((1, 1), (1, 1))
    assert z.is_zero() and z.canonical().is_zero()


def test_binomial_equality_ignores_sign():
    assert Binomial((1, 0), (0, 1)) == Binomial((0, 1), (1, 0))
    assert hash(Binomial((1, 0), (0, 1))) == hash(Binomial((0, 1), (1, 0)))
    assert Binomial((2, 0), (0, 2)) != Binomial((1, 0), (0, 1))


def test_binomial_homogeneity():
    assert Binomial((3, 0), (0, 2)).is_homogeneous(Grading((2, 3)))
    assert not Binomial((3, 0), (0, 2)).is_homogeneous(Grading((1, 1)))


@pytest.mark.parametrize(
    "text",
    ["t1^3 - t2^2", "t1 - t2", "t1^2*t2 - t3^3", "t1^6 - 1", "0", "t1*t2^4 - t3"],
)
def test_parse_render_round_trip(text, num_vars=3):
    b = parse_binomial(text, num_vars)
    assert parse_binomial(render_binomial(b), num_vars) == b


def test_render_canonical_spacing():
    assert render_binomial(Binomial((3, 0), (0, 2))) == "t1^3 - t2^2"
    assert render_binomial(Binomial((1, 1), (0, 0))) == "t1*t2 - 1"


def test_parse_rejects_sums_and_garbage():
    with pytest.raises(ParseError):
        parse_binomial("t1^3 + t2^2", 2)
    with pytest.raises(ParseError):
        parse_binomial("t1 - t2 - t3", 3)
    with pytest.raises(ParseError):
        parse_binomial("x1 - t2", 2)
    with pytest.raises(ParseError):
        parse_binomial("t9 - t1", 2)
