import itertools

import pytest

from helpers import naive_point_rank
from latreg.binomial_gb import BinomialIdeal, vanishing_ideal_finite_field
from latreg.errors import (
    InvalidArgumentError,
    UnsupportedFieldError,
)
from latreg.ffvanish import (
    PointSet,
    PrimeField,
    check_vanishing,
    enumerate_degenerate_torus,
    enumerate_parameterized,
    hilbert_function_points,
    hilbert_table_points,
    is_subgroup_of_torus,
    point_set,
    regularity_points,
    subgroup_to_monomials,
)
from latreg.ring_core import parse_binomial

F3 = PrimeField(3)
F5 = PrimeField(5)
F7 = PrimeField(7)


def test_prime_field_validation():
    with pytest.raises(UnsupportedFieldError):
        PrimeField(6)
    with pytest.raises(UnsupportedFieldError):
        PrimeField(1)


def test_enumerate_examples():
    assert enumerate_parameterized(F3, [(1,), (1,)]).points == ((1, 1),)
    X = enumerate_parameterized(F5, [(1,), (2,)])
    assert X.points == ((1, 1), (2, 1), (3, 1), (4, 1))
    cyc = [(1, 1, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 0, 1, 1)]
    assert len(enumerate_parameterized(F3, cyc)) == 4
    with pytest.raises(UnsupportedFieldError):
        enumerate_parameterized(PrimeField(2), [(1,)])
    with pytest.raises(InvalidArgumentError):
        enumerate_parameterized(F3, [(1,), (0,)])


def test_degenerate_torus_examples():
    assert len(enumerate_degenerate_torus(F5, (1, 2))) == 4
    assert enumerate_degenerate_torus(F3, (1, 1)).points == ((1, 1), (2, 1))
    assert len(enumerate_degenerate_torus(F7, (1, 1, 1))) == 36


def test_torus_equals_disjoint_parameterization():
    vs = [(1, 0), (0, 2)]
    assert (
        enumerate_parameterized(F5, vs).points
        == enumerate_degenerate_torus(F5, (1, 2)).points
    )


def test_hilbert_function_examples():
    X = enumerate_degenerate_torus(F5, (1, 2))
    assert hilbert_function_points(X, 0) == 1
    assert hilbert_function_points(X, 2) == 3
    assert hilbert_function_points(X, 3) == 4
    assert hilbert_table_points(X, 4) == [1, 2, 3, 4, 4]


def test_hilbert_function_matches_monomial_rank():
    # the fast product-basis chain equals rank of the textbook
    # (monomials x points) evaluation matrix
    sets = [
        enumerate_degenerate_torus(F5, (1, 2)),
        enumerate_degenerate_torus(F3, (1, 1)),
        enumerate_parameterized(
            F3, [(1, 1, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 0, 1, 1)]
        ),
        point_set(F5, [(1, 0), (0, 1), (1, 1)]),
    ]
    for X in sets:
        for d in range(5):
            assert hilbert_function_points(X, d) == naive_point_rank(
                X.points, X.field.p, d
            ), (X.points, d)


def test_hilbert_function_monotone_bounded():
    X = enumerate_parameterized(F7, [(1,), (3,)])
    table = hilbert_table_points(X, 8)
    assert all(a <= b for a, b in zip(table, table[1:]))
    assert all(v <= len(X) for v in table)


def test_regularity_examples():
    assert regularity_points(point_set(F5, [(2, 1)])) == 0
    assert regularity_points(enumerate_degenerate_torus(F5, (1, 2))) == 3
    assert regularity_points(enumerate_degenerate_torus(F3, (1, 1))) == 1


def test_subgroup_examples():
    assert is_subgroup_of_torus(enumerate_degenerate_torus(F5, (1, 2)))
    assert not is_subgroup_of_torus(point_set(F5, [(1, 1), (2, 1)]))
    assert is_subgroup_of_torus(point_set(F5, [(1, 1)]))
    assert not is_subgroup_of_torus(point_set(F5, [(1, 0), (0, 1)]))


def test_parameterized_sets_are_subgroups():
    for vs in [
        [(1,), (2,)],
        [(2, 1), (1, 1), (0, 3)],
        [(1, 1, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 0, 1, 1)],
    ]:
        for field in (F3, F5):
            assert is_subgroup_of_torus(enumerate_parameterized(field, vs))


def test_subgroup_to_monomials_round_trip():
    cases = [
        point_set(F5, [(1, 1)]),
        enumerate_degenerate_torus(F5, (1, 2)),
        enumerate_degenerate_torus(F5, (1, 1)),
        enumerate_degenerate_torus(F7, (2, 3)),
        enumerate_parameterized(F7, [(1, 2), (2, 1), (1, 1)]),
    ]
    for X in cases:
        vs = subgroup_to_monomials(X)
        assert all(any(e for e in v) for v in vs)
        assert enumerate_parameterized(X.field, vs).points == X.points
    with pytest.raises(InvalidArgumentError):
        subgroup_to_monomials(point_set(F5, [(1, 1), (2, 1)]))


def test_check_vanishing_examples():
    I = BinomialIdeal(2, (parse_binomial("t1 - t2", 2),))
    assert check_vanishing(I, point_set(F5, [(1, 1)]))
    assert not check_vanishing(I, point_set(F5, [(2, 1)]))
    I2 = BinomialIdeal(2, (parse_binomial("t1^2 - t2^2", 2),))
    assert check_vanishing(I2, point_set(F3, [(1, 1), (2, 1)]))
    with pytest.raises(InvalidArgumentError):
        check_vanishing(
            BinomialIdeal(2, (parse_binomial("t1 - t2^2", 2),)),
            point_set(F3, [(1, 1)]),
        )


def test_vanishing_ideal_agrees_with_points():
    # the eliminated ideal vanishes on the enumerated set and its Hilbert
    # table matches the evaluation ranks
    from latreg.hilbert import hilbert_table, ideal_hilbert
    from latreg.ring_core import MonomialOrder, standard_grading

    cases = [
        (3, [(1,), (2,)]),
        (5, [(1,), (2,)]),
        (3, [(1, 1, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 0, 1, 1)]),
        (5, [(2, 1), (1, 2)]),
    ]
    for q, vs in cases:
        field = PrimeField(q)
        X = enumerate_parameterized(field, vs)
        I = vanishing_ideal_finite_field(vs, q)
        assert check_vanishing(I, X)
        reg = regularity_points(X)
        std = standard_grading(I.num_vars)
        F = ideal_hilbert(I, MonomialOrder.grevlex(std), std)
        table = F.expand(reg + 2)
        assert table == hilbert_table_points(X, reg + 2)
        assert table[reg] == len(X)


def test_stabilized_value_counts_points():
    for X in [
        enumerate_degenerate_torus(F5, (1, 2)),
        enumerate_degenerate_torus(F7, (1, 1)),
        enumerate_parameterized(F3, [(1, 2), (2, 1)]),
    ]:
        reg = regularity_points(X)
        assert hilbert_function_points(X, reg) == len(X)
        assert hilbert_function_points(X, reg + 1) == len(X)


def test_point_normalization_canonical():
    X = point_set(F5, [(2, 4), (1, 2), (3, 0)])
    # (2,4) and (1,2) both normalize to (3,1): same projective point
    assert X.points == ((1, 0), (3, 1))
