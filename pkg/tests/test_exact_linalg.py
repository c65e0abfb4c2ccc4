"""Exact rank, span, and commutant computations, cross-checked against
sympy on small dense instances."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rookdual import (
    ActionSpace,
    AlgebraElement,
    ExactMatrix,
    PartialInjection,
    RowSpace,
    SizeGuardError,
    commutant_basis,
    enumerate_istar,
    in_span,
    is_generators,
    rank,
    rook_action_matrix,
    span_dimension,
)


def dense(m: ExactMatrix):
    return sympy.Matrix(
        m.rows, m.cols, lambda r, c: sympy.Rational(m.entries.get((r, c), 0))
    )


def from_rows(rows):
    entries = {}
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            entries[(r, c)] = Fraction(v)
    return ExactMatrix(len(rows), len(rows[0]), entries)


def test_matrix_construction_and_arithmetic():
    m = from_rows([[1, 2], [3, 4]])
    assert m.entries[(1, 0)] == 3
    assert (m + m).entries[(0, 1)] == 4
    assert (m - m).entries == {}
    assert m.scale(Fraction(1, 2)).entries[(1, 1)] == 2
    prod = m * ExactMatrix.identity(2)
    assert prod == m
    assert m.transpose().entries[(0, 1)] == 3
    assert ExactMatrix.zero(2, 3).entries == {}
    with pytest.raises(ValueError):
        ExactMatrix(1, 1, {(0, 1): 1})
    with pytest.raises(ValueError):
        from_rows([[1, 2]]) * from_rows([[1, 2]])
    with pytest.raises(AttributeError):
        m.rows = 3


def test_matrix_product_small_example():
    a = from_rows([[1, 2], [0, 1]])
    b = from_rows([[1, 0], [3, 1]])
    assert a * b == from_rows([[7, 2], [3, 1]])
    assert b * a == from_rows([[1, 2], [3, 7]])


def test_vectorize_layout():
    m = from_rows([[0, 5], [7, 0]])
    assert m.vectorize() == {1: 5, 2: 7}


def test_rank_examples():
    assert rank(ExactMatrix.identity(4)) == 4
    assert rank(ExactMatrix.zero(3, 3)) == 0
    assert rank(from_rows([[1, 2], [2, 4]])) == 1
    assert rank(from_rows([[1, 2], [2, 5]])) == 2
    thirds = from_rows([[Fraction(1, 3), 1], [1, 3]])
    assert rank(thirds) == 1


@settings(max_examples=120, deadline=None)
@given(
    st.integers(1, 4),
    st.integers(1, 4),
    st.lists(st.integers(-4, 4), min_size=16, max_size=16),
    st.integers(1, 5),
)
def test_rank_matches_sympy(rows, cols, flat, denom):
    entries = {}
    it = iter(flat)
    for r in range(rows):
        for c in range(cols):
            entries[(r, c)] = Fraction(next(it), denom)
    m = ExactMatrix(rows, cols, entries)
    assert rank(m) == dense(m).rank()
    assert rank(m) == rank(m.transpose())


def test_row_space_incremental():
    space = RowSpace()
    assert space.add({0: Fraction(2), 1: Fraction(4)})
    assert not space.add({0: Fraction(1), 1: Fraction(2)})
    assert space.add({1: Fraction(1)})
    assert space.dimension == 2
    assert space.contains({0: Fraction(5), 1: Fraction(-1)})
    assert not space.contains({2: Fraction(1)})


def test_span_and_membership():
    a = from_rows([[1, 0], [0, 0]])
    b = from_rows([[0, 1], [0, 0]])
    assert span_dimension([a, b, a + b]) == 2
    assert in_span(a + b.scale(7), [a, b])
    assert not in_span(from_rows([[0, 0], [1, 0]]), [a, b])
    assert span_dimension([]) == 0


def brute_commutant_dimension(generators, d):
    """Independent dense solve: stack the Sylvester systems and take the
    null space dimension with sympy."""
    rows = []
    for g in generators:
        gd = dense(g)
        for i in range(d):
            for j in range(d):
                row = [sympy.Integer(0)] * (d * d)
                for l in range(d):
                    row[i * d + l] += gd[l, j]
                    row[l * d + j] -= gd[i, l]
                rows.append(row)
    if not rows:
        return d * d
    system = sympy.Matrix(rows)
    return d * d - system.rank()


def test_commutant_of_nothing_is_everything():
    basis = commutant_basis([], 3)
    assert len(basis) == 9
    assert span_dimension(basis) == 9


def test_commutant_of_identity_is_everything():
    basis = commutant_basis([ExactMatrix.identity(3)], 3)
    assert len(basis) == 9


def test_commutant_scalar_case():
    sp = ActionSpace("V", 2, 1)
    gens = [rook_action_matrix(g, sp) for g in is_generators(2)]
    gens.append(ExactMatrix.identity(2))
    basis = commutant_basis(gens, 2)
    assert len(basis) == 1
    assert basis[0].entries[(0, 0)] == basis[0].entries[(1, 1)]


def test_commutant_matches_dense_solver():
    sp = ActionSpace("V", 3, 2)
    gens = [rook_action_matrix(g, sp) for g in is_generators(3)]
    gens.append(ExactMatrix.identity(9))
    basis = commutant_basis(gens, 9)
    assert len(basis) == 3
    assert len(basis) == brute_commutant_dimension(gens, 9)


def test_commutant_members_commute():
    sp = ActionSpace("V", 3, 2)
    gens = [rook_action_matrix(g, sp) for g in is_generators(3)]
    basis = commutant_basis(gens, 9)
    for x in basis:
        for g in gens:
            assert x * g == g * x
    assert span_dimension(basis) == len(basis)


def test_commutant_contains_other_action():
    sp = ActionSpace("V", 3, 2)
    gens = [rook_action_matrix(g, sp) for g in is_generators(3)]
    basis = commutant_basis(gens, 9)
    from rookdual import action_matrix_V

    for alpha in enumerate_istar(2):
        assert in_span(action_matrix_V(alpha, sp), basis)


def test_commutant_guard():
    with pytest.raises(SizeGuardError):
        commutant_basis([ExactMatrix.identity(300)], 300)


def test_algebra_element():
    x = AlgebraElement("c[2]", {"a": Fraction(1), "b": Fraction(2)})
    y = AlgebraElement.basis("c[2]", "a")
    assert (x - y).terms == {"b": Fraction(2)}
    assert (3 * y).terms == {"a": Fraction(3)}
    assert AlgebraElement.zero("c[2]") == x - x
    assert not AlgebraElement.zero("c[2]")
    assert x + AlgebraElement.zero("c[2]") == x
    with pytest.raises(ValueError):
        x + AlgebraElement.basis("c[3]", "a")
