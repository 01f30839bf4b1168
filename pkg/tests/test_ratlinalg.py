"""Exact linear algebra: solves, kernels, signatures, powers, subspaces."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefsig.errors import InputError
from lefsig.ratlinalg import (
    Matrix,
    as_rational,
    in_span,
    intersect_spans,
    kernel_basis,
    matrix_power,
    rank,
    signature_symmetric,
    solve_linear,
    span_basis,
    sum_spans,
)

from .oracles import signature_via_charpoly


def test_as_rational_accepts_ints_strings_fractions():
    assert as_rational(3) == 3
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(Fraction(-2, 6)) == Fraction(-1, 3)


def test_as_rational_rejects_floats_and_garbage():
    with pytest.raises(InputError):
        as_rational(0.5)
    with pytest.raises(InputError):
        as_rational("1.5.2")


def test_solve_unique():
    a = Matrix.from_rows([[2, 0], [0, 3]])
    res = solve_linear(a, [4, 9])
    assert res.status == "unique"
    assert res.particular == (Fraction(2), Fraction(3))
    assert res.kernel_basis == ()


def test_solve_inconsistent():
    a = Matrix.from_rows([[1, 1], [1, 1]])
    res = solve_linear(a, [1, 2])
    assert res.status == "inconsistent"
    assert res.particular is None


def test_solve_affine_deterministic_witness():
    # free variable set to zero, pivot solved: the witness is reproducible
    a = Matrix.from_rows([[0, -1], [0, 0]])
    res = solve_linear(a, [1, 0])
    assert res.status == "affine"
    assert res.particular == (Fraction(0), Fraction(-1))
    assert res.kernel_basis == ((Fraction(1), Fraction(0)),)


def test_solve_no_rows():
    res = solve_linear(Matrix.zeros(0, 3), [])
    assert res.status == "affine"
    assert res.particular == (Fraction(0),) * 3
    assert len(res.kernel_basis) == 3


@st.composite
def matrices_and_solutions(draw):
    rows = draw(st.integers(1, 5))
    cols = draw(st.integers(1, 5))
    entries = st.integers(-4, 4)
    a = Matrix.from_rows(
        [[draw(entries) for _ in range(cols)] for _ in range(rows)]
    )
    x = [draw(entries) for _ in range(cols)]
    return a, x


@given(matrices_and_solutions())
@settings(max_examples=60, deadline=None)
def test_solve_roundtrip(case):
    a, x = case
    b = a.apply(x)
    res = solve_linear(a, b)
    assert res.status != "inconsistent"
    assert a.apply(res.particular) == b
    for v in res.kernel_basis:
        assert a.apply(v) == (Fraction(0),) * a.rows
    # kernel dimension + rank = number of columns
    assert len(res.kernel_basis) + rank(a) == a.cols


@given(matrices_and_solutions())
@settings(max_examples=40, deadline=None)
def test_inconsistent_really_means_it(case):
    a, x = case
    b = list(a.apply(x))
    b[0] += 1  # may or may not stay consistent; trust only the reported status
    res = solve_linear(a, b)
    if res.status == "inconsistent":
        # b must then be outside the column span
        cols = [a.column(j) for j in range(a.cols)]
        assert not in_span(span_basis(cols, a.rows), b, a.rows)
    else:
        assert a.apply(res.particular) == tuple(b)


def test_signature_examples():
    assert signature_symmetric(Matrix.from_rows([[1, 0], [0, -1]])) == 0
    assert signature_symmetric(Matrix.from_rows([[0, 1], [1, 0]])) == 0
    assert signature_symmetric(Matrix.zeros(3, 3)) == 0
    assert signature_symmetric(Matrix.from_rows([[2]])) == 1
    assert (
        signature_symmetric(
            Matrix.from_rows([[2, 0, 1, 1], [0, 2, 0, -1], [1, 0, 2, 1], [1, -1, 1, 2]])
        )
        == 4
    )


def test_signature_rejects_non_symmetric():
    with pytest.raises(InputError):
        signature_symmetric(Matrix.from_rows([[0, 1], [0, 0]]))


def test_signature_empty_matrix():
    assert signature_symmetric(Matrix.zeros(0, 0)) == 0


def symmetric_matrices(max_n=6, spread=5):
    def build(draw):
        n = draw(st.integers(1, max_n))
        vals = st.integers(-spread, spread)
        m = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = Fraction(draw(vals))
        return Matrix.from_rows(m)

    return st.composite(build)()


@given(symmetric_matrices())
@settings(max_examples=80, deadline=None)
def test_signature_matches_charpoly_oracle(s):
    assert signature_symmetric(s) == signature_via_charpoly(s)


@given(symmetric_matrices(max_n=4, spread=3), st.data())
@settings(max_examples=50, deadline=None)
def test_signature_congruence_invariant(s, data):
    n = s.rows
    # random invertible P as a product of two triangular matrices with unit diagonal
    vals = st.integers(-2, 2)
    lower = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    upper = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            lower[i][j] = Fraction(data.draw(vals))
            upper[j][i] = Fraction(data.draw(vals))
    p = Matrix.from_rows(lower) @ Matrix.from_rows(upper)
    assert signature_symmetric(p.transpose() @ s @ p) == signature_symmetric(s)


@given(symmetric_matrices(max_n=4), symmetric_matrices(max_n=4))
@settings(max_examples=40, deadline=None)
def test_signature_additive_on_blocks(s, t):
    assert signature_symmetric(s.block_diag(t)) == signature_symmetric(
        s
    ) + signature_symmetric(t)


@given(symmetric_matrices())
@settings(max_examples=40, deadline=None)
def test_signature_negation_flips(s):
    assert signature_symmetric(-s) == -signature_symmetric(s)


def test_matrix_power_small():
    c1 = Matrix.from_rows([[1, 1], [0, 1]])
    assert matrix_power(c1, 3) == Matrix.from_rows([[1, 3], [0, 1]])
    assert matrix_power(c1, 0) == Matrix.identity(2)


def test_matrix_power_order_ten():
    phi = Matrix.from_rows([[0, 1, 0, -1], [-1, 0, 0, 0], [1, 0, 1, 1], [-1, 0, -1, 0]])
    assert matrix_power(phi, 10) == Matrix.identity(4)
    assert matrix_power(phi, 5) != Matrix.identity(4)


def test_matrix_power_rejects_negative():
    with pytest.raises(InputError):
        matrix_power(Matrix.identity(2), -1)


def test_matmul_shape_mismatch():
    with pytest.raises(InputError):
        Matrix.zeros(2, 3) @ Matrix.zeros(2, 3)


def test_span_basis_canonical():
    a = span_basis([(1, 1, 0), (0, 1, 1)], 3)
    b = span_basis([(1, 2, 1), (1, 0, -1), (2, 2, 0)], 3)
    assert a == b  # same subspace, same canonical representation


def test_intersect_and_sum():
    u = span_basis([(1, 0, 0), (0, 1, 0)], 3)
    v = span_basis([(0, 1, 0), (0, 0, 1)], 3)
    meet = intersect_spans(u, v, 3)
    assert meet == span_basis([(0, 1, 0)], 3)
    join = sum_spans(u, v, 3)
    assert len(join) == 3


def test_kernel_basis_of_rank_one():
    a = Matrix.from_rows([[1, 2, 3]])
    ker = kernel_basis(a)
    assert len(ker) == 2
    for v in ker:
        assert a.apply(v) == (Fraction(0),)
