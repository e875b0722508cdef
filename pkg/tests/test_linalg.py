from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monolc.errors import ArgumentError, DimensionMismatch
from monolc.linalg import DEFAULT_PRIME, QQ, ExactMatrix, Field, IncrementalEchelon


def matrices(field, max_rows=4, max_cols=4, lo=-3, hi=3):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r).map(
                lambda rows: ExactMatrix(field, r, c, rows)
            )
        )
    )


def brute_rank_mod_p(M: ExactMatrix) -> int:
    """Rank over GF(p) as log_p of the size of the row space, by enumeration."""
    p = M.field.characteristic
    span = set()
    for coeffs in product(range(p), repeat=M.nrows):
        span.add(tuple(sum(c * x for c, x in zip(coeffs, col)) % p for col in zip(*M.rows)))
    r = 0
    while p**r < len(span):
        r += 1
    assert p**r == len(span)
    return r


def test_field_parsing():
    assert Field.parse("rational") == QQ
    assert Field.parse("QQ") == QQ
    assert Field.parse("gf 7") == Field(7)
    assert Field.parse("GF(5)") == Field(5)
    assert Field.parse("zz/3") == Field(3)
    assert Field.parse("gf") == Field(DEFAULT_PRIME)
    with pytest.raises(ArgumentError):
        Field.parse("reals")
    with pytest.raises(ArgumentError):
        Field(9)
    assert str(Field(7)) == "GF(7)" and str(QQ) == "QQ"


def test_field_arithmetic():
    F = Field(7)
    assert F(-1) == 6
    assert F.inv(3) * 3 % 7 == 1
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        ExactMatrix(QQ, 2, 2, [[1, 2]])
    A = ExactMatrix(QQ, 2, 3, [[1, 0, 0], [0, 1, 0]])
    with pytest.raises(DimensionMismatch):
        A @ A
    with pytest.raises(ArgumentError):
        A @ ExactMatrix(Field(5), 3, 1, [[1], [1], [1]])


def test_rref_and_rank_example():
    A = ExactMatrix(QQ, 3, 3, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    R, pivots = A.rref()
    assert pivots == [0, 1]
    assert R == [[1, 0, -1], [0, 1, 2]]
    assert A.rank() == 2 and not A.is_invertible()
    assert ExactMatrix.identity(QQ, 3).is_invertible()
    assert A.tolist()[0] == ["1", "2", "3"]


def test_fraction_formatting():
    A = ExactMatrix(QQ, 1, 1, [[Fraction(-1, 2)]])
    assert A.tolist() == [["-1/2"]]


@pytest.mark.parametrize("p", [2, 3])
@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_rank_matches_brute_force(p, data):
    M = data.draw(matrices(Field(p), max_rows=4, max_cols=4))
    assert M.rank() == brute_rank_mod_p(M)


@given(matrices(QQ, 5, 5))
@settings(max_examples=100, deadline=None)
def test_rank_nullity_and_kernel(M):
    kernel = M.nullspace()
    assert M.rank() + len(kernel) == M.ncols
    for v in kernel:
        assert not any(M.apply(v))
    assert M.rank() == M.transpose().rank()


@given(matrices(QQ, 4, 4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
@settings(max_examples=100, deadline=None)
def test_solve(M, x):
    x = x[: M.ncols]
    b = M.apply(x)
    y = M.solve(b)
    assert y is not None and M.apply(y) == b


def test_solve_inconsistent():
    M = ExactMatrix(QQ, 2, 1, [[1], [1]])
    assert M.solve([1, 2]) is None
    with pytest.raises(DimensionMismatch):
        M.solve([1])


@given(matrices(Field(5), 3, 3), matrices(Field(5), 3, 3))
@settings(max_examples=50, deadline=None)
def test_matmul_associates_with_apply(A, B):
    if A.ncols != B.nrows:
        return
    v = list(range(B.ncols))
    assert (A @ B).apply(v) == A.apply(B.apply(v))


def test_stack_and_columns():
    A = ExactMatrix(QQ, 1, 2, [[1, 2]])
    B = ExactMatrix(QQ, 1, 2, [[3, 4]])
    S = ExactMatrix.stack(QQ, [A, B], 2)
    assert S.shape == (2, 2) and S.column(1) == [2, 4]
    assert ExactMatrix.stack(QQ, [], 3).shape == (0, 3)
    assert ExactMatrix.from_columns(QQ, 2, [[1, 3], [2, 4]]) == S
    with pytest.raises(DimensionMismatch):
        ExactMatrix.stack(QQ, [A, ExactMatrix(QQ, 1, 3)], 2)


def test_incremental_echelon():
    ech = IncrementalEchelon(Field(3), 3)
    assert ech.add([1, 1, 0])
    assert ech.add([0, 1, 1])
    assert not ech.add([1, 2, 1])  # sum of the first two
    assert not ech.add([0, 0, 0])
    assert ech.rank == 2
