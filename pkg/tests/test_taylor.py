from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ideal
from monolc.combinat import MonomialIdeal, frobenius_power, minimalize, squarefree_degrees
from monolc.errors import ArgumentError, DimensionMismatch, DomainError, ResourceLimitError
from monolc.linalg import Field
from monolc.localcoh import ext_piece_general, hochster_betti, lc_piece
from monolc.taylor import (
    build_taylor,
    dual_strand,
    ext_strand_size,
    ext_via_taylor,
    stabilization_check,
    tor_via_taylor,
)
from test_combinat import monomial_ideals, squarefree_ideals


def test_taylor_structure():
    T = build_taylor(ideal(4, "ab", "cd"))
    assert T.rank == 2
    assert T.generators == ((1, 1, 0, 0), (0, 0, 1, 1))
    assert T.basis(1) == [1, 2] and T.basis(2) == [3]
    assert T.degree(3) == (1, 1, 1, 1)
    d2 = T.differential(2)
    # d(f_{01}) = (ab) f_1 - (cd) f_0
    assert d2 == {(2, 3): (1, (1, 1, 0, 0)), (1, 3): (-1, (0, 0, 1, 1))}
    assert T.is_complex()


def test_taylor_powers():
    T = build_taylor(ideal(2, "a", "b"), 3)
    assert T.generators == ((3, 0), (0, 3))
    assert T.degree(3) == (3, 3)
    with pytest.raises(ArgumentError):
        build_taylor(ideal(2, "a"), 0)
    with pytest.raises(DomainError):
        build_taylor(MonomialIdeal.zero(2))


def test_resource_limit():
    n = 21
    B = MonomialIdeal.from_sets(n, [[j] for j in range(n)])
    with pytest.raises(ResourceLimitError):
        build_taylor(B)
    with pytest.raises(ResourceLimitError):
        ext_via_taylor(B, 1, 1, (0,) * n)


@given(monomial_ideals(max_n=3, max_gens=5))
@settings(max_examples=80, deadline=None)
def test_taylor_squares_to_zero(B):
    assert build_taylor(B).is_complex()
    assert build_taylor(B, 2).is_complex()


def test_tor_of_simple_ideals():
    B = ideal(2, "a", "b")
    assert tor_via_taylor(B, 0, (1, 0)) == 1
    assert tor_via_taylor(B, 1, (1, 1)) == 1
    assert tor_via_taylor(B, 1, (1, 0)) == 0
    assert tor_via_taylor(B, 0, (-1, 0)) == 0
    assert tor_via_taylor(B, -1, (1, 0)) == 0
    # (ab, bc, ac): Taylor is not minimal, but Tor_1 sits in degree abc with rank 2
    T = ideal(3, "ab", "bc", "ac")
    assert tor_via_taylor(T, 1, (1, 1, 1)) == 2
    assert tor_via_taylor(T, 2, (1, 1, 1)) == 0
    with pytest.raises(DimensionMismatch):
        tor_via_taylor(B, 0, (1,))


@given(squarefree_ideals(max_n=4), st.sampled_from([Field(0), Field(2)]))
@settings(max_examples=60, deadline=None)
def test_tor_matches_hochster(B, field):
    if B.is_unit:
        return
    for alpha in squarefree_degrees(B.n):
        for i in range(B.n):
            assert tor_via_taylor(B, i, alpha, field) == hochster_betti(B, i, alpha, field)


def test_ext_zero_vanishes():
    B = ideal(3, "a", "bc")
    for alpha in product(range(-2, 2), repeat=3):
        assert ext_via_taylor(B, 1, 0, alpha) == 0


def test_ext_of_complete_intersection():
    # Ext^2(R/(ab,cd), R) = R/(ab,cd) shifted by (1,1,1,1)
    B = ideal(4, "ab", "cd")
    assert ext_via_taylor(B, 1, 2, (-1, -1, -1, -1)) == 1
    assert ext_via_taylor(B, 1, 2, (0, -1, -1, -1)) == 1  # shifted to a, not in B
    assert ext_via_taylor(B, 1, 2, (0, 0, -1, -1)) == 0  # shifted to ab, in B
    assert ext_via_taylor(B, 1, 1, (-1, -1, -1, -1)) == 0
    assert ext_via_taylor(B, 2, 2, (-2, -2, -2, -2)) == 1
    assert ext_via_taylor(B, 2, 2, (-3, -2, -2, -2)) == 0


@given(squarefree_ideals(max_n=3, max_gens=4), st.data())
@settings(max_examples=60, deadline=None)
def test_power_strand_matches_general_ext_of_frobenius_power(B, data):
    d = data.draw(st.integers(1, 3))
    alpha = tuple(data.draw(st.integers(-d - 1, 1)) for _ in range(B.n))
    P = frobenius_power(B, d)
    for i in range(B.n + 1):
        assert ext_via_taylor(B, d, i, alpha) == ext_piece_general(P, i, alpha).dim


@given(squarefree_ideals(max_n=4, max_gens=4), st.data())
@settings(max_examples=60, deadline=None)
def test_stabilization(B, data):
    alpha = tuple(data.draw(st.integers(-3, 1)) for _ in range(B.n))
    i = data.draw(st.integers(0, B.n))
    rep = stabilization_check(B, i, alpha, 3)
    assert rep.ok
    assert rep.local_cohomology == lc_piece(B, i, alpha).dim
    depth = max(0, -min(alpha))
    assert rep.first_stable_d == (max(1, depth) if depth <= 3 else None)


def test_stabilization_report_rows():
    rep = stabilization_check(ideal(4, "ab", "cd"), 2, (-3, -1, 0, -2), 4)
    assert [r.value for r in rep.rows] == [0, 0, 1, 1]
    assert [r.in_range for r in rep.rows] == [False, False, True, True]
    assert rep.first_stable_d == 3 and rep.ok


def test_dual_strand_shape():
    T = build_taylor(ideal(4, "ab", "cd"))
    dims, maps, bases = dual_strand(T, (-1, -1, -1, -1))
    assert dims == [0, 0, 1]
    assert len(maps) == 2
    assert ext_strand_size(ideal(4, "ab", "cd"), 1, (0, 0, 0, 0)) == 4
    with pytest.raises(DimensionMismatch):
        dual_strand(T, (0, 0))


def test_non_squarefree_taylor_matches_delta_alpha():
    B = minimalize([(2, 1, 0), (0, 1, 2), (1, 0, 1)])
    for alpha in product(range(-3, 2), repeat=3):
        for i in range(4):
            assert ext_via_taylor(B, 1, i, alpha) == ext_piece_general(B, i, alpha).dim
