from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings

from conftest import ideal
from monolc.combinat import MonomialIdeal, full_set, members, minimalize, popcount, subsets
from monolc.errors import DomainError, UnsupportedIdealError
from monolc.homology import reduced_cohomology, restriction_on_cohomology
from monolc.linalg import QQ, ExactMatrix
from monolc.localcoh import delta_of_support, ext_piece
from monolc.structure import (
    BettiTable,
    associated_primes,
    betti_diagram,
    betti_support_sets,
    check_betti_inequality,
    extremal_pairs,
    filtration_quotients,
    is_extremal,
    joint_kernel_dim,
    minimal_associated_primes,
)
from test_combinat import squarefree_ideals


def brute_associated_primes(B, i, field=QQ):
    """P_F is associated iff some class in some degree I ⊇ F is killed by X_j (j ∈ F)
    but survives every monomial in the other variables, i.e. restricts nonzero to Δ_F."""
    found = set()
    for I in range(1, 1 << B.n):
        src = delta_of_support(B, I)
        h = reduced_cohomology(src, i - 2, field)
        if not h.dim:
            continue
        for F in subsets(I):
            if F == 0:
                continue
            blocks = [restriction_on_cohomology(src, delta_of_support(B, I & ~(1 << j)), i - 2, field) for j in members(F)]
            kernel = ExactMatrix.stack(field, blocks, h.dim).nullspace()
            to_F = restriction_on_cohomology(src, delta_of_support(B, F), i - 2, field)
            if any(any(to_F.apply(v)) for v in kernel):
                found.add(F)
    return found


def test_betti_diagram_two_edges():
    t = betti_diagram(ideal(4, "ab", "cd"))
    assert t.entries == {(0, (1, 1, 0, 0)): 1, (0, (0, 0, 1, 1)): 1, (1, (1, 1, 1, 1)): 1}
    assert t.totals() == {(2, 0): 2, (3, 1): 1}
    assert t[1, (1, 1, 1, 1)] == 1 and t[2, (1, 1, 1, 1)] == 0
    assert set(t.column_view()) == {0, 1}


def test_betti_diagram_rejects_bad_ideals():
    with pytest.raises(UnsupportedIdealError):
        betti_diagram(minimalize([(2, 0)]))
    with pytest.raises(DomainError):
        betti_diagram(MonomialIdeal.zero(2))
    with pytest.raises(DomainError):
        betti_diagram(minimalize([(0, 0)]))


def test_extremality():
    t = BettiTable(ideal(3, "a"), {(0, (1, 0, 0)): 1, (1, (1, 1, 0)): 1, (1, (1, 1, 1)): 2})
    assert not is_extremal(t, 0, (1, 0, 0))  # (1, ab) lies above with |ab| - |a| >= 1
    assert is_extremal(t, 1, (1, 1, 1))
    assert not is_extremal(t, 1, (1, 1, 0))  # (1, abc): |abc| - |ab| = 1 >= 0
    assert is_extremal(t, 2, (1, 1, 0))  # zero positions may be extremal
    assert extremal_pairs(t) == [(1, (1, 1, 1))]


def test_inequality_report_two_edges():
    rep = check_betti_inequality(ideal(4, "ab", "cd"))
    assert rep.ok
    matches = rep.extremal_matches()
    assert [(r.i, r.alpha) for r in matches] == [(1, (1, 1, 1, 1))]
    assert matches[0].lhs == matches[0].dual_value == 1


@given(squarefree_ideals(max_n=5))
@settings(max_examples=60, deadline=None)
def test_inequality_holds(B):
    if B.is_unit:
        return
    rep = check_betti_inequality(B)
    assert rep.violations == []
    for row in rep.rows:
        assert row.lhs <= row.rhs


def test_filtration_two_edges_values():
    B = ideal(4, "ab", "cd")
    rep = filtration_quotients(B, 2)
    assert [len(layer) for layer in rep.layers] == [0, 0, 4, 4, 1]
    assert rep.total_multiplicity() == 9


@given(squarefree_ideals(max_n=4))
@settings(max_examples=60, deadline=None)
def test_filtration_recovers_hilbert_function(B):
    if B.is_unit:
        return
    for i in range(B.n + 1):
        rep = filtration_quotients(B, i)
        for l, layer in enumerate(rep.layers):
            assert all(sum(a) == l for a, _ in layer)
        for beta in product(range(-2, 2), repeat=B.n):
            assert rep.hilbert_value(beta) == ext_piece(B, i, beta).dim


def test_associated_primes_examples():
    assert associated_primes(ideal(4, "ab", "bc", "cd", "ad", "ac"), 3).as_tuples() == [(0, 1, 3), (1, 2, 3)]
    B = ideal(3, "a", "bc")
    assert associated_primes(B, 2).as_tuples() == [(0, 1), (0, 2)]
    assert minimal_associated_primes(B, 2).as_tuples() == [(0, 1), (0, 2)]
    assert betti_support_sets(B, 2).as_tuples() == [(0, 1), (0, 2), (0, 1, 2)]
    assert joint_kernel_dim(B, 2, 0b111) == 0


def test_associated_primes_complete_intersection():
    # Ext^2 = R/B(1,1,1,1) with B = (ab, cd): Ass = minimal primes of B
    ass = associated_primes(ideal(4, "ab", "cd"), 2)
    assert ass.as_tuples() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert len(ass) == 4 and 0b0101 in ass
    assert list(ass) == ass.sorted()


@given(squarefree_ideals(max_n=4, max_gens=4))
@settings(max_examples=60, deadline=None)
def test_associated_primes_match_module_oracle(B):
    if B.is_unit:
        return
    for i in range(B.n + 2):
        ass = associated_primes(B, i)
        assert set(ass.sets) == brute_associated_primes(B, i)
        assert ass.minimal().sets == minimal_associated_primes(B, i).sets
        assert ass.sets <= betti_support_sets(B, i).sets


def test_prime_set_minimal():
    ass = associated_primes(ideal(3, "a", "bc"), 2)
    assert ass.minimal().sets == ass.sets
    assert all(popcount(F) >= 1 and F <= full_set(3) for F in ass)


def test_extremality_on_dual_of_two_edges():
    t = betti_diagram(ideal(4, "bd", "bc", "ad", "ac"))
    assert is_extremal(t, 2, (1, 1, 1, 1))
    assert not is_extremal(t, 0, (0, 1, 0, 1))
    assert extremal_pairs(t) == [(2, (1, 1, 1, 1))]
