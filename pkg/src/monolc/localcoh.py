"""Graded pieces of ``H^i_B(R)`` and ``Ext^i_R(R/B, R)`` through simplicial cohomology.

For a squarefree ideal ``B`` the degree-α piece of ``H^i_B(R)`` is the
reduced cohomology ``H^{i-2}`` of the full subcomplex ``Δ_{I_α}`` of the
Stanley–Reisner complex of ``B^∨``, where ``I_α`` is the set of negative
coordinates of α.  Multiplication by a variable is the map induced by the
inclusion of the smaller full subcomplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .combinat import (
    MonomialIdeal,
    VarSet,
    _require_nonzero,
    _require_proper,
    _require_squarefree,
    alexander_dual,
    delta_alpha,
    full_subcomplex,
    negative_support,
    stanley_reisner_complex,
    squarefree_degrees,
    support,
    t_complex,
)
from .errors import ArgumentError, DimensionMismatch
from .homology import CohomologyBasis, reduced_cohomology, restriction_on_cohomology
from .linalg import QQ, ExactMatrix, Field


@dataclass(frozen=True)
class GradedPiece:
    ideal: MonomialIdeal
    i: int
    degree: tuple[int, ...]
    dim: int
    basis: Optional[CohomologyBasis] = None


def _check_degree(B: MonomialIdeal, alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != B.n:
        raise DimensionMismatch(f"degree {alpha} has length {len(alpha)}, ring has {B.n} variables")
    return alpha


def _squarefree_nonzero(B: MonomialIdeal, what: str) -> None:
    _require_nonzero(B, what)
    _require_squarefree(B, what)


def delta_of_support(B: MonomialIdeal, I: VarSet):
    """``Δ_I`` for the Stanley–Reisner complex ``Δ`` of ``B^∨``."""
    return full_subcomplex(stanley_reisner_complex(B), I)


def lc_piece(B: MonomialIdeal, i: int, alpha: Sequence[int], field: Field = QQ) -> GradedPiece:
    """``H^i_B(R)_α ≅ H^{i-2}(Δ_{I_α}; k)``."""
    _squarefree_nonzero(B, "lc_piece")
    alpha = _check_degree(B, alpha)
    basis = reduced_cohomology(delta_of_support(B, negative_support(alpha)), i - 2, field)
    return GradedPiece(B, i, alpha, basis.dim, basis)


def lc_piece_via_T(B: MonomialIdeal, i: int, alpha: Sequence[int], field: Field = QQ) -> GradedPiece:
    """Same value as :func:`lc_piece`, through ``H^{i-2}(T_{I_α}; k)`` on the generators."""
    _squarefree_nonzero(B, "lc_piece_via_T")
    alpha = _check_degree(B, alpha)
    basis = reduced_cohomology(t_complex(B, negative_support(alpha)), i - 2, field)
    return GradedPiece(B, i, alpha, basis.dim, basis)


def ext_piece(B: MonomialIdeal, i: int, beta: Sequence[int], field: Field = QQ) -> GradedPiece:
    """``Ext^i_R(R/B, R)_β`` for squarefree ``B``.

    Ext agrees with local cohomology in degrees ``β ≥ (-1,...,-1)`` and
    vanishes elsewhere.
    """
    _squarefree_nonzero(B, "ext_piece")
    beta = _check_degree(B, beta)
    if any(b < -1 for b in beta):
        return GradedPiece(B, i, beta, 0)
    piece = lc_piece(B, i, beta, field)
    return GradedPiece(B, i, beta, piece.dim, piece.basis)


def ext_piece_general(B: MonomialIdeal, i: int, alpha: Sequence[int], field: Field = QQ) -> GradedPiece:
    """``Ext^i_R(R/B, R)_α ≅ H^{i-2}(Δ_α; k)`` for any nonzero monomial ideal."""
    _require_nonzero(B, "ext_piece_general")
    alpha = _check_degree(B, alpha)
    basis = reduced_cohomology(delta_alpha(B, alpha), i - 2, field)
    return GradedPiece(B, i, alpha, basis.dim, basis)


def multiplication_map(
    B: MonomialIdeal, i: int, alpha: Sequence[int], l: int, field: Field = QQ
) -> ExactMatrix:
    """Matrix of multiplication by ``X_l`` from degree α to degree ``α + e_l``.

    Columns are in the basis of ``lc_piece(B, i, α).basis``, rows in that of
    ``lc_piece(B, i, α + e_l).basis``.
    """
    _squarefree_nonzero(B, "multiplication_map")
    alpha = _check_degree(B, alpha)
    if not 0 <= l < B.n:
        raise ArgumentError(f"variable index {l} out of range")
    shifted = tuple(a + (j == l) for j, a in enumerate(alpha))
    src = delta_of_support(B, negative_support(alpha))
    dst = delta_of_support(B, negative_support(shifted))
    return restriction_on_cohomology(src, dst, i - 2, field)


def hochster_betti(I: MonomialIdeal, i: int, alpha: Sequence[int], field: Field = QQ) -> int:
    """Multigraded Betti number ``β_{i,α}(I) = dim Tor_i(I, k)_α`` by Hochster's formula.

    With ``Δ`` the complex whose Stanley–Reisner ideal is ``I``,
    ``β_{i,α}(I) = dim H^{|α|-i-2}(Δ_{supp α})``; zero outside ``{0,1}^n``.
    """
    _require_squarefree(I, "hochster_betti")
    _require_proper(I, "hochster_betti")
    alpha = _check_degree(I, alpha)
    if i < 0 or any(a not in (0, 1) for a in alpha):
        return 0
    cx = stanley_reisner_complex(alexander_dual(I))
    return reduced_cohomology(full_subcomplex(cx, support(alpha)), sum(alpha) - i - 2, field).dim


def hilbert_function_box(
    B: MonomialIdeal,
    i: int,
    lo: Sequence[int],
    hi: Sequence[int],
    field: Field = QQ,
    kind: str = "lc",
) -> dict[tuple[int, ...], int]:
    """``dim H^i_B(R)_α`` (``kind="lc"``) or ``dim Ext^i_R(R/B,R)_α`` (``kind="ext"``) on a box.

    Values are shared between degrees with the same ``I_α``.
    """
    _squarefree_nonzero(B, "hilbert_function_box")
    lo, hi = _check_degree(B, lo), _check_degree(B, hi)
    if any(a > b for a, b in zip(lo, hi)):
        raise ArgumentError(f"empty box: {lo} is not <= {hi}")
    if kind not in ("lc", "ext"):
        raise ArgumentError(f"kind must be 'lc' or 'ext', got {kind!r}")
    memo: dict[VarSet, int] = {}
    table = {}
    for alpha in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if kind == "ext" and any(a < -1 for a in alpha):
            table[alpha] = 0
            continue
        I = negative_support(alpha)
        if I not in memo:
            memo[I] = reduced_cohomology(delta_of_support(B, I), i - 2, field).dim
        table[alpha] = memo[I]
    return table


@dataclass(frozen=True)
class SeriesTerm:
    """``multiplicity · t^{-α} / ∏_{j ∈ free}(1 - t_j)``, one summand ``R/P_α(α)``."""

    alpha: tuple[int, ...]
    free: VarSet
    multiplicity: int

    def value_at(self, beta: Sequence[int]) -> int:
        """Contribution of this term to the coefficient of ``t^β``."""
        for a, b in zip(self.alpha, beta):
            if a == 1:
                if b != -1:
                    return 0
            elif b < 0:
                return 0
        return self.multiplicity


def hilbert_series_closed_form(B: MonomialIdeal, i: int, field: Field = QQ) -> list[SeriesTerm]:
    """Hilbert series of ``Ext^i_R(R/B, R)`` as a list of terms.

    One term per ``α ∈ {0,1}^n`` with ``β_{|α|-i,α}(B^∨) ≠ 0``, with free
    variables the complement of ``supp α``.
    """
    _require_squarefree(B, "hilbert_series_closed_form")
    _require_proper(B, "hilbert_series_closed_form")
    dual = alexander_dual(B)
    full = (1 << B.n) - 1
    terms = []
    for alpha in squarefree_degrees(B.n):
        m = hochster_betti(dual, sum(alpha) - i, alpha, field)
        if m:
            terms.append(SeriesTerm(alpha, full & ~support(alpha), m))
    return terms


def evaluate_series(terms: Sequence[SeriesTerm], beta: Sequence[int]) -> int:
    return sum(t.value_at(beta) for t in terms)


def betti_support(B: MonomialIdeal, i: int, field: Field = QQ) -> list[VarSet]:
    """The sets ``F = supp α`` with ``β_{|α|-i,α}(B^∨) ≠ 0``."""
    return [support(t.alpha) for t in hilbert_series_closed_form(B, i, field)]


__all__ = [
    "GradedPiece",
    "SeriesTerm",
    "betti_support",
    "delta_of_support",
    "evaluate_series",
    "ext_piece",
    "ext_piece_general",
    "hilbert_function_box",
    "hilbert_series_closed_form",
    "hochster_betti",
    "lc_piece",
    "lc_piece_via_T",
    "multiplication_map",
]
