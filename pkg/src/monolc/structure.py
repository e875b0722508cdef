"""Module structure of ``Ext^i_R(R/B, R)`` read off the Betti numbers of ``B^∨``.

Covers the filtration subquotients ``M_l/M_{l-1}``, multigraded Betti
diagrams, extremal Betti numbers and the Betti inequality between ``B``
and ``B^∨``, and associated primes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .combinat import (
    MonomialIdeal,
    VarSet,
    _require_proper,
    _require_squarefree,
    alexander_dual,
    full_set,
    indicator,
    members,
    popcount,
    squarefree_degrees,
    subsets,
    support,
)
from .homology import reduced_cohomology, restriction_on_cohomology
from .linalg import QQ, ExactMatrix, Field
from .localcoh import delta_of_support, hochster_betti


def _squarefree_proper(B: MonomialIdeal, what: str) -> None:
    _require_squarefree(B, what)
    _require_proper(B, what)


# ---------------------------------------------------------------------------
# Betti tables


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers ``β_{j,α}`` of a squarefree ideal.

    ``entries`` maps ``(j, α)`` with ``α ∈ {0,1}^n`` to ``β_{j,α} > 0``.
    """

    ideal: MonomialIdeal
    entries: dict = dc_field(hash=False)

    def __getitem__(self, key) -> int:
        j, alpha = key
        return self.entries.get((j, tuple(alpha)), 0)

    @property
    def n(self) -> int:
        return self.ideal.n

    def diagram(self) -> dict[tuple[int, int], list[tuple[tuple[int, ...], int]]]:
        """Entries grouped as ``(row, column) = (|α| - j, j)``, the usual Betti diagram layout."""
        out: dict[tuple[int, int], list] = {}
        for (j, alpha), b in sorted(self.entries.items(), key=lambda kv: (kv[0][0], _deg_key(kv[0][1]))):
            out.setdefault((sum(alpha) - j, j), []).append((alpha, b))
        return out

    def column_view(self) -> dict[int, dict[int, list[tuple[tuple[int, ...], int]]]]:
        """``Tor_j = ⊕_row E'_{row,j}``: for each column ``j`` the summands by row."""
        cols: dict[int, dict[int, list]] = {}
        for (row, j), items in self.diagram().items():
            cols.setdefault(j, {})[row] = items
        return cols

    def totals(self) -> dict[tuple[int, int], int]:
        return {k: sum(b for _, b in v) for k, v in self.diagram().items()}

    def support(self) -> set[tuple[int, tuple[int, ...]]]:
        return set(self.entries)


def _deg_key(alpha):
    return (sum(alpha), members(support(alpha)))


def betti_diagram(I: MonomialIdeal, field: Field = QQ) -> BettiTable:
    """All nonzero ``β_{j,α}(I)`` for ``α ∈ {0,1}^n`` via Hochster's formula."""
    _squarefree_proper(I, "betti_diagram")
    entries = {}
    for alpha in squarefree_degrees(I.n):
        for j in range(sum(alpha)):
            b = hochster_betti(I, j, alpha, field)
            if b:
                entries[(j, alpha)] = b
    return BettiTable(I, entries)


def is_extremal(table: BettiTable, i: int, alpha: Sequence[int]) -> bool:
    """``(i, α)`` is extremal iff ``β_{j,α'} = 0`` for all ``j ≥ i``, ``α' > α`` with ``|α'| - |α| ≥ j - i``.

    The value ``β_{i,α}`` itself is not required to be nonzero.
    """
    alpha = tuple(alpha)
    a = support(alpha)
    size = sum(alpha)
    for (j, other), b in table.entries.items():
        if not b or j < i:
            continue
        o = support(other)
        if o == a or o & a != a:
            continue
        if sum(other) - size >= j - i:
            return False
    return True


def extremal_pairs(table: BettiTable) -> list[tuple[int, tuple[int, ...]]]:
    """Extremal positions that carry a nonzero Betti number."""
    return sorted(
        (key for key in table.entries if is_extremal(table, *key)),
        key=lambda k: (k[0], _deg_key(k[1])),
    )


@dataclass(frozen=True)
class InequalityRow:
    i: int
    alpha: tuple[int, ...]
    lhs: int  # β_{i,α}(B)
    rhs: int  # Σ_{α' ≥ α} β_{|α|-i-1,α'}(B^∨)
    dual_extremal: bool  # (|α|-i-1, α) extremal for B^∨
    dual_value: int  # β_{|α|-i-1,α}(B^∨)
    extremal: bool  # (i, α) extremal for B

    @property
    def inequality_holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def equality_holds(self) -> bool:
        return self.lhs == self.dual_value

    @property
    def violation(self) -> bool:
        if not self.inequality_holds:
            return True
        return self.dual_extremal and not (self.extremal and self.equality_holds)


@dataclass(frozen=True)
class InequalityReport:
    ideal: MonomialIdeal
    rows: tuple[InequalityRow, ...]
    table: BettiTable
    dual_table: BettiTable

    @property
    def violations(self) -> list[InequalityRow]:
        return [r for r in self.rows if r.violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def extremal_matches(self) -> list[InequalityRow]:
        """Rows where ``B^∨`` has a nonzero extremal Betti number."""
        return [r for r in self.rows if r.dual_extremal and r.dual_value]


def check_betti_inequality(B: MonomialIdeal, field: Field = QQ) -> InequalityReport:
    """Compare Betti numbers of ``B`` with those of ``B^∨`` in every ``(i, α ∈ {0,1}^n)``.

    Checks ``β_{i,α}(B) ≤ Σ_{α ≤ α'} β_{|α|-i-1,α'}(B^∨)`` and, whenever
    ``(|α|-i-1, α)`` is extremal for ``B^∨``, that ``(i, α)`` is extremal for
    ``B`` with ``β_{i,α}(B) = β_{|α|-i-1,α}(B^∨)``.
    """
    _squarefree_proper(B, "check_betti_inequality")
    dual = alexander_dual(B)
    tb = betti_diagram(B, field)
    td = betti_diagram(dual, field)
    rows = []
    for alpha in squarefree_degrees(B.n):
        a = support(alpha)
        for i in range(B.n + 1):
            k = sum(alpha) - i - 1
            rhs = 0
            if k >= 0:
                rhs = sum(b for (j, other), b in td.entries.items() if j == k and support(other) & a == a)
            dual_ext = k >= 0 and is_extremal(td, k, alpha)
            rows.append(
                InequalityRow(
                    i=i,
                    alpha=alpha,
                    lhs=tb[i, alpha],
                    rhs=rhs,
                    dual_extremal=dual_ext,
                    dual_value=td[k, alpha] if k >= 0 else 0,
                    extremal=is_extremal(tb, i, alpha),
                )
            )
    return InequalityReport(B, tuple(rows), tb, td)


# ---------------------------------------------------------------------------
# Filtration


@dataclass(frozen=True)
class FiltrationReport:
    """Subquotients ``M_l/M_{l-1} ≅ ⊕_{|α|=l} (R/P_α(α))^{β_{l-i,α}(B^∨)}``.

    ``layers[l]`` lists ``(α, multiplicity)`` with nonzero multiplicity.
    """

    ideal: MonomialIdeal
    i: int
    layers: tuple[tuple[tuple[tuple[int, ...], int], ...], ...]

    def hilbert_value(self, beta: Sequence[int]) -> int:
        """``dim_k Ext^i_R(R/B,R)_β`` recovered from the subquotients."""
        total = 0
        for layer in self.layers:
            for alpha, mult in layer:
                if all((b == -1) if a else (b >= 0) for a, b in zip(alpha, beta)):
                    total += mult
        return total

    def total_multiplicity(self) -> int:
        return sum(m for layer in self.layers for _, m in layer)


def filtration_quotients(B: MonomialIdeal, i: int, field: Field = QQ) -> FiltrationReport:
    _squarefree_proper(B, "filtration_quotients")
    dual = alexander_dual(B)
    layers = [[] for _ in range(B.n + 1)]
    for alpha in squarefree_degrees(B.n):
        l = sum(alpha)
        m = hochster_betti(dual, l - i, alpha, field)
        if m:
            layers[l].append((alpha, m))
    return FiltrationReport(B, i, tuple(tuple(x) for x in layers))


# ---------------------------------------------------------------------------
# Associated primes


@dataclass(frozen=True)
class PrimeIdealSet:
    """Monomial primes ``P_F = (X_j | j ∈ F)``, stored as the sets ``F``."""

    n: int
    sets: frozenset[VarSet]

    def sorted(self) -> list[VarSet]:
        return sorted(self.sets, key=lambda F: (popcount(F), members(F)))

    def minimal(self) -> "PrimeIdealSet":
        return PrimeIdealSet(self.n, frozenset(F for F in self.sets if not any(G != F and G & F == G for G in self.sets)))

    def as_tuples(self) -> list[tuple[int, ...]]:
        return [members(F) for F in self.sorted()]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, F) -> bool:
        return F in self.sets


def joint_kernel_dim(B: MonomialIdeal, i: int, F: VarSet, field: Field = QQ) -> int:
    """``dim ⋂_{j∈F} Ker(H^{i-2}(Δ_F) → H^{i-2}(Δ_{F∖j}))``, via one stacked rank."""
    src = delta_of_support(B, F)
    h = reduced_cohomology(src, i - 2, field)
    if h.dim == 0:
        return 0
    blocks = [restriction_on_cohomology(src, delta_of_support(B, F & ~(1 << j)), i - 2, field) for j in members(F)]
    stacked = ExactMatrix.stack(field, blocks, h.dim)
    return h.dim - stacked.rank()


def associated_primes(B: MonomialIdeal, i: int, field: Field = QQ) -> PrimeIdealSet:
    """``Ass(Ext^i_R(R/B, R))`` by the joint-kernel criterion, scanning ``F`` by size."""
    _squarefree_proper(B, "associated_primes")
    found = []
    for F in sorted(subsets(full_set(B.n)), key=lambda F: (popcount(F), members(F))):
        if joint_kernel_dim(B, i, F, field):
            found.append(F)
    return PrimeIdealSet(B.n, frozenset(found))


def minimal_associated_primes(B: MonomialIdeal, i: int, field: Field = QQ) -> PrimeIdealSet:
    """Minimal members of ``Ass(Ext^i_R(R/B, R))`` from the Betti numbers of ``B^∨`` alone.

    ``P_F`` qualifies iff ``β_{|F|-i,F}(B^∨) ≠ 0`` while the same number
    vanishes for every proper subset of ``F``.
    """
    _squarefree_proper(B, "minimal_associated_primes")
    dual = alexander_dual(B)
    nonzero = set()
    out = []
    for F in sorted(subsets(full_set(B.n)), key=lambda F: (popcount(F), members(F))):
        if not hochster_betti(dual, popcount(F) - i, indicator(F, B.n), field):
            continue
        if not any(G & F == G for G in nonzero):
            out.append(F)
        nonzero.add(F)
    return PrimeIdealSet(B.n, frozenset(out))


def betti_support_sets(B: MonomialIdeal, i: int, field: Field = QQ) -> PrimeIdealSet:
    """``{F : β_{|F|-i,F}(B^∨) ≠ 0}``, which contains ``Ass(Ext^i_R(R/B, R))``."""
    _squarefree_proper(B, "betti_support_sets")
    dual = alexander_dual(B)
    sets = [F for F in subsets(full_set(B.n)) if hochster_betti(dual, popcount(F) - i, indicator(F, B.n), field)]
    return PrimeIdealSet(B.n, frozenset(sets))
