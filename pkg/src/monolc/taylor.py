"""Brute-force homological oracle built on Taylor resolutions.

Nothing here touches the simplicial complexes of :mod:`monolc.localcoh`;
Ext and Tor are read off degree strands of explicit free complexes with
monomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .combinat import MonomialIdeal, _require_nonzero, _require_proper, lcm
from .errors import ArgumentError, ConsistencyError, DimensionMismatch, ResourceLimitError
from .homology import strand_cohomology
from .linalg import QQ, ExactMatrix, Field
from .localcoh import lc_piece

MAX_TAYLOR_GENS = 20


@dataclass(frozen=True)
class TaylorComplex:
    """Taylor resolution ``F^d_•`` of ``R/(m_1^d, ..., m_r^d)``.

    Basis elements of ``F_p`` are the subsets ``I`` of generator indices
    with ``|I| = p`` (bitmasks), of degree ``d·deg(m_I)``.  The differential
    is ``d(f_I) = Σ_{i∈I} (-1)^{pos(i,I)} (m_I/m_{I∖i})^d f_{I∖i}``.
    """

    base: MonomialIdeal
    power: int
    lcms: tuple[tuple[int, ...], ...]  # lcms[I] = m_I, indexed by bitmask

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def rank(self) -> int:
        return self.base.num_gens

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.power * e for e in g) for g in self.base.gens)

    def basis(self, p: int) -> list[int]:
        if not 0 <= p <= self.rank:
            return []
        return [sum(1 << i for i in c) for c in combinations(range(self.rank), p)]

    def degree(self, I: int) -> tuple[int, ...]:
        return tuple(self.power * e for e in self.lcms[I])

    def differential(self, p: int) -> dict[tuple[int, int], tuple[int, tuple[int, ...]]]:
        """Entries of ``d_p : F_p → F_{p-1}`` as ``{(J, I): (sign, monomial)}``."""
        return _differential(self, p)

    def _compute_differential(self, p: int):
        out = {}
        for I in self.basis(p):
            pos = 0
            for i in range(self.rank):
                if I >> i & 1:
                    J = I & ~(1 << i)
                    mono = tuple(a - b for a, b in zip(self.degree(I), self.degree(J)))
                    out[(J, I)] = (-1 if pos % 2 else 1, mono)
                    pos += 1
        return out

    def is_complex(self) -> bool:
        """``d_{p-1} ∘ d_p = 0`` for every ``p``, checked over the polynomial ring."""
        for p in range(2, self.rank + 1):
            upper = self.differential(p)
            lower = self.differential(p - 1)
            by_source: dict[int, list] = {}
            for (J, K), entry in lower.items():
                by_source.setdefault(K, []).append((J, entry))
            acc: dict[tuple[int, int, tuple[int, ...]], int] = {}
            for (K, I), (s1, m1) in upper.items():
                for J, (s2, m2) in by_source.get(K, ()):
                    mono = tuple(a + b for a, b in zip(m1, m2))
                    key = (I, J, mono)
                    acc[key] = acc.get(key, 0) + s1 * s2
            if any(acc.values()):
                return False
        return True


@lru_cache(maxsize=4096)
def _differential(T: TaylorComplex, p: int):
    return T._compute_differential(p)


def build_taylor(B: MonomialIdeal, d: int = 1) -> TaylorComplex:
    _require_nonzero(B, "build_taylor")
    if d < 1:
        raise ArgumentError(f"power d must be >= 1, got {d}")
    r = B.num_gens
    if r > MAX_TAYLOR_GENS:
        raise ResourceLimitError(f"Taylor complex on {r} generators has 2^{r} basis elements; limit is {MAX_TAYLOR_GENS}")
    return _build_taylor(B, d)


@lru_cache(maxsize=1024)
def _build_taylor(B: MonomialIdeal, d: int) -> TaylorComplex:
    r = B.num_gens
    lcms = []
    for I in range(1 << r):
        lcms.append(lcm((B.gens[i] for i in range(r) if I >> i & 1), B.n))
    return TaylorComplex(B, d, tuple(lcms))


def dual_strand(T: TaylorComplex, alpha: Sequence[int], field: Field = QQ):
    """Degree-α part of ``Hom(F^d_•, R)`` as ``(dims, maps, bases)``.

    The basis in cohomological degree ``p`` is the set of ``n·e_I`` with
    ``|I| = p`` and ``deg n = α + d·deg(m_I) ≥ 0``; ``maps[p]`` is the dual
    differential ``C^p → C^{p+1}``.
    """
    alpha = tuple(alpha)
    if len(alpha) != T.n:
        raise DimensionMismatch("degree length does not match the ring")

    def coeff(I):
        return tuple(a + b for a, b in zip(alpha, T.degree(I)))

    bases = []
    for p in range(T.rank + 1):
        bases.append([I for I in T.basis(p) if all(c >= 0 for c in coeff(I))])
    maps = []
    for p in range(T.rank):
        src = {J: j for j, J in enumerate(bases[p])}
        dst = {I: j for j, I in enumerate(bases[p + 1])}
        M = ExactMatrix(field, len(dst), len(src))
        for (J, I), (sign, mono) in T.differential(p + 1).items():
            if J not in src:
                continue
            if I not in dst:
                raise ConsistencyError("dual Taylor differential leaves the strand")
            # n_J · (m_I/m_J)^d must be the basis monomial n_I
            if tuple(a + b for a, b in zip(coeff(J), mono)) != coeff(I):
                raise ConsistencyError("dual Taylor strand is not homogeneous")
            M.rows[dst[I]][src[J]] = field(sign)
        maps.append(M)
    return [len(b) for b in bases], maps, bases


@lru_cache(maxsize=1 << 16)
def _taylor_ext_dims(B: MonomialIdeal, d: int, alpha: tuple[int, ...], field: Field) -> tuple[int, ...]:
    dims, maps, _ = dual_strand(build_taylor(B, d), alpha, field)
    return tuple(strand_cohomology(maps, dims, p) for p in range(len(dims)))


def ext_via_taylor(B: MonomialIdeal, d: int, i: int, alpha: Sequence[int], field: Field = QQ) -> int:
    """``dim Ext^i_R(R/B^[d], R)_α`` from the dualised Taylor resolution of ``B^[d]``.

    ``B^[d]`` is generated by the d-th powers of the minimal generators of
    ``B``; for non-squarefree ``B`` only ``d = 1`` has its usual meaning.
    """
    _require_nonzero(B, "ext_via_taylor")
    if d < 1:
        raise ArgumentError(f"power d must be >= 1, got {d}")
    build_taylor(B, d)  # resource check
    dims = _taylor_ext_dims(B, d, tuple(int(a) for a in alpha), field)
    return dims[i] if 0 <= i < len(dims) else 0


def ext_strand_size(B: MonomialIdeal, d: int, alpha: Sequence[int]) -> int:
    """Number of basis elements of the degree-α dual strand, summed over all positions."""
    T = build_taylor(B, d)
    return sum(dual_strand(T, alpha)[0])


@lru_cache(maxsize=1 << 16)
def _taylor_tor_dims(I: MonomialIdeal, alpha: tuple[int, ...], field: Field) -> tuple[int, ...]:
    T = build_taylor(I, 1)
    r = T.rank
    # homological strand: f_J with deg(m_J) == α exactly
    strand = [[J for J in T.basis(p) if T.degree(J) == alpha] for p in range(r + 1)]
    # list the spaces from p = r down to p = 0 so maps go "forward"
    dims = [len(strand[p]) for p in range(r, -1, -1)]
    maps = []
    for p in range(r, 0, -1):
        src = {J: j for j, J in enumerate(strand[p])}
        dst = {J: j for j, J in enumerate(strand[p - 1])}
        M = ExactMatrix(field, len(dst), len(src))
        for (J, K), (sign, mono) in T.differential(p).items():
            if K in src and J in dst and not any(mono):
                M.rows[dst[J]][src[K]] = field(sign)
        maps.append(M)
    hom = [strand_cohomology(maps, dims, r - p) for p in range(r + 1)]
    return tuple(hom)


def tor_via_taylor(I: MonomialIdeal, i: int, alpha: Sequence[int], field: Field = QQ) -> int:
    """``dim Tor_i^R(I, k)_α`` from the Taylor resolution tensored with ``k``.

    ``Tor_i(I, k) = Tor_{i+1}(R/I, k)`` for a proper nonzero ideal.
    """
    _require_proper(I, "tor_via_taylor")
    build_taylor(I, 1)
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != I.n:
        raise DimensionMismatch("degree length does not match the ring")
    if i < 0 or any(a < 0 for a in alpha):
        return 0
    hom = _taylor_tor_dims(I, alpha, field)
    return hom[i + 1] if i + 1 < len(hom) else 0


@dataclass(frozen=True)
class StabilizationRow:
    d: int
    value: int
    in_range: bool  # α ≥ (-d, ..., -d)


@dataclass(frozen=True)
class StabilizationReport:
    ideal: MonomialIdeal
    i: int
    alpha: tuple[int, ...]
    local_cohomology: int
    rows: tuple[StabilizationRow, ...]

    @property
    def first_stable_d(self):
        return next((r.d for r in self.rows if r.in_range), None)

    @property
    def ok(self) -> bool:
        for r in self.rows:
            expected = self.local_cohomology if r.in_range else 0
            if r.value != expected:
                return False
        return True


def stabilization_check(
    B: MonomialIdeal, i: int, alpha: Sequence[int], d_max: int, field: Field = QQ
) -> StabilizationReport:
    """Tabulate ``Ext^i(R/B^[d], R)_α`` for ``d = 1..d_max`` against ``H^i_B(R)_α``.

    The Ext value must vanish while some ``α_j < -d`` and equal the local
    cohomology value from the first ``d`` with ``α ≥ -d`` onward.
    """
    alpha = tuple(int(a) for a in alpha)
    lc = lc_piece(B, i, alpha, field).dim
    rows = []
    for d in range(1, d_max + 1):
        rows.append(StabilizationRow(d, ext_via_taylor(B, d, i, alpha, field), all(a >= -d for a in alpha)))
    return StabilizationReport(B, i, alpha, lc, tuple(rows))
