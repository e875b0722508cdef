"""Reduced simplicial cohomology over an exact field.

Cochains on a complex are vectors indexed by its ``q``-faces in the
lexicographic order returned by :meth:`SimplicialComplex.faces`.  The
coboundary of a ``q``-cochain ``φ`` is

    (δφ)(τ) = Σ_k (-1)^k φ(τ minus its k-th vertex),

including the augmentation ``C^{-1} = k`` spanned by the empty face for any
non-void complex.  The void complex has no cochains at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

from .combinat import SimplicialComplex, VarSet, members
from .errors import ConsistencyError, DimensionMismatch, PreconditionError
from .linalg import QQ, ExactMatrix, Field, IncrementalEchelon


def coboundary_matrix(cx: SimplicialComplex, q: int, field: Field = QQ) -> ExactMatrix:
    """``δ^q : C^q → C^{q+1}`` as a ``#(q+1)-faces × #q-faces`` matrix."""
    return _coboundary(cx, q, field)


@lru_cache(maxsize=16384)
def _coboundary(cx: SimplicialComplex, q: int, field: Field) -> ExactMatrix:
    src = cx.faces(q)
    dst = cx.faces(q + 1)
    index = {f: j for j, f in enumerate(src)}
    M = ExactMatrix(field, len(dst), len(src))
    one, minus = field(1), field(-1)
    for i, tau in enumerate(dst):
        for k, v in enumerate(members(tau)):
            M.rows[i][index[tau & ~(1 << v)]] = minus if k % 2 else one
    return M


@dataclass(frozen=True, eq=False)
class CohomologyBasis:
    """``H^q(Δ; k)`` together with cocycle representatives of a basis.

    ``representatives[t]`` is a cochain on ``faces``; ``image_basis`` spans
    the coboundaries, and ``image_basis + representatives`` is a basis of the
    cocycles.
    """

    complex: SimplicialComplex
    degree: int
    field: Field
    faces: tuple[VarSet, ...]
    next_faces: tuple[VarSet, ...]
    representatives: tuple[tuple, ...]
    image_basis: tuple[tuple, ...] = dc_field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def coordinates(self, cochain: Sequence) -> list:
        """Coordinates of the class of ``cochain`` in the representative basis.

        Raises ConsistencyError if ``cochain`` is not a cocycle.
        """
        if len(cochain) != len(self.faces):
            raise DimensionMismatch("cochain has the wrong length")
        if not self.representatives:
            if any(self.field(x) for x in _coboundary(self.complex, self.degree, self.field).apply(cochain)):
                raise ConsistencyError("cochain is not a cocycle")
            return []
        A = ExactMatrix.from_columns(self.field, len(self.faces), self.image_basis + self.representatives)
        x = A.solve(cochain)
        if x is None:
            raise ConsistencyError("cochain is not a cocycle")
        return x[len(self.image_basis):]


def reduced_cohomology(cx: SimplicialComplex, q: int, field: Field = QQ) -> CohomologyBasis:
    """Reduced cohomology ``H^q(cx; field)`` with a deterministic basis."""
    return _reduced_cohomology(cx, q, field)


@lru_cache(maxsize=65536)
def _reduced_cohomology(cx: SimplicialComplex, q: int, field: Field) -> CohomologyBasis:
    faces = tuple(cx.faces(q))
    nxt = tuple(cx.faces(q + 1))
    if not faces:
        return CohomologyBasis(cx, q, field, faces, nxt, (), ())
    d_out = _coboundary(cx, q, field)
    d_in = _coboundary(cx, q - 1, field)
    if not (d_out @ d_in).is_zero():
        raise ConsistencyError(f"coboundary does not square to zero at degree {q}")
    _, pivots = d_in.rref()
    image = tuple(tuple(d_in.column(j)) for j in pivots)
    ech = IncrementalEchelon(field, len(faces))
    for v in image:
        ech.add(v)
    reps = []
    for z in d_out.nullspace():
        if ech.add(z):
            reps.append(tuple(z))
    return CohomologyBasis(cx, q, field, faces, nxt, tuple(reps), image)


def cohomology_dims(cx: SimplicialComplex, field: Field = QQ) -> dict[int, int]:
    """Nonzero reduced Betti numbers keyed by degree."""
    out = {}
    for q in range(-1, cx.dimension + 1):
        d = reduced_cohomology(cx, q, field).dim
        if d:
            out[q] = d
    return out


def restriction_on_cohomology(
    cx: SimplicialComplex, sub: SimplicialComplex, q: int, field: Field = QQ
) -> ExactMatrix:
    """Matrix of ``H^q(cx) → H^q(sub)`` induced by the inclusion ``sub ⊆ cx``.

    Shape is ``(dim H^q(sub), dim H^q(cx))``.
    """
    if cx.n != sub.n:
        raise DimensionMismatch("complexes on different vertex sets")
    if not sub.is_subcomplex_of(cx):
        raise PreconditionError(f"{sub} is not a subcomplex of {cx}")
    return _restriction(cx, sub, q, field)


@lru_cache(maxsize=65536)
def _restriction(cx: SimplicialComplex, sub: SimplicialComplex, q: int, field: Field) -> ExactMatrix:
    src = _reduced_cohomology(cx, q, field)
    dst = _reduced_cohomology(sub, q, field)
    if src.dim == 0 or dst.dim == 0:
        return ExactMatrix.zeros(field, dst.dim, src.dim)
    index = {f: j for j, f in enumerate(src.faces)}
    cols = []
    for rep in src.representatives:
        restricted = [rep[index[f]] for f in dst.faces]
        cols.append(dst.coordinates(restricted))
    return ExactMatrix.from_columns(field, dst.dim, cols)


def strand_cohomology(maps: Sequence[ExactMatrix], dims: Sequence[int], position: int) -> int:
    """Cohomology at ``position`` of ``V_0 → V_1 → ... → V_m``.

    ``maps[k]`` is ``V_k → V_{k+1}`` and ``dims[k] = dim V_k``.  Consecutive
    maps must compose to zero; this is checked around ``position``.
    """
    if not 0 <= position < len(dims):
        return 0
    if len(maps) != len(dims) - 1:
        raise DimensionMismatch("need exactly one map between consecutive spaces")
    for k, M in enumerate(maps):
        if M.shape != (dims[k + 1], dims[k]):
            raise DimensionMismatch(f"map {k} has shape {M.shape}, expected {(dims[k + 1], dims[k])}")
    out = maps[position] if position < len(maps) else None
    inc = maps[position - 1] if position > 0 else None
    if out is not None and inc is not None and not (out @ inc).is_zero():
        raise ConsistencyError(f"maps around position {position} do not compose to zero")
    rank_out = out.rank() if out is not None else 0
    rank_in = inc.rank() if inc is not None else 0
    return dims[position] - rank_out - rank_in
