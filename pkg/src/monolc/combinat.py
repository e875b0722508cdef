"""Monomial ideals, simplicial complexes and the complexes attached to them.

Conventions used throughout the package:

* variables are indexed ``0 .. n-1``;
* a *VarSet* is a plain ``int`` bitmask over those indices;
* a monomial or a multidegree is a tuple of ``n`` integers;
* a simplicial complex is either *void* (no faces at all) or is given by
  its facets.  The *empty complex* ``{∅}`` is the non-void complex whose
  only facet is the empty set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ArgumentError, DimensionMismatch, DomainError, UnsupportedIdealError

VarSet = int
Monomial = tuple
MultiDegree = tuple

MAX_VARS = 64


# ---------------------------------------------------------------------------
# VarSet helpers


def varset(indices: Iterable[int]) -> VarSet:
    mask = 0
    for i in indices:
        if not 0 <= i < MAX_VARS:
            raise ArgumentError(f"variable index {i} out of range")
        mask |= 1 << i
    return mask


def members(mask: VarSet) -> tuple[int, ...]:
    """Indices in ``mask``, increasing."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: VarSet) -> int:
    return bin(mask).count("1")


def full_set(n: int) -> VarSet:
    return (1 << n) - 1


def subsets(mask: VarSet) -> Iterator[VarSet]:
    """All submasks of ``mask`` (including 0 and ``mask``), in increasing order."""
    bits = members(mask)
    for k in range(1 << len(bits)):
        yield sum(1 << bits[j] for j in range(len(bits)) if k >> j & 1)


def support(exps: Sequence[int]) -> VarSet:
    return sum(1 << j for j, e in enumerate(exps) if e)


def negative_support(alpha: Sequence[int]) -> VarSet:
    """``I_α``: the coordinates where ``alpha`` is at most -1."""
    return sum(1 << j for j, a in enumerate(alpha) if a <= -1)


def indicator(mask: VarSet, n: int) -> tuple[int, ...]:
    """The 0/1 vector of ``mask``."""
    return tuple((mask >> j) & 1 for j in range(n))


def squarefree_degrees(n: int) -> list[tuple[int, ...]]:
    """All of ``{0,1}^n``, ordered by weight then lexicographically by support."""
    masks = sorted(range(1 << n), key=lambda m: (popcount(m), members(m)))
    return [indicator(m, n) for m in masks]


# ---------------------------------------------------------------------------
# Monomials and ideals


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(monomials: Iterable[Sequence[int]], n: int) -> Monomial:
    out = [0] * n
    for m in monomials:
        for j, e in enumerate(m):
            if e > out[j]:
                out[j] = e
    return tuple(out)


def _lex_key(m: Sequence[int]):
    # descending lex order with X_0 > X_1 > ...: ab before cd
    return tuple(-e for e in m)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Build instances with :func:`minimalize` (or :meth:`from_sets`), which
    guarantees minimality.  ``gens`` is sorted in descending lex order, so
    generator ``k`` of ``(ab, cd)`` is ``ab`` for ``k = 0``.  An empty
    ``gens`` is the zero ideal.
    """

    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "MonomialIdeal":
        gens = []
        for s in sets:
            m = [0] * n
            for j in s:
                if not 0 <= j < n:
                    raise DimensionMismatch(f"variable {j} outside ambient size {n}")
                m[j] = 1
            gens.append(tuple(m))
        return minimalize(gens, n=n)

    @property
    def squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    @property
    def num_gens(self) -> int:
        return len(self.gens)

    def supports(self) -> tuple[VarSet, ...]:
        return tuple(support(g) for g in self.gens)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __str__(self) -> str:
        return format_ideal(self)


def format_monomial(m: Sequence[int], names: Optional[Sequence[str]] = None) -> str:
    if names is None:
        names = default_names(len(m))
    if not any(m):
        return "1"
    sep = "" if all(len(x) == 1 for x in names) else "*"
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return sep.join(parts)


def format_ideal(B: MonomialIdeal, names: Optional[Sequence[str]] = None) -> str:
    if B.is_zero:
        return "(0)"
    return "(" + ", ".join(format_monomial(g, names) for g in B.gens) + ")"


def default_names(n: int) -> list[str]:
    if n <= 26:
        return [chr(ord("a") + j) for j in range(n)]
    return [f"x{j + 1}" for j in range(n)]


def minimalize(gens: Iterable[Sequence[int]], n: Optional[int] = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, with redundant generators removed."""
    gens = [tuple(int(e) for e in g) for g in gens]
    if not gens:
        if n is None:
            raise ArgumentError("cannot infer the ambient ring of an empty generator set")
        return MonomialIdeal.zero(n)
    sizes = {len(g) for g in gens}
    if n is not None:
        sizes.add(n)
    if len(sizes) != 1:
        raise DimensionMismatch(f"generators live in rings of sizes {sorted(sizes)}")
    (n,) = sizes
    if n > MAX_VARS:
        raise ArgumentError(f"at most {MAX_VARS} variables are supported")
    if any(e < 0 for g in gens for e in g):
        raise ArgumentError("negative exponent in a monomial")
    # sort by total degree so a divisor is always seen before its multiples
    keep: list[Monomial] = []
    for g in sorted(set(gens), key=lambda g: (sum(g), _lex_key(g))):
        if not any(divides(h, g) for h in keep):
            keep.append(g)
    return MonomialIdeal(n, tuple(sorted(keep, key=_lex_key)))


def contains(B: MonomialIdeal, m: Sequence[int]) -> bool:
    if len(m) != B.n:
        raise DimensionMismatch(f"monomial of length {len(m)} in a ring with {B.n} variables")
    return any(divides(g, m) for g in B.gens)


def radical(B: MonomialIdeal) -> MonomialIdeal:
    return minimalize([tuple(min(e, 1) for e in g) for g in B.gens], n=B.n)


def frobenius_power(B: MonomialIdeal, d: int) -> MonomialIdeal:
    """``B^[d]``: the ideal generated by the d-th powers of the minimal generators."""
    if d < 1:
        raise ArgumentError(f"Frobenius power needs d >= 1, got {d}")
    _require_squarefree(B, "frobenius_power")
    return MonomialIdeal(B.n, tuple(tuple(d * e for e in g) for g in B.gens))


def _require_squarefree(B: MonomialIdeal, what: str) -> None:
    if not B.squarefree:
        raise UnsupportedIdealError(f"{what} needs a squarefree monomial ideal")


def _require_nonzero(B: MonomialIdeal, what: str) -> None:
    if B.is_zero:
        raise DomainError(f"{what} is undefined for the zero ideal")


def _require_proper(B: MonomialIdeal, what: str) -> None:
    _require_nonzero(B, what)
    if B.is_unit:
        raise DomainError(f"{what} is undefined for the unit ideal")


@lru_cache(maxsize=4096)
def alexander_dual(B: MonomialIdeal) -> MonomialIdeal:
    """Alexander dual of a squarefree ideal.

    ``X^F`` lies in the dual iff ``X^{F^c}`` is not in ``B``, i.e. iff ``F``
    meets the support of every generator; the minimal generators are the
    minimal transversals of the generator supports (computed incrementally).
    """
    _require_squarefree(B, "alexander_dual")
    _require_proper(B, "alexander_dual")
    transversals = {0}
    for s in B.supports():
        grown = set()
        for t in transversals:
            if t & s:
                grown.add(t)
            else:
                for j in members(s):
                    grown.add(t | (1 << j))
        transversals = {t for t in grown if not any(u != t and u & t == u for u in grown)}
    return minimalize((indicator(t, B.n) for t in transversals), n=B.n)


# ---------------------------------------------------------------------------
# Simplicial complexes


def _maximal(sets: Iterable[VarSet]) -> frozenset[VarSet]:
    sets = set(sets)
    return frozenset(s for s in sets if not any(t != s and t & s == s for t in sets))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the vertex set ``0 .. n-1``.

    ``facets is None`` encodes the void complex.  Faces are bitmasks.
    """

    n: int
    facets: Optional[frozenset[VarSet]]

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, None)

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset({0}))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int] | VarSet]) -> "SimplicialComplex":
        """Downward closure of ``faces``; an empty iterable gives the *empty* complex."""
        masks = [f if isinstance(f, int) else varset(f) for f in faces]
        if any(m >> n for m in masks):
            raise DimensionMismatch(f"face outside vertex set of size {n}")
        return cls(n, _maximal(masks) if masks else frozenset({0}))

    @classmethod
    def simplex(cls, vertices: VarSet, n: int) -> "SimplicialComplex":
        return cls(n, frozenset({vertices}))

    @property
    def is_void(self) -> bool:
        return self.facets is None

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == frozenset({0})

    @property
    def dimension(self) -> int:
        if self.facets is None:
            return -2
        return max(popcount(f) for f in self.facets) - 1

    def sorted_facets(self) -> list[tuple[int, ...]]:
        if self.facets is None:
            return []
        return sorted(members(f) for f in self.facets)

    def __contains__(self, face) -> bool:
        if self.facets is None:
            return False
        if not isinstance(face, int):
            face = varset(face)
        return any(face & f == face for f in self.facets)

    def faces(self, q: int) -> list[VarSet]:
        """The ``q``-dimensional faces in lexicographic order of their vertex lists."""
        if self.facets is None or q < -1:
            return []
        if q == -1:
            return [0]
        found = set()
        for f in self.facets:
            verts = members(f)
            if len(verts) > q:
                for c in combinations(verts, q + 1):
                    found.add(c)
        return [varset(c) for c in sorted(found)]

    def all_faces(self) -> list[VarSet]:
        out = []
        for q in range(-1, self.dimension + 1):
            out.extend(self.faces(q))
        return out

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        if self.n != other.n:
            return False
        if self.facets is None:
            return True
        return all(f in other for f in self.facets)

    def __str__(self) -> str:
        if self.facets is None:
            return "void"
        return "<" + " ".join("{" + ",".join(map(str, f)) + "}" for f in self.sorted_facets()) + ">"


@lru_cache(maxsize=4096)
def stanley_reisner_complex(B: MonomialIdeal) -> SimplicialComplex:
    """``Δ = {F : ∏_{j∉F} X_j ∈ B}``, the complex whose Stanley–Reisner ideal is ``B^∨``.

    ``F`` is a face iff its complement contains a generator support, so the
    facets are exactly the complements of the generator supports.
    """
    _require_squarefree(B, "stanley_reisner_complex")
    _require_nonzero(B, "stanley_reisner_complex")
    top = full_set(B.n)
    return SimplicialComplex(B.n, _maximal(top & ~s for s in B.supports()))


def full_subcomplex(cx: SimplicialComplex, I: VarSet) -> SimplicialComplex:
    """``Δ_I``; void when ``I`` is empty."""
    if cx.facets is None:
        raise DomainError("full subcomplex of the void complex")
    if I == 0:
        return SimplicialComplex.void(cx.n)
    return SimplicialComplex(cx.n, _maximal(f & I for f in cx.facets))


def t_complex(B: MonomialIdeal, I: VarSet) -> SimplicialComplex:
    """``T_I = ⋃_{i∈I} T_i`` on generator indices ``0 .. r-1``; void when ``I`` is empty.

    ``T_i`` is the full simplex on the generators not divisible by ``X_i``
    (``X_i ∤ m_J`` iff ``X_i`` divides no generator in ``J``).
    """
    _require_squarefree(B, "t_complex")
    r = B.num_gens
    if I == 0:
        return SimplicialComplex.void(r)
    sups = B.supports()
    pieces = []
    for i in members(I):
        pieces.append(sum(1 << k for k, s in enumerate(sups) if not s >> i & 1))
    return SimplicialComplex(r, _maximal(pieces))


def delta_alpha(B: MonomialIdeal, alpha: Sequence[int]) -> SimplicialComplex:
    """``Δ_α`` for an arbitrary nonzero monomial ideal.

    ``J`` is a face iff some generator ``g`` has ``α_j + g_j < 0`` for all
    ``j ∈ J``.  Void exactly when ``α ≥ 0``.
    """
    _require_nonzero(B, "delta_alpha")
    if len(alpha) != B.n:
        raise DimensionMismatch(f"degree of length {len(alpha)} in a ring with {B.n} variables")
    if all(a >= 0 for a in alpha):
        return SimplicialComplex.void(B.n)
    neg = [sum(1 << j for j in range(B.n) if alpha[j] + g[j] < 0) for g in B.gens]
    return SimplicialComplex(B.n, _maximal(neg))
