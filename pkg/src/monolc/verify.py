"""Cross-validation of the simplicial pathway against brute force and the Taylor oracle."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field as dc_field
from itertools import product

from .combinat import (
    MonomialIdeal,
    SimplicialComplex,
    alexander_dual,
    contains,
    full_set,
    indicator,
    members,
    minimalize,
    squarefree_degrees,
    stanley_reisner_complex,
)
from .homology import restriction_on_cohomology
from .linalg import QQ, Field
from .localcoh import (
    evaluate_series,
    ext_piece,
    ext_piece_general,
    hilbert_function_box,
    hilbert_series_closed_form,
    hochster_betti,
    lc_piece,
    lc_piece_via_T,
    multiplication_map,
)
from .structure import associated_primes, betti_support_sets, check_betti_inequality, minimal_associated_primes
from .taylor import build_taylor, ext_via_taylor, tor_via_taylor

MAX_BOX = 1024


@dataclass
class Mismatch:
    check: str
    detail: str

    def __str__(self) -> str:
        return f"{self.check}: {self.detail}"


@dataclass
class VerifyReport:
    ideal: MonomialIdeal
    counts: Counter = dc_field(default_factory=Counter)
    mismatches: list[Mismatch] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def expect(self, check: str, good: bool, detail) -> None:
        self.counts[check] += 1
        if not good:
            self.mismatches.append(Mismatch(check, detail() if callable(detail) else str(detail)))


def random_squarefree_ideal(rng: random.Random, n: int, max_gens: int) -> MonomialIdeal:
    """A nonzero proper squarefree ideal in ``n`` variables with at most ``max_gens`` generators."""
    r = rng.randint(1, max_gens)
    sets: list[int] = []
    # draw until r pairwise incomparable supports are found (or we give up)
    for _ in range(20 * r):
        if len(sets) == r:
            break
        F = rng.randint(1, full_set(n))
        if all(F & G not in (F, G) for G in sets):
            sets.append(F)
    return minimalize((indicator(s, n) for s in sets), n=n)


def random_corpus(seed: int, count: int, n_max: int, max_gens: int, n_min: int = 2) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    return [random_squarefree_ideal(rng, rng.randint(n_min, n_max), max_gens) for _ in range(count)]


def brute_alexander_dual(B: MonomialIdeal) -> MonomialIdeal:
    """Dual straight from the definition: ``X^F`` for every ``F`` with ``X^{F^c} ∉ B``."""
    top = full_set(B.n)
    gens = [indicator(F, B.n) for F in range(1 << B.n) if not contains(B, indicator(top & ~F, B.n))]
    return minimalize(gens, n=B.n)


def brute_stanley_reisner_faces(B: MonomialIdeal) -> set[int]:
    top = full_set(B.n)
    return {F for F in range(1 << B.n) if contains(B, indicator(top & ~F, B.n))}


def _box(lo: int, hi: int, n: int, rng: random.Random):
    if (hi - lo + 1) ** n <= MAX_BOX:
        return list(product(range(lo, hi + 1), repeat=n))
    return [tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(MAX_BOX)]


def verify_ideal(B: MonomialIdeal, field: Field = QQ, d_max: int = 2, seed: int = 0) -> VerifyReport:
    """Run every oracle-equivalence check that applies to ``B``."""
    rep = VerifyReport(B)
    rng = random.Random(seed)
    n = B.n
    for d in range(1, d_max + 1):
        rep.expect("taylor-d2", build_taylor(B, d).is_complex(), lambda: f"d^2 != 0 for d={d}")
    if not B.squarefree:
        _verify_general(B, field, rep, rng)
        return rep

    dual = alexander_dual(B)
    rep.expect("dual-involution", alexander_dual(dual) == B, lambda: f"(B^v)^v = {alexander_dual(dual)}")
    rep.expect("dual-definition", brute_alexander_dual(B) == dual, lambda: f"brute dual {brute_alexander_dual(B)} != {dual}")
    cx = stanley_reisner_complex(B)
    rep.expect(
        "stanley-reisner",
        set(cx.all_faces()) == brute_stanley_reisner_faces(B),
        "face sets differ from subset enumeration",
    )
    # minimal non-faces of Δ are the generator supports of B^∨
    faces = set(cx.all_faces())
    nonfaces = [F for F in range(1 << n) if F not in faces and all(F & ~(1 << j) in faces for j in members(F))]
    rep.expect("stanley-reisner", sorted(nonfaces) == sorted(dual.supports()), "minimal non-faces != dual supports")

    for alpha in squarefree_degrees(n):
        neg = tuple(-a for a in alpha)
        for i in range(n + 1):
            h = hochster_betti(dual, i, alpha, field)
            e = ext_piece(B, sum(alpha) - i, neg, field).dim
            t = tor_via_taylor(dual, i, alpha, field)
            rep.expect("duality", h == e, lambda: f"beta_{i},{alpha}(B^v)={h} but Ext={e}")
            rep.expect("tor-oracle", h == t, lambda: f"beta_{i},{alpha}(B^v): Hochster {h}, Taylor {t}")

    for I in range(1 << n):
        alpha = tuple(-1 if I >> j & 1 else 0 for j in range(n))
        for i in range(n + 2):
            a = lc_piece(B, i, alpha, field).dim
            b = lc_piece_via_T(B, i, alpha, field).dim
            c = ext_piece_general(B, i, alpha, field).dim
            rep.expect("nerve", a == b, lambda: f"H^{i} at I={members(I)}: Delta {a}, T {b}")
            rep.expect("delta-alpha", a == c, lambda: f"H^{i} at I={members(I)}: Delta_I {a}, Delta_alpha {c}")
        for i in range(2, n + 2):
            for l in range(n):
                M = multiplication_map(B, i, alpha, l, field)
                if alpha[l] != -1:
                    rep.expect("mult-iso", M.is_invertible(), lambda: f"nu_{l} at I={members(I)}, i={i} not invertible")
                for m in range(n):
                    rep.expect(
                        "mult-commute",
                        _composite(B, i, alpha, l, m, field) == _composite(B, i, alpha, m, l, field),
                        lambda: f"nu_{l}nu_{m} != nu_{m}nu_{l} at I={members(I)}, i={i}",
                    )

    for alpha in _box(-2, 1, n, rng):
        for d in range(1, d_max + 1):
            for i in range(n + 1):
                got = ext_via_taylor(B, d, i, alpha, field)
                want = lc_piece(B, i, alpha, field).dim if all(a >= -d for a in alpha) else 0
                rep.expect("stabilization", got == want, lambda: f"Ext^{i}(R/B^[{d}])_{alpha}={got}, expected {want}")

    ineq = check_betti_inequality(B, field)
    for row in ineq.rows:
        rep.expect("betti-inequality", not row.violation, lambda: f"{row}")

    box = _box(-1, 2, n, rng)
    for i in range(n + 1):
        terms = hilbert_series_closed_form(B, i, field)
        values = hilbert_function_box(B, i, (-1,) * n, (2,) * n, field, kind="ext") if len(box) == 4**n else None
        for beta in box:
            want = values[beta] if values is not None else ext_piece(B, i, beta, field).dim
            got = evaluate_series(terms, beta)
            rep.expect("hilbert", got == want, lambda: f"Ext^{i}_{beta}: series {got}, direct {want}")

        ass = associated_primes(B, i, field)
        mins = minimal_associated_primes(B, i, field)
        rep.expect("ass-minimal", ass.minimal().sets == mins.sets, lambda: f"i={i}: {ass.as_tuples()} vs {mins.as_tuples()}")
        sup = betti_support_sets(B, i, field)
        rep.expect("ass-support", ass.sets <= sup.sets, lambda: f"i={i}: Ass not inside Betti support")
    return rep


def _composite(B, i, alpha, l, m, field):
    first = multiplication_map(B, i, alpha, l, field)
    mid = tuple(a + (j == l) for j, a in enumerate(alpha))
    return multiplication_map(B, i, mid, m, field) @ first


def _verify_general(B: MonomialIdeal, field: Field, rep: VerifyReport, rng: random.Random) -> None:
    top = max(e for g in B.gens for e in g)
    n = B.n
    for alpha in _box(-top - 1, 1, n, rng):
        for i in range(n + 1):
            a = ext_piece_general(B, i, alpha, field).dim
            b = ext_via_taylor(B, 1, i, alpha, field)
            rep.expect("general-ext", a == b, lambda: f"Ext^{i}_{alpha}: Delta_alpha {a}, Taylor {b}")


def functoriality_holds(
    cx: SimplicialComplex, mid: SimplicialComplex, sub: SimplicialComplex, q: int, field: Field = QQ
) -> bool:
    """``res(cx→sub) == res(mid→sub) · res(cx→mid)`` for ``sub ⊆ mid ⊆ cx``."""
    direct = restriction_on_cohomology(cx, sub, q, field)
    two = restriction_on_cohomology(mid, sub, q, field) @ restriction_on_cohomology(cx, mid, q, field)
    return direct == two


__all__ = [
    "Mismatch",
    "VerifyReport",
    "brute_alexander_dual",
    "brute_stanley_reisner_faces",
    "functoriality_holds",
    "random_corpus",
    "random_squarefree_ideal",
    "verify_ideal",
]
