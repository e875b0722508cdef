"""Exact dense linear algebra over QQ or GF(p).

Matrices act on column vectors: a matrix of shape ``(m, n)`` maps ``k^n``
to ``k^m``.  Rational entries are :class:`fractions.Fraction`; entries of
GF(p) are ints in ``range(p)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import ArgumentError, DimensionMismatch

DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """The coefficient field: ``characteristic == 0`` means QQ."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ArgumentError(f"GF({p}) is not a field: {p} is not prime")

    @classmethod
    def rational(cls) -> "Field":
        return cls(0)

    @classmethod
    def gf(cls, p: int = DEFAULT_PRIME) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accepts ``rational``/``QQ`` or ``gf <p>``/``GF(p)``."""
        t = text.strip().lower()
        if t in ("rational", "qq", "q"):
            return cls(0)
        m = re.fullmatch(r"(?:gf|zz/)\s*\(?\s*(\d*)\s*\)?", t)
        if m:
            return cls(int(m.group(1)) if m.group(1) else DEFAULT_PRIME)
        raise ArgumentError(f"unrecognised field {text!r}; use 'rational' or 'gf <p>'")

    def __call__(self, x):
        if self.characteristic:
            return int(x) % self.characteristic
        return Fraction(x)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(x, -1, self.characteristic)
        return 1 / x

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __str__(self) -> str:
        return f"GF({self.characteristic})" if self.characteristic else "QQ"


QQ = Field(0)


def _fmt(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


class ExactMatrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows: Optional[Sequence[Sequence]] = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = [[field.zero] * ncols for _ in range(nrows)]
        else:
            if len(rows) != nrows or any(len(r) != ncols for r in rows):
                raise DimensionMismatch(f"rows do not form a {nrows}x{ncols} matrix")
            self.rows = [[field(x) for x in r] for r in rows]

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "ExactMatrix":
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "ExactMatrix":
        m = cls(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field: Field, nrows: int, columns: Sequence[Sequence]) -> "ExactMatrix":
        rows = [[col[i] for col in columns] for i in range(nrows)]
        return cls(field, nrows, len(columns), rows)

    @classmethod
    def stack(cls, field: Field, blocks: Sequence["ExactMatrix"], ncols: int) -> "ExactMatrix":
        """Vertical concatenation; ``ncols`` is needed when ``blocks`` is empty."""
        rows = []
        for b in blocks:
            if b.ncols != ncols:
                raise DimensionMismatch("stacked blocks must have equal column counts")
            rows.extend(b.rows)
        return cls(field, len(rows), ncols, rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.ncols, self.nrows, [self.column(j) for j in range(self.ncols)])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise ArgumentError(f"cannot multiply matrices over {self.field} and {other.field}")
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot compose {self.shape} with {other.shape}")
        p = self.field.characteristic
        out = []
        ocols = other.columns()
        for r in self.rows:
            row = []
            for c in ocols:
                s = sum((a * b for a, b in zip(r, c) if a and b), self.field.zero)
                row.append(s % p if p else s)
            out.append(row)
        return ExactMatrix(self.field, self.nrows, other.ncols, out)

    def apply(self, v: Sequence) -> list:
        p = self.field.characteristic
        out = []
        for r in self.rows:
            s = sum((a * b for a, b in zip(r, v) if a and b), self.field.zero)
            out.append(s % p if p else s)
        return out

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __repr__(self) -> str:
        return f"ExactMatrix({self.field}, {self.nrows}x{self.ncols}, {self.tolist()})"

    def tolist(self) -> list[list[str]]:
        return [[_fmt(x) for x in r] for r in self.rows]

    def rref(self) -> tuple[list[list], list[int]]:
        """Reduced row echelon form and the pivot columns."""
        return rref(self.field, self.rows, self.ncols)

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def nullspace(self) -> list[list]:
        """Basis of the kernel, one vector per free column (in column order)."""
        R, pivots = self.rref()
        k = self.field
        pivot_set = set(pivots)
        basis = []
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            v = [k.zero] * self.ncols
            v[f] = k.one
            for row, pc in zip(R, pivots):
                if row[f]:
                    v[pc] = k(-row[f])
            basis.append(v)
        return basis

    def solve(self, b: Sequence) -> Optional[list]:
        """Some ``x`` with ``self @ x == b``, or ``None`` if there is none.

        Free variables are set to zero, so the answer is unique whenever the
        columns are independent.
        """
        if len(b) != self.nrows:
            raise DimensionMismatch("right-hand side has the wrong length")
        k = self.field
        aug = [list(r) + [k(x)] for r, x in zip(self.rows, b)]
        R, pivots = rref(k, aug, self.ncols + 1)
        if pivots and pivots[-1] == self.ncols:
            return None
        x = [k.zero] * self.ncols
        for row, pc in zip(R, pivots):
            x[pc] = row[-1]
        return x


def rref(field: Field, rows: Sequence[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    p = field.characteristic
    M = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = field.inv(M[r][c])
        if p:
            M[r] = [x * inv % p for x in M[r]]
        else:
            M[r] = [x * inv for x in M[r]]
        pr = M[r]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                row = M[i]
                if p:
                    M[i] = [(x - f * y) % p for x, y in zip(row, pr)]
                else:
                    M[i] = [x - f * y for x, y in zip(row, pr)]
        pivots.append(c)
        r += 1
    return M[:r], pivots


class IncrementalEchelon:
    """Row space maintained in echelon form; tells whether a new vector is independent."""

    def __init__(self, field: Field, length: int):
        self.field = field
        self.length = length
        self._rows: list[tuple[int, list]] = []  # (pivot, normalised row)

    def reduce(self, v: Iterable) -> list:
        k = self.field
        p = k.characteristic
        v = [k(x) for x in v]
        for pc, row in self._rows:
            f = v[pc]
            if f:
                v = [(x - f * y) % p for x, y in zip(v, row)] if p else [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, v: Iterable) -> bool:
        """Insert ``v``; returns False (and changes nothing) if it is already in the span."""
        v = self.reduce(v)
        pc = next((i for i, x in enumerate(v) if x), None)
        if pc is None:
            return False
        k = self.field
        inv = k.inv(v[pc])
        p = k.characteristic
        v = [x * inv % p for x in v] if p else [x * inv for x in v]
        self._rows.append((pc, v))
        return True

    @property
    def rank(self) -> int:
        return len(self._rows)
