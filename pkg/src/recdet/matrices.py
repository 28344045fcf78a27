"""Matrix containers, the four structured matrix families, and the text dump."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .errors import MissingProfile, ParseError, ZeroDenominator
from .exact import (
    ONE,
    Polynomial,
    RationalFunction,
    parse_polynomial,
    parse_rational_function,
)
from .sequences import RecurrenceSpec, sequence_for


class _Matrix:
    """Immutable dense matrix, stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def size(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("matrix is not square")
        return self.nrows

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return type(self) is type(other) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def transpose(self):
        return type(self)(zip(*self.rows))

    def map(self, fn: Callable):
        return type(self)([[fn(e) for e in row] for row in self.rows])

    def submatrix(self, top: int, left: int, k: int):
        """k x k block with 0-based top-left corner (top, left)."""
        return type(self)([row[left:left + k] for row in self.rows[top:top + k]])

    def __repr__(self):
        return f"{type(self).__name__}({self.nrows}x{self.ncols})"

    def __str__(self):
        return format_matrix(self)


class PolyMatrix(_Matrix):
    __slots__ = ()
    zero = Polynomial()
    one = ONE

    def __init__(self, rows):
        super().__init__(rows)
        if not all(isinstance(e, Polynomial) for row in self.rows for e in row):
            raise TypeError("PolyMatrix entries must be Polynomial")

    def to_ratmatrix(self) -> "RatMatrix":
        return RatMatrix([[RationalFunction.from_polynomial(e) for e in row] for row in self.rows])


class RatMatrix(_Matrix):
    __slots__ = ()
    zero = RationalFunction(0)
    one = RationalFunction(1)

    def __init__(self, rows):
        super().__init__(rows)
        if not all(isinstance(e, RationalFunction) for row in self.rows for e in row):
            raise TypeError("RatMatrix entries must be RationalFunction")


# --- text dump -------------------------------------------------------------

def format_matrix(mat: _Matrix) -> str:
    """Row-major dump, one row per line, entries joined by ' | '."""
    return "\n".join(" | ".join(str(e) for e in row) for row in mat.rows)


def parse_matrix(text: str):
    """Parse a matrix dump.  Returns a PolyMatrix when every entry is a
    polynomial, otherwise a RatMatrix."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix")
    cells = [[c.strip() for c in ln.split("|")] for ln in lines]
    if any("(" in c for row in cells for c in row):
        return RatMatrix([[parse_rational_function(c) for c in row] for row in cells])
    return PolyMatrix([[parse_polynomial(c) for c in row] for row in cells])


# --- identity parameters ---------------------------------------------------

@dataclass(frozen=True)
class IndexProfile:
    """Integer shifts d_1..d_m and e_1..e_m for the product-matrix family."""

    d_seq: tuple
    e_seq: tuple

    def __post_init__(self):
        object.__setattr__(self, "d_seq", tuple(int(v) for v in self.d_seq))
        object.__setattr__(self, "e_seq", tuple(int(v) for v in self.e_seq))
        if len(self.d_seq) != len(self.e_seq):
            raise ValueError("d_seq and e_seq must have the same length")

    @property
    def m(self) -> int:
        return len(self.d_seq)


@dataclass(frozen=True)
class IdentityCase:
    spec: RecurrenceSpec
    s: int = 0
    k: int = 1
    n: int = 0
    m: int = 1
    d: int = 1
    profile: Optional[IndexProfile] = field(default=None)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if self.profile is not None and self.profile.m != self.m:
            raise ValueError(f"profile has length {self.profile.m}, expected m={self.m}")

    def index(self, i: int, j: int) -> int:
        """Flat sequence index s + k(n + i + j)."""
        return self.s + self.k * (self.n + i + j)

    @property
    def sequence(self):
        return sequence_for(self.spec)


def power_matrix(case: IdentityCase) -> PolyMatrix:
    """[P_{s+k(n+i+j)}^m], size (m+1) x (m+1)."""
    seq = case.sequence
    size = case.m + 1
    # entries depend only on i + j
    diag = [seq.term(case.index(t, 0)) ** case.m for t in range(2 * size - 1)]
    return PolyMatrix([[diag[i + j] for j in range(size)] for i in range(size)])


def product_matrix(case: IdentityCase) -> PolyMatrix:
    """Entry (i, j) = prod_{f=j+1..m} P_{s+k(n+i+d_f)} * prod_{g=1..j} P_{s+k(n+i+e_g)}."""
    if case.profile is None:
        raise MissingProfile("product_matrix needs an IndexProfile")
    seq = case.sequence
    m = case.m
    d_seq, e_seq = case.profile.d_seq, case.profile.e_seq
    rows = []
    for i in range(m + 1):
        d_terms = [seq.term(case.index(i, d)) for d in d_seq]
        e_terms = [seq.term(case.index(i, e)) for e in e_seq]
        # suffix products over d, prefix products over e
        suffix = [ONE] * (m + 1)
        for f in range(m - 1, -1, -1):
            suffix[f] = suffix[f + 1] * d_terms[f]
        row = []
        prefix = ONE
        for j in range(m + 1):
            if j > 0:
                prefix = prefix * e_terms[j - 1]
            row.append(suffix[j] * prefix)
        rows.append(row)
    return PolyMatrix(rows)


def reciprocal_matrix(case: IdentityCase) -> RatMatrix:
    """[1 / P_{s+k(n+i+j)}]; raises ZeroDenominator(index) on a zero term."""
    seq = case.sequence
    size = case.m + 1
    diag = []
    for t in range(2 * size - 1):
        idx = case.index(t, 0)
        p = seq.term(idx)
        if p.is_zero:
            raise ZeroDenominator(idx)
        diag.append(RationalFunction(ONE, p))
    return RatMatrix([[diag[i + j] for j in range(size)] for i in range(size)])


def rising_matrix(case: IdentityCase) -> PolyMatrix:
    """[P_{n+i+j}^<m>], size d x d."""
    seq = case.sequence
    diag = [seq.rising_power(case.n + t, case.m) for t in range(2 * case.d - 1)]
    return PolyMatrix([[diag[i + j] for j in range(case.d)] for i in range(case.d)])
