"""Exact determinant engines.

All engines accept a :class:`PolyMatrix` or a :class:`RatMatrix` and return
an element of the same domain.  They exist in several independent flavours
so that each can be checked against the others:

* ``laplace``   cofactor expansion, the brute-force oracle (size <= 6)
* ``bareiss``   fraction-free elimination with exact quotients
* ``gauss``     elimination over the field of rational functions
* ``condense``  Dodgson condensation, falling back to elimination when an
                interior minor vanishes
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import OutOfBounds, TooLarge
from .exact import Polynomial, RationalFunction
from .matrices import PolyMatrix, RatMatrix

Matrix = Union[PolyMatrix, RatMatrix]
Entry = Union[Polynomial, RationalFunction]

LAPLACE_MAX = 6
ENGINES = ("bareiss", "gauss", "condense", "laplace")


def _quotient(a: Entry, b: Entry) -> Entry:
    if isinstance(a, Polynomial):
        return a.exact_div(b)
    return a / b


def det_laplace(mat: Matrix) -> Entry:
    """Cofactor expansion along the first row."""
    n = mat.size
    if n > LAPLACE_MAX:
        raise TooLarge(f"laplace engine is capped at {LAPLACE_MAX}x{LAPLACE_MAX}, got {n}x{n}")
    rows = mat.rows
    zero = mat.zero

    def expand(r: int, cols: tuple) -> Entry:
        if len(cols) == 1:
            return rows[r][cols[0]]
        total = zero
        for pos, c in enumerate(cols):
            e = rows[r][c]
            if e.is_zero:
                continue
            sub = expand(r + 1, cols[:pos] + cols[pos + 1:])
            total = total - e * sub if pos % 2 else total + e * sub
        return total

    return expand(0, tuple(range(n)))


def det_bareiss(mat: Matrix) -> Entry:
    """Fraction-free Gaussian elimination.

    Every division is by the previous pivot and is exact; a remainder would
    raise :class:`NotDivisible`, which signals a bug rather than bad input.
    """
    n = mat.size
    a = [list(row) for row in mat.rows]
    sign = 1
    prev = mat.one
    for k in range(n - 1):
        if a[k][k].is_zero:
            for r in range(k + 1, n):
                if not a[r][k].is_zero:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return mat.zero
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                if lead.is_zero:
                    num = pivot * row_i[j]
                else:
                    num = pivot * row_i[j] - lead * row_k[j]
                row_i[j] = _quotient(num, prev) if k else num
        prev = pivot
    result = a[n - 1][n - 1]
    return -result if sign < 0 else result


def det_field_gauss(mat: Matrix) -> RationalFunction:
    """Elimination over rational functions, pivoting on the first nonzero entry."""
    if isinstance(mat, PolyMatrix):
        mat = mat.to_ratmatrix()
    n = mat.size
    a = [list(row) for row in mat.rows]
    det = mat.one
    for k in range(n):
        if a[k][k].is_zero:
            for r in range(k + 1, n):
                if not a[r][k].is_zero:
                    a[k], a[r] = a[r], a[k]
                    det = -det
                    break
            else:
                return mat.zero
        pivot = a[k][k]
        det = det * pivot
        for i in range(k + 1, n):
            if a[i][k].is_zero:
                continue
            factor = a[i][k] / pivot
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                if not row_k[j].is_zero:
                    row_i[j] = row_i[j] - factor * row_k[j]
    return det


class CondensationResult(NamedTuple):
    value: Entry
    fallback_used: bool


def condense(mat: Matrix) -> CondensationResult:
    """Dodgson condensation with its fallback flag.

    Each round replaces the k x k contiguous minors by (k+1) x (k+1) ones via
    A_{k+1} = (A_k(i,j) A_k(i+1,j+1) - A_k(i,j+1) A_k(i+1,j)) / A_{k-1}(i+1,j+1).
    A zero divisor sends the whole matrix to elimination instead.
    """
    n = mat.size
    if n == 1:
        return CondensationResult(mat.rows[0][0], False)
    prev = None
    cur = [list(row) for row in mat.rows]
    while len(cur) > 1:
        size = len(cur) - 1
        nxt = []
        for i in range(size):
            row = []
            for j in range(size):
                val = cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]
                if prev is not None:
                    divisor = prev[i + 1][j + 1]
                    if divisor.is_zero:
                        return CondensationResult(_eliminate(mat), True)
                    val = _quotient(val, divisor)
                row.append(val)
            nxt.append(row)
        prev, cur = cur, nxt
    return CondensationResult(cur[0][0], False)


def det_condensation(mat: Matrix) -> Entry:
    return condense(mat).value


def _eliminate(mat: Matrix) -> Entry:
    if isinstance(mat, PolyMatrix):
        return det_bareiss(mat)
    return det_field_gauss(mat)


@dataclass(frozen=True)
class MinorRef:
    """k x k contiguous submatrix with 1-based top-left corner (i, j)."""

    k: int
    i: int
    j: int


def minor(mat: Matrix, ref: MinorRef) -> Entry:
    if ref.k < 0:
        raise OutOfBounds(f"negative minor size {ref.k}")
    if ref.k == 0:
        return mat.one
    if ref.i < 1 or ref.j < 1 or ref.i + ref.k - 1 > mat.nrows or ref.j + ref.k - 1 > mat.ncols:
        raise OutOfBounds(f"{ref} does not fit in a {mat.nrows}x{mat.ncols} matrix")
    return _eliminate(mat.submatrix(ref.i - 1, ref.j - 1, ref.k))


def desnanot_jacobi_residual(mat: Matrix) -> Entry:
    """A_m(1,1) A_{m-2}(2,2) - A_{m-1}(1,1) A_{m-1}(2,2) + A_{m-1}(2,1) A_{m-1}(1,2)."""
    m = mat.size
    if m < 2:
        raise ValueError("Desnanot-Jacobi needs a matrix of size >= 2")
    return (
        minor(mat, MinorRef(m, 1, 1)) * minor(mat, MinorRef(m - 2, 2, 2))
        - minor(mat, MinorRef(m - 1, 1, 1)) * minor(mat, MinorRef(m - 1, 2, 2))
        + minor(mat, MinorRef(m - 1, 2, 1)) * minor(mat, MinorRef(m - 1, 1, 2))
    )


class DetOutcome(NamedTuple):
    value: Entry
    fallback_used: bool = False


def determinant(mat: Matrix, engine: str = "bareiss") -> DetOutcome:
    """Run one engine; the result is in the matrix's own domain."""
    if engine == "bareiss":
        return DetOutcome(det_bareiss(mat))
    if engine == "laplace":
        return DetOutcome(det_laplace(mat))
    if engine == "condense":
        res = condense(mat)
        return DetOutcome(res.value, res.fallback_used)
    if engine == "gauss":
        value = det_field_gauss(mat)
        if isinstance(mat, PolyMatrix):
            value = value.to_polynomial()
        return DetOutcome(value)
    raise ValueError(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
