import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recdet.engines import (
    ENGINES,
    LAPLACE_MAX,
    MinorRef,
    condense,
    desnanot_jacobi_residual,
    det_bareiss,
    det_condensation,
    det_field_gauss,
    det_laplace,
    determinant,
    minor,
)
from recdet.errors import OutOfBounds, TooLarge
from recdet.exact import ONE, RationalFunction, ZERO, parse_polynomial as P
from recdet.matrices import IdentityCase, PolyMatrix, RatMatrix, power_matrix
from recdet.sequences import fibonacci

from conftest import random_nonzero_poly, random_poly, random_polymatrix, random_ratmatrix


def poly_rows(*rows):
    return PolyMatrix([[P(e) for e in row] for row in rows])


def permutation_det(mat):
    """Leibniz formula, an oracle independent of every engine."""
    n = mat.size
    total = mat.zero
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = mat.one
        for r in range(n):
            term = term * mat[r, perm[r]]
        total = total - term if inversions % 2 else total + term
    return total


def identity(n):
    return PolyMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])


def test_laplace_examples():
    assert det_laplace(poly_rows(["0", "1"], ["1", "x"])) == P("-1")
    assert det_laplace(identity(3)) == ONE
    assert det_laplace(poly_rows(["x", "2"], ["x", "2"])) == ZERO
    with pytest.raises(TooLarge):
        det_laplace(identity(LAPLACE_MAX + 1))


def test_bareiss_examples():
    rng = random.Random(11)
    mat = random_polymatrix(rng, 4)
    assert det_bareiss(mat) == permutation_det(mat)
    rows = [[random_poly(rng) for _ in range(3)] for _ in range(2)]
    assert det_bareiss(PolyMatrix([rows[0], rows[1], rows[0]])) == ZERO
    assert det_bareiss(poly_rows(["x^2 - 3"])) == P("x^2 - 3")


def test_field_gauss_examples():
    mat = RatMatrix([
        [RationalFunction(1), RationalFunction(1, P("x"))],
        [RationalFunction(1, P("x")), RationalFunction(1, P("x^2 + 1"))],
    ])
    # 1/(x^2 + 1) - 1/x^2 = -1/(x^2 (x^2 + 1))
    assert det_field_gauss(mat) == RationalFunction(-1, P("x^4 + x^2"))
    f, g = RationalFunction(P("x"), P("x + 1")), RationalFunction(P("x^2 - 2"))
    zero = RationalFunction(0)
    assert det_field_gauss(RatMatrix([[f, zero], [zero, g]])) == f * g
    assert det_field_gauss(RatMatrix([[f, g], [zero, zero]])).is_zero


def test_condensation_examples():
    mat = power_matrix(IdentityCase(fibonacci().spec, 0, 1, 1, 2))
    assert det_condensation(mat) == det_bareiss(mat)
    assert det_condensation(poly_rows(["x", "2"], ["3", "5"])) == P("5*x - 6")
    # zero centre at size 3 is an interior divisor
    forced = poly_rows(["1", "x", "2"], ["x", "0", "1"], ["3", "x^2", "x"])
    res = condense(forced)
    assert res.fallback_used
    assert res.value == det_laplace(forced)


def test_minor_examples():
    mat = poly_rows(["1", "x", "2"], ["x", "3", "1"], ["3", "x^2", "x"])
    assert minor(mat, MinorRef(3, 1, 1)) == det_laplace(mat)
    assert minor(mat, MinorRef(1, 2, 3)) == ONE
    assert minor(mat, MinorRef(0, 5, 5)) == ONE
    assert minor(mat, MinorRef(2, 2, 2)) == P("3*x - x^2")
    with pytest.raises(OutOfBounds):
        minor(mat, MinorRef(2, 3, 1))


def test_determinant_dispatch():
    mat = poly_rows(["0", "1"], ["1", "x"])
    for engine in ENGINES:
        assert determinant(mat, engine).value == P("-1")
    with pytest.raises(ValueError):
        determinant(mat, "magic")


def test_random_polymatrix_agreement():
    rng = random.Random(1)
    for trial in range(200):
        mat = random_polymatrix(rng, rng.randint(1, 5))
        expected = det_laplace(mat)
        assert det_bareiss(mat) == expected
        assert det_condensation(mat) == expected
        assert determinant(mat, "gauss").value == expected
        if mat.size <= 4:
            assert permutation_det(mat) == expected


def test_random_ratmatrix_agreement():
    rng = random.Random(2)
    for trial in range(60):
        mat = random_ratmatrix(rng, rng.randint(1, 4))
        expected = det_laplace(mat)
        assert det_field_gauss(mat) == expected
        assert det_condensation(mat) == expected
        assert det_bareiss(mat) == expected


def zero_interior_matrix(rng, n):
    """Random matrix whose (1,1) entry (0-based) is zero: an interior divisor for n >= 3."""
    rows = [[random_nonzero_poly(rng) for _ in range(n)] for _ in range(n)]
    rows[1][1] = ZERO
    return PolyMatrix(rows)


def test_forced_fallback_cases():
    rng = random.Random(3)
    for trial in range(12):
        mat = zero_interior_matrix(rng, rng.randint(3, 5))
        res = condense(mat)
        assert res.fallback_used
        assert res.value == det_laplace(mat)


# --- properties ---------------------------------------------------------------

seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(1, 4))
def test_multilinearity(seed, n):
    rng = random.Random(seed)
    mat = random_polymatrix(rng, n, 2, 4)
    f = random_poly(rng, 2, 4)
    row = rng.randrange(n)
    scaled = PolyMatrix([[e * f for e in r] if i == row else r for i, r in enumerate(mat.rows)])
    for engine in ENGINES:
        assert determinant(scaled, engine).value == f * determinant(mat, engine).value


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(1, 5))
def test_transpose_invariance(seed, n):
    mat = random_polymatrix(random.Random(seed), n)
    for engine in ENGINES:
        assert determinant(mat.transpose(), engine).value == determinant(mat, engine).value


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(3, 6))
def test_desnanot_jacobi_poly(seed, n):
    mat = random_polymatrix(random.Random(seed), n, 2, 4)
    assert desnanot_jacobi_residual(mat).is_zero


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(3, 5))
def test_desnanot_jacobi_rational(seed, n):
    mat = random_ratmatrix(random.Random(seed), n, 1, 3)
    assert desnanot_jacobi_residual(mat).is_zero
