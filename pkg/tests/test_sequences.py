from fractions import Fraction

import pytest
from hypothesis import given, settings

from recdet.errors import ParseError
from recdet.exact import ONE, Polynomial, ZERO, parse_polynomial as P
from recdet.sequences import (
    FamilyTag,
    PolySequence,
    RecurrenceSpec,
    chebyshev_s,
    chebyshev_t,
    companion,
    discriminant,
    favard,
    fibonacci,
    lucas,
    parse_family,
    parse_spec,
    rising_power,
    sequence_for,
    specialize,
    term,
)

from conftest import small_rationals, specs


def int_recurrence(a0, a1, mult, add, n):
    """Plain integer recurrence v_{k+2} = mult*v_{k+1} + add*v_k, forward only."""
    vals = [a0, a1]
    while len(vals) <= n:
        vals.append(mult * vals[-1] + add * vals[-2])
    return vals[: n + 1]


def test_fibonacci_terms():
    F = sequence_for(fibonacci().spec)
    assert term(F, 4) == P("x^3 + 2*x")
    assert term(F, -1) == ONE
    assert term(F, -2) == P("-x")
    assert [F[n] for n in range(4)] == [ZERO, ONE, P("x"), P("x^2 + 1")]


def test_base_cases():
    spec = RecurrenceSpec(Fraction(2, 3), 5, -1, 1, 2, 3)
    seq = PolySequence(spec)
    assert seq[0] == Polynomial.constant(Fraction(2, 3))
    assert seq[1] == P("5*x - 1")


@pytest.mark.parametrize("family,expected", [
    (fibonacci(), "1"),
    (lucas(), "-x^2 - 4"),
    (chebyshev_t(), "-x^2 + 1"),
    (chebyshev_s(), "1"),
])
def test_discriminant_named(family, expected):
    assert discriminant(family.spec) == P(expected)


def test_rising_power_examples():
    F = sequence_for(fibonacci().spec)
    assert rising_power(F, 1, 3) == P("x^3 + x")
    assert rising_power(F, 5, 0) == ONE
    assert rising_power(F, 0, 2) == ZERO
    with pytest.raises(ValueError):
        rising_power(F, 0, -1)


def test_specialize_integer_oracles():
    F = sequence_for(fibonacci().spec)
    L = sequence_for(lucas().spec)
    assert [specialize(F, 1, n) for n in range(7)] == int_recurrence(0, 1, 1, 1, 6)
    assert [specialize(F, 2, n) for n in range(6)] == int_recurrence(0, 1, 2, 1, 5)
    assert [specialize(L, 1, n) for n in range(6)] == int_recurrence(2, 1, 1, 1, 5)


def test_chebyshev_values():
    # T_n(cos t) = cos(n t) gives T_n(1) = 1; T_n(0) cycles 1, 0, -1, 0
    T = sequence_for(chebyshev_t().spec)
    assert all(specialize(T, 1, n) == 1 for n in range(-6, 7))
    assert [specialize(T, 0, n) for n in range(8)] == [1, 0, -1, 0, 1, 0, -1, 0]
    S = sequence_for(chebyshev_s().spec)
    assert [specialize(S, 1, n) for n in range(6)] == [1, 2, 3, 4, 5, 6]


def test_family_parsing():
    assert parse_family("fib").tag is FamilyTag.FIBONACCI
    assert parse_family("ChebT").spec == chebyshev_t().spec
    assert parse_family("2,1,0;1,0,1").spec == lucas().spec
    assert parse_spec("0,0,1;1,0,1") == fibonacci().spec
    assert parse_spec("1/2,−1,0;1,0,3").p == Fraction(1, 2)
    for bad in ("nope", "1,2,3", "1,2,3;4,5,0", "a,b,c;d,e,f"):
        with pytest.raises(ParseError):
            parse_spec(bad)


def test_constructor_guards():
    with pytest.raises(ValueError):
        RecurrenceSpec(0, 0, 1, 1, 0, 0)
    with pytest.raises(ValueError):
        favard(0, 1, 1, 1)
    fam = favard(1, 2, 3, -1)
    assert (fam.spec.p, fam.spec.a) == (1, 1)


def test_companion_literal():
    spec = RecurrenceSpec(1, 2, 0, 2, 0, -1)
    assert spec.companion() == RecurrenceSpec(0, 0, 1, 2, 0, -1)
    assert spec.literal() == "1,2,0;2,0,-1"


# --- properties ---------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(specs)
def test_recurrence_consistency(spec):
    seq = PolySequence(spec)
    step = Polynomial.linear(spec.a, spec.b)
    for n in range(-10, 11):
        assert seq[n + 2] == step * seq[n + 1] + seq[n] * spec.c


@settings(max_examples=40, deadline=None)
@given(specs)
def test_backward_forward_agreement(spec):
    forward = PolySequence(spec)[5]
    backward = PolySequence(spec)
    lo, lo1 = backward[-5], backward[-4]
    step = Polynomial.linear(spec.a, spec.b)
    prev, cur = lo, lo1
    for _ in range(9):  # from index -4 to 5
        prev, cur = cur, step * cur + prev * spec.c
    assert cur == forward


@settings(max_examples=60, deadline=None)
@given(specs)
def test_discriminant_identity(spec):
    seq = PolySequence(spec)
    assert discriminant(spec) == seq[1] ** 2 - seq[0] * seq[2]


@settings(max_examples=30, deadline=None)
@given(small_rationals, small_rationals, small_rationals.filter(bool))
def test_companion_base_cases(a, b, c):
    U = sequence_for(companion(a, b, c).spec)
    assert U[0] == ZERO and U[1] == ONE


def test_chebyshev_s_shift():
    U = sequence_for(chebyshev_s().spec.companion())
    S = sequence_for(chebyshev_s().spec)
    for n in range(-5, 11):
        assert U[n] == S[n - 1]


def test_shared_cache_is_consistent():
    spec = lucas().spec
    a, b = sequence_for(spec), sequence_for(spec)
    assert a is b
    assert a[-7] == PolySequence(spec)[-7]
