"""Exact arithmetic: rationals, univariate polynomials over Q, rational functions.

Scalars are :class:`fractions.Fraction`.  Polynomial arithmetic is delegated
to FLINT's ``fmpq_poly`` (through python-flint); the wrapper classes here
own the public contract: immutability, canonical form, the text format and
the error types.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

from flint import fmpq, fmpq_poly

from .errors import BothZero, DivisionByZero, NotDivisible, ParseError

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, strings ("3", "-2/5") and FLINT rationals to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, fmpq):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def _to_fmpq(value: Fraction) -> fmpq:
    return fmpq(value.numerator, value.denominator)


def sign_power(e: int) -> int:
    """(-1)**e for any integer e, as an int."""
    return -1 if e % 2 else 1


class Polynomial:
    """Immutable polynomial in x with rational coefficients.

    ``coefficients[i]`` is the coefficient of ``x**i``; there are no trailing
    zeros and the zero polynomial has no coefficients and degree ``-inf``.
    """

    __slots__ = ("_p", "_hash")

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        self._p = fmpq_poly([_to_fmpq(as_rational(c)) for c in coefficients])
        self._hash = None

    @classmethod
    def _wrap(cls, raw: fmpq_poly) -> "Polynomial":
        obj = object.__new__(cls)
        obj._p = raw
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls((value,))

    @classmethod
    def linear(cls, slope: RationalLike, intercept: RationalLike) -> "Polynomial":
        """slope*x + intercept."""
        return cls((intercept, slope))

    @property
    def coefficients(self) -> tuple:
        return tuple(Fraction(int(c.p), int(c.q)) for c in self._p.coeffs())

    @property
    def degree(self):
        d = self._p.degree()
        return -math.inf if d < 0 else d

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        c = self._p.leading_coefficient()
        return Fraction(int(c.p), int(c.q))

    @property
    def is_zero(self) -> bool:
        return self._p.is_zero()

    @property
    def is_constant(self) -> bool:
        return self._p.degree() <= 0

    def __bool__(self) -> bool:
        return not self._p.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._p == other._p
        if isinstance(other, (int, Fraction)):
            return self._p == fmpq_poly([_to_fmpq(Fraction(other))])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coefficients)
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other._p
        if isinstance(other, (int, Fraction)):
            return fmpq_poly([_to_fmpq(Fraction(other))])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._wrap(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._wrap(o - self._p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._wrap(self._p * o)

    __rmul__ = __mul__

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap(-self._p)

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative int")
        if e == 0:
            return ONE
        return Polynomial._wrap(self._p ** e)

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient ``q`` with ``q * divisor == self``."""
        if divisor.is_zero:
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero:
            return ZERO
        q, r = divmod(self._p, divisor._p)
        if not r.is_zero():
            raise NotDivisible(f"{divisor} does not divide {self}")
        return Polynomial._wrap(q)

    def divmod(self, divisor: "Polynomial"):
        if divisor.is_zero:
            raise DivisionByZero("polynomial division by zero")
        q, r = divmod(self._p, divisor._p)
        return Polynomial._wrap(q), Polynomial._wrap(r)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return Polynomial._wrap(self._p / self._p.leading_coefficient())

    def eval(self, point: RationalLike) -> Fraction:
        """Horner evaluation at a rational point."""
        v = self._p(_to_fmpq(as_rational(point)))
        return Fraction(int(v.p), int(v.q))

    __call__ = eval

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def __reduce__(self):
        return (parse_polynomial, (str(self),))


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    return a.exact_div(b)


def poly_pow(a: Polynomial, e: int) -> Polynomial:
    return a ** e


def poly_eval(a: Polynomial, point: RationalLike) -> Fraction:
    return a.eval(point)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    if a.is_zero and b.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if b.is_zero:
        return a.monic()
    if a.is_zero:
        return b.monic()
    return Polynomial._wrap(a._p.gcd(b._p)).monic()


# --- text format -----------------------------------------------------------

def format_polynomial(p: Polynomial) -> str:
    coeffs = p.coefficients
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xpart = "x" if k == 1 else f"x^{k}"
            body = xpart if mag == 1 else f"{mag}*{xpart}"
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_RAT = r"\d+(?:/\d+)?"
_TERM_RE = re.compile(
    rf"\s*([+-])\s*(?:(?:({_RAT})\s*\*\s*)?x(?:\s*\^\s*(\d+))?|({_RAT}))\s*"
)


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of :func:`format_polynomial`; also tolerates extra spacing
    and the Unicode minus sign."""
    s = text.replace("−", "-").strip()
    if not s:
        raise ParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"cannot parse polynomial {text!r} near position {pos}")
        sign, xcoef, xexp, const = m.groups()
        if const is not None:
            k, c = 0, Fraction(const)
        else:
            k = int(xexp) if xexp is not None else 1
            c = Fraction(xcoef) if xcoef is not None else Fraction(1)
        if sign == "-":
            c = -c
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
    if not coeffs:
        return ZERO
    top = max(coeffs)
    return Polynomial([coeffs.get(i, 0) for i in range(top + 1)])


# --- rational functions ----------------------------------------------------

class RationalFunction:
    """Reduced quotient numer/denom with a monic denominator.

    Canonical form makes ``==`` structural.
    """

    __slots__ = ("numer", "denom")

    def __init__(self, numer, denom=None):
        if not isinstance(numer, Polynomial):
            numer = Polynomial.constant(numer)
        if denom is None:
            denom = ONE
        elif not isinstance(denom, Polynomial):
            denom = Polynomial.constant(denom)
        if denom.is_zero:
            raise DivisionByZero("rational function with zero denominator")
        if numer.is_zero:
            self.numer, self.denom = ZERO, ONE
            return
        n, d = numer._p, denom._p
        if d.degree() > 0:
            g = n.gcd(d)
            if g.degree() > 0:
                n = n // g
                d = d // g
        lc = d.leading_coefficient()
        if lc != 1:
            n = n / lc
            d = d / lc
        self.numer = Polynomial._wrap(n)
        self.denom = Polynomial._wrap(d)

    @classmethod
    def _raw(cls, numer: Polynomial, denom: Polynomial) -> "RationalFunction":
        obj = object.__new__(cls)
        obj.numer = numer
        obj.denom = denom
        return obj

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls._raw(p, ONE) if not p.is_zero else cls._raw(ZERO, ONE)

    @property
    def is_zero(self) -> bool:
        return self.numer.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.denom == ONE

    def to_polynomial(self) -> Polynomial:
        if not self.is_polynomial:
            raise NotDivisible(f"{self} is not a polynomial")
        return self.numer

    def __bool__(self) -> bool:
        return not self.numer.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.numer == other.numer and self.denom == other.denom
        if isinstance(other, (Polynomial, int, Fraction)):
            return self.denom == ONE and self.numer == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.denom == ONE:
            return hash(self.numer)
        return hash((self.numer, self.denom))

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction.from_polynomial(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.from_polynomial(Polynomial.constant(other))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.denom == o.denom:
            return RationalFunction(self.numer + o.numer, self.denom)
        return RationalFunction(self.numer * o.denom + o.numer * self.denom, self.denom * o.denom)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.numer, self.denom)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return RationalFunction._raw(ZERO, ONE)
        return RationalFunction(self.numer * o.numer, self.denom * o.denom)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise DivisionByZero("rational function division by zero")
        return RationalFunction(self.numer * o.denom, self.denom * o.numer)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int) -> "RationalFunction":
        if not isinstance(e, int):
            raise ValueError("exponent must be an int")
        if e < 0:
            if self.is_zero:
                raise DivisionByZero("negative power of zero")
            return RationalFunction(self.denom ** -e, self.numer ** -e)
        if e == 0:
            return RationalFunction._raw(ONE, ONE)
        # powers of coprime polynomials stay coprime; a monic denominator stays monic
        return RationalFunction._raw(self.numer ** e, self.denom ** e)

    def exact_div(self, other) -> "RationalFunction":
        return self / other

    def eval(self, point: RationalLike) -> Fraction:
        from .errors import ZeroDenominator

        d = self.denom.eval(point)
        if d == 0:
            raise ZeroDenominator(message=f"denominator of {self} vanishes at x={point}")
        return self.numer.eval(point) / d

    __call__ = eval

    def __str__(self) -> str:
        if self.denom == ONE:
            return str(self.numer)
        return f"({self.numer})/({self.denom})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"

    def __reduce__(self):
        return (parse_rational_function, (str(self),))


def parse_rational_function(text: str) -> RationalFunction:
    s = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
    if m:
        return RationalFunction(parse_polynomial(m.group(1)), parse_polynomial(m.group(2)))
    return RationalFunction.from_polynomial(parse_polynomial(s))


def ratfun_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Field arithmetic dispatch; ``op`` is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
