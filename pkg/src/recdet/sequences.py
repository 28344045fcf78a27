"""Polynomial sequences defined by a three-term recurrence.

A spec ``(p, q, r; a, b, c)`` fixes ``P_0 = p``, ``P_1 = q x + r`` and
``P_{n+2} = (a x + b) P_{n+1} + c P_n``; negative indices run the same rule
backwards, which needs ``c != 0``.
"""
from __future__ import annotations

import enum
import functools
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .exact import ONE, Polynomial, RationalLike, as_rational


@dataclass(frozen=True)
class RecurrenceSpec:
    p: Fraction
    q: Fraction
    r: Fraction
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("p", "q", "r", "a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.c == 0:
            raise ValueError("recurrence coefficient c must be nonzero")

    @classmethod
    def of(cls, p, q, r, a, b, c) -> "RecurrenceSpec":
        return cls(p, q, r, a, b, c)

    @property
    def abc(self) -> tuple:
        return (self.a, self.b, self.c)

    def companion(self) -> "RecurrenceSpec":
        """The spec (0, 0, 1; a, b, c) of the companion sequence U."""
        return RecurrenceSpec(0, 0, 1, self.a, self.b, self.c)

    def literal(self) -> str:
        head = ",".join(str(v) for v in (self.p, self.q, self.r))
        tail = ",".join(str(v) for v in (self.a, self.b, self.c))
        return f"{head};{tail}"

    def __str__(self) -> str:
        return self.literal()


class FamilyTag(enum.Enum):
    FIBONACCI = "Fibonacci"
    LUCAS = "Lucas"
    CHEBYSHEV_T = "ChebyshevT"
    CHEBYSHEV_S = "ChebyshevS"
    COMPANION_U = "CompanionU"
    FAVARD = "Favard"
    CUSTOM = "Custom"


@dataclass(frozen=True)
class NamedFamily:
    tag: FamilyTag
    spec: RecurrenceSpec

    @property
    def name(self) -> str:
        if self.tag in (FamilyTag.COMPANION_U, FamilyTag.FAVARD, FamilyTag.CUSTOM):
            return f"{self.tag.value}({self.spec.literal()})"
        return self.tag.value


def fibonacci() -> NamedFamily:
    return NamedFamily(FamilyTag.FIBONACCI, RecurrenceSpec(0, 0, 1, 1, 0, 1))


def lucas() -> NamedFamily:
    return NamedFamily(FamilyTag.LUCAS, RecurrenceSpec(2, 1, 0, 1, 0, 1))


def chebyshev_t() -> NamedFamily:
    return NamedFamily(FamilyTag.CHEBYSHEV_T, RecurrenceSpec(1, 1, 0, 2, 0, -1))


def chebyshev_s() -> NamedFamily:
    return NamedFamily(FamilyTag.CHEBYSHEV_S, RecurrenceSpec(1, 2, 0, 2, 0, -1))


def companion(a: RationalLike, b: RationalLike, c: RationalLike) -> NamedFamily:
    return NamedFamily(FamilyTag.COMPANION_U, RecurrenceSpec(0, 0, 1, a, b, c))


def favard(q: RationalLike, r: RationalLike, b: RationalLike, c: RationalLike) -> NamedFamily:
    """Monic-leading family P_0 = 1, P_1 = qx + r, P_{n+2} = (x + b)P_{n+1} + cP_n."""
    if as_rational(q) == 0:
        raise ValueError("Favard family needs q != 0")
    if as_rational(c) == 0:
        raise ValueError("Favard family needs c != 0")
    return NamedFamily(FamilyTag.FAVARD, RecurrenceSpec(1, q, r, 1, b, c))


def custom(spec: RecurrenceSpec) -> NamedFamily:
    return NamedFamily(FamilyTag.CUSTOM, spec)


SHORTHANDS = {
    "fib": fibonacci,
    "fibonacci": fibonacci,
    "lucas": lucas,
    "chebt": chebyshev_t,
    "chebs": chebyshev_s,
}


def parse_family(text: str) -> NamedFamily:
    """Parse a shorthand (fib, lucas, chebT, chebS) or a ``p,q,r;a,b,c`` literal."""
    key = text.strip()
    factory = SHORTHANDS.get(key.lower())
    if factory is not None:
        return factory()
    return custom(parse_spec(key))


def parse_spec(text: str) -> RecurrenceSpec:
    key = text.strip()
    factory = SHORTHANDS.get(key.lower())
    if factory is not None:
        return factory().spec
    halves = key.split(";")
    if len(halves) != 2:
        raise ParseError(f"spec literal must look like 'p,q,r;a,b,c', got {text!r}")
    parts = [s for half in halves for s in half.split(",")]
    if len(parts) != 6 or len(halves[0].split(",")) != 3:
        raise ParseError(f"spec literal must look like 'p,q,r;a,b,c', got {text!r}")
    try:
        return RecurrenceSpec(*(as_rational(s) for s in parts))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def discriminant(spec: RecurrenceSpec) -> Polynomial:
    """(q^2 - apq) x^2 + (2qr - apr - bpq) x + (r^2 - bpr - cp^2)."""
    p, q, r, a, b, c = spec.p, spec.q, spec.r, spec.a, spec.b, spec.c
    return Polynomial((
        r * r - b * p * r - c * p * p,
        2 * q * r - a * p * r - b * p * q,
        q * q - a * p * q,
    ))


class PolySequence:
    """Memoized ``n -> P_n`` over all integers.

    Terms are filled outward from the known window ``[lo, hi]`` in both
    directions; the cache is guarded by a lock so concurrent ``term`` calls
    are safe.
    """

    def __init__(self, spec: RecurrenceSpec):
        self.spec = spec
        self._step = Polynomial.linear(spec.a, spec.b)
        self._c = spec.c
        self._inv_c = 1 / spec.c
        self._cache = {0: Polynomial.constant(spec.p), 1: Polynomial.linear(spec.q, spec.r)}
        self._lo, self._hi = 0, 1
        self._lock = threading.Lock()

    def term(self, n: int) -> Polynomial:
        cached = self._cache.get(n)
        if cached is not None:
            return cached
        with self._lock:
            cache = self._cache
            while self._hi < n:
                h = self._hi
                cache[h + 1] = self._step * cache[h] + self._c * cache[h - 1]
                self._hi = h + 1
            while self._lo > n:
                lo = self._lo
                cache[lo - 1] = (cache[lo + 1] - self._step * cache[lo]) * self._inv_c
                self._lo = lo - 1
            return cache[n]

    __getitem__ = term

    def rising_power(self, n: int, m: int) -> Polynomial:
        """P_n P_{n+1} ... P_{n+m-1}; the empty product for m == 0 is 1."""
        if m < 0:
            raise ValueError("rising power length must be nonnegative")
        out = ONE
        for t in range(n, n + m):
            out = out * self.term(t)
        return out

    def specialize(self, point: RationalLike, n: int) -> Fraction:
        return self.term(n).eval(point)

    def companion(self) -> "PolySequence":
        return sequence_for(self.spec.companion())

    def __repr__(self) -> str:
        return f"PolySequence({self.spec.literal()})"


@functools.lru_cache(maxsize=256)
def sequence_for(spec: RecurrenceSpec) -> PolySequence:
    """Shared memoized sequence per spec."""
    return PolySequence(spec)


def term(seq: PolySequence, n: int) -> Polynomial:
    return seq.term(n)


def rising_power(seq: PolySequence, n: int, m: int) -> Polynomial:
    return seq.rising_power(n, m)


def specialize(seq: PolySequence, point: RationalLike, n: int) -> Fraction:
    return seq.specialize(point, n)


__all__ = [
    "RecurrenceSpec", "FamilyTag", "NamedFamily", "PolySequence",
    "fibonacci", "lucas", "chebyshev_t", "chebyshev_s", "companion", "favard", "custom",
    "parse_family", "parse_spec", "discriminant", "sequence_for",
    "term", "rising_power", "specialize",
]
