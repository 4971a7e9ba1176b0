"""Exact arithmetic and canonical ordering on Z[1/p].

Every exponent and degree in the package is a fraction num / prime**pexp in
lowest terms.  The prime is carried on each value so that accidental mixing
of two different ambient primes fails fast instead of silently producing a
wrong denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import DomainError


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test (desk-scale primes)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"{p!r} is not a prime")


@total_ordering
@dataclass(frozen=True, slots=True)
class PAdicFrac:
    """An element num / prime**pexp of Z[1/p] in normalized form.

    Invariants: pexp >= 0; if pexp > 0 then prime does not divide num;
    zero is canonically (num=0, pexp=0).
    """

    num: int
    pexp: int
    prime: int

    def __post_init__(self):
        _require_prime(self.prime)
        if self.pexp < 0:
            raise DomainError("pexp must be non-negative")
        if self.num == 0 and self.pexp != 0:
            raise DomainError("zero must be represented as (0, 0)")
        if self.pexp > 0 and self.num % self.prime == 0:
            raise DomainError(
                f"{self.num}/{self.prime}^{self.pexp} is not in lowest terms"
            )

    @classmethod
    def from_int(cls, k: int, p: int) -> "PAdicFrac":
        return cls(k, 0, p)

    @classmethod
    def from_fraction(cls, fr: Fraction, p: int) -> "PAdicFrac":
        """Exact conversion; rejects denominators that are not powers of p."""
        _require_prime(p)
        fr = Fraction(fr)
        den = fr.denominator
        pexp = 0
        while den % p == 0:
            den //= p
            pexp += 1
        if den != 1:
            raise DomainError(f"denominator not a power of {p}")
        return normalize(fr.numerator, pexp, p)

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    @property
    def is_integer(self) -> bool:
        return self.pexp == 0

    @property
    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.prime**self.pexp)

    def order_key(self) -> tuple[int, int]:
        """The (a, b) tuple that canonically orders x**(a/p^b) terms."""
        return (self.num, self.pexp)

    def scaled(self, i: int) -> int:
        """The integer value of self * prime**i; requires pexp <= i."""
        if i < self.pexp:
            raise DomainError(
                f"grade {i} too small for denominator exponent {self.pexp}"
            )
        return self.num * self.prime ** (i - self.pexp)

    def _coerce(self, other) -> "PAdicFrac":
        if isinstance(other, PAdicFrac):
            if other.prime != self.prime:
                raise DomainError(
                    f"mixed primes {self.prime} and {other.prime}"
                )
            return other
        if isinstance(other, int):
            return PAdicFrac(other, 0, self.prime)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "PAdicFrac":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        b = max(self.pexp, o.pexp)
        p = self.prime
        num = self.num * p ** (b - self.pexp) + o.num * p ** (b - o.pexp)
        return normalize(num, b, p)

    __radd__ = __add__

    def __sub__(self, other) -> "PAdicFrac":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "PAdicFrac":
        return (-self) + other

    def __mul__(self, other) -> "PAdicFrac":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return normalize(self.num * o.num, self.pexp + o.pexp, self.prime)

    __rmul__ = __mul__

    def __neg__(self) -> "PAdicFrac":
        return PAdicFrac(-self.num, self.pexp, self.prime)

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # cross-multiplied exact comparison of num/p^pexp values
        p = self.prime
        return self.num * p**o.pexp < o.num * p**self.pexp

    def __str__(self) -> str:
        if self.pexp == 0:
            return str(self.num)
        return f"{self.num}/{self.prime**self.pexp}"

    def __repr__(self) -> str:
        return f"PAdicFrac({self}, p={self.prime})"


def normalize(a: int, b: int, p: int) -> PAdicFrac:
    """Canonical form of a / p**b: common powers of p cancelled, zero is (0, 0)."""
    _require_prime(p)
    if b < 0:
        raise DomainError("pexp must be non-negative")
    if a == 0:
        return PAdicFrac(0, 0, p)
    while b > 0 and a % p == 0:
        a //= p
        b -= 1
    return PAdicFrac(a, b, p)


def cmp(lhs: PAdicFrac, rhs: PAdicFrac) -> int:
    """Total order on rationals: -1, 0 or 1."""
    if lhs < rhs:
        return -1
    if rhs < lhs:
        return 1
    return 0


def arith(lhs: PAdicFrac, rhs: PAdicFrac, kind: str):
    """Dispatch table for the basic ring operations.

    kind is one of add, sub, mul, neg, cmp; neg ignores rhs.
    """
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "neg":
        return -lhs
    if kind == "cmp":
        return cmp(lhs, rhs)
    raise DomainError(f"unknown operation {kind!r}")
