"""Counting and enumerating graded monomial bases.

A grade-i monomial of degree d in n+1 variables is a vector of multiples of
1/p**i summing to d, i.e. an integer composition of p**i * d.  Counts follow
the cumulative convention: a vector whose denominators all divide p**(i-1)
is counted again at grade i.  Pass reduced=True to count only vectors whose
exact denominator is p**i.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import DomainError
from .exponents import PAdicFrac, _require_prime, normalize


def _as_padic(value, p: int) -> PAdicFrac:
    if isinstance(value, PAdicFrac):
        if value.prime != p:
            raise DomainError(f"mixed primes {value.prime} and {p}")
        return value
    return PAdicFrac(int(value), 0, p)


def _scaled_degree(d: PAdicFrac, i: int) -> int:
    try:
        return d.scaled(i)
    except DomainError as exc:
        raise DomainError(f"grade too small for degree: {exc}") from exc


@dataclass(frozen=True)
class GradedPiece:
    """The weight-vector basis of one grade of a graded component.

    vectors hold normalized PAdicFrac entries; all of them sum to degree and
    are uniformly non-negative (negative=False) or strictly negative
    (negative=True).
    """

    n: int
    degree: PAdicFrac
    grade: int
    vectors: tuple[tuple[PAdicFrac, ...], ...]
    negative: bool

    @property
    def count(self) -> int:
        return len(self.vectors)

    def to_json(self) -> list[str]:
        return ["(" + ",".join(str(e) for e in v) + ")" for v in self.vectors]


def _compositions_desc(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Non-negative integer compositions in descending lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions_desc(total - first, parts - 1):
            yield (first,) + rest


def _positive_compositions_asc(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Strictly positive compositions, ascending lexicographic order."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _positive_compositions_asc(total - first, parts - 1):
            yield (first,) + rest


def count_h0_monomials(n: int, d, i: int, p: int, reduced: bool = False) -> int:
    """Number of grade-i monomials of degree d >= 0 in n+1 variables."""
    _require_prime(p)
    d = _as_padic(d, p)
    if d.num < 0:
        raise DomainError("degree must be non-negative")
    total = _scaled_degree(d, i)
    count = comb(total + n, n)
    if reduced and i > 0 and total % p == 0:
        count -= comb(total // p + n, n)
    return count


def enumerate_h0_monomials(n: int, d, i: int, p: int, reduced: bool = False) -> GradedPiece:
    _require_prime(p)
    d = _as_padic(d, p)
    if d.num < 0:
        raise DomainError("degree must be non-negative")
    total = _scaled_degree(d, i)
    vectors = []
    for comp in _compositions_desc(total, n + 1):
        vec = tuple(normalize(c, i, p) for c in comp)
        if reduced and i > 0 and not any(e.pexp == i for e in vec):
            continue
        vectors.append(vec)
    return GradedPiece(n, d, i, tuple(vectors), negative=False)


def count_hn_monomials(n: int, m, i: int, p: int, reduced: bool = False) -> int:
    """Number of grade-i all-negative monomials of degree -m, m > 0.

    Compositions of p**i * m into n+1 strictly positive parts, negated;
    comb(a, n) is 0 for a < n, so classically vanishing cases come out 0.
    """
    _require_prime(p)
    m = _as_padic(m, p)
    if m.num <= 0:
        raise DomainError("m must be positive")
    total = _scaled_degree(m, i)
    count = comb(total - 1, n)
    if reduced and i > 0 and total % p == 0:
        count -= comb(total // p - 1, n)
    return count


def enumerate_hn_monomials(n: int, m, i: int, p: int, reduced: bool = False) -> GradedPiece:
    _require_prime(p)
    m = _as_padic(m, p)
    if m.num <= 0:
        raise DomainError("m must be positive")
    total = _scaled_degree(m, i)
    vectors = []
    for comp in _positive_compositions_asc(total, n + 1):
        vec = tuple(normalize(-c, i, p) for c in comp)
        if reduced and i > 0 and not any(e.pexp == i for e in vec):
            continue
        vectors.append(vec)
    return GradedPiece(n, -m, i, tuple(vectors), negative=True)
