"""Weight-by-weight Cech complexes on the standard cover, with exact ranks.

The Cech differential preserves monomial weight, so the full complex splits
into one tiny subcomplex per weight vector l = (l_0, ..., l_n).  The weight
occurs in the localization at a nonempty index set S iff every exponent
outside S is non-negative; equivalently, the spots present are exactly the
supersets of the set of strictly negative positions.  Cohomology is computed
two independent ways: the sign case analysis (classify_weight) and exact
Gaussian elimination over the rationals on the incidence matrices
(cohomology_ranks).  verify_theorems runs both on every weight of the
requested degrees and cross-checks the totals against the closed forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .enumeration import _as_padic, count_h0_monomials, count_hn_monomials
from .errors import DomainError
from .exponents import PAdicFrac, _require_prime, normalize

_MAX_N = 6  # spot count is 2**(n+1); keep matrices desk-scale


@dataclass(frozen=True)
class WeightVector:
    """Exponent vector of one monomial x_0**l_0 ... x_n**l_n."""

    entries: tuple[PAdicFrac, ...]

    def __post_init__(self):
        if not self.entries:
            raise DomainError("empty weight vector")
        p = self.entries[0].prime
        for e in self.entries:
            if e.prime != p:
                raise DomainError("mixed primes in weight vector")

    @property
    def prime(self) -> int:
        return self.entries[0].prime

    def degree(self) -> PAdicFrac:
        total = self.entries[0]
        for e in self.entries[1:]:
            total = total + e
        return total

    def negative_mask(self) -> int:
        mask = 0
        for j, e in enumerate(self.entries):
            if e.num < 0:
                mask |= 1 << j
        return mask

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


@dataclass
class CechComplex:
    """Explicit weight-component complex: present spots and +-1 incidence matrices.

    spots[k] lists the present index-set bitmasks of size k+1 (sorted);
    differentials[k] maps level k to level k+1, rows indexed by spots[k+1].
    """

    n: int
    weight: WeightVector | None
    spots: list[list[int]]
    differentials: list[list[list[Fraction]]]

    def dim(self, k: int) -> int:
        return len(self.spots[k])


def classify_weight(w: WeightVector, n: int) -> tuple[int, ...]:
    """Cohomology profile by sign pattern: H^0 iff all l_j >= 0, H^n iff all < 0."""
    if len(w.entries) != n + 1:
        raise DomainError("weight length does not match n + 1")
    profile = [0] * (n + 1)
    mask = w.negative_mask()
    if mask == 0:
        profile[0] = 1
    elif mask == (1 << (n + 1)) - 1:
        profile[n] = 1
    return tuple(profile)


def _spot_masks(n: int, neg_mask: int) -> list[list[int]]:
    """Present spots by level: nonempty index sets containing all negative positions."""
    spots: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1, 1 << (n + 1)):
        if mask & neg_mask == neg_mask:
            spots[bin(mask).count("1") - 1].append(mask)
    return spots


def _build_from_mask(n: int, neg_mask: int, weight: WeightVector | None) -> CechComplex:
    spots = _spot_masks(n, neg_mask)
    index = [{m: i for i, m in enumerate(level)} for level in spots]
    differentials = []
    for k in range(n):
        rows = [[Fraction(0)] * len(spots[k]) for _ in spots[k + 1]]
        for r, target in enumerate(spots[k + 1]):
            elems = [j for j in range(n + 1) if target >> j & 1]
            for pos, t in enumerate(elems):
                source = target & ~(1 << t)
                col = index[k].get(source)
                if col is not None:
                    rows[r][col] = Fraction(-1) ** pos
        differentials.append(rows)
    complex_ = CechComplex(n, weight, spots, differentials)
    _check_square_zero(complex_)
    return complex_


def _check_square_zero(c: CechComplex) -> None:
    for k in range(len(c.differentials) - 1):
        a, b = c.differentials[k], c.differentials[k + 1]
        if not a or not b:
            continue
        for row in b:
            for col in range(len(a[0]) if a else 0):
                s = sum(row[i] * a[i][col] for i in range(len(a)))
                if s != 0:
                    raise AssertionError("d o d != 0 in constructed complex")


def build_complex(w: WeightVector, n: int) -> CechComplex:
    if len(w.entries) != n + 1:
        raise DomainError("weight length does not match n + 1")
    if n > _MAX_N:
        raise DomainError(f"dimension cap exceeded: n <= {_MAX_N}")
    return _build_from_mask(n, w.negative_mask(), w)


def _rank(rows: list[list[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    m = [list(r) for r in rows]
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, len(m)):
            if m[i][col] != 0:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def cohomology_ranks(c: CechComplex) -> tuple[int, ...]:
    """Exact ranks H^k = dim ker d_k - rank d_{k-1} by elimination over Q."""
    ranks_d = [_rank(d) for d in c.differentials]
    out = []
    for k in range(c.n + 1):
        dim_k = c.dim(k)
        rk = ranks_d[k] if k < len(ranks_d) else 0
        rk_prev = ranks_d[k - 1] if k >= 1 else 0
        out.append(dim_k - rk - rk_prev)
    return tuple(out)


@lru_cache(maxsize=None)
def _ranks_for_mask(n: int, neg_mask: int) -> tuple[int, ...]:
    # the complex depends only on the set of negative positions
    return cohomology_ranks(_build_from_mask(n, neg_mask, None))


@dataclass
class DegreeSummary:
    degree: PAdicFrac
    weights_checked: int
    h0_total: int
    middle_total: int
    hn_total: int
    h0_expected: int
    hn_expected: int

    @property
    def ok(self) -> bool:
        return (self.h0_total == self.h0_expected
                and self.hn_total == self.hn_expected
                and self.middle_total == 0)

    def to_json_dict(self) -> dict:
        return {
            "degree": str(self.degree),
            "weights": self.weights_checked,
            "h0": self.h0_total,
            "middle": self.middle_total,
            "hn": self.hn_total,
            "h0_expected": self.h0_expected,
            "hn_expected": self.hn_expected,
            "ok": self.ok,
        }


@dataclass
class CechReport:
    n: int
    prime: int
    grade: int
    per_degree: list[DegreeSummary] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and all(s.ok for s in self.per_degree)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.prime,
            "grade": self.grade,
            "degrees": [s.to_json_dict() for s in self.per_degree],
            "counterexamples": self.counterexamples,
            "ok": self.ok,
        }


def verify_theorems(n: int, degrees, i: int, p: int) -> CechReport:
    """Cross-check the case analysis against exact ranks, degree by degree.

    For each degree this enumerates every weight with denominator exponent
    <= i and entries in [-B, B], B = ceil(|degree|) + 1.  The box covers all
    weights that can carry nonzero cohomology (all-non-negative or
    all-negative vectors of the degree), so the per-degree totals are exact
    and must equal the closed-form counts, with zero middle cohomology.
    """
    _require_prime(p)
    if n < 1:
        raise DomainError("n must be at least 1")
    if n > _MAX_N:
        raise DomainError(f"dimension cap exceeded: n <= {_MAX_N}")
    report = CechReport(n, p, i)
    for degree in degrees:
        d = _as_padic(degree, p)
        target = d.scaled(i)  # raises if the grade is too small for d
        bound_abs = -d.num if d.num < 0 else d.num
        bound = bound_abs // p**d.pexp + 2  # ceil(|d|) + 1, integer arithmetic
        m_int = bound * p**i
        h0_total = middle_total = hn_total = checked = 0
        for head in itertools.product(range(-m_int, m_int + 1), repeat=n):
            last = target - sum(head)
            if not -m_int <= last <= m_int:
                continue
            ints = head + (last,)
            w = WeightVector(tuple(normalize(v, i, p) for v in ints))
            profile = classify_weight(w, n)
            ranks = _ranks_for_mask(n, w.negative_mask())
            checked += 1
            if profile != ranks:
                report.counterexamples.append({
                    "degree": str(d),
                    "weight": str(w),
                    "classified": list(profile),
                    "ranks": list(ranks),
                })
                continue
            h0_total += ranks[0]
            hn_total += ranks[n]
            middle_total += sum(ranks[1:n])
        h0_expected = count_h0_monomials(n, d, i, p) if d.num >= 0 else 0
        hn_expected = count_hn_monomials(n, -d, i, p) if d.num < 0 else 0
        report.per_degree.append(DegreeSummary(
            d, checked, h0_total, middle_total, hn_total,
            h0_expected, hn_expected))
    return report
