"""Local intersection multiplicities of plane curves at the origin, per grade.

The classical multiplicity dim O_0 / (F, G) is computed by a Fulton-style
recursion on the defining properties of the intersection number: it is
invariant under G -> G + H*F, additive over factors of G, and mu(y, G) is
the order of vanishing of G(x, 0) at x = 0.  A common component through the
origin (detected up front by a bivariate gcd) makes the answer infinite.

p-th roots of a curve are taken by variable rescaling,
F -> F(X**(1/p), Y**(1/p)), never by binomial expansion; every grade-i
computation therefore lands in an ordinary polynomial ring after the
substitution U = X**(1/p**i).  The grade-i entry for root depths (a, b) is

    mu( F(U**q, V**q), G(U**r, V**r) ),  q = p**(i-a), r = p**(i-b),

so the fully rooted diagonal entry (a, b) = (i, i) is the classical
multiplicity at every grade.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braided import INFINITE_RANK, BraidedDim, _is_inf
from .errors import DomainError, FuelExhausted, QuotientCapExceeded
from .fracpoly import FracPoly
from .exponents import _require_prime

_FUEL = 100_000

# internal representation: dict[(xexp, yexp)] -> Fraction, integer exponents
IPoly = dict[tuple[int, int], Fraction]


def _to_ipoly(f: FracPoly) -> IPoly:
    if f.nvars != 2:
        raise DomainError("plane curves require exactly 2 variables")
    if f.is_zero:
        raise DomainError("zero polynomial rejected")
    out: IPoly = {}
    for mon in f.terms():
        ex, ey = mon.exps
        if not (ex.is_integer and ey.is_integer):
            raise DomainError("integer exponents required; rescale first")
        if ex.num < 0 or ey.num < 0:
            raise DomainError("curve exponents must be non-negative")
        out[(ex.num, ey.num)] = mon.coeff
    return out


def _restrict_y0(f: IPoly) -> dict[int, Fraction]:
    return {a: c for (a, b), c in f.items() if b == 0}


def _y_quotient(f: IPoly) -> IPoly:
    # every term divisible by y
    return {(a, b - 1): c for (a, b), c in f.items()}


def _ord_x(u: dict[int, Fraction]) -> int:
    return min(u)


def _sub_shifted(g: IPoly, c: Fraction, shift: int, f: IPoly) -> IPoly:
    """g - c * x**shift * f."""
    out = dict(g)
    for (a, b), coeff in f.items():
        key = (a + shift, b)
        v = out.get(key, Fraction(0)) - c * coeff
        if v == 0:
            out.pop(key, None)
        else:
            out[key] = v
    return out


def _mu(A: IPoly, B: IPoly, fuel: list[int]):
    while True:
        fuel[0] -= 1
        if fuel[0] < 0:
            raise FuelExhausted("multiplicity recursion exceeded its step budget")
        if A.get((0, 0), 0) != 0 or B.get((0, 0), 0) != 0:
            return 0
        if not A or not B:
            return INFINITE_RANK  # ideal collapsed to one nonunit generator
        a0 = _restrict_y0(A)
        b0 = _restrict_y0(B)
        if not a0 and not b0:
            return INFINITE_RANK  # y divides both (guard; gcd pre-check catches it)
        if not a0:
            # A = y * A1: mu = ord_x B(x,0) + mu(A1, B)
            return _ord_x(b0) + _mu(_y_quotient(A), B, fuel)
        if not b0:
            return _ord_x(a0) + _mu(A, _y_quotient(B), fuel)
        r, s = max(a0), max(b0)
        if r > s:
            A, B, a0, b0, r, s = B, A, b0, a0, s, r
        B = _sub_shifted(B, b0[s] / a0[r], s - r, A)


# -- common component detection: gcd over Q[x, y] -------------------------------

# univariate polynomials over Q as dict[int] -> Fraction

def _u_trim(u: dict) -> dict:
    return {e: c for e, c in u.items() if c != 0}


def _u_deg(u: dict) -> int:
    return max(u) if u else -1


def _u_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
    return _u_trim(out)


def _u_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, Fraction(0)) - c
    return _u_trim(out)


def _u_mod(a: dict, b: dict) -> dict:
    db, lb = _u_deg(b), b[max(b)] if b else None
    r = dict(a)
    while r and _u_deg(r) >= db:
        dr = _u_deg(r)
        c = r[dr] / lb
        r = _u_sub(r, _u_mul({dr - db: c}, b))
    return r


def _u_gcd(a: dict, b: dict) -> dict:
    a, b = _u_trim(a), _u_trim(b)
    while b:
        a, b = b, _u_mod(a, b)
    if a:
        lead = a[_u_deg(a)]
        a = {e: c / lead for e, c in a.items()}
    return a


def _u_div_exact(a: dict, b: dict) -> dict:
    db, lb = _u_deg(b), b[max(b)]
    q: dict = {}
    r = dict(a)
    while r and _u_deg(r) >= db:
        dr = _u_deg(r)
        c = r[dr] / lb
        q[dr - db] = c
        r = _u_sub(r, _u_mul({dr - db: c}, b))
    if r:
        raise ArithmeticError("division is not exact")
    return q


def _by_y(f: IPoly) -> dict[int, dict]:
    """Arrange as a polynomial in y with coefficients in Q[x]."""
    out: dict[int, dict] = {}
    for (a, b), c in f.items():
        out.setdefault(b, {})[a] = c
    return out


def _content_y(fy: dict[int, dict]) -> dict:
    cont: dict = {}
    for coeff in fy.values():
        cont = _u_gcd(cont, coeff)
    return cont


def _primitive_y(fy: dict[int, dict], cont: dict) -> dict[int, dict]:
    return {b: _u_div_exact(coeff, cont) for b, coeff in fy.items()}


def _prem_y(A: dict[int, dict], B: dict[int, dict]) -> dict[int, dict]:
    """Pseudo-remainder of A by B as polynomials in y over Q[x]."""
    da, db = max(A), max(B)
    lb = B[db]
    R = {b: dict(c) for b, c in A.items()}
    while R and max(R) >= db:
        dr = max(R)
        lr = R[dr]
        newR: dict[int, dict] = {}
        for b, c in R.items():
            newR[b] = _u_mul(c, lb)
        for b, c in B.items():
            t = _u_mul(c, lr)
            tb = b + dr - db
            newR[tb] = _u_sub(newR.get(tb, {}), t)
        R = {b: c for b, c in newR.items() if c}
    return R


def _common_component_through_origin(F: IPoly, G: IPoly) -> bool:
    """True iff gcd(F, G) in Q[x, y] is nonconstant and vanishes at the origin."""
    Fy, Gy = _by_y(F), _by_y(G)
    dfy, dgy = max(Fy), max(Gy)
    if dfy == 0 and dgy == 0:
        d = _u_gcd(Fy[0], Gy[0])
        return _u_deg(d) >= 1 and d.get(0, Fraction(0)) == 0
    if dfy == 0 or dgy == 0:
        uni = Fy[0] if dfy == 0 else Gy[0]
        other = Gy if dfy == 0 else Fy
        d = _u_gcd(uni, _content_y(other))
        return _u_deg(d) >= 1 and d.get(0, Fraction(0)) == 0
    contF, contG = _content_y(Fy), _content_y(Gy)
    cont_gcd = _u_gcd(contF, contG)
    if _u_deg(cont_gcd) >= 1 and cont_gcd.get(0, Fraction(0)) == 0:
        return True
    A, B = _primitive_y(Fy, contF), _primitive_y(Gy, contG)
    if max(A) < max(B):
        A, B = B, A
    while True:
        if max(B) == 0:
            # a primitive degree-0 remainder is the constant 1: coprime in y
            return False
        R = _prem_y(A, B)
        if not R:
            gcd_y = B  # B pseudo-divides A: B is the primitive gcd
            break
        A, B = B, _primitive_y(R, _content_y(R))
    # gcd_y has positive y-degree, so it is nonconstant; it cuts a component
    # through the origin exactly when it vanishes there
    return gcd_y.get(0, {}).get(0, Fraction(0)) == 0


def local_multiplicity(F: FracPoly, G: FracPoly):
    """dim of the local ring at the origin modulo (F, G); +inf on a shared component.

    F and G must be nonzero polynomials in two variables with integer
    exponents and exact rational coefficients.
    """
    Fd, Gd = _to_ipoly(F), _to_ipoly(G)
    if Fd.get((0, 0), 0) != 0 or Gd.get((0, 0), 0) != 0:
        return 0
    if _common_component_through_origin(Fd, Gd):
        return INFINITE_RANK
    return _mu(Fd, Gd, [_FUEL])


# -- independent oracle -----------------------------------------------------------

def _monomial_staircase(g1: tuple[int, int], g2: tuple[int, int]):
    (a1, b1), (a2, b2) = g1, g2
    if (a1 == 0 and b1 == 0) or (a2 == 0 and b2 == 0):
        return 0
    if min(a1, a2) > 0 or min(b1, b2) > 0:
        return INFINITE_RANK  # no pure power of one of the variables
    count = 0
    for i in range(max(a1, a2)):
        for j in range(max(b1, b2)):
            if not ((i >= a1 and j >= b1) or (i >= a2 and j >= b2)):
                count += 1
    return count


def _int_rank(rows: list[list[int]], ncols: int) -> int:
    """Fraction-free elimination rank of an integer matrix."""
    rank = 0
    rows = [r for r in rows if any(r)]
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            v = rows[i][col]
            if v:
                new = [pv * a - v * b for a, b in zip(rows[i], rows[rank])]
                g = 0
                for entry in new:
                    g = _gcd_int(g, abs(entry))
                    if g == 1:
                        break
                rows[i] = [entry // g for entry in new] if g > 1 else new
        rank += 1
        if rank == len(rows):
            break
    return rank


def _truncated_quotient_dim(F: IPoly, G: IPoly, N: int) -> int:
    """dim Q[x,y] / ((F, G) + m**N), exact."""
    mons = [(a, b) for a in range(N) for b in range(N - a)]
    index = {m: k for k, m in enumerate(mons)}
    rows = []
    for P in (F, G):
        for (ma, mb) in mons:
            row = [Fraction(0)] * len(mons)
            nonzero = False
            for (a, b), c in P.items():
                if a + ma + b + mb < N:
                    row[index[(a + ma, b + mb)]] += c
                    nonzero = True
            if nonzero:
                rows.append(row)
    int_rows = []
    for row in rows:
        lcm = 1
        for v in row:
            if v:
                lcm = lcm * v.denominator // _gcd_int(lcm, v.denominator)
        int_rows.append([int(v * lcm) for v in row])
    return len(mons) - _int_rank(int_rows, len(mons))


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def quotient_dim_oracle(F: FracPoly, G: FracPoly, cap: int = 24) -> int:
    """Multiplicity by direct linear algebra; used as the independent cross-check.

    dim O_0 / ((F, G) + m**N) is computed for growing N; by Nakayama, two
    equal consecutive values certify that m**N already lies inside (F, G)
    locally, so the truncated dimension is the local dimension itself.
    Both single-term inputs short-circuit to the monomial staircase count.
    """
    Fd, Gd = _to_ipoly(F), _to_ipoly(G)
    if len(Fd) == 1 and len(Gd) == 1:
        return _monomial_staircase(next(iter(Fd)), next(iter(Gd)))
    prev = _truncated_quotient_dim(Fd, Gd, 1)
    for N in range(2, cap + 1):
        cur = _truncated_quotient_dim(Fd, Gd, N)
        if cur == prev:
            return cur
        prev = cur
    raise QuotientCapExceeded(f"no stabilization below total degree {cap}")


# -- braided / mixed tuples --------------------------------------------------------

@dataclass
class MultiplicityTuple:
    """Per-grade multiplicity data for a pair of plane curves at the origin.

    mixed[i] is a full (i+1) x (i+1) dict keyed by root depths (a, b): the
    multiplicity of F rooted a times against G rooted b times, measured in
    the grade-i local ring.  Root depths that are not reachable (fractional
    inputs below their native grade) hold zero.  The diagonal tuple takes
    the fully rooted entry of each grade.
    """

    prime: int
    diagonal: BraidedDim
    mixed: list[dict[tuple[int, int], object]]

    def flattened_row(self, i: int) -> list:
        """Row-major flattening, F-power first: a then b descend from i to 0."""
        return [self.mixed[i][(a, b)]
                for a in range(i, -1, -1) for b in range(i, -1, -1)]

    def to_json_dict(self) -> dict:
        def enc(v):
            return "inf" if _is_inf(v) else v
        return {
            "p": self.prime,
            "diagonal": [enc(v) for v in self.diagonal.grades_list()],
            "mixed": [[enc(v) for v in self.flattened_row(i)]
                      for i in range(len(self.mixed))],
        }


def braided_multiplicity(F: FracPoly, G: FracPoly, grades: int) -> MultiplicityTuple:
    """Mixed multiplicity matrices for grades 0..grades and the diagonal tuple.

    Fractional inputs are allowed: a curve whose exponents need denominator
    p**k first appears at grade k, and all entries in earlier grades are
    zero.
    """
    if F.prime != G.prime:
        raise DomainError(f"mixed primes {F.prime} and {G.prime}")
    p = F.prime
    _require_prime(p)
    kF, kG = F.max_pexp(), G.max_pexp()
    F0, G0 = F.rescale_to_grade(kF), G.rescale_to_grade(kG)
    k0 = max(kF, kG)

    cache: dict[tuple[int, int], object] = {}

    def entry(s: int, t: int):
        # mu(F0(U**p**s, V**p**s), G0(U**p**t, V**p**t))
        if (s, t) not in cache:
            cache[(s, t)] = local_multiplicity(
                F0.rescale_to_grade(s), G0.rescale_to_grade(t))
        return cache[(s, t)]

    mixed: list[dict[tuple[int, int], object]] = []
    diag_values = []
    for i in range(grades + 1):
        mat: dict[tuple[int, int], object] = {}
        for a in range(i + 1):
            for b in range(i + 1):
                s, t = i - kF - a, i - kG - b
                mat[(a, b)] = entry(s, t) if s >= 0 and t >= 0 else 0
        mixed.append(mat)
        if i >= k0:
            diag_values.append(mat[(i - kF, i - kG)])
    classical = entry(0, 0)
    diagonal = BraidedDim(p, k0, diag_values,
                          generator=lambda label: classical if label >= k0 else 0,
                          generator_desc=f"mult({F.render()};{G.render()})")
    return MultiplicityTuple(p, diagonal, mixed)
