"""Applied layer: Bezout identities, Veronese towers, blow-up charts.

Blow-up charts substitute the chart relation (y = x*v on the u-chart,
x = y*u on the v-chart) into the curve, peel off the maximal power of the
blown-down variable, and read the fiber over the origin from the chart
coordinate constraint left after sending the blown-down variable to zero.
Exceptional sets are reported symbolically, as a constraint equation; root
counting would depend on the ambient field, which is not modeled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braided import BraidedDim, LineBundle, hn_top
from .enumeration import GradedPiece, _as_padic, count_h0_monomials, enumerate_h0_monomials
from .errors import DomainError
from .exponents import PAdicFrac, _require_prime
from .fracpoly import FracMonomial, FracPoly, monomial_string


# -- Bezout ------------------------------------------------------------------------

def bezout_chi(d, degF: int, degG: int, grades: int, p: int) -> BraidedDim:
    """Graded dimension of the intersection cycle of two plane projective curves.

    The grade-j value is the alternating sum of the four graded-piece
    dimensions V(d) - V(d-degF) - V(d-degG) + V(d-degF-degG) on projective
    2-space, computed by enumeration counts.  It equals p**(2j) * degF * degG
    for every d >= degF + degG; grade 0 is the classical Bezout number.
    """
    _require_prime(p)
    if degF < 1 or degG < 1:
        raise DomainError("curve degrees must be positive")
    d = _as_padic(d, p)
    shift = _as_padic(degF + degG, p)
    if d.as_fraction() < shift.as_fraction():
        raise DomainError(
            f"d={d} too small: needs d >= degF + degG = {degF + degG}")
    offset = d.pexp
    degrees = (d, d - degF, d - degG, d - degF - degG)
    signs = (1, -1, -1, 1)

    def gen(label: int) -> int:
        return sum(s * count_h0_monomials(2, e, label, p)
                   for s, e in zip(signs, degrees))

    return BraidedDim.from_generator(
        p, offset, gen, f"bezout_chi(d={d},degF={degF},degG={degG})", grades)


def bezout_line(s, t, grades: int, p: int) -> BraidedDim:
    """The top-cohomology difference hn(-s-t) - hn(-s) - hn(-t) on the line.

    Constant 1 from the first meaningful grade on, for any positive s, t
    (integral or fractional).
    """
    _require_prime(p)
    s = _as_padic(s, p)
    t = _as_padic(t, p)
    if s.num <= 0 or t.num <= 0:
        raise DomainError("s and t must be positive")
    total = hn_top(LineBundle(1, -(s + t)), grades)
    out = total - hn_top(LineBundle(1, -s), grades) - hn_top(LineBundle(1, -t), grades)
    out.generator_desc = f"bezout_line(s={s},t={t})"
    return out


# -- Veronese ------------------------------------------------------------------------

@dataclass(frozen=True)
class VeroneseMap:
    """One grade of the degree-d Veronese tower: coordinates and target dimension."""

    n: int
    d: int
    grade: int
    prime: int
    monomials: GradedPiece
    target_dim: int

    def coordinate_strings(self, names=None) -> list[str]:
        return [monomial_string(v, names) for v in self.monomials.vectors]

    def bracket(self, names=None) -> str:
        return "[" + ":".join(self.coordinate_strings(names)) + "]"


def veronese(n: int, d: int, i: int, p: int) -> VeroneseMap:
    """The grade-i piece of the perfectoid Veronese embedding of degree d."""
    if d < 1:
        raise DomainError("Veronese degree must be positive")
    piece = enumerate_h0_monomials(n, d, i, p)
    return VeroneseMap(n, d, i, p, piece, piece.count - 1)


def veronese_tower_inclusion(lower: VeroneseMap, upper: VeroneseMap) -> bool:
    """Monomial set of the lower grade is contained in the higher grade."""
    return set(lower.monomials.vectors) <= set(upper.monomials.vectors)


# -- blow-up of a plane curve at the origin ----------------------------------------

@dataclass(frozen=True)
class ExceptionalLocus:
    """Fiber of a blow-up chart over the origin, described symbolically."""

    empty: bool
    constraint: str          # equation in the chart coordinate, or the witness
    point: str | None = None  # set when the constraint pins the single point


@dataclass(frozen=True)
class BlowupChart:
    chart: str                     # "u" or "v"
    relation: str                  # the substitution defining the chart
    names: tuple[str, str]         # rendering names by variable slot
    blown_down: str                # variable whose maximal power was removed
    power_extracted: PAdicFrac
    transformed: FracPoly          # cofactor after removing the maximal power
    exceptional: ExceptionalLocus

    @property
    def extracted(self) -> str:
        return f"{self.blown_down}{_power_suffix(self.power_extracted)}"

    def to_json_dict(self) -> dict:
        out = {
            "chart": self.chart,
            "relation": self.relation,
            "extracted": self.extracted,
            "transformed": self.transformed.render(self.names),
            "exceptional": {
                "empty": self.exceptional.empty,
                "constraint": self.exceptional.constraint,
            },
        }
        if self.exceptional.point is not None:
            out["exceptional"]["point"] = self.exceptional.point
        return out


def _power_suffix(e: PAdicFrac) -> str:
    if e.is_integer and e.num == 1:
        return ""
    if e.is_integer:
        return f"^{e.num}"
    return f"^({e.num}/{e.prime**e.pexp})"


def _equation(poly: FracPoly, names) -> str:
    """Render poly = 0 as "<non-constant part> = <constant>"."""
    prime = poly.prime
    zero_vec = tuple(PAdicFrac(0, 0, prime) for _ in range(poly.nvars))
    const = poly.coefficient(zero_vec)
    rest = poly
    if const != 0:
        rest = poly - FracPoly(poly.nvars, prime, [(zero_vec, const)])
    if rest.is_zero:
        return f"{const} = 0"
    rhs = -const
    if rest.terms()[0].coeff < 0:
        rest, rhs = -rest, -rhs
    return f"{rest.render(names)} = {rhs}"


def _chart(F: FracPoly, chart: str) -> BlowupChart:
    p = F.prime
    one = PAdicFrac(1, 0, p)
    if chart == "u":
        # u = 1: y = x*v; slot 0 stays x, slot 1 becomes v
        names = ("x", "v")
        relation = "y = x*v"
        sub_var, extract_var, coord_var = 1, 0, 1
    else:
        # v = 1: x = y*u; slot 0 becomes u, slot 1 stays y
        names = ("u", "y")
        relation = "x = y*u"
        sub_var, extract_var, coord_var = 0, 1, 0
    replacement = FracMonomial(Fraction(1), (one, one))
    substituted = F.substitute(sub_var, replacement)
    e, cofactor = substituted.extract_power(extract_var)
    at_zero = cofactor.set_var_zero(extract_var)
    constraint_1var = at_zero.restrict_to_var(coord_var)
    coord_name = names[coord_var]
    if constraint_1var.num_terms == 1 and constraint_1var.constant_term() != 0:
        # every chart-coordinate term still carries a positive power of the
        # blown-down variable, so nothing survives the limit: empty fiber
        witness = _equation(cofactor, names)
        locus = ExceptionalLocus(True, witness)
    else:
        equation = _equation(constraint_1var, (coord_name,))
        point = None
        if constraint_1var.num_terms == 1 and constraint_1var.constant_term() == 0:
            # pure power of the chart coordinate: the fiber is the single
            # point with coordinate 0
            point = "(1:0)" if chart == "u" else "(0:1)"
        locus = ExceptionalLocus(False, equation, point)
    return BlowupChart(chart, relation, names, names[extract_var], e, cofactor, locus)


def blowup_origin(F: FracPoly) -> tuple[BlowupChart, BlowupChart]:
    """Blow up the plane at the origin and transform the curve F into both charts.

    F must vanish at the origin and have non-negative exponents; the returned
    charts carry the transformed curve, the extracted power of the blown-down
    variable, and the symbolic fiber over the origin.
    """
    if F.nvars != 2:
        raise DomainError("blow-up expects a plane curve in 2 variables")
    if F.is_zero:
        raise DomainError("zero polynomial rejected")
    for mon in F.terms():
        for e in mon.exps:
            if e.num < 0:
                raise DomainError("curve exponents must be non-negative")
    if F.constant_term() != 0:
        raise DomainError("origin not on curve")
    return _chart(F, "u"), _chart(F, "v")


# -- blow-up of the affine plane: chart atlas ----------------------------------------

@dataclass(frozen=True)
class MonomialMap:
    """A monomial ring morphism: each source variable maps to one monomial."""

    prime: int
    images: tuple[FracMonomial, ...]

    def apply_vector(self, exps) -> tuple[Fraction, tuple[PAdicFrac, ...]]:
        nvars = len(self.images)
        coeff = Fraction(1)
        out = [PAdicFrac(0, 0, self.prime) for _ in range(nvars)]
        for j, e in enumerate(exps):
            if e.is_zero:
                continue
            image = self.images[j]
            if image.coeff == -1:
                if not e.is_integer:
                    raise DomainError("fractional power of a negative monomial")
                if e.num % 2 == 1:
                    coeff = -coeff
            for k, r in enumerate(image.exps):
                out[k] = out[k] + r * e
        return coeff, tuple(out)

    def apply(self, f: FracPoly) -> FracPoly:
        items = []
        for mon in f.terms():
            c, exps = self.apply_vector(mon.exps)
            items.append((exps, mon.coeff * c))
        return FracPoly(f.nvars, f.prime, items)


@dataclass(frozen=True)
class PlaneBlowupAtlas:
    """The two charts of the blown-up plane and their gluing, as monomial maps.

    chart1 pulls back (x, y) to (x1, x1*y1); chart2 pulls back to (x2*y2, y2).
    The gluing identifies the charts on the overlap: forward sends x1 to
    x2*y2 and y1 to x2**-1, backward sends x2 to y1**-1 and y2 to x1*y1.
    """

    prime: int
    chart1_pullback: MonomialMap
    chart2_pullback: MonomialMap
    glue_forward: MonomialMap
    glue_backward: MonomialMap

    def roundtrip(self, exps) -> tuple[Fraction, tuple[PAdicFrac, ...]]:
        c1, mid = self.glue_forward.apply_vector(exps)
        c2, back = self.glue_backward.apply_vector(mid)
        return c1 * c2, back


def blowup_plane_charts(p: int) -> PlaneBlowupAtlas:
    """Chart coordinate maps and gluing for the plane blown up at the origin.

    Construction self-checks that the composite identification is the
    identity on a sample of Laurent monomials of the overlap.
    """
    _require_prime(p)
    one = PAdicFrac(1, 0, p)
    zero = PAdicFrac(0, 0, p)
    minus_one = PAdicFrac(-1, 0, p)

    def mono(e0, e1):
        return FracMonomial(Fraction(1), (e0, e1))

    chart1 = MonomialMap(p, (mono(one, zero), mono(one, one)))       # x->x1, y->x1*y1
    chart2 = MonomialMap(p, (mono(one, one), mono(zero, one)))       # x->x2*y2, y->y2
    forward = MonomialMap(p, (mono(one, one), mono(minus_one, zero)))   # x1->x2*y2, y1->x2^-1
    backward = MonomialMap(p, (mono(zero, minus_one), mono(one, one)))  # x2->y1^-1, y2->x1*y1
    atlas = PlaneBlowupAtlas(p, chart1, chart2, forward, backward)
    samples = [(1, 0), (0, 1), (2, -3), (-1, 5), (4, 4)]
    for a, b in samples:
        exps = (PAdicFrac(a, 0, p) if a else zero, PAdicFrac(b, 0, p) if b else zero)
        coeff, back = atlas.roundtrip(exps)
        if coeff != 1 or back != exps:
            raise AssertionError("chart gluing round trip is not the identity")
    return atlas
