from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from perfproj import (
    DomainError,
    FracMonomial,
    FracPoly,
    PAdicFrac,
    ParseError,
    parse_poly,
)
from perfproj.exponents import normalize


def P(text, nvars=2, p=2):
    return parse_poly(text, nvars, p)


def test_parse_quartic_example():
    f = P("y^(1/4) - x^(1/4) + x^(1/2)")
    assert f.num_terms == 3
    assert f.coefficient((normalize(0, 0, 2), normalize(1, 2, 2))) == 1
    assert f.coefficient((normalize(1, 2, 2), normalize(0, 0, 2))) == -1
    assert f.coefficient((normalize(1, 1, 2), normalize(0, 0, 2))) == 1


def test_parse_cancellation_to_zero():
    f = parse_poly("x*y - x*y", 2, 3)
    assert f.is_zero and f.num_terms == 0


def test_parse_two_thirds_example():
    f = parse_poly("y^(2/3) - x", 2, 3)
    assert f.coefficient((normalize(0, 0, 3), normalize(2, 1, 3))) == 1
    assert f.coefficient((normalize(1, 0, 3), normalize(0, 0, 3))) == -1


def test_parse_coefficients_and_implicit_multiplication():
    f = P("3x^2*y + 1/2 - 2*x")
    assert f.coefficient((normalize(2, 0, 2), normalize(1, 0, 2))) == 3
    assert f.constant_term() == Fraction(1, 2)
    assert f.coefficient((normalize(1, 0, 2), normalize(0, 0, 2))) == -2


def test_parse_numbered_variables():
    f = parse_poly("x0*x3 - x2^2", 4, 3)
    assert f.num_terms == 2


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as exc:
        P("x +")
    assert exc.value.position is not None
    with pytest.raises(ParseError, match="unknown variable"):
        P("x + z")  # nvars=2
    with pytest.raises(ParseError, match="denominator not a power of 2"):
        P("x^(1/6)")
    with pytest.raises(ParseError, match="unexpected"):
        P("x ? y")


def test_rescale_to_grade_examples():
    cusp = P("y - x^(3/2)")
    assert cusp.rescale_to_grade(1) == P("y^2 - x^3")
    f = parse_poly("x*y", 2, 3)
    assert f.rescale_to_grade(0) == f
    g = parse_poly("x^(1/9) + y^(2/3)", 2, 3)
    assert g.rescale_to_grade(2) == parse_poly("x + y^6", 2, 3)
    with pytest.raises(DomainError, match="grade too small"):
        g.rescale_to_grade(1)


def test_substitute_chart_examples():
    one = PAdicFrac(1, 0, 2)
    x_times_v = FracMonomial(Fraction(1), (one, one))
    f = P("y - x^(3/2)")
    assert f.substitute(1, x_times_v) == P("x*y - x^(3/2)")

    one3 = PAdicFrac(1, 0, 3)
    y_times_u = FracMonomial(Fraction(1), (one3, one3))
    g = parse_poly("y^(2/3) - x", 2, 3)
    assert g.substitute(0, y_times_u) == parse_poly("y^(2/3) - y*x", 2, 3)

    x = P("x")
    ident = FracMonomial(Fraction(1), (one, PAdicFrac(0, 0, 2)))
    assert x.substitute(0, ident) == x


def test_substitute_rejects_bad_replacement():
    f = P("x + y")
    with pytest.raises(DomainError, match="coefficient"):
        f.substitute(0, FracMonomial(Fraction(2), (PAdicFrac(1, 0, 2), PAdicFrac(0, 0, 2))))
    with pytest.raises(DomainError, match="non-negative"):
        f.substitute(0, FracMonomial(Fraction(1), (PAdicFrac(-1, 0, 2), PAdicFrac(0, 0, 2))))


def test_substitute_negative_unit_coefficient():
    minus_x = FracMonomial(Fraction(-1), (PAdicFrac(1, 0, 2), PAdicFrac(0, 0, 2)))
    f = P("x^2 + x*y")
    assert f.substitute(0, minus_x) == P("x^2 - x*y")
    g = P("x^(1/2)")
    with pytest.raises(DomainError, match="fractional power"):
        g.substitute(0, minus_x)


def test_extract_power_examples():
    e, cof = P("x*y - x^(3/2)").extract_power(0)
    assert e == PAdicFrac(1, 0, 2)
    assert cof == P("y - x^(1/2)")

    e, cof = parse_poly("y^(2/3) - y*x", 2, 3).extract_power(1)
    assert e == normalize(2, 1, 3)
    assert cof == parse_poly("1 - y^(1/3)*x", 2, 3)

    e, cof = P("x^3", 1).extract_power(0)
    assert e == PAdicFrac(3, 0, 2)
    assert cof == P("1", 1)

    with pytest.raises(DomainError, match="zero polynomial"):
        FracPoly.zero(2, 2).extract_power(0)


def test_homogeneous_degree():
    assert P("x^2 + x*y").homogeneous_degree() == PAdicFrac(2, 0, 2)
    assert P("x^2 + y").homogeneous_degree() is None


def test_render_examples():
    assert P("y^(1/4) - x^(1/4) + x^(1/2)").render() == "x^(1/2) - x^(1/4) + y^(1/4)"
    assert FracPoly.zero(2, 2).render() == "0"
    assert P("-x + 3").render() == "-x + 3"
    assert P("1/2*x*y^2").render() == "1/2*x*y^2"


# -- random round-trip property ------------------------------------------------------

def poly_strategy():
    def build(p, nvars):
        exp = st.builds(normalize, st.integers(0, 9), st.integers(0, 2), st.just(p))
        coeff = st.fractions(min_value=-5, max_value=5).filter(lambda c: c != 0)
        term = st.tuples(st.tuples(*[exp] * nvars), coeff)
        return st.lists(term, min_size=0, max_size=6).map(
            lambda items: FracPoly(nvars, p, items))
    return st.tuples(st.sampled_from([2, 3, 5]), st.integers(1, 4)).flatmap(
        lambda args: build(*args))


@given(poly_strategy())
def test_parse_render_round_trip(f):
    assert parse_poly(f.render(), f.nvars, f.prime) == f


@given(poly_strategy(), st.integers(0, 3))
def test_rescale_round_trip(f, extra):
    i = f.max_pexp() + extra
    scaled = f.rescale_to_grade(i)
    # formally substituting u_j = x_j**(1/p**i) recovers f: exponents divide back
    back = FracPoly(f.nvars, f.prime,
                    [(tuple(normalize(e.num, i, f.prime) for e in mon.exps), mon.coeff)
                     for mon in scaled.terms()])
    assert back == f


@given(poly_strategy())
def test_extract_power_reconstruction(f):
    if f.is_zero:
        return
    e, cof = f.extract_power(0)
    monomial = FracPoly.monomial(f.nvars, f.prime, 1,
                                 [e] + [PAdicFrac(0, 0, f.prime)] * (f.nvars - 1))
    assert monomial * cof == f
    assert any(mon.exps[0].is_zero for mon in cof.terms())
