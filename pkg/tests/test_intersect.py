import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import curve_corpus

from perfproj import (
    DomainError,
    FracPoly,
    INFINITE_RANK,
    PAdicFrac,
    QuotientCapExceeded,
    braided_multiplicity,
    local_multiplicity,
    parse_poly,
    quotient_dim_oracle,
)


def P(text, p=2):
    return parse_poly(text, 2, p)


def test_local_multiplicity_examples():
    assert local_multiplicity(P("x"), P("y")) == 1
    assert local_multiplicity(P("y^2 - x^3"), P("x")) == 2
    assert local_multiplicity(P("y - x^2"), P("y + x^2")) == 2
    assert local_multiplicity(P("x*y"), P("x")) == INFINITE_RANK


def test_local_multiplicity_known_values():
    assert local_multiplicity(P("x^2"), P("y^3")) == 6
    assert local_multiplicity(P("y - x^2"), P("x")) == 1
    assert local_multiplicity(P("y - x^2"), P("y - x^3")) == 2
    assert local_multiplicity(P("y^2 - x^3"), P("y^2 - x^5")) == 6
    # transversal smooth branches and a unit
    assert local_multiplicity(P("y - x"), P("y + x")) == 1
    assert local_multiplicity(P("x + 1"), P("y")) == 0


def test_local_multiplicity_shared_components():
    assert local_multiplicity(P("x^2*y"), P("x")) == INFINITE_RANK
    assert local_multiplicity(P("y^2"), P("x*y")) == INFINITE_RANK
    # shared component away from the origin stays finite
    f = P("x*y - x")          # x*(y-1)
    assert local_multiplicity(f, P("y*x - y")) == 1


def test_local_multiplicity_rejects_bad_input():
    with pytest.raises(DomainError, match="zero polynomial"):
        local_multiplicity(P("x - x"), P("y"))
    with pytest.raises(DomainError, match="integer exponents"):
        local_multiplicity(P("y - x^(3/2)"), P("x"))


def test_oracle_examples():
    assert quotient_dim_oracle(P("x"), P("y")) == 1
    assert quotient_dim_oracle(P("x^2"), P("y^3")) == 6
    assert quotient_dim_oracle(P("y - x^2"), P("x")) == 1


def test_oracle_cap_exceeded_on_shared_component():
    with pytest.raises(QuotientCapExceeded):
        quotient_dim_oracle(P("y^2 - x^3"), P("y^4 - x^3*y^2"), cap=10)


def test_fulton_equals_oracle_on_corpus():
    corpus = curve_corpus()
    for i, F in enumerate(corpus):
        for G in corpus[i:]:
            mu = local_multiplicity(F, G)
            if mu == INFINITE_RANK:
                try:
                    assert quotient_dim_oracle(F, G, cap=14) == INFINITE_RANK
                except QuotientCapExceeded:
                    pass
            else:
                assert mu == quotient_dim_oracle(F, G), (F, G)


def test_symmetry_at_integer_grade():
    corpus = curve_corpus()
    for i, F in enumerate(corpus):
        for G in corpus[i:]:
            assert local_multiplicity(F, G) == local_multiplicity(G, F)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("y - x^2", "x"), ("y^2 - x^3", "x"), ("x", "y"),
                        ("y - x^2", "y + x^2"), ("y - x^3", "y - x")]),
       st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2),
                          st.integers(-2, 2)), min_size=0, max_size=3))
def test_invariance_under_multiple_shift(pair, hterms):
    F = P(pair[0])
    G = P(pair[1])
    items = [((PAdicFrac(a, 0, 2), PAdicFrac(b, 0, 2)), c) for a, b, c in hterms]
    H = FracPoly(2, 2, items)
    shifted = G + H * F
    if shifted.is_zero:
        return
    assert local_multiplicity(F, shifted) == local_multiplicity(F, G)


def test_mixed_row_coordinate_axes():
    for p in (2, 3):
        tup = braided_multiplicity(parse_poly("x", 2, p), parse_poly("y", 2, p), 1)
        assert tup.flattened_row(1) == [1, p, p, p * p]
        assert tup.flattened_row(0) == [1]
        assert tup.diagonal.grades_list() == [1, 1]


def test_mixed_matrix_general_pattern_for_axes():
    # entry at root depths (a, b) in grade i is p**((i-a)+(i-b))
    for p in (2, 3):
        x, y = parse_poly("x", 2, p), parse_poly("y", 2, p)
        tup = braided_multiplicity(x, y, 2)
        for i in range(3):
            for a in range(i + 1):
                for b in range(i + 1):
                    assert tup.mixed[i][(a, b)] == p ** ((i - a) + (i - b))
        # verified against the independent oracle
        for s in range(3):
            for t in range(3):
                Fs = x.rescale_to_grade(s)
                Gt = y.rescale_to_grade(t)
                assert quotient_dim_oracle(Fs, Gt) == p ** (s + t)


def test_diagonal_consistency_invariants():
    for text_f, text_g in [("x", "y"), ("y^2 - x^3", "x"), ("y - x^2", "y + x^2")]:
        tup = braided_multiplicity(P(text_f), P(text_g), 2)
        classical = tup.mixed[0][(0, 0)]
        for i in range(3):
            assert tup.mixed[i][(i, i)] == tup.diagonal.at(i) == classical


def test_cuspidal_grade_one_matrix():
    # values frozen from the quotient-dimension oracle
    tup = braided_multiplicity(P("y^2 - x^3"), P("x"), 1)
    assert tup.diagonal.grades_list() == [2, 2]
    assert tup.mixed[1] == {(1, 1): 2, (1, 0): 4, (0, 1): 4, (0, 0): 8}
    f1 = P("y^2 - x^3").rescale_to_grade(1)
    assert quotient_dim_oracle(f1, P("x")) == 4
    assert quotient_dim_oracle(f1, P("x^2")) == 8
    assert quotient_dim_oracle(P("y^2 - x^3"), P("x^2")) == 4


def test_swapping_curves_transposes_the_matrix():
    # the matrix is explicitly index-ordered with the F root depth first:
    # swapping the curves transposes every grade's matrix
    for text_f, text_g in [("y^2 - x^3", "x"), ("y - x^2", "y^3"), ("x", "y")]:
        fw = braided_multiplicity(P(text_f), P(text_g), 2)
        bw = braided_multiplicity(P(text_g), P(text_f), 2)
        for i in range(3):
            for (a, b), value in fw.mixed[i].items():
                assert bw.mixed[i][(b, a)] == value


def test_fractional_inputs_zero_below_native_grade():
    F = P("y - x^(3/2)")  # native grade 1
    tup = braided_multiplicity(F, P("x"), 2)
    assert tup.diagonal.at(0) == 0
    assert tup.diagonal.at(1) == 2 and tup.diagonal.at(2) == 2
    assert all(v == 0 for v in tup.flattened_row(0))
    assert tup.mixed[1][(1, 1)] == 0  # F cannot be rooted past the grade
    assert tup.mixed[1][(0, 1)] == 2


def test_infinite_pair_serializes():
    tup = braided_multiplicity(P("x*y"), P("x"), 1)
    payload = tup.to_json_dict()
    json.dumps(payload)
    assert payload["diagonal"] == ["inf", "inf"]
    assert payload["mixed"][1] == ["inf"] * 4


def test_mixed_prime_rejected():
    with pytest.raises(DomainError):
        braided_multiplicity(parse_poly("x", 2, 2), parse_poly("y", 2, 3), 1)
