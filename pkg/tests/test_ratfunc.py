"""Exact polynomial arithmetic, determinants and series extraction."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossnest.automata import build_permutation_22, build_setpartition_22
from crossnest.errors import CapExceeded
from crossnest.ratfunc import (
    ONE,
    IntPoly,
    RationalFunction,
    X,
    charpoly,
    det,
    det_cofactor,
    det_identity_minus_x,
    gf_from_graph,
    poly_gcd,
    series,
    series_by_power,
    split_linear_factors,
)

coeffs = st.lists(st.integers(-9, 9), max_size=5)
polys = coeffs.map(IntPoly)


# --- ring structure ---------------------------------------------------------


def test_trailing_zeros_stripped():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly().is_zero()
    assert IntPoly([0]).degree() == -1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + IntPoly() == a
    assert a * ONE == a
    assert a - a == IntPoly()


@given(polys, st.integers(-10, 10))
def test_evaluation_is_a_homomorphism(p, x):
    assert (p * p)(x) == p(x) * p(x)
    assert (p + ONE)(x) == p(x) + 1


def test_to_text():
    assert IntPoly([1, -4, 1]).to_text() == "1 - 4*x + x^2"
    assert IntPoly([0, 0, -3]).to_text() == "-3*x^2"
    assert IntPoly().to_text() == "0"
    assert (X * X).to_text() == "x^2"


@given(polys, polys)
def test_exact_division_round_trip(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


def test_exact_division_failure():
    with pytest.raises(ValueError):
        IntPoly([1, 1]).exact_div(IntPoly([2]))
    with pytest.raises(ZeroDivisionError):
        IntPoly([1]).exact_div(IntPoly())


@given(polys, polys)
@settings(max_examples=200)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    if g.is_zero():
        assert a.is_zero() and b.is_zero()
        return
    for p in (a, b):
        if not p.is_zero():
            p.exact_div(g)  # raises if g is not a divisor


def test_gcd_of_known_factorisation():
    a = IntPoly([1, -2]) * IntPoly([1, -6])
    b = IntPoly([1, -2]) * IntPoly([1, 3])
    # normal form has a positive leading coefficient: -(1 - 2x)
    assert poly_gcd(a, b) == IntPoly([-1, 2])


# --- determinants -----------------------------------------------------------


def _poly_matrix(draw, n):
    return [
        [draw(st.lists(st.integers(-5, 5), max_size=3).map(IntPoly)) for _ in range(n)]
        for _ in range(n)
    ]


@given(st.data(), st.integers(0, 4))
@settings(max_examples=150, deadline=None)
def test_bareiss_matches_cofactor(data, n):
    mat = _poly_matrix(data.draw, n)
    assert det(mat) == det_cofactor(mat)


def test_singular_matrix():
    z = IntPoly()
    assert det([[z, z], [z, z]]) == z
    assert det([]) == ONE  # empty minor of a one-state graph


@given(st.integers(1, 20), st.data())
@settings(max_examples=40, deadline=None)
def test_charpoly_path_matches_bareiss(n, data):
    """det(I - xA) via the modular characteristic polynomial equals the
    fraction-free computation, on both sides of the size cutover."""
    mat = [
        [data.draw(st.integers(-4, 4)) for _ in range(n)] for _ in range(n)
    ]
    direct = det(
        [
            [IntPoly([1 if r == c else 0, -mat[r][c]]) for c in range(n)]
            for r in range(n)
        ]
    )
    assert det_identity_minus_x(mat) == direct


def test_charpoly_known_values():
    assert charpoly([[2]]) == IntPoly([-2, 1])
    # companion matrix of y^2 - y - 1
    assert charpoly([[0, 1], [1, 1]]) == IntPoly([-1, -1, 1])
    assert charpoly([]) == ONE


# --- rational functions and series ------------------------------------------


def test_rational_function_reduces():
    rf = RationalFunction(IntPoly([2, 2]), IntPoly([2, 0, -2]))
    assert rf.num == ONE
    assert rf.den == IntPoly([1, -1])


def test_rational_function_sign_convention():
    rf = RationalFunction(IntPoly([1]), IntPoly([-1, 2]))
    assert rf.den.coeffs[0] > 0


def test_series_of_known_gf():
    rf = RationalFunction(IntPoly([1, -1]), IntPoly([1, -3, 1]))
    assert series(rf, 6).coeffs == (1, 2, 5, 13, 34, 89)


def test_series_offset_is_recorded():
    rf = RationalFunction(ONE, IntPoly([1, -1]))
    s = series(rf, 3, offset=1)
    assert s.coeffs == (1, 1, 1)
    assert s.offset == 1


@given(st.lists(st.integers(-6, 6), max_size=4), st.lists(st.integers(-6, 6), max_size=4))
@settings(max_examples=200)
def test_series_satisfies_recurrence(num, den):
    den = [1] + den
    rf = RationalFunction(IntPoly(num), IntPoly(den))
    out = series(rf, 10).coeffs
    # n-th coefficient of num = sum_i den_i * out_(n-i)
    for t in range(10):
        lhs = rf.num.coeffs[t] if t < len(rf.num.coeffs) else 0
        rhs = sum(
            rf.den.coeffs[i] * out[t - i]
            for i in range(min(t, len(rf.den.coeffs) - 1) + 1)
        )
        assert lhs == rhs


@pytest.mark.parametrize(
    "build,r", [(build_setpartition_22, 3), (build_permutation_22, 3)]
)
def test_series_matches_matrix_powers(build, r):
    g = build(r)
    assert series(gf_from_graph(g), 12).coeffs == series_by_power(g, 12).coeffs


def test_gf_state_cap():
    from crossnest.automata import Multigraph

    n = 201
    g = Multigraph(
        family="setpartition",
        j=2,
        k=2,
        colours=1,
        states=tuple("s%d" % i for i in range(n)),
        matrix=tuple((0,) * n for _ in range(n)),
    )
    with pytest.raises(CapExceeded):
        gf_from_graph(g)
    assert gf_from_graph(g, max_states=n).num == ONE


# --- factor splitting -------------------------------------------------------


def test_split_linear_factors():
    p = IntPoly([1, -2]) * IntPoly([1, -6])
    assert split_linear_factors(p) == (1, (2, 6))
    assert split_linear_factors(IntPoly([1, -3, 1])) is None
    assert split_linear_factors(IntPoly([5])) == (5, ())
    assert split_linear_factors(IntPoly([1, 2])) == (1, (-2,))


@given(st.lists(st.integers(-8, 8).filter(bool), min_size=1, max_size=4))
@settings(max_examples=150)
def test_split_recovers_planted_slopes(slopes):
    p = ONE
    for m in slopes:
        p = p * IntPoly([1, -m])
    got = split_linear_factors(p)
    assert got is not None
    constant, found = got
    assert constant == 1
    assert sorted(found) == sorted(slopes)
