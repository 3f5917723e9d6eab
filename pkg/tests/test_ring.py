import pytest
from hypothesis import given, strategies as st

from framedkh.ring import (
    A,
    DELTA,
    I,
    ONE,
    ZERO,
    GaussianInt,
    HalfInt,
    LaurentPoly,
    parse_poly,
    phase,
    poly_add,
    poly_mul,
    render_poly,
)
from oracles import naive_mul, naive_poly

gauss = st.builds(GaussianInt, st.integers(-5, 5), st.integers(-5, 5))
polys = st.dictionaries(st.integers(-8, 8), gauss, max_size=5).map(LaurentPoly)
int_polys = st.dictionaries(st.integers(-8, 8), st.integers(-6, 6), max_size=5)


def P(terms):
    return LaurentPoly(terms)


def test_gaussian_unit():
    assert GaussianInt(0, 1) * GaussianInt(0, 1) == GaussianInt(-1)
    assert GaussianInt(0, 1).is_unit() and not GaussianInt(1, 1).is_unit()


class TestAdd:
    def test_inverse(self):
        assert poly_add(A, -A) == ZERO
        assert not poly_add(A, -A)

    def test_identity(self):
        assert poly_add(DELTA, ZERO) == DELTA

    def test_merge(self):
        got = poly_add(P({7: 1, 3: 1}), P({-1: 1, -9: -1}))
        assert got == P({7: 1, 3: 1, -1: 1, -9: -1})
        assert got == P(naive_poly([(7, 1), (3, 1), (-1, 1), (-9, -1)]))


class TestMul:
    def test_identity(self):
        assert poly_mul(DELTA, ONE) == DELTA

    def test_units_cancel(self):
        assert poly_mul(LaurentPoly.monomial(-1, GaussianInt(0, 1)), LaurentPoly.monomial(1, GaussianInt(0, -1))) == ONE

    def test_hopf_product(self):
        assert poly_mul(DELTA, P({4: -1, -4: -1})) == P({6: 1, 2: 1, -2: 1, -6: 1})


@pytest.mark.parametrize(
    "twice, expected",
    [(2, GaussianInt(-1)), (1, GaussianInt(0, 1)), (-1, GaussianInt(0, -1)), (0, GaussianInt(1))],
)
def test_phase_examples(twice, expected):
    assert phase(HalfInt(twice)) == expected


def test_phase_half_inverse():
    assert phase(HalfInt(1)) * phase(HalfInt(-1)) == GaussianInt(1)


def test_zero_terms_dropped():
    p = P({3: 0, 1: 2, -1: GaussianInt(0, 0)})
    assert p.terms == {1: GaussianInt(2)}
    assert len(ZERO) == 0


def test_halfint():
    h = HalfInt(3)
    assert not h.is_integral and (h + h).is_integral
    assert HalfInt.of(2) == HalfInt(4) == 2
    assert str(HalfInt(-1)) == "-1/2"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(int_polys, int_polys)
def test_mul_matches_naive(a, b):
    got = P(a) * P(b)
    want = naive_mul(naive_poly(a.items()), naive_poly(b.items()))
    assert got == P(want)


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_phase_additive(s, t):
    assert phase(HalfInt(s) + HalfInt(t)) == phase(HalfInt(s)) * phase(HalfInt(t))


@given(polys)
def test_render_round_trip(p):
    assert parse_poly(render_poly(p)) == p


@given(polys)
def test_json_round_trip(p):
    data = p.to_json()
    assert [t["exp"] for t in data] == sorted((t["exp"] for t in data), reverse=True)
    assert LaurentPoly.from_json(data) == p


@pytest.mark.parametrize(
    "p, text",
    [
        (DELTA, "-A^2 - A^-2"),
        (P({1: GaussianInt(0, -1), -1: GaussianInt(0, 1)}), "-i*A + i*A^-1"),
        (P({2: GaussianInt(1, -2)}), "(1-2i)*A^2"),
        (ONE + ONE, "2"),
        (ZERO, "0"),
        (I * A, "i*A"),
    ],
)
def test_render(p, text):
    assert render_poly(p) == text == str(p)
    assert parse_poly(text) == p


def test_power_of_monomial():
    assert A ** -3 == LaurentPoly.monomial(-3)
    assert DELTA ** 2 == P({4: 1, 0: 2, -4: 1})
    with pytest.raises(ValueError):
        DELTA ** -1


@given(polys)
def test_conjugate_and_inversion_are_involutions(p):
    assert p.conjugate().conjugate() == p
    assert p.invert_variable().invert_variable() == p
