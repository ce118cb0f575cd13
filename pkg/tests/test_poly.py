import math

from hypothesis import given
from hypothesis import strategies as st

from pqhstar.poly import IntPolynomial, binomial, evaluate, narayana_square_poly, render

polys = st.lists(st.integers(-50, 50), max_size=6).map(IntPolynomial)


def test_basic_arithmetic():
    assert IntPolynomial([1, 1]) + IntPolynomial([1, -1]) == IntPolynomial([2])
    assert IntPolynomial([1, 1]) ** 2 == IntPolynomial([1, 2, 1])
    assert IntPolynomial([3, 4]) * IntPolynomial() == IntPolynomial()


def test_canonical_form():
    assert IntPolynomial([1, 0, 0]).coeffs == (1,)
    assert IntPolynomial([0, 0]).coeffs == ()
    assert IntPolynomial().degree == -1
    assert IntPolynomial([1, 2, 3]).degree == 2


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == IntPolynomial()


@given(polys, st.integers(-5, 5))
def test_eval_is_horner(p, t):
    assert evaluate(p, t) == sum(a * t**k for k, a in enumerate(p.coeffs))


def test_binomial():
    assert binomial(6, 3) == 20
    # independent: factorial quotient
    assert binomial(12, 6) == math.factorial(12) // (math.factorial(6) ** 2) == 924
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


def test_pascal_rule():
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_narayana_square_poly():
    assert narayana_square_poly(1) == IntPolynomial([1])
    assert narayana_square_poly(3) == IntPolynomial([1, 4, 1])
    assert narayana_square_poly(4) == IntPolynomial([1, 9, 9, 1])
    for m in range(1, 13):
        assert narayana_square_poly(m)(1) == binomial(2 * (m - 1), m - 1)


def test_big_coefficients_stay_exact():
    m = 40
    assert narayana_square_poly(m)(1) == math.comb(78, 39)
    assert narayana_square_poly(m)(1) > 2**64


def test_eval_edge_cases():
    assert IntPolynomial([1, 4, 1])(1) == 6
    assert IntPolynomial([7, 3])(0) == 7
    assert IntPolynomial()(5) == 0


def test_rendering():
    assert render(IntPolynomial([1, 4, 0, 2])) == "1 + 4*x + 2*x^3"
    assert render(IntPolynomial([0, -2, 1])) == "-2*x + 1*x^2"
    assert render(IntPolynomial()) == "0"
    assert IntPolynomial([1, 2**70]).to_strings() == ["1", str(2**70)]
