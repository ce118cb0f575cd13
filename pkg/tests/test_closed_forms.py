import pytest

from pqhstar import graphs as gr
from pqhstar.closed_forms import (
    ConsistencyError,
    _require_nonnegative,
    f_poly,
    f_poly_volume,
    gamma_poly,
    hstar_complete_multipartite,
    hstar_pq_join,
    hstar_wheel,
    hstar_wheel_closed,
)
from pqhstar.graphs import bipartite_double
from pqhstar.interior import interior_polynomial
from pqhstar.matching import matching_generating_polynomial, pms_polynomial
from pqhstar.poly import IntPolynomial, binomial, narayana_square_poly

X = IntPolynomial.x()
X1 = IntPolynomial([1, 1])


def test_join_star_volume():
    for m in range(1, 7):
        assert hstar_pq_join([gr.empty(1), gr.empty(m)])(1) == 2**m


def test_join_of_completes():
    assert hstar_pq_join([gr.complete(2), gr.complete(3)]) == narayana_square_poly(5)


def test_join_k23_volume():
    # Vol(K_{2,m}) = 2^(m-2)(m^2+3m+8) - 2 at m = 3
    v = hstar_pq_join([gr.empty(2), gr.empty(3)])(1)
    assert v == 2 * (9 + 9 + 8) - 2 == 50
    assert v == interior_polynomial(bipartite_double(gr.complete_multipartite([2, 3])))(1)


def test_join_needs_two_parts():
    with pytest.raises(ValueError):
        hstar_pq_join([gr.cycle(4)])
    with pytest.raises(ValueError):
        hstar_pq_join([gr.cycle(4), gr.empty(0)])


def test_negative_coefficients_raise():
    with pytest.raises(ConsistencyError):
        _require_nonnegative(IntPolynomial([1, -1]), "test")


@pytest.mark.parametrize(
    "parts",
    [
        [gr.cycle(3), gr.empty(2)],
        [gr.path(3), gr.complete(2)],
        [gr.cycle(4), gr.empty(1), gr.empty(1)],
        [gr.path(2), gr.path(2), gr.empty(2)],
        [gr.cycle(5), gr.empty(1)],
    ],
)
def test_join_formula_matches_interior(parts):
    assert hstar_pq_join(parts) == interior_polynomial(bipartite_double(gr.join(parts)))


def test_f_poly_small_tables():
    for m in range(1, 11):
        assert f_poly(1, m)(1) == 2**m
    for l in range(1, 11):
        assert f_poly(l, 1)(1) == binomial(2 * l, l)


def test_f_poly_two_m_closed_form():
    for m in range(4, 9):
        expected = X1 ** (m + 1) + m * IntPolynomial([2, m + 1]) * X * X1 ** (m - 2)
        assert f_poly(2, m) == expected


def test_f_poly_l_two_closed_form():
    for l in range(1, 8):
        assert f_poly(l, 2) == narayana_square_poly(l + 2) - 2 * X


def test_f_poly_matches_interior():
    for l in range(1, 7):
        for m in range(1, 8 - l):
            g = gr.join([gr.complete(l), gr.empty(m)])
            assert f_poly(l, m) == interior_polynomial(bipartite_double(g)), (l, m)


def test_f_poly_volume_double_sum():
    for l in range(1, 9):
        for m in range(1, 9):
            assert f_poly(l, m)(1) == f_poly_volume(l, m)


def test_f_poly_rejects_zero():
    with pytest.raises(ValueError):
        f_poly(0, 3)


def test_multipartite_examples():
    for m in range(1, 8):
        assert hstar_complete_multipartite([1, m])(1) == 2**m
    n = 6
    expected = X1**5 + 4 * IntPolynomial([2, 5]) * X * X1**2 - 2 * X
    assert hstar_complete_multipartite([2, n - 2]) == expected
    for m in range(2, 7):
        assert hstar_complete_multipartite([1] * m) == narayana_square_poly(m)


def test_multipartite_matches_interior():
    for parts in ([2, 2], [1, 2, 2], [3, 3], [1, 1, 3], [2, 2, 2]):
        g = gr.complete_multipartite(parts)
        assert hstar_complete_multipartite(parts) == interior_polynomial(bipartite_double(g))


def test_multipartite_needs_two_parts():
    with pytest.raises(ValueError):
        hstar_complete_multipartite([4])


def test_gamma_examples():
    assert gamma_poly(0) == IntPolynomial([1])
    assert gamma_poly(1) == IntPolynomial([1])
    assert gamma_poly(2) == IntPolynomial([1, 2])
    assert gamma_poly(3) == IntPolynomial([1, 6])
    assert gamma_poly(4) == IntPolynomial([1, 8, 6])


def test_gamma_is_cycle_matching_polynomial():
    for n in range(3, 11):
        g = matching_generating_polynomial(gr.cycle(n)).scale_variable(2)
        if n % 2 == 0:
            g = g - IntPolynomial.monomial(n // 2, 2)
        assert gamma_poly(n) == g


def test_wheel_examples():
    assert hstar_wheel(3) == narayana_square_poly(4) == interior_polynomial(bipartite_double(gr.complete(4)))
    for n in range(3, 11):
        assert hstar_wheel(n)(1) == 3**n - 2**n + 1
    assert hstar_wheel(4) == pms_polynomial(bipartite_double(gr.cycle(4)))


def test_wheel_forms_agree():
    for n in range(3, 17):
        total = sum(
            (binomial(n, k) * gamma_poly(n - k) * IntPolynomial.monomial(k) for k in range(n + 1)),
            IntPolynomial(),
        )
        assert total == hstar_wheel_closed(n)


def test_wheel_rejects_small():
    with pytest.raises(ValueError):
        hstar_wheel(2)


def test_outputs_have_unit_constant_and_nonnegative():
    outs = [hstar_wheel(n) for n in range(3, 10)]
    outs += [f_poly(l, m) for l in range(1, 6) for m in range(1, 6)]
    outs += [hstar_complete_multipartite(p) for p in ([1, 4], [2, 3], [2, 2, 2], [3, 4])]
    for p in outs:
        assert p[0] == 1 and p.is_nonnegative()
