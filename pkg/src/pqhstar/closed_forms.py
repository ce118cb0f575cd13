"""Closed-form h*-polynomials for joins, complete multipartite graphs and wheels."""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph, bipartite_double, complete, join
from .matching import pms_polynomial
from .poly import IntPolynomial, binomial, narayana_square_poly


class ConsistencyError(ArithmeticError):
    """Two exact computations that must agree did not."""


def _require_nonnegative(p: IntPolynomial, what: str) -> IntPolynomial:
    bad = [k for k, a in enumerate(p.coeffs) if a < 0]
    if bad:
        raise ConsistencyError(f"{what} produced a negative coefficient at x^{bad[0]}: {p}")
    return p


def join_summand(part: Graph, total: int) -> IntPolynomial:
    """h* of ``part + K_{total - part.n}``, read off as a PMS polynomial of a double.

    ``part + K_r`` is ``(part + K_{r-1}) + K_1``, and the h*-polynomial of a
    cone ``G + K_1`` is the PMS polynomial of the double of ``G``.
    """
    rest = total - part.n - 1
    base = join([part, complete(rest)]) if rest > 0 else part
    return pms_polynomial(bipartite_double(base))


def hstar_pq_join(parts: Sequence[Graph]) -> IntPolynomial:
    """h* of the join ``parts[0] + ... + parts[s-1]`` for ``s >= 2``."""
    if len(parts) < 2:
        raise ValueError(f"the join formula needs at least two parts, got {len(parts)}")
    if any(g.n < 1 for g in parts):
        raise ValueError("every part of a join must have at least one vertex")
    m = sum(g.n for g in parts)
    total = IntPolynomial()
    for g in parts:
        total = total + join_summand(g, m)
    total = total - (len(parts) - 1) * narayana_square_poly(m)
    return _require_nonnegative(total, "join formula")


def f_poly(l: int, m: int) -> IntPolynomial:
    """h* of ``K_l + E_m`` as an explicit triple binomial sum."""
    if l < 1 or m < 1:
        raise ValueError(f"need l, m >= 1, got l={l}, m={m}")
    coeffs = []
    for k in range(l + m):
        c = 0
        for a in range(k + 1):
            outer = binomial(l - 1, k - a) * binomial(m, a)
            if not outer:
                continue
            c += outer * sum(binomial(l + a - 1, b) * binomial(m - a, k - b) for b in range(a, k + 1))
        coeffs.append(c)
    return IntPolynomial(coeffs)


def f_poly_volume(l: int, m: int) -> int:
    """Value of ``f_poly(l, m)`` at 1 via the collapsed double sum."""
    return sum(
        binomial(m, a) * sum(binomial(l + a - 1, b) * binomial(l + m - a - 1, b) for b in range(l))
        for a in range(m + 1)
    )


def hstar_complete_multipartite(parts: Sequence[int]) -> IntPolynomial:
    if len(parts) < 2:
        raise ValueError(f"need at least two parts, got {list(parts)}")
    if any(p < 1 for p in parts):
        raise ValueError(f"part sizes must be positive, got {list(parts)}")
    m = sum(parts)
    total = IntPolynomial()
    for mi in parts:
        total = total + f_poly(m - mi, mi)
    total = total - (len(parts) - 1) * narayana_square_poly(m)
    return _require_nonnegative(total, "complete multipartite formula")


def _linear_recurrence(
    first: IntPolynomial, second: IntPolynomial, trace: IntPolynomial, det: IntPolynomial, n: int
) -> IntPolynomial:
    """``n``-th power sum of the roots of ``t**2 = trace*t - det``."""
    a, b = first, second
    for _ in range(n):
        a, b = b, trace * b - det * a
    return a


_X = IntPolynomial.x()
_ONE = IntPolynomial([1])
_TWO = IntPolynomial([2])


def _surd_power_sum(n: int) -> IntPolynomial:
    """``((1+s)/2)**n + ((1-s)/2)**n`` with ``s = sqrt(1+8x)``; roots of ``t**2 = t + 2x``."""
    return _linear_recurrence(_TWO, _ONE, _ONE, -2 * _X, n)


def gamma_poly(n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return _ONE
    a = _surd_power_sum(n)
    if n % 2 == 0:
        a = a - IntPolynomial.monomial(n // 2, 2)
    return a


def hstar_wheel_closed(n: int) -> IntPolynomial:
    """The wheel h* as ``b_n + x**n - c_n`` from the two surd power sums."""
    b = _linear_recurrence(_TWO, _ONE + 2 * _X, _ONE + 2 * _X, _X * _X - _X, n)
    c = _linear_recurrence(_TWO, 2 * _X, 2 * _X, _X * _X - _X, n)
    return b + IntPolynomial.monomial(n) - c


def hstar_wheel(n: int) -> IntPolynomial:
    """h* of the wheel ``C_n + K_1``, cross-checked against :func:`hstar_wheel_closed`."""
    if n < 3:
        raise ValueError(f"wheel needs n >= 3, got {n}")
    total = IntPolynomial()
    for k in range(n + 1):
        total = total + binomial(n, k) * gamma_poly(n - k) * IntPolynomial.monomial(k)
    closed = hstar_wheel_closed(n)
    if total != closed:
        raise ConsistencyError(f"wheel forms disagree at n={n}: {total} vs {closed}")
    return total
