"""Dense univariate polynomials with Python-int coefficients."""

from __future__ import annotations

import math
from typing import Iterable, Union

Coeff = int
PolyLike = Union["IntPolynomial", int]


class IntPolynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of ``x**k``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: PolyLike) -> IntPolynomial:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other: PolyLike) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: PolyLike) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: PolyLike) -> IntPolynomial:
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, t: int) -> int:
        return evaluate(self, t)

    def scale_variable(self, c: int) -> IntPolynomial:
        """``p(c*x)``."""
        return IntPolynomial(a * c**k for k, a in enumerate(self.coeffs))

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def to_strings(self) -> list[str]:
        """Coefficients as decimal strings, index = exponent."""
        return [str(a) for a in self.coeffs]

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def _coerce(p: PolyLike) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial([p])
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def subtract(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a - b


def multiply(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def evaluate(p: IntPolynomial, t: int) -> int:
    acc = 0
    for a in reversed(p.coeffs):
        acc = acc * t + a
    return acc


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def narayana_square_poly(m: int) -> IntPolynomial:
    """``sum_k C(m-1, k)**2 x**k``: the h*-polynomial for the complete graph on ``m`` vertices."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return IntPolynomial(binomial(m - 1, k) ** 2 for k in range(m))


def render(p: IntPolynomial) -> str:
    """Text form ``c0 + c1*x + c2*x^2``, zero terms omitted."""
    terms = []
    for k, a in enumerate(p.coeffs):
        if a == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        mag = abs(a)
        body = f"{mag}*{mono}" if mono else str(mag)
        if not terms:
            terms.append(body if a > 0 else f"-{body}")
        else:
            terms.append(f"{'+' if a > 0 else '-'} {body}")
    return " ".join(terms) if terms else "0"
