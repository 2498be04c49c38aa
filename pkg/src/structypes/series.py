"""Exact truncated power series over Q, and integer polynomials modulo H^(n+1)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import NonIntegerCoefficient, NotPolynomial, OrderTooSmall, ZeroConstantTerm

Number = Union[int, Fraction]


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _poly_str(coeffs, var: str) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(Fraction(c))
        body = _fmt(mag)
        if i == 0:
            term = body
        else:
            power = var if i == 1 else f"{var}^{i}"
            term = power if mag == 1 else f"{body}*{power}"
        terms.append(("-" if c < 0 else "+", term))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, term in terms[1:]:
        out += f" {sign} {term}"
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    """``coeffs[i]`` is the coefficient of z^i; coefficients from ``order`` on are unknown."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = (cs + [Fraction(0)] * order)[:order]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Number = 1) -> TruncatedSeries:
        return cls([0] * k + [c], order)

    def __getitem__(self, i: int) -> Fraction:
        if not 0 <= i < self.order:
            raise IndexError(f"coefficient {i} is beyond the truncation order {self.order}")
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise OrderTooSmall(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order])

    def _lift(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{_poly_str(self.coeffs, 'z')} + O(z^{self.order})"

    def derivative(self) -> TruncatedSeries:
        return TruncatedSeries(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def is_polynomial(self) -> bool:
        return self.order == 0 or self.coeffs[-1] == 0


def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    return TruncatedSeries(f.coeffs[i] + g.coeffs[i] for i in range(n))


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    return TruncatedSeries(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n))


def reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    if f.order == 0:
        return f
    a = f.coeffs
    if a[0] == 0:
        raise ZeroConstantTerm("series with zero constant term has no reciprocal")
    inv = [1 / a[0]]
    for k in range(1, f.order):
        s = sum((a[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0))
        inv.append(-s / a[0])
    return TruncatedSeries(inv)


def theta(f: TruncatedSeries) -> TruncatedSeries:
    """Drop the constant and linear terms, then divide by -z."""
    if f.order < 2:
        raise OrderTooSmall(f"theta needs order >= 2, got {f.order}")
    a = f.coeffs
    return TruncatedSeries([Fraction(0)] + [-a[n + 1] for n in range(1, f.order - 1)])


def _horner(coeffs, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class ChernPolynomial:
    """Element of Z[H]/(H^(n+1)); ``coeffs[i]`` multiplies H^i."""

    n: int
    coeffs: tuple[int, ...]

    def __init__(self, n: int, coeffs: Iterable[int]):
        if n < 0:
            raise ValueError("n must be non-negative")
        cs = [int(c) for c in coeffs]
        cs = (cs + [0] * (n + 1))[: n + 1]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __add__(self, other: ChernPolynomial) -> ChernPolynomial:
        self._check(other)
        return ChernPolynomial(self.n, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> ChernPolynomial:
        return ChernPolynomial(self.n, (-c for c in self.coeffs))

    def __sub__(self, other: ChernPolynomial) -> ChernPolynomial:
        return self + (-other)

    def __mul__(self, other: ChernPolynomial) -> ChernPolynomial:
        self._check(other)
        a, b, m = self.coeffs, other.coeffs, self.n + 1
        return ChernPolynomial(self.n, (sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(m)))

    def _check(self, other):
        if not isinstance(other, ChernPolynomial) or other.n != self.n:
            raise ValueError("Chern polynomials must live in the same quotient ring")

    def __str__(self) -> str:
        terms = [f"{c}" if i == 0 else f"{c}*H" if i == 1 else f"{c}*H^{i}" for i, c in enumerate(self.coeffs)]
        return " + ".join(terms)

    def as_series(self) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs)

    @classmethod
    def from_series(cls, n: int, f: TruncatedSeries) -> ChernPolynomial:
        if f.order < n + 1:
            raise OrderTooSmall(f"need order {n + 1}, got {f.order}")
        coeffs = f.coeffs[: n + 1]
        if any(c.denominator != 1 for c in coeffs):
            raise NonIntegerCoefficient(f"non-integer coefficients in {f}")
        return cls(n, (int(c) for c in coeffs))


def eval_at(f: TruncatedSeries | ChernPolynomial, x: Number) -> Fraction:
    """Evaluate a polynomial exactly.

    A truncated series only counts as a polynomial when its last known
    coefficient vanishes; otherwise NotPolynomial is raised.
    """
    if isinstance(f, ChernPolynomial):
        return _horner(f.coeffs, Fraction(x))
    if not f.is_polynomial():
        raise NotPolynomial(f"coefficient of z^{f.order - 1} is nonzero in {f}")
    return _horner(f.coeffs, Fraction(x))
