"""Chern classes of projective space and of its smooth hypersurfaces.

The hypersurface classes are computed by iterating :func:`vop` on the
signed flag species, and checked against the adjunction formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegerCoefficient
from .intspecies import IntSpecies, iegf
from .operators import vop
from .series import ChernPolynomial, TruncatedSeries, eval_at, mul, reciprocal
from .species import DegreePart, Injections, SpeciesExpr, sum_of


@dataclass(frozen=True)
class HypersurfaceSpec:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"ambient dimension must be >= 2, got {self.n}")
        if self.d < 1:
            raise ValueError(f"degree must be >= 1, got {self.d}")


@dataclass(frozen=True)
class EulerPolynomial:
    n: int
    coeffs: tuple[int, ...]

    def __call__(self, x) -> Fraction:
        return eval_at(self.as_series(), x)

    def as_series(self) -> TruncatedSeries:
        return TruncatedSeries(list(self.coeffs) + [0])


def q_binomial(m: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^m (the binomial coefficient at q = 1)."""
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    if q < 1:
        raise ValueError("need q >= 1")
    if q == 1:
        return math.comb(m, k)
    num = math.prod(1 - q ** (m - i) for i in range(k))
    den = math.prod(1 - q ** (i + 1) for i in range(k))
    return num // den


def skeletal_species(n: int) -> SpeciesExpr:
    """Ordered flags in the n-simplex: injections of the labels into its n+1 vertices."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Injections(n + 1)


def chern_pn(n: int) -> ChernPolynomial:
    return ChernPolynomial(n, (math.comb(n + 1, i) for i in range(n + 1)))


def integral_skeletal(n: int) -> IntSpecies:
    """Odd-degree flag components counted positively, even-degree ones negatively."""
    flags = skeletal_species(n)
    odd = [DegreePart(flags, k) for k in range(1, n + 2, 2)]
    even = [DegreePart(flags, k) for k in range(0, n + 2, 2)]
    return IntSpecies(sum_of(odd), sum_of(even))


def euler_poly(n: int) -> EulerPolynomial:
    if n < 2:
        raise ValueError("n must be >= 2")
    coeffs = [0] * (n + 1)
    for k in range(n):
        coeffs[n - k] -= math.comb(n + 1, k) * (-1) ** (n - k)
    return EulerPolynomial(n, tuple(coeffs))


def iterate_vop(phi: IntSpecies, times: int, up_to: int) -> IntSpecies:
    for _ in range(times):
        phi = vop(phi, up_to)
    return phi


def _value_at(phi: IntSpecies, d: int, up_to: int) -> int:
    v = eval_at(iegf(phi, up_to + 2), d)
    if v.denominator != 1:
        raise NonIntegerCoefficient(f"non-integral value {v}")
    return int(v)


def euler_char(spec: HypersurfaceSpec) -> int:
    n = spec.n
    return _value_at(vop(integral_skeletal(n), n + 1), spec.d, n + 1)


def chern_hypersurface(spec: HypersurfaceSpec) -> ChernPolynomial:
    """Coefficient of H^i is the (n+1-i)-fold V-iterate of the signed flag species at d."""
    n, d = spec.n, spec.d
    coeffs = [0] * (n + 1)
    phi = integral_skeletal(n)
    for times in range(1, n + 1):
        phi = vop(phi, n + 1)
        coeffs[n + 1 - times] = _value_at(phi, d, n + 1)
    return ChernPolynomial(n, coeffs)


def adjunction_oracle(spec: HypersurfaceSpec) -> ChernPolynomial:
    """d·H·(1+H)^(n+1) / (1+d·H) in Z[H]/(H^(n+1))."""
    n, d = spec.n, spec.d
    order = n + 1
    ambient = TruncatedSeries([math.comb(n + 1, i) for i in range(n + 2)], order)
    normal = TruncatedSeries([1, d], order)
    hyperplane = TruncatedSeries([0, d], order)
    return ChernPolynomial.from_series(n, mul(mul(hyperplane, ambient), reciprocal(normal)))
