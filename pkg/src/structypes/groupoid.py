"""Finite groupoids stored as (objects, automorphism order) per connected component."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .finset import LabeledSet
from .series import TruncatedSeries
from .species import EMPTY_SYSTEM, SpeciesExpr, SpeciesSystem, _Evaluator, orbits


@dataclass(frozen=True)
class FiniteGroupoid:
    components: tuple[tuple[int, int], ...] = ()

    def __init__(self, components: Iterable[tuple[int, int]] = ()):
        comps = tuple((int(c), int(a)) for c, a in components)
        for c, a in comps:
            if c < 1 or a < 1:
                raise ValueError(f"component {(c, a)} needs objects >= 1 and automorphisms >= 1")
        object.__setattr__(self, "components", comps)

    @property
    def objects(self) -> int:
        return sum(c for c, _ in self.components)

    @property
    def morphisms(self) -> int:
        # a connected component with c objects and vertex group of order a has c*c*a arrows
        return sum(c * c * a for c, a in self.components)

    def __add__(self, other: FiniteGroupoid) -> FiniteGroupoid:
        return gsum(self, other)

    def __mul__(self, other: FiniteGroupoid) -> FiniteGroupoid:
        return gprod(self, other)


EMPTY_GROUPOID = FiniteGroupoid()


def gcard(g: FiniteGroupoid) -> Fraction:
    return sum((Fraction(1, a) for _, a in g.components), Fraction(0))


def gsum(g: FiniteGroupoid, h: FiniteGroupoid) -> FiniteGroupoid:
    return FiniteGroupoid(g.components + h.components)


def gprod(g: FiniteGroupoid, h: FiniteGroupoid) -> FiniteGroupoid:
    return FiniteGroupoid((c1 * c2, a1 * a2) for c1, a1 in g.components for c2, a2 in h.components)


@dataclass(frozen=True)
class IntegralGroupoid:
    positive: FiniteGroupoid = EMPTY_GROUPOID
    negative: FiniteGroupoid = EMPTY_GROUPOID


def igcard(g: IntegralGroupoid) -> Fraction:
    return gcard(g.positive) - gcard(g.negative)


def igsum(g: IntegralGroupoid, h: IntegralGroupoid) -> IntegralGroupoid:
    return IntegralGroupoid(gsum(g.positive, h.positive), gsum(g.negative, h.negative))


def igprod(g: IntegralGroupoid, h: IntegralGroupoid) -> IntegralGroupoid:
    return IntegralGroupoid(
        gsum(gprod(g.positive, h.positive), gprod(g.negative, h.negative)),
        gsum(gprod(g.positive, h.negative), gprod(g.negative, h.positive)),
    )


def action_groupoid(f: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM, n: int = 0) -> FiniteGroupoid:
    """F(S)//S_n for an n-set S: one component per orbit, weighted by its stabilizer."""
    sys.check(f)
    s = LabeledSet.canonical(n)
    structs = _Evaluator(sys).enum(f, s.atoms)
    return FiniteGroupoid((size, stab) for _, size, stab in orbits(structs, s.atoms))


@dataclass(frozen=True)
class GradedGroupoid:
    """Degree-n pieces of a stuff type, known for degrees below ``order``."""

    degrees: Mapping[int, FiniteGroupoid] = field(default_factory=dict)
    order: int = 0

    def __hash__(self):
        return hash((tuple(sorted(self.degrees.items())), self.order))

    @classmethod
    def from_species(cls, f: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM, order: int = 6) -> GradedGroupoid:
        return cls({n: action_groupoid(f, sys, n) for n in range(order)}, order)

    def total(self) -> FiniteGroupoid:
        out = EMPTY_GROUPOID
        for n in sorted(self.degrees):
            out = gsum(out, self.degrees[n])
        return out


def stuff_gs(x: GradedGroupoid, order: int | None = None) -> TruncatedSeries:
    order = x.order if order is None else order
    if order > x.order:
        raise ValueError(f"degrees are only known below {x.order}")
    return TruncatedSeries(gcard(x.degrees.get(n, EMPTY_GROUPOID)) for n in range(order))


def orbit_stabilizer_ok(g: FiniteGroupoid, n: int) -> bool:
    return all(c * a == math.factorial(n) for c, a in g.components)
