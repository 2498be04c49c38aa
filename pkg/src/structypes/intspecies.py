"""Signed species: ordered pairs (positive, negative) counted with sign."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotRegular
from .finset import LabeledSet
from .series import TruncatedSeries
from .species import (
    EMPTY_SYSTEM,
    One,
    Prod,
    SpeciesExpr,
    SpeciesSystem,
    StructureSet,
    Sum,
    Zero,
    count,
    counts,
    egf,
    enumerate_structures,
    is_regular,
    regular_decompose,
)


def merge_systems(*systems: SpeciesSystem) -> SpeciesSystem:
    merged: dict[str, SpeciesExpr] = {}
    for s in systems:
        for name, body in s.bindings:
            if merged.setdefault(name, body) != body:
                raise ValueError(f"conflicting bindings for {name!r}")
    return SpeciesSystem(merged)


@dataclass(frozen=True)
class IntSpecies:
    positive: SpeciesExpr
    negative: SpeciesExpr = Zero()
    sys: SpeciesSystem = EMPTY_SYSTEM

    def __add__(self, other: IntSpecies) -> IntSpecies:
        return isum(self, other)

    def __mul__(self, other: IntSpecies) -> IntSpecies:
        return iprod(self, other)

    def __neg__(self) -> IntSpecies:
        return IntSpecies(self.negative, self.positive, self.sys)

    def __str__(self) -> str:
        return f"[{self.positive} | {self.negative}]"


@dataclass(frozen=True)
class IntStructureSet:
    positive: StructureSet
    negative: StructureSet

    def cardinality(self) -> int:
        return len(self.positive) - len(self.negative)


def embed(f: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM) -> IntSpecies:
    return IntSpecies(f, Zero(), sys)


def isum(phi: IntSpecies, psi: IntSpecies) -> IntSpecies:
    return IntSpecies(
        Sum(phi.positive, psi.positive), Sum(phi.negative, psi.negative), merge_systems(phi.sys, psi.sys)
    )


def iprod(phi: IntSpecies, psi: IntSpecies) -> IntSpecies:
    p, n = phi, psi
    return IntSpecies(
        Sum(Prod(p.positive, n.positive), Prod(p.negative, n.negative)),
        Sum(Prod(p.positive, n.negative), Prod(p.negative, n.positive)),
        merge_systems(phi.sys, psi.sys),
    )


def ienumerate(phi: IntSpecies, s: LabeledSet | Iterable[str]) -> IntStructureSet:
    return IntStructureSet(
        enumerate_structures(phi.positive, phi.sys, s), enumerate_structures(phi.negative, phi.sys, s)
    )


def icount(phi: IntSpecies, n: int) -> int:
    return count(phi.positive, phi.sys, n) - count(phi.negative, phi.sys, n)


def icounts(phi: IntSpecies, terms: int) -> list[int]:
    pos = counts(phi.positive, phi.sys, terms)
    neg = counts(phi.negative, phi.sys, terms)
    return [a - b for a, b in zip(pos, neg)]


def iegf(phi: IntSpecies, order: int) -> TruncatedSeries:
    return egf(phi.positive, phi.sys, order) - egf(phi.negative, phi.sys, order)


def is_iregular(phi: IntSpecies, up_to: int = 6) -> bool:
    return is_regular(phi.positive, phi.sys, up_to) and is_regular(phi.negative, phi.sys, up_to)


def virtually_equivalent(phi: IntSpecies, psi: IntSpecies, up_to: int = 6) -> bool:
    """Decide ``phi+ + psi- ≅ phi- + psi+`` for regular data, degree by degree.

    Regular species are sums of Z^k, so isomorphism reduces to equal
    multiplicities.  Anything else raises NotRegular.
    """
    sys = merge_systems(phi.sys, psi.sys)
    lhs = Sum(phi.positive, psi.negative)
    rhs = Sum(phi.negative, psi.positive)
    for side in (lhs, rhs):
        if not is_regular(side, sys, up_to):
            raise NotRegular(f"{side} is not regular; virtual equivalence is undecided")
    return regular_decompose(lhs, sys, up_to) == regular_decompose(rhs, sys, up_to)


IZERO = IntSpecies(Zero(), Zero())
IONE = IntSpecies(One(), Zero())
