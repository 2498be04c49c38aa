"""Seeded random instances for property checks and the ``check`` command."""

from __future__ import annotations

import random

from .groupoid import FiniteGroupoid
from .intspecies import IntSpecies
from .species import (
    Cycle,
    DegreePart,
    Deriv,
    Injections,
    LinOrder,
    One,
    Prod,
    ScalarMul,
    SpeciesExpr,
    Sum,
    Zero,
    ZPow,
    sum_of,
)


def random_primitive(rng: random.Random) -> SpeciesExpr:
    kind = rng.choice(["0", "1", "Z", "Zk", "C", "L"])
    if kind == "0":
        return Zero()
    if kind == "1":
        return One()
    if kind == "Z":
        return ZPow(1)
    if kind == "Zk":
        return ZPow(rng.randint(0, 4))
    if kind == "C":
        return Cycle(rng.randint(0, 4))
    return LinOrder()


def random_species(rng: random.Random, depth: int = 4, deriv: bool = False) -> SpeciesExpr:
    """Random tree of sums and products over the primitives, at most ``depth`` levels deep."""
    if depth <= 1 or rng.random() < 0.3:
        return random_primitive(rng)
    ops = ["+", "*", "*"] + (["D"] if deriv else [])
    op = rng.choice(ops)
    if op == "D":
        return Deriv(random_species(rng, depth - 1, deriv))
    left = random_species(rng, depth - 1, deriv)
    right = random_species(rng, depth - 1, deriv)
    return Sum(left, right) if op == "+" else Prod(left, right)


def _spell(rng: random.Random, m: int, k: int) -> SpeciesExpr:
    """``m`` copies of Z^k, written one of several isomorphic ways."""
    style = rng.randrange(4)
    if style == 0:
        return ScalarMul(m, ZPow(k))
    if style == 1:
        return ScalarMul(m, DegreePart(LinOrder(), k))
    if style == 2:
        return sum_of([ZPow(k)] * m)
    return ScalarMul(m, DegreePart(Injections(k), k))


def random_regular_part(rng: random.Random, max_degree: int = 8, max_mult: int = 5) -> tuple[SpeciesExpr, list[int]]:
    mults = [rng.randint(0, max_mult) if rng.random() < 0.6 else 0 for _ in range(max_degree + 1)]
    terms = [_spell(rng, m, k) for k, m in enumerate(mults) if m]
    rng.shuffle(terms)
    return sum_of(terms), mults


def random_regular_int_species(rng: random.Random, max_degree: int = 8, max_mult: int = 5) -> IntSpecies:
    pos, _ = random_regular_part(rng, max_degree, max_mult)
    neg, _ = random_regular_part(rng, max_degree, max_mult)
    return IntSpecies(pos, neg)


def random_groupoid(rng: random.Random, max_components: int = 4) -> FiniteGroupoid:
    return FiniteGroupoid(
        (rng.randint(1, 6), rng.choice([1, 2, 3, 4, 6, 8, 12, 24])) for _ in range(rng.randint(0, max_components))
    )
