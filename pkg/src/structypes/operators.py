"""Operators on species and signed species.

Operators are expression trees too; :func:`apply` rewrites a species
expression.  ``XOp`` (cyclic quotient of the next degree) only makes sense
for regular species and yields its normal form ``sum m_k Z^(k-1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import BijectionFailure, NonFreeAction, NotRegular
from .finset import LabeledSet
from .intspecies import IntSpecies, merge_systems
from .species import (
    EMPTY_SYSTEM,
    INF,
    Cycle,
    DegreePart,
    Deriv,
    Injections,
    LinOrder,
    One,
    PairVal,
    Prod,
    Inl,
    Inr,
    Ref,
    ScalarMul,
    SpeciesExpr,
    SpeciesSystem,
    Structure,
    StructureSet,
    Tag,
    TupleVal,
    Sum,
    Z,
    Zero,
    ZPow,
    _Evaluator,
    _reject_reserved,
    count,
    enumerate_structures,
    fresh_star,
    from_multiplicities,
    is_regular,
    orbits,
    regular_decompose,
    statically_regular,
)

DEFAULT_ORDER = 8


class SpeciesOperator:
    def __add__(self, other):
        return OpSum(self, other)

    def __mul__(self, other):
        return OpProd(self, other)

    def __matmul__(self, other):
        """``A @ B`` is the composite A∘B."""
        return Compose(self, other)

    def __str__(self) -> str:
        from .parse import format_op

        return format_op(self)


@dataclass(frozen=True)
class Identity(SpeciesOperator):
    pass


@dataclass(frozen=True)
class DOp(SpeciesOperator):
    pass


@dataclass(frozen=True)
class MZOp(SpeciesOperator):
    pass


@dataclass(frozen=True)
class XOp(SpeciesOperator):
    pass


@dataclass(frozen=True)
class Compose(SpeciesOperator):
    outer: SpeciesOperator
    inner: SpeciesOperator


@dataclass(frozen=True)
class OpSum(SpeciesOperator):
    left: SpeciesOperator
    right: SpeciesOperator


@dataclass(frozen=True)
class OpProd(SpeciesOperator):
    left: SpeciesOperator
    right: SpeciesOperator


D = DOp()
MZ = MZOp()
X = XOp()
I = Identity()


@dataclass(frozen=True)
class IntOperator:
    """A pair of species operators acting part by part."""

    positive_op: SpeciesOperator
    negative_op: SpeciesOperator

    @property
    def pure(self) -> bool:
        return self.positive_op == self.negative_op

    @classmethod
    def lift(cls, a: SpeciesOperator) -> IntOperator:
        return cls(a, a)

    def __str__(self) -> str:
        from .parse import format_op

        return format_op(self)


@dataclass(frozen=True)
class VOp:
    """The degree-lowering operator on regular signed species (see :func:`vop`)."""

    def __str__(self) -> str:
        return "V"


V = VOp()


def max_degree(expr: SpeciesExpr) -> float:
    """Upper bound on the degrees where ``expr`` has structures (-inf for Zero)."""
    if isinstance(expr, Zero) or (isinstance(expr, ScalarMul) and expr.m == 0):
        return -INF
    if isinstance(expr, One):
        return 0
    if isinstance(expr, (ZPow, Cycle)):
        return expr.k
    if isinstance(expr, Injections):
        return expr.m
    if isinstance(expr, (LinOrder, Ref)):
        return INF
    if isinstance(expr, Sum):
        return max(max_degree(expr.left), max_degree(expr.right))
    if isinstance(expr, Prod):
        a, b = max_degree(expr.left), max_degree(expr.right)
        return -INF if -INF in (a, b) else a + b
    if isinstance(expr, Deriv):
        d = max_degree(expr.inner)
        return d - 1 if d not in (INF, -INF) else d
    if isinstance(expr, DegreePart):
        return expr.n if max_degree(expr.inner) >= expr.n else -INF
    if isinstance(expr, ScalarMul):
        return max_degree(expr.inner)
    raise TypeError(f"not a species expression: {expr!r}")


def _x_normal_form(f: SpeciesExpr, sys: SpeciesSystem, up_to: int) -> SpeciesExpr:
    mults = regular_decompose(f, sys, up_to)
    return from_multiplicities(mults[1:])


def apply(a: SpeciesOperator, f: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM, up_to: int = DEFAULT_ORDER) -> SpeciesExpr:
    """Apply a species operator.  ``up_to`` bounds the degrees XOp inspects."""
    if isinstance(a, Identity):
        return f
    if isinstance(a, DOp):
        return Deriv(f)
    if isinstance(a, MZOp):
        return Prod(Z, f)
    if isinstance(a, XOp):
        return _x_normal_form(f, sys, up_to)
    if isinstance(a, Compose):
        return apply(a.outer, apply(a.inner, f, sys, up_to), sys, up_to)
    if isinstance(a, OpSum):
        return Sum(apply(a.left, f, sys, up_to), apply(a.right, f, sys, up_to))
    if isinstance(a, OpProd):
        return Prod(apply(a.left, f, sys, up_to), apply(a.right, f, sys, up_to))
    raise TypeError(f"not a species operator: {a!r}")


def commutator(a: SpeciesOperator, b: SpeciesOperator) -> IntOperator:
    return IntOperator(Compose(a, b), Compose(b, a))


def iapply(a: IntOperator | SpeciesOperator, phi: IntSpecies, up_to: int = DEFAULT_ORDER) -> IntSpecies:
    if isinstance(a, SpeciesOperator):
        a = IntOperator.lift(a)
    return IntSpecies(
        apply(a.positive_op, phi.positive, phi.sys, up_to),
        apply(a.negative_op, phi.negative, phi.sys, up_to),
        phi.sys,
    )


def apply_mixed(a: IntOperator, f: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM, up_to: int = DEFAULT_ORDER) -> IntSpecies:
    """A mixed operator on a plain species: ``(A+ F, A- F)``, e.g. ``[D,MZ]F``."""
    return IntSpecies(apply(a.positive_op, f, sys, up_to), apply(a.negative_op, f, sys, up_to), sys)


# --------------------------------------------------------------------------
# cyclic quotient


def _check_regular_at(f: SpeciesExpr, sys: SpeciesSystem, n: int) -> None:
    if statically_regular(f, sys):
        return
    s = LabeledSet.canonical(n)
    structs = _Evaluator(sys).enum(DegreePart(f, n), s.atoms)
    if any(stab != 1 for _, _, stab in orbits(structs, s.atoms)):
        raise NotRegular(f"{f} has structures with symmetries in degree {n}")


def xop(f: SpeciesExpr, sys: SpeciesSystem, s: LabeledSet | Iterable[str]) -> StructureSet:
    """Orbit representatives of degree-(|S|+1) structures on S ⊔ {⋆} under a cyclic group.

    The group is generated by the cycle through the sorted atoms of S and
    then ⋆.  Representatives are the least element of each orbit.
    """
    s = s if isinstance(s, LabeledSet) else LabeledSet(s)
    _reject_reserved(s)
    sys.check(f)
    n = len(s) + 1
    _check_regular_at(f, sys, n)
    cycle_atoms = list(s.atoms) + [fresh_star(s.atoms)]
    powers = [{a: cycle_atoms[(i + j) % n] for i, a in enumerate(cycle_atoms)} for j in range(n)]
    structs = _Evaluator(sys).enum(DegreePart(f, n), tuple(sorted(cycle_atoms)))
    seen: set[Structure] = set()
    reps = []
    for x in structs:
        if x in seen:
            continue
        orbit = {x.rename(p) for p in powers}
        if len(orbit) != n:
            raise NonFreeAction(f"orbit of {x} has {len(orbit)} elements, expected {n}")
        seen |= orbit
        reps.append(min(orbit, key=lambda y: y.sexpr))
    return StructureSet(reps)


def _x_multiplicity(f: SpeciesExpr, sys: SpeciesSystem, k: int, structural: bool) -> int:
    """Multiplicity of Z^(k-1) in the cyclic quotient of the degree-k part of f."""
    if structural:
        n_orbits = len(xop(f, sys, LabeledSet.canonical(k - 1)))
    else:
        c = count(f, sys, k)
        n_orbits, r = divmod(c, k)
        if r:
            raise NonFreeAction(f"{c} structures in degree {k} cannot split into free Z_{k} orbits")
    m, r = divmod(n_orbits, math.factorial(k - 1))
    if r:
        raise NonFreeAction(f"{n_orbits} orbits in degree {k} are not a multiple of {k - 1}!")
    return m


def degree_bound(phi: IntSpecies) -> int | None:
    d = max(max_degree(phi.positive), max_degree(phi.negative))
    if d == INF:
        return None
    return max(int(d), 0) if d != -INF else 0


def vop(phi: IntSpecies, up_to: int | None = None, structural: bool = False) -> IntSpecies:
    """Drop degrees 0 and 1, swap the parts, and take cyclic quotients degree by degree.

    The result is returned in normal form ``(sum b_k Z^(k-1), sum a_k Z^(k-1))``.
    ``structural=True`` counts quotient orbits by explicit enumeration
    instead of dividing counts (only sensible for small degrees).
    """
    if up_to is None:
        up_to = degree_bound(phi)
        if up_to is None:
            raise ValueError("infinite degree support: pass up_to explicitly")
    for part in (phi.positive, phi.negative):
        if not is_regular(part, phi.sys, up_to):
            raise NotRegular(f"{part} is not regular up to degree {up_to}")
    new_pos = [0] * max(up_to, 1)
    new_neg = [0] * max(up_to, 1)
    for k in range(2, up_to + 1):
        new_pos[k - 1] = _x_multiplicity(phi.negative, phi.sys, k, structural)
        new_neg[k - 1] = _x_multiplicity(phi.positive, phi.sys, k, structural)
    return IntSpecies(from_multiplicities(new_pos), from_multiplicities(new_neg))


# --------------------------------------------------------------------------
# (D∘M_Z)F ≅ F + (M_Z∘D)F


def sti_bijection(f: SpeciesExpr, sys: SpeciesSystem, s: LabeledSet | Iterable[str]) -> dict[Structure, Structure]:
    """Explicit bijection D(Z·F)(S) → (F + Z·DF)(S).

    A left structure is a singleton block plus an F-structure on the rest
    of S ⊔ {⋆}.  If the singleton is ⋆ the F-structure lives on S (left
    summand); otherwise the singleton s is kept and the F-structure lives
    on (S − s) ⊔ {⋆} (right summand).
    """
    s = s if isinstance(s, LabeledSet) else LabeledSet(s)
    star = fresh_star(s.atoms)
    left = enumerate_structures(Deriv(Prod(Z, f)), sys, s)
    right = set(enumerate_structures(Sum(f, Prod(Z, Deriv(f))), sys, s))
    mapping: dict[Structure, Structure] = {}
    for x in left:
        (single,) = x.left.children
        if single.label == star:
            image = Inl(x.right)
        else:
            inner_star = fresh_star(s.without(single.label).atoms)
            y = x.right if inner_star == star else x.right.rename({star: inner_star})
            image = Inr(PairVal(x.left, y))
        if image not in right:
            raise BijectionFailure(f"{x} maps outside the target: {image}")
        mapping[x] = image
    if len(set(mapping.values())) != len(mapping):
        raise BijectionFailure("map is not injective")
    if set(mapping.values()) != right:
        raise BijectionFailure("map is not surjective")
    return mapping


def _checked(mapping: dict, target) -> dict:
    images = set(mapping.values())
    if not images <= set(target):
        raise BijectionFailure(f"image leaves the target: {sorted(y.sexpr for y in images - set(target))}")
    if len(images) != len(mapping):
        raise BijectionFailure("map is not injective")
    if len(images) != len(target):
        raise BijectionFailure("map is not surjective")
    return mapping


def dzpow_bijection(k: int, s: LabeledSet | Iterable[str]) -> dict[Structure, Structure]:
    """D(Z^k)(S) → k·Z^(k-1)(S): the position of ⋆ picks the copy, the rest keeps its order."""
    s = s if isinstance(s, LabeledSet) else LabeledSet(s)
    star = fresh_star(s.atoms)
    mapping = {}
    for x in enumerate_structures(Deriv(ZPow(k)), EMPTY_SYSTEM, s):
        labels = [c.label for c in x.children]
        i = labels.index(star)
        mapping[x] = Tag(i, TupleVal(tuple(c for c in x.children if c.label != star)))
    return _checked(mapping, enumerate_structures(ScalarMul(k, ZPow(k - 1)), EMPTY_SYSTEM, s))


def dcycle_bijection(k: int, s: LabeledSet | Iterable[str]) -> dict[Structure, Structure]:
    """D(C[k])(S) → Z^(k-1)(S): cut the cycle open at ⋆."""
    s = s if isinstance(s, LabeledSet) else LabeledSet(s)
    star = fresh_star(s.atoms)
    mapping = {}
    for x in enumerate_structures(Deriv(Cycle(k)), EMPTY_SYSTEM, s):
        labels = [c.label for c in x.children]
        i = labels.index(star)
        mapping[x] = TupleVal(x.children[i + 1:] + x.children[:i])
    return _checked(mapping, enumerate_structures(ZPow(k - 1), EMPTY_SYSTEM, s))
