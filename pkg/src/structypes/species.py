"""Species expressions, labeled structures, enumeration and counting.

A species is given as an immutable expression tree.  Recursive species are
expressed with ``Ref`` nodes bound in a :class:`SpeciesSystem`; they are
evaluated degree by degree, which terminates whenever every recursive
occurrence is reached through at least one consumed atom (checked
statically by :meth:`SpeciesSystem.check`).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    NonIntegralMultiplicity,
    NotRegular,
    RecursionNotGuarded,
    ReservedAtom,
    StructureNotInSpecies,
    UnboundRef,
)
from .finset import STAR, Bijection, LabeledSet, is_reserved
from .series import TruncatedSeries

INF = math.inf

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def fresh_star(atoms: Iterable[str]) -> str:
    """The next reserved point: ⋆, then ⋆₂, ⋆₃, ... for nested derivatives."""
    taken = set(atoms)
    if STAR not in taken:
        return STAR
    k = 2
    while STAR + str(k).translate(_SUBSCRIPTS) in taken:
        k += 1
    return STAR + str(k).translate(_SUBSCRIPTS)


# --------------------------------------------------------------------------
# structures


class Structure:
    """A single labeled structure.  Instances are canonical, so ``==`` is set equality."""

    @cached_property
    def sexpr(self) -> str:
        return self._sexpr()

    def __str__(self) -> str:
        return self.sexpr

    def __lt__(self, other: Structure) -> bool:
        return self.sexpr < other.sexpr

    def atoms(self) -> list[str]:
        raise NotImplementedError

    def rename(self, mapping: Mapping[str, str]) -> Structure:
        raise NotImplementedError

    def _sexpr(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True, eq=True)
class Atom(Structure):
    label: str

    def _sexpr(self):
        return self.label

    def atoms(self):
        return [self.label]

    def rename(self, mapping):
        return Atom(mapping.get(self.label, self.label))

    @property
    def is_star(self) -> bool:
        return is_reserved(self.label)


@dataclass(frozen=True, eq=True)
class UnitVal(Structure):
    def _sexpr(self):
        return "unit"

    def atoms(self):
        return []

    def rename(self, mapping):
        return self


@dataclass(frozen=True, eq=True)
class TupleVal(Structure):
    children: tuple[Structure, ...]

    def _sexpr(self):
        return "(" + " ".join(c.sexpr for c in self.children) + ")"

    def atoms(self):
        return [a for c in self.children for a in c.atoms()]

    def rename(self, mapping):
        return TupleVal(tuple(c.rename(mapping) for c in self.children))


@dataclass(frozen=True, eq=True)
class CycleVal(Structure):
    children: tuple[Structure, ...]

    def __post_init__(self):
        ch = self.children
        if ch:
            start = min(range(len(ch)), key=lambda i: ch[i].sexpr)
            object.__setattr__(self, "children", ch[start:] + ch[:start])

    def _sexpr(self):
        return "[" + " ".join(c.sexpr for c in self.children) + "]"

    def atoms(self):
        return [a for c in self.children for a in c.atoms()]

    def rename(self, mapping):
        return CycleVal(tuple(c.rename(mapping) for c in self.children))


@dataclass(frozen=True, eq=True)
class Inl(Structure):
    child: Structure

    def _sexpr(self):
        return f"(inl {self.child.sexpr})"

    def atoms(self):
        return self.child.atoms()

    def rename(self, mapping):
        return Inl(self.child.rename(mapping))


@dataclass(frozen=True, eq=True)
class Inr(Structure):
    child: Structure

    def _sexpr(self):
        return f"(inr {self.child.sexpr})"

    def atoms(self):
        return self.child.atoms()

    def rename(self, mapping):
        return Inr(self.child.rename(mapping))


@dataclass(frozen=True, eq=True)
class PairVal(Structure):
    left: Structure
    right: Structure

    def _sexpr(self):
        return f"(pair {self.left.sexpr} {self.right.sexpr})"

    def atoms(self):
        return self.left.atoms() + self.right.atoms()

    def rename(self, mapping):
        return PairVal(self.left.rename(mapping), self.right.rename(mapping))


@dataclass(frozen=True, eq=True)
class InjVal(Structure):
    """An injection of atoms into vertices ``0..m-1``, stored sorted by atom."""

    pairs: tuple[tuple[str, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    def _sexpr(self):
        return "(inj" + "".join(f" ({a} {v})" for a, v in self.pairs) + ")"

    def atoms(self):
        return [a for a, _ in self.pairs]

    def rename(self, mapping):
        return InjVal(tuple((mapping.get(a, a), v) for a, v in self.pairs))


@dataclass(frozen=True, eq=True)
class Tag(Structure):
    """Copy ``index`` of a structure inside a scalar multiple ``m*F``."""

    index: int
    child: Structure

    def _sexpr(self):
        return f"(copy {self.index} {self.child.sexpr})"

    def atoms(self):
        return self.child.atoms()

    def rename(self, mapping):
        return Tag(self.index, self.child.rename(mapping))


class StructureSet(tuple):
    """Canonically ordered, duplicate-free tuple of structures."""

    def __new__(cls, elements: Iterable[Structure] = ()):
        unique = {s.sexpr: s for s in elements}
        return super().__new__(cls, (unique[k] for k in sorted(unique)))

    def __str__(self) -> str:
        return "\n".join(s.sexpr for s in self)


# --------------------------------------------------------------------------
# expressions


class SpeciesExpr:
    def __add__(self, other: SpeciesExpr) -> SpeciesExpr:
        return Sum(self, other)

    def __mul__(self, other: SpeciesExpr) -> SpeciesExpr:
        return Prod(self, other)

    def __rmul__(self, m: int) -> SpeciesExpr:
        if isinstance(m, int):
            return ScalarMul(m, self)
        return NotImplemented

    def __pow__(self, k: int) -> SpeciesExpr:
        if self == ZPow(1):
            return ZPow(k)
        if k == 0:
            return One()
        out = self
        for _ in range(k - 1):
            out = Prod(out, self)
        return out

    def __str__(self) -> str:
        from .parse import format_expr

        return format_expr(self)


@dataclass(frozen=True)
class Zero(SpeciesExpr):
    pass


@dataclass(frozen=True)
class One(SpeciesExpr):
    pass


@dataclass(frozen=True)
class ZPow(SpeciesExpr):
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("Z^k needs k >= 0")


@dataclass(frozen=True)
class Cycle(SpeciesExpr):
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("C[k] needs k >= 0")


@dataclass(frozen=True)
class LinOrder(SpeciesExpr):
    pass


@dataclass(frozen=True)
class Injections(SpeciesExpr):
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("Inj[m] needs m >= 0")


@dataclass(frozen=True)
class Sum(SpeciesExpr):
    left: SpeciesExpr
    right: SpeciesExpr


@dataclass(frozen=True)
class Prod(SpeciesExpr):
    left: SpeciesExpr
    right: SpeciesExpr


@dataclass(frozen=True)
class Deriv(SpeciesExpr):
    inner: SpeciesExpr


@dataclass(frozen=True)
class DegreePart(SpeciesExpr):
    inner: SpeciesExpr
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("degree must be >= 0")


@dataclass(frozen=True)
class ScalarMul(SpeciesExpr):
    m: int
    inner: SpeciesExpr

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("scalar multiple must be >= 0")


@dataclass(frozen=True)
class Ref(SpeciesExpr):
    name: str


Z = ZPow(1)
L = LinOrder()


def sum_of(terms: Sequence[SpeciesExpr]) -> SpeciesExpr:
    """Left-nested sum; the empty sum is Zero."""
    terms = list(terms)
    if not terms:
        return Zero()
    out = terms[0]
    for t in terms[1:]:
        out = Sum(out, t)
    return out


def from_multiplicities(mults: Sequence[int]) -> SpeciesExpr:
    """Normal form ``sum_k m_k Z^k`` of a regular species."""
    return sum_of([ScalarMul(m, ZPow(k)) if m != 1 else ZPow(k) for k, m in enumerate(mults) if m])


def refs_in(expr: SpeciesExpr) -> set[str]:
    if isinstance(expr, Ref):
        return {expr.name}
    if isinstance(expr, (Sum, Prod)):
        return refs_in(expr.left) | refs_in(expr.right)
    if isinstance(expr, (Deriv, DegreePart, ScalarMul)):
        return refs_in(expr.inner)
    return set()


def _children(expr: SpeciesExpr) -> list[SpeciesExpr]:
    if isinstance(expr, (Sum, Prod)):
        return [expr.left, expr.right]
    if isinstance(expr, (Deriv, DegreePart, ScalarMul)):
        return [expr.inner]
    return []


@dataclass(frozen=True)
class SpeciesSystem:
    """Mutually recursive bindings ``name = expr``."""

    bindings: tuple[tuple[str, SpeciesExpr], ...] = ()

    def __init__(self, bindings: Mapping[str, SpeciesExpr] | Iterable[tuple[str, SpeciesExpr]] = ()):
        items = dict(bindings.items() if isinstance(bindings, Mapping) else bindings)
        object.__setattr__(self, "bindings", tuple(sorted(items.items())))

    def __getitem__(self, name: str) -> SpeciesExpr:
        for k, v in self.bindings:
            if k == name:
                return v
        raise UnboundRef(f"unbound species name {name!r}")

    def __contains__(self, name: str) -> bool:
        return any(k == name for k, _ in self.bindings)

    @property
    def names(self) -> list[str]:
        return [k for k, _ in self.bindings]

    @cached_property
    def valuations(self) -> dict[str, float]:
        """Lower bound on the smallest degree with a structure, per binding."""
        vals = {k: INF for k in self.names}
        while True:
            new = {k: valuation(v, vals) for k, v in self.bindings}
            if new == vals:
                return vals
            vals = new

    def check(self, expr: SpeciesExpr | None = None) -> None:
        """Raise UnboundRef / RecursionNotGuarded unless evaluation is well founded."""
        exprs = [v for _, v in self.bindings] + ([expr] if expr is not None else [])
        for e in exprs:
            for r in refs_in(e):
                self[r]
        self._guard()

    @cached_property
    def _guarded(self) -> str | None:
        names = self.names
        vals = self.valuations
        dist = {(a, b): INF for a in names for b in names}
        for a, body in self.bindings:
            for b, w in _ref_shrinks(body, vals).items():
                dist[a, b] = min(dist[a, b], w)
        for k in names:
            for i in names:
                for j in names:
                    if dist[i, k] + dist[k, j] < dist[i, j]:
                        dist[i, j] = dist[i, k] + dist[k, j]
        for a in names:
            if dist[a, a] <= 0:
                return a
        return None

    def _guard(self) -> None:
        bad = self._guarded
        if bad is not None:
            raise RecursionNotGuarded(f"{bad!r} can recur without consuming an atom")

    @cached_property
    def regular_names(self) -> dict[str, bool]:
        reg = {k: True for k in self.names}
        while True:
            new = {k: _static_regular(v, reg) for k, v in self.bindings}
            if new == reg:
                return reg
            reg = new


EMPTY_SYSTEM = SpeciesSystem()


def valuation(expr: SpeciesExpr, ref_vals: Mapping[str, float] = {}) -> float:
    if isinstance(expr, Zero):
        return INF
    if isinstance(expr, (One, LinOrder, Injections)):
        return 0
    if isinstance(expr, ZPow):
        return expr.k
    if isinstance(expr, Cycle):
        return expr.k if expr.k >= 1 else INF
    if isinstance(expr, Sum):
        return min(valuation(expr.left, ref_vals), valuation(expr.right, ref_vals))
    if isinstance(expr, Prod):
        return valuation(expr.left, ref_vals) + valuation(expr.right, ref_vals)
    if isinstance(expr, Deriv):
        v = valuation(expr.inner, ref_vals)
        return v if v == INF else max(v - 1, 0)
    if isinstance(expr, DegreePart):
        return expr.n if valuation(expr.inner, ref_vals) <= expr.n else INF
    if isinstance(expr, ScalarMul):
        return INF if expr.m == 0 else valuation(expr.inner, ref_vals)
    if isinstance(expr, Ref):
        return ref_vals.get(expr.name, 0)
    raise TypeError(f"not a species expression: {expr!r}")


def _ref_shrinks(expr: SpeciesExpr, vals) -> dict[str, float]:
    """Minimum number of atoms removed before each Ref is evaluated."""
    if isinstance(expr, Ref):
        return {expr.name: 0}
    out: dict[str, float] = {}
    if isinstance(expr, Sum):
        _min_into(out, _ref_shrinks(expr.left, vals), 0)
        _min_into(out, _ref_shrinks(expr.right, vals), 0)
    elif isinstance(expr, Prod):
        vl, vr = valuation(expr.left, vals), valuation(expr.right, vals)
        if vl != INF and vr != INF:
            # each factor only ever sees the atoms the other factor leaves over
            _min_into(out, _ref_shrinks(expr.left, vals), vr)
            _min_into(out, _ref_shrinks(expr.right, vals), vl)
    elif isinstance(expr, Deriv):
        _min_into(out, _ref_shrinks(expr.inner, vals), -1)
    elif isinstance(expr, DegreePart) or (isinstance(expr, ScalarMul) and expr.m):
        _min_into(out, _ref_shrinks(expr.inner, vals), 0)
    return out


def _min_into(out: dict, shrinks: Mapping[str, float], shift: float) -> None:
    for k, w in shrinks.items():
        out[k] = min(out.get(k, INF), w + shift)


def _static_regular(expr: SpeciesExpr, ref_reg: Mapping[str, bool]) -> bool:
    if isinstance(expr, (Zero, One, ZPow, LinOrder, Injections)):
        return True
    if isinstance(expr, Cycle):
        return expr.k <= 1
    if isinstance(expr, Ref):
        return ref_reg.get(expr.name, False)
    return all(_static_regular(c, ref_reg) for c in _children(expr))


def statically_regular(expr: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM) -> bool:
    """Sufficient syntactic condition for regularity (never a false positive)."""
    return _static_regular(expr, sys.regular_names)


# --------------------------------------------------------------------------
# evaluation


class _Evaluator:
    """Memoized enumeration/counting, confined to one public call."""

    def __init__(self, sys: SpeciesSystem):
        self.sys = sys
        self.vals = sys.valuations
        self._enum: dict = {}
        self._count: dict = {}
        self._active: set = set()

    def val(self, expr):
        return valuation(expr, self.vals)

    # counting

    def count(self, expr: SpeciesExpr, n: int) -> int:
        key = (expr, n)
        hit = self._count.get(key)
        if hit is None:
            hit = self._count[key] = self._count_uncached(expr, n)
        return hit

    def _count_uncached(self, e, n):
        if isinstance(e, Zero):
            return 0
        if isinstance(e, One):
            return int(n == 0)
        if isinstance(e, ZPow):
            return math.factorial(n) if n == e.k else 0
        if isinstance(e, Cycle):
            return math.factorial(n - 1) if n == e.k and n >= 1 else 0
        if isinstance(e, LinOrder):
            return math.factorial(n)
        if isinstance(e, Injections):
            return math.perm(e.m, n) if n <= e.m else 0
        if isinstance(e, Sum):
            return self.count(e.left, n) + self.count(e.right, n)
        if isinstance(e, Prod):
            lo, hi = self.val(e.left), n - self.val(e.right)
            total = 0
            if lo == INF or hi < lo:
                return 0
            for k in range(int(lo), int(hi) + 1):
                a = self.count(e.left, k)
                if a:
                    total += math.comb(n, k) * a * self.count(e.right, n - k)
            return total
        if isinstance(e, Deriv):
            return self.count(e.inner, n + 1)
        if isinstance(e, DegreePart):
            return self.count(e.inner, n) if n == e.n else 0
        if isinstance(e, ScalarMul):
            return e.m * self.count(e.inner, n) if e.m else 0
        if isinstance(e, Ref):
            return self._recurse(("count", e.name, n), lambda: self.count(self.sys[e.name], n))
        raise TypeError(f"not a species expression: {e!r}")

    def _recurse(self, key, thunk):
        if key in self._active:
            raise RecursionNotGuarded(f"{key[1]!r} recurs on the same data: {key}")
        self._active.add(key)
        try:
            return thunk()
        finally:
            self._active.discard(key)

    # enumeration

    def enum(self, expr: SpeciesExpr, atoms: tuple[str, ...]) -> list[Structure]:
        key = (expr, atoms)
        hit = self._enum.get(key)
        if hit is None:
            hit = self._enum[key] = self._enum_uncached(expr, atoms)
        return hit

    def _enum_uncached(self, e, atoms):
        n = len(atoms)
        if isinstance(e, Zero):
            return []
        if isinstance(e, One):
            return [UnitVal()] if n == 0 else []
        if isinstance(e, ZPow):
            return _orderings(atoms) if n == e.k else []
        if isinstance(e, LinOrder):
            return _orderings(atoms)
        if isinstance(e, Cycle):
            if n != e.k or n == 0:
                return []
            first, rest = atoms[0], atoms[1:]
            return [CycleVal((Atom(first),) + tuple(Atom(a) for a in p)) for p in itertools.permutations(rest)]
        if isinstance(e, Injections):
            if n > e.m:
                return []
            return [InjVal(tuple(zip(atoms, p))) for p in itertools.permutations(range(e.m), n)]
        if isinstance(e, Sum):
            return [Inl(x) for x in self.enum(e.left, atoms)] + [Inr(x) for x in self.enum(e.right, atoms)]
        if isinstance(e, Prod):
            lo, hi = self.val(e.left), n - self.val(e.right)
            out = []
            if lo == INF or hi < lo:
                return out
            for k in range(int(lo), int(hi) + 1):
                for first in itertools.combinations(atoms, k):
                    lefts = self.enum(e.left, first)
                    if not lefts:
                        continue
                    second = tuple(a for a in atoms if a not in first)
                    rights = self.enum(e.right, second)
                    out.extend(PairVal(x, y) for x in lefts for y in rights)
            return out
        if isinstance(e, Deriv):
            return self.enum(e.inner, tuple(sorted(atoms + (fresh_star(atoms),))))
        if isinstance(e, DegreePart):
            return self.enum(e.inner, atoms) if n == e.n else []
        if isinstance(e, ScalarMul):
            inner = self.enum(e.inner, atoms) if e.m else []
            return [Tag(i, x) for i in range(e.m) for x in inner]
        if isinstance(e, Ref):
            return self._recurse(("enum", e.name, atoms), lambda: self.enum(self.sys[e.name], atoms))
        raise TypeError(f"not a species expression: {e!r}")


def _orderings(atoms):
    return [TupleVal(tuple(Atom(a) for a in p)) for p in itertools.permutations(atoms)]


def _as_labeled(s) -> LabeledSet:
    return s if isinstance(s, LabeledSet) else LabeledSet(s)


def _reject_reserved(s: LabeledSet) -> None:
    bad = [a for a in s if is_reserved(a)]
    if bad:
        raise ReservedAtom(f"reserved atoms in input set: {bad}")


def enumerate_structures(
    expr: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM, s: LabeledSet | Iterable[str] = ()
) -> StructureSet:
    s = _as_labeled(s)
    _reject_reserved(s)
    sys.check(expr)
    return StructureSet(_Evaluator(sys).enum(expr, s.atoms))


def count(expr: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM, n: int = 0) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    sys.check(expr)
    return _Evaluator(sys).count(expr, n)


def counts(expr: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM, terms: int = 10) -> list[int]:
    sys.check(expr)
    ev = _Evaluator(sys)
    return [ev.count(expr, n) for n in range(terms)]


def egf(expr: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM, order: int = 10) -> TruncatedSeries:
    return TruncatedSeries(Fraction(c, math.factorial(n)) for n, c in enumerate(counts(expr, sys, order)))


def degree_component(expr: SpeciesExpr, n: int) -> SpeciesExpr:
    return DegreePart(expr, n)


def transport(expr: SpeciesExpr, sys: SpeciesSystem, f: Bijection, x: Structure) -> Structure:
    if x not in enumerate_structures(expr, sys, f.source):
        raise StructureNotInSpecies(f"{x} is not a structure on {f.source}")
    return x.rename(f.assignment)


# --------------------------------------------------------------------------
# symmetric group action


def orbits(structures: Sequence[Structure], atoms: Sequence[str]) -> list[tuple[Structure, int, int]]:
    """Orbits under all permutations of ``atoms``.

    Returns ``(least representative, orbit size, stabilizer order)`` per
    orbit.  The stabilizer is counted directly on the representative.
    """
    atoms = tuple(atoms)
    perms = [dict(zip(atoms, p)) for p in itertools.permutations(atoms)]
    seen: set[Structure] = set()
    out = []
    for x in structures:
        if x in seen:
            continue
        images = [x.rename(p) for p in perms]
        orbit = set(images)
        seen |= orbit
        stab = sum(1 for y in images if y == x)
        if stab * len(orbit) != len(perms):
            raise AssertionError("orbit-stabilizer violated")
        out.append((min(orbit, key=lambda y: y.sexpr), len(orbit), stab))
    return sorted(out, key=lambda t: t[0].sexpr)


def is_regular(
    expr: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM, up_to: int = 6, exhaustive: bool = False
) -> bool:
    """True when no structure on an n-set (n <= up_to) has a nontrivial automorphism.

    Unless ``exhaustive`` is set, a syntactic certificate short-circuits the
    brute-force orbit check.
    """
    sys.check(expr)
    if not exhaustive and statically_regular(expr, sys):
        return True
    ev = _Evaluator(sys)
    for n in range(up_to + 1):
        s = LabeledSet.canonical(n)
        if any(stab != 1 for _, _, stab in orbits(ev.enum(expr, s.atoms), s.atoms)):
            return False
    return True


def regular_decompose(expr: SpeciesExpr, sys: SpeciesSystem = EMPTY_SYSTEM, up_to: int = 6) -> list[int]:
    """Multiplicities m_k with ``expr ≅ sum_k m_k Z^k`` in degrees k <= up_to."""
    if not is_regular(expr, sys, up_to):
        raise NotRegular(f"{expr} is not regular up to degree {up_to}")
    out = []
    for k, c in enumerate(counts(expr, sys, up_to + 1)):
        m, r = divmod(c, math.factorial(k))
        if r:
            raise NonIntegralMultiplicity(f"count {c} in degree {k} is not a multiple of {k}!")
        out.append(m)
    return out
