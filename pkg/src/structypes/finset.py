"""Finite labeled sets, bijections, and integral sets (pairs of finite sets)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

STAR = "⋆"


def is_reserved(label: str) -> bool:
    return label.startswith(STAR)


@dataclass(frozen=True)
class LabeledSet:
    atoms: tuple[str, ...]

    def __init__(self, atoms: Iterable[str] = ()):
        atoms = tuple(atoms)
        if len(set(atoms)) != len(atoms):
            raise ValueError(f"duplicate atoms in {atoms!r}")
        object.__setattr__(self, "atoms", tuple(sorted(atoms)))

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __contains__(self, label) -> bool:
        return label in self.atoms

    def __str__(self) -> str:
        return "{" + ",".join(self.atoms) + "}"

    @classmethod
    def canonical(cls, n: int) -> LabeledSet:
        """The n-set used for counting: a, b, c, ... (then x7, x8, ...)."""
        letters = "abcdefghijklmnopqrstuvwxyz"
        if n <= len(letters):
            return cls(letters[:n])
        return cls(f"x{i:03d}" for i in range(n))

    def union(self, other: Iterable[str]) -> LabeledSet:
        return LabeledSet(self.atoms + tuple(other))

    def without(self, label: str) -> LabeledSet:
        return LabeledSet(a for a in self.atoms if a != label)


@dataclass(frozen=True)
class Bijection:
    source: LabeledSet
    target: LabeledSet
    assignment: Mapping[str, str]

    def __init__(self, source, target, assignment):
        source, target = LabeledSet(source), LabeledSet(target)
        assignment = dict(assignment)
        if set(assignment) != set(source.atoms):
            raise ValueError("assignment must be defined exactly on the source")
        if sorted(assignment.values()) != list(target.atoms):
            raise ValueError("assignment is not a bijection onto the target")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "assignment", assignment)

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.assignment.items()))))

    def __call__(self, label: str) -> str:
        return self.assignment[label]

    def compose(self, first: Bijection) -> Bijection:
        """``self ∘ first``."""
        if first.target != self.source:
            raise ValueError("bijections are not composable")
        return Bijection(first.source, self.target, {a: self(first(a)) for a in first.source})

    def inverse(self) -> Bijection:
        return Bijection(self.target, self.source, {v: k for k, v in self.assignment.items()})

    @classmethod
    def identity(cls, s: LabeledSet) -> Bijection:
        return cls(s, s, {a: a for a in s})


@dataclass(frozen=True)
class IntegralSet:
    positive: LabeledSet
    negative: LabeledSet

    def __init__(self, positive: Iterable[str] = (), negative: Iterable[str] = ()):
        object.__setattr__(self, "positive", LabeledSet(positive))
        object.__setattr__(self, "negative", LabeledSet(negative))

    def __str__(self) -> str:
        return f"({self.positive}|{self.negative})"

    def __neg__(self) -> IntegralSet:
        return negate(self)

    def __or__(self, other: IntegralSet) -> IntegralSet:
        return disjoint_union(self, other)

    def __matmul__(self, other: IntegralSet) -> IntegralSet:
        return tensor(self, other)

    def tagged(self) -> list[tuple[str, str]]:
        """Elements of ``positive ⊎ negative`` as (part, label) with part in {"+", "-"}."""
        return [("+", a) for a in self.positive] + [("-", a) for a in self.negative]


def cardinality(x: IntegralSet) -> int:
    return len(x.positive) - len(x.negative)


def negate(x: IntegralSet) -> IntegralSet:
    return IntegralSet(x.negative, x.positive)


def _coproduct(left: LabeledSet, right: LabeledSet) -> list[str]:
    if set(left) & set(right):
        return [f"L:{a}" for a in left] + [f"R:{a}" for a in right]
    return list(left) + list(right)


def disjoint_union(x: IntegralSet, y: IntegralSet) -> IntegralSet:
    # colliding labels get origin tags so the coproduct never merges elements
    return IntegralSet(_coproduct(x.positive, y.positive), _coproduct(x.negative, y.negative))


def _pairs(left: LabeledSet, right: LabeledSet) -> list[str]:
    return [f"({a},{b})" for a in left for b in right]


def tensor(x: IntegralSet, y: IntegralSet) -> IntegralSet:
    pos = _coproduct(LabeledSet(_pairs(x.positive, y.positive)), LabeledSet(_pairs(x.negative, y.negative)))
    neg = _coproduct(LabeledSet(_pairs(x.positive, y.negative)), LabeledSet(_pairs(x.negative, y.positive)))
    return IntegralSet(pos, neg)


def cardinal_equivalent(x: IntegralSet, y: IntegralSet) -> bool:
    # X+ ⊔ Y- ≅ Y+ ⊔ X-; finite sets of atoms are isomorphic iff equinumerous
    return len(x.positive) + len(y.negative) == len(y.positive) + len(x.negative)


@dataclass(frozen=True)
class IntegralMap:
    source: IntegralSet
    target: IntegralSet
    assignment: Mapping[tuple[str, str], tuple[str, str]]

    def __post_init__(self):
        src = set(self.source.tagged())
        tgt = set(self.target.tagged())
        if set(self.assignment) != src:
            raise ValueError("assignment must be defined on every tagged source element")
        if not set(self.assignment.values()) <= tgt:
            raise ValueError("assignment leaves the target")

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.assignment.items()))))


@dataclass(frozen=True)
class MapKind:
    coherent: bool
    kind: str  # "bijective" | "injective" | "surjective" | "none"
    weak: bool


def classify_map(f: IntegralMap) -> MapKind:
    coherent = all(src[0] == tgt[0] for src, tgt in f.assignment.items())
    image = list(f.assignment.values())
    injective = len(set(image)) == len(image)
    surjective = set(image) == set(f.target.tagged())
    if injective and surjective:
        kind = "bijective"
    elif injective:
        kind = "injective"
    elif surjective:
        kind = "surjective"
    else:
        kind = "none"
    return MapKind(coherent, kind, weak=not coherent and kind != "none")
