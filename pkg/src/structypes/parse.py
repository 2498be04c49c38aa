"""Text syntax for species, signed species and operators.

Species::

    0  1  Z  Z^k  C[k]  L  Inj[m]  A + B  A * B  k*A  A^k  D(A)  deg(A, n)  name
    let B = 1 + Z*B^2; B
    [P | N]                       (signed species)

Operators::

    D  MZ  X  V  I  A + B  A * B  A.B  [A, B]

In a product an integer literal followed by ``*`` scales the rest of the
product, so ``2*Z*Z`` is two copies of ``Z*Z``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .intspecies import IntSpecies
from .operators import (
    Compose,
    DOp,
    Identity,
    IntOperator,
    MZOp,
    OpProd,
    OpSum,
    SpeciesOperator,
    VOp,
    XOp,
    commutator,
)
from .species import (
    Cycle,
    DegreePart,
    Deriv,
    Injections,
    LinOrder,
    One,
    Prod,
    Ref,
    ScalarMul,
    SpeciesExpr,
    SpeciesSystem,
    Sum,
    Zero,
    ZPow,
)

KEYWORDS = {"Z", "L", "C", "Inj", "D", "deg", "let", "MZ", "X", "V", "I"}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            if sym not in "+*^()[],;=|.":
                raise ParseError(f"unexpected character {sym!r} at offset {m.start(3)}")
            tokens.append(("sym", sym))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self, offset=0):
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else ("eof", "")

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def accept(self, value) -> bool:
        if self.peek()[1] == value and self.peek()[0] != "eof":
            self.i += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            raise ParseError(f"expected {value!r}, found {self.peek()[1] or 'end of input'!r}")

    def integer(self) -> int:
        kind, val = self.take()
        if kind != "int":
            raise ParseError(f"expected an integer, found {val or 'end of input'!r}")
        return int(val)

    def done(self):
        if self.peek()[0] != "eof":
            raise ParseError(f"unexpected trailing input at {self.peek()[1]!r}")

    # species

    def program(self):
        bindings = {}
        while self.peek() == ("name", "let"):
            self.take()
            kind, name = self.take()
            if kind != "name" or name in KEYWORDS:
                raise ParseError(f"invalid binding name {name!r}")
            self.expect("=")
            bindings[name] = self.sum()
            self.expect(";")
        if self.peek() == ("sym", "["):
            self.take()
            pos = self.sum()
            self.expect("|")
            neg = self.sum()
            self.expect("]")
            top = (pos, neg)
        else:
            top = self.sum()
        self.done()
        return bindings, top

    def sum(self) -> SpeciesExpr:
        out = self.prod()
        while self.accept("+"):
            out = Sum(out, self.prod())
        return out

    def prod(self) -> SpeciesExpr:
        factors = []
        while True:
            if self.peek()[0] == "int" and self.peek(1) == ("sym", "*"):
                k = self.integer()
                self.take()
                factors.append(ScalarMul(k, self.prod()))
                break
            factors.append(self.power())
            if not self.accept("*"):
                break
        out = factors[0]
        for f in factors[1:]:
            out = Prod(out, f)
        return out

    def power(self) -> SpeciesExpr:
        base = self.atom()
        if self.accept("^"):
            k = self.integer()
            return base**k
        return base

    def atom(self) -> SpeciesExpr:
        kind, val = self.take()
        if kind == "int":
            k = int(val)
            return Zero() if k == 0 else One() if k == 1 else ScalarMul(k, One())
        if kind == "sym" and val == "(":
            inner = self.sum()
            self.expect(")")
            return inner
        if kind != "name":
            raise ParseError(f"unexpected {val or 'end of input'!r}")
        if val == "Z":
            return ZPow(1)
        if val == "L":
            return LinOrder()
        if val in ("C", "Inj"):
            self.expect("[")
            k = self.integer()
            self.expect("]")
            return Cycle(k) if val == "C" else Injections(k)
        if val == "D":
            self.expect("(")
            inner = self.sum()
            self.expect(")")
            return Deriv(inner)
        if val == "deg":
            self.expect("(")
            inner = self.sum()
            self.expect(",")
            n = self.integer()
            self.expect(")")
            return DegreePart(inner, n)
        if val in KEYWORDS:
            raise ParseError(f"{val!r} is reserved")
        return Ref(val)

    # operators

    def op_sum(self):
        out = self.op_prod()
        while self.accept("+"):
            out = _op_combine(OpSum, out, self.op_prod())
        return out

    def op_prod(self):
        out = self.op_comp()
        while self.accept("*"):
            out = _op_combine(OpProd, out, self.op_comp())
        return out

    def op_comp(self):
        out = self.op_atom()
        while self.accept("."):
            out = _op_combine(Compose, out, self.op_atom())
        return out

    def op_atom(self):
        kind, val = self.take()
        if (kind, val) == ("sym", "("):
            inner = self.op_sum()
            self.expect(")")
            return inner
        if (kind, val) == ("sym", "["):
            a = self.op_sum()
            self.expect(",")
            b = self.op_sum()
            self.expect("]")
            if not (isinstance(a, SpeciesOperator) and isinstance(b, SpeciesOperator)):
                raise ParseError("commutators take two species operators")
            return commutator(a, b)
        ops = {"D": DOp(), "MZ": MZOp(), "X": XOp(), "I": Identity(), "V": VOp()}
        if kind == "name" and val in ops:
            return ops[val]
        raise ParseError(f"unknown operator {val or 'end of input'!r}")


@dataclass(frozen=True)
class OpChain:
    """Sequential composite involving V, applied right to left."""

    steps: tuple


def _as_int(op):
    return IntOperator.lift(op) if isinstance(op, SpeciesOperator) else op


def _op_combine(kind, a, b):
    if isinstance(a, SpeciesOperator) and isinstance(b, SpeciesOperator):
        return kind(a, b)
    if kind is Compose:
        steps_a = a.steps if isinstance(a, OpChain) else (a,)
        steps_b = b.steps if isinstance(b, OpChain) else (b,)
        if any(isinstance(s, (VOp, OpChain)) for s in (a, b)):
            return OpChain(steps_a + steps_b)
        a, b = _as_int(a), _as_int(b)
        return IntOperator(Compose(a.positive_op, b.positive_op), Compose(a.negative_op, b.negative_op))
    if isinstance(a, (VOp, OpChain)) or isinstance(b, (VOp, OpChain)):
        raise ParseError("V can only be composed, not added or multiplied")
    a, b = _as_int(a), _as_int(b)
    return IntOperator(kind(a.positive_op, b.positive_op), kind(a.negative_op, b.negative_op))


def parse_program(text: str) -> tuple[SpeciesExpr | IntSpecies, SpeciesSystem]:
    """Parse ``let`` bindings and a final species or ``[P | N]`` signed species."""
    if not text.strip():
        raise ParseError("empty expression")
    bindings, top = _Parser(text).program()
    sys = SpeciesSystem(bindings)
    if isinstance(top, tuple):
        return IntSpecies(top[0], top[1], sys), sys
    return top, sys


def parse_species(text: str) -> tuple[SpeciesExpr, SpeciesSystem]:
    expr, sys = parse_program(text)
    if isinstance(expr, IntSpecies):
        raise ParseError("expected a species, got a signed species")
    return expr, sys


def parse_operator(text: str):
    """Returns a SpeciesOperator, an IntOperator, VOp, or an OpChain."""
    p = _Parser(text)
    if not text.strip():
        raise ParseError("empty operator")
    op = p.op_sum()
    p.done()
    return op


# --------------------------------------------------------------------------
# formatting


def format_expr(e: SpeciesExpr) -> str:
    return _fmt(e, 0)


def _fmt(e, prec) -> str:
    # prec: 0 = sum context, 1 = product operand, 2 = power base
    if isinstance(e, Zero):
        return "0"
    if isinstance(e, One):
        return "1"
    if isinstance(e, ZPow):
        return "Z" if e.k == 1 else f"Z^{e.k}"
    if isinstance(e, Cycle):
        return f"C[{e.k}]"
    if isinstance(e, LinOrder):
        return "L"
    if isinstance(e, Injections):
        return f"Inj[{e.m}]"
    if isinstance(e, Ref):
        return e.name
    if isinstance(e, Deriv):
        return f"D({_fmt(e.inner, 0)})"
    if isinstance(e, DegreePart):
        return f"deg({_fmt(e.inner, 0)}, {e.n})"
    if isinstance(e, Sum):
        text = f"{_fmt(e.left, 0)} + {_fmt(e.right, 1)}"
        return f"({text})" if prec >= 1 else text
    if isinstance(e, Prod):
        left = _fmt(e.left, 1)
        if _ends_with_scalar(e.left):
            left = f"({left})"
        right = e.right
        if isinstance(right, ScalarMul):
            text = f"{left} * {_fmt(right, 1)}"
        else:
            r = _fmt(right, 1)
            if isinstance(right, Prod):
                r = f"({r})"
            text = f"{left} * {r}"
        return f"({text})" if prec >= 2 else text
    if isinstance(e, ScalarMul):
        inner = e.inner
        body = _fmt(inner, 1)
        if isinstance(inner, Sum) or (isinstance(inner, Prod) and not _left_chain(inner)):
            body = f"({_fmt(inner, 0)})"
        text = f"{e.m}*{body}"
        return f"({text})" if prec >= 2 else text
    raise TypeError(f"not a species expression: {e!r}")


def _ends_with_scalar(e) -> bool:
    """A scalar prefix (or a bare 0/1, which reads as one) swallows the rest of its product,
    so it must not be followed by ``*``."""
    if isinstance(e, (ScalarMul, Zero, One)):
        return True
    return isinstance(e, Prod) and _ends_with_scalar(e.right)


def _left_chain(e: Prod) -> bool:
    """True if the product prints as a flat ``a * b * c`` chain that re-parses to itself."""
    return not isinstance(e.right, (Prod, Sum)) and not _ends_with_scalar(e.left)


def format_op(op) -> str:
    if isinstance(op, IntOperator):
        if op.pure:
            return format_op(op.positive_op)
        return f"({format_op(op.positive_op)} | {format_op(op.negative_op)})"
    names = {DOp: "D", MZOp: "MZ", XOp: "X", Identity: "I", VOp: "V"}
    if type(op) in names:
        return names[type(op)]
    if isinstance(op, Compose):
        return f"({format_op(op.outer)}).({format_op(op.inner)})"
    if isinstance(op, OpSum):
        return f"({format_op(op.left)} + {format_op(op.right)})"
    if isinstance(op, OpProd):
        return f"({format_op(op.left)} * {format_op(op.right)})"
    if isinstance(op, OpChain):
        return ".".join(format_op(s) for s in op.steps)
    raise TypeError(f"not an operator: {op!r}")
