"""Expression trees over one variable: parsing, evaluation, differentiation.

The grammar accepted by :func:`parse`:

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" unary)?          # right-associative
    atom   := NUMBER | "pi" | "e" | "x"
            | FUNC "(" expr ")" | "(" expr ")"
    FUNC   := "exp" | "log" | "sin" | "cos" | "sqrt"

``^`` binds tighter than unary minus, so ``-x^2`` parses as ``-(x^2)``.
Evaluation is complex-valued throughout; ``log``, ``sqrt`` and non-integer
powers use principal branches, with ``z^w = exp(w*log(z))``.  Integer
exponents are evaluated by repeated multiplication so that real bases stay
exactly real.  Trees are immutable; derivative trees are left unsimplified
because only their values matter.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Callable, Union

__all__ = [
    "Expr",
    "Const",
    "Var",
    "Unary",
    "Binary",
    "ParseError",
    "UnknownIdentifierError",
    "EvalDomainError",
    "parse",
    "evaluate",
    "differentiate",
    "to_text",
]


class ParseError(Exception):
    """Malformed expression text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position


class UnknownIdentifierError(ParseError):
    """An identifier other than ``x``, ``pi``, ``e`` or a known function."""


class EvalDomainError(Exception):
    """A sub-operation was undefined at the evaluation point."""

    def __init__(self, message: str, node: "Expr"):
        super().__init__(f"{message} in '{to_text(node)}'")
        self.node = node


@dataclass(frozen=True)
class Const:
    value: complex

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Var:
    def __str__(self) -> str:
        return "x"


@dataclass(frozen=True)
class Unary:
    op: str  # "neg", "exp", "log", "sin", "cos", "sqrt"
    arg: "Expr"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Binary:
    op: str  # "+", "-", "*", "/", "^"
    left: "Expr"
    right: "Expr"

    def __str__(self) -> str:
        return to_text(self)


Expr = Union[Const, Var, Unary, Binary]

_ZERO = Const(complex(0.0))
_ONE = Const(complex(1.0))

_UNARY_FN: dict[str, Callable[[complex], complex]] = {
    "exp": cmath.exp,
    "log": cmath.log,
    "sin": cmath.sin,
    "cos": cmath.cos,
    "sqrt": cmath.sqrt,
}

_FUNCTIONS = tuple(_UNARY_FN)
_NAMED_CONSTANTS = {"pi": math.pi, "e": math.e}


# ---------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(
    r"(?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[+\-*/^()])"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"syntax error: unexpected character {text[i]!r}", i)
        tokens.append((m.lastgroup or "", m.group(), i))
        i = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse(text: str) -> Expr:
    """Parse infix text over ``x`` into an expression tree.

    Raises :class:`ParseError` (with offset) on malformed input and
    :class:`UnknownIdentifierError` for names outside the grammar.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek() -> tuple[str, str, int]:
        return tokens[pos]

    def advance() -> tuple[str, str, int]:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expect(symbol: str) -> None:
        kind, value, at = peek()
        if kind != "op" or value != symbol:
            raise ParseError(f"syntax error: expected {symbol!r}, found {_describe(kind, value)}", at)
        advance()

    def parse_expr() -> Expr:
        node = parse_term()
        while peek()[0] == "op" and peek()[1] in "+-":
            op = advance()[1]
            node = Binary(op, node, parse_term())
        return node

    def parse_term() -> Expr:
        node = parse_unary()
        while peek()[0] == "op" and peek()[1] in "*/":
            op = advance()[1]
            node = Binary(op, node, parse_unary())
        return node

    def parse_unary() -> Expr:
        if peek()[0] == "op" and peek()[1] == "-":
            advance()
            return Unary("neg", parse_unary())
        return parse_power()

    def parse_power() -> Expr:
        base = parse_atom()
        if peek()[0] == "op" and peek()[1] == "^":
            advance()
            return Binary("^", base, parse_unary())
        return base

    def parse_atom() -> Expr:
        kind, value, at = peek()
        if kind == "num":
            advance()
            return Const(complex(float(value)))
        if kind == "name":
            advance()
            if value == "x":
                return Var()
            if value in _NAMED_CONSTANTS:
                return Const(complex(_NAMED_CONSTANTS[value]))
            if value in _FUNCTIONS:
                expect("(")
                arg = parse_expr()
                expect(")")
                return Unary(value, arg)
            raise UnknownIdentifierError(f"unknown identifier {value!r}", at)
        if kind == "op" and value == "(":
            advance()
            node = parse_expr()
            expect(")")
            return node
        raise ParseError(f"syntax error: unexpected {_describe(kind, value)}", at)

    node = parse_expr()
    kind, value, at = peek()
    if kind != "end":
        raise ParseError(f"syntax error: unexpected {_describe(kind, value)}", at)
    return node


def _describe(kind: str, value: str) -> str:
    return "end of input" if kind == "end" else repr(value)


# ---------------------------------------------------------------------------
# Evaluation

def evaluate(e: Expr, z: complex) -> complex:
    """Evaluate the tree at a complex point.

    Raises :class:`EvalDomainError` naming the offending node when a
    sub-operation is undefined (log of 0, division by zero, overflow, ...).
    """
    z = complex(z)
    kind = type(e)
    if kind is Const:
        return e.value
    if kind is Var:
        return z
    if kind is Unary:
        v = evaluate(e.arg, z)
        if e.op == "neg":
            return -v
        if e.op == "log" and v == 0:
            raise EvalDomainError("log of 0", e)
        try:
            out = _UNARY_FN[e.op](v)
        except (ValueError, OverflowError) as exc:
            raise EvalDomainError(f"{e.op} undefined at {v!r}", e) from exc
        return _require_finite(out, e)
    left = evaluate(e.left, z)
    right = evaluate(e.right, z)
    op = e.op
    if op == "+":
        out = left + right
    elif op == "-":
        out = left - right
    elif op == "*":
        out = left * right
    elif op == "/":
        if right == 0:
            raise EvalDomainError("division by zero", e)
        out = left / right
    else:
        out = _power(left, right, e)
    return _require_finite(out, e)


def _require_finite(v: complex, node: Expr) -> complex:
    if not cmath.isfinite(v):
        raise EvalDomainError(f"non-finite value {v!r}", node)
    return v


def _power(base: complex, exponent: complex, node: Expr) -> complex:
    if exponent.imag == 0 and exponent.real.is_integer() and abs(exponent.real) <= 4096:
        n = int(exponent.real)
        if base == 0 and n < 0:
            raise EvalDomainError("zero raised to a negative power", node)
        try:
            return _int_power(base, n)
        except ZeroDivisionError as exc:  # base**|n| underflowed to zero
            raise EvalDomainError("underflow in negative power", node) from exc
    if base == 0:
        if exponent.imag == 0 and exponent.real > 0:
            return complex(0.0)
        raise EvalDomainError(f"zero raised to the power {exponent!r}", node)
    try:
        return cmath.exp(exponent * cmath.log(base))
    except OverflowError as exc:
        raise EvalDomainError("overflow in power", node) from exc


def _int_power(base: complex, n: int) -> complex:
    if n < 0:
        return 1.0 / _int_power(base, -n)
    result = complex(1.0)
    while n:
        if n & 1:
            result *= base
        n >>= 1
        if n:
            base *= base
    return result


# ---------------------------------------------------------------------------
# Differentiation

def differentiate(e: Expr) -> Expr:
    """Symbolic derivative with respect to ``x``; total on the node set."""
    kind = type(e)
    if kind is Const:
        return _ZERO
    if kind is Var:
        return _ONE
    if kind is Unary:
        u, du = e.arg, differentiate(e.arg)
        if e.op == "neg":
            return Unary("neg", du)
        if e.op == "exp":
            return Binary("*", e, du)
        if e.op == "log":
            return Binary("/", du, u)
        if e.op == "sin":
            return Binary("*", Unary("cos", u), du)
        if e.op == "cos":
            return Unary("neg", Binary("*", Unary("sin", u), du))
        if e.op == "sqrt":
            return Binary("/", du, Binary("*", Const(complex(2.0)), e))
        raise AssertionError(f"unhandled unary op {e.op!r}")
    dl, dr = differentiate(e.left), differentiate(e.right)
    if e.op == "+":
        return Binary("+", dl, dr)
    if e.op == "-":
        return Binary("-", dl, dr)
    if e.op == "*":
        return Binary("+", Binary("*", dl, e.right), Binary("*", e.left, dr))
    if e.op == "/":
        numerator = Binary("-", Binary("*", dl, e.right), Binary("*", e.left, dr))
        return Binary("/", numerator, Binary("*", e.right, e.right))
    if e.op == "^":
        if type(e.right) is Const:
            c = e.right.value
            if c == 0:
                return _ZERO
            lowered = Binary("^", e.left, Const(c - 1))
            return Binary("*", Binary("*", e.right, lowered), dl)
        # d(u^v) = u^v * (v' log u + v u' / u)
        term = Binary("+", Binary("*", dr, Unary("log", e.left)),
                      Binary("/", Binary("*", e.right, dl), e.left))
        return Binary("*", e, term)
    raise AssertionError(f"unhandled binary op {e.op!r}")


# ---------------------------------------------------------------------------
# Printing

_PREC_ADD = 1
_PREC_MUL = 2
_PREC_NEG = 3
_PREC_POW = 4
_PREC_ATOM = 5


def to_text(e: Expr) -> str:
    """Render the tree as parseable infix text (round-trips through parse)."""
    return _render(e, 0)


def _render(e: Expr, min_prec: int) -> str:
    text, prec = _render_prec(e)
    return f"({text})" if prec < min_prec else text


def _render_prec(e: Expr) -> tuple[str, int]:
    kind = type(e)
    if kind is Const:
        v = e.value
        if v.imag == 0:
            r = v.real
            if math.copysign(1.0, r) < 0:
                return f"-{-r!r}", _PREC_NEG
            return repr(r), _PREC_ATOM
        # unreachable from parse/differentiate, but keep it parseable
        return f"({v.real!r}+({v.imag!r})*sqrt(-1))", _PREC_ATOM
    if kind is Var:
        return "x", _PREC_ATOM
    if kind is Unary:
        if e.op == "neg":
            return f"-{_render(e.arg, _PREC_NEG)}", _PREC_NEG
        return f"{e.op}({_render(e.arg, 0)})", _PREC_ATOM
    op = e.op
    if op in "+-":
        return f"{_render(e.left, _PREC_ADD)} {op} {_render(e.right, _PREC_MUL)}", _PREC_ADD
    if op in "*/":
        return f"{_render(e.left, _PREC_MUL)}{op}{_render(e.right, _PREC_NEG)}", _PREC_MUL
    return f"{_render(e.left, _PREC_ATOM)}^{_render(e.right, _PREC_NEG)}", _PREC_POW
