# -*- coding: utf-8 -*-
"""A small exact-arithmetic expression language for bound formulas.

Source text is parsed with :mod:`ast` and converted into immutable node
objects. Evaluation is over :class:`fractions.Fraction`; floats never
appear. Supported: integer literals, the invariant names in VARIABLES,
catalog macros, unary +/-, binary + - * /, ``**`` with a non-negative
integer literal exponent, ``floor``, ``ceil``, ``parity(n, odd, even)``
and comparisons (for hypotheses).
"""

import ast
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Tuple, Union

from proxrem.util.errors import ExpressionError

Value = Union[Fraction, bool]

VARIABLES: Dict[str, str] = {
    "n": "order",
    "delta": "minimum degree",
    "pi": "proximity",
    "rho": "remoteness",
    "diam": "diameter",
    "rad": "radius",
    "d": "diameter",
    "r": "radius",
    "ball2_min": "smallest |N<=2(v)|",
}

_BINOPS: Dict[type, Tuple[str, int, Callable]] = {
    ast.Add: ("+", 1, operator.add),
    ast.Sub: ("-", 1, operator.sub),
    ast.Mult: ("*", 2, operator.mul),
    ast.Div: ("/", 2, operator.truediv),
}

_CMPOPS: Dict[type, Tuple[str, Callable]] = {
    ast.Lt: ("<", operator.lt),
    ast.LtE: ("<=", operator.le),
    ast.Gt: (">", operator.gt),
    ast.GtE: (">=", operator.ge),
    ast.Eq: ("==", operator.eq),
}


class Node:
    prec = 9

    def evaluate(self, env: Mapping[str, Fraction]) -> Value:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class Const(Node):
    value: Fraction

    def evaluate(self, env):
        return self.value

    def render(self):
        return str(self.value)


@dataclass(frozen=True)
class Var(Node):
    name: str

    def evaluate(self, env):
        try:
            return Fraction(env[self.name])
        except KeyError:
            raise ExpressionError(f"no value for variable '{self.name}'") from None

    def render(self):
        return self.name


@dataclass(frozen=True)
class Macro(Node):
    name: str
    body: Node

    def evaluate(self, env):
        return self.body.evaluate(env)

    def render(self):
        return self.name


@dataclass(frozen=True)
class Neg(Node):
    operand: Node
    prec = 3

    def evaluate(self, env):
        return -self.operand.evaluate(env)

    def render(self):
        inner = self.operand.render()
        if self.operand.prec < self.prec:
            inner = f"({inner})"
        return f"-{inner}"


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node

    @property
    def prec(self):
        return 1 if self.op in "+-" else 2

    def evaluate(self, env):
        fn = {"+": operator.add, "-": operator.sub, "*": operator.mul, "/": operator.truediv}[self.op]
        a = self.left.evaluate(env)
        b = self.right.evaluate(env)
        try:
            return fn(a, b)
        except ZeroDivisionError:
            raise ExpressionError(f"division by zero in '{self.render()}'") from None

    def render(self):
        lhs = self.left.render()
        rhs = self.right.render()
        if self.left.prec < self.prec:
            lhs = f"({lhs})"
        if self.right.prec < self.prec or (self.right.prec == self.prec and self.op in "-/"):
            rhs = f"({rhs})"
        sep = " " if self.prec == 1 else ""
        return f"{lhs}{sep}{self.op}{sep}{rhs}"


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: int
    prec = 4

    def evaluate(self, env):
        return self.base.evaluate(env) ** self.exponent

    def render(self):
        inner = self.base.render()
        if self.base.prec <= self.prec:
            inner = f"({inner})"
        return f"{inner}^{self.exponent}"


@dataclass(frozen=True)
class Call(Node):
    fn: str
    args: Tuple[Node, ...]

    def evaluate(self, env):
        vals = [a.evaluate(env) for a in self.args]
        if self.fn == "floor":
            return Fraction(math.floor(vals[0]))
        if self.fn == "ceil":
            return Fraction(math.ceil(vals[0]))
        selector = vals[0]
        if selector.denominator != 1:
            raise ExpressionError(f"parity() needs an integer selector, got {selector}")
        return vals[1] if selector.numerator % 2 == 1 else vals[2]

    def render(self):
        if self.fn == "parity":
            return (f"[{self.args[1].render()} if {self.args[0].render()} odd, "
                    f"{self.args[2].render()} if even]")
        return f"{self.fn}({', '.join(a.render() for a in self.args)})"


@dataclass(frozen=True)
class Compare(Node):
    op: str
    left: Node
    right: Node
    prec = 0

    def evaluate(self, env):
        fn = {sym: f for sym, f in _CMPOPS.values()}[self.op]
        return bool(fn(self.left.evaluate(env), self.right.evaluate(env)))

    def render(self):
        return f"{self.left.render()} {self.op} {self.right.render()}"


_ARITY = {"floor": 1, "ceil": 1, "parity": 3}


class _Converter:

    def __init__(self, source: str, macros: Mapping[str, Node], allow_compare: bool):
        self.source = source
        self.macros = macros
        self.allow_compare = allow_compare

    def fail(self, msg: str):
        raise ExpressionError(f"{msg} in expression '{self.source}'")

    def convert(self, node: ast.AST) -> Node:
        if isinstance(node, ast.Expression):
            return self.convert(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                self.fail(f"only integer literals are allowed, got {node.value!r}")
            return Const(Fraction(node.value))
        if isinstance(node, ast.Name):
            if node.id in self.macros:
                return Macro(node.id, self.macros[node.id])
            if node.id not in VARIABLES:
                self.fail(f"unknown name '{node.id}'")
            return Var(node.id)
        if isinstance(node, ast.UnaryOp):
            inner = self.convert(node.operand)
            if isinstance(node.op, ast.USub):
                return Neg(inner)
            if isinstance(node.op, ast.UAdd):
                return inner
            self.fail("unsupported unary operator")
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)
                        and not isinstance(exp.value, bool) and exp.value >= 0):
                    self.fail("exponents must be non-negative integer literals")
                return Power(self.convert(node.left), exp.value)
            spec = _BINOPS.get(type(node.op))
            if spec is None:
                self.fail(f"unsupported operator {type(node.op).__name__}")
            return BinOp(spec[0], self.convert(node.left), self.convert(node.right))
        if isinstance(node, ast.Call):
            if not isinstance(node.func, ast.Name) or node.func.id not in _ARITY:
                self.fail("only floor(), ceil() and parity() may be called")
            if node.keywords or len(node.args) != _ARITY[node.func.id]:
                self.fail(f"{node.func.id}() takes {_ARITY[node.func.id]} positional arguments")
            return Call(node.func.id, tuple(self.convert(a) for a in node.args))
        if isinstance(node, ast.Compare):
            if not self.allow_compare:
                self.fail("comparisons are only allowed in hypotheses")
            if len(node.ops) != 1:
                self.fail("chained comparisons are not supported")
            spec = _CMPOPS.get(type(node.ops[0]))
            if spec is None:
                self.fail("unsupported comparison")
            return Compare(spec[0], self.convert(node.left), self.convert(node.comparators[0]))
        self.fail(f"unsupported syntax {type(node).__name__}")


def parse_expr(source: str, macros: Optional[Mapping[str, Node]] = None,
               allow_compare: bool = False) -> Node:
    """Parse a formula such as ``"5*(n+1)/(4*Q) + 101/20"``."""
    try:
        tree = ast.parse(source.strip(), mode="eval")
    except SyntaxError as e:
        raise ExpressionError(f"cannot parse expression '{source}': {e.msg}") from None
    return _Converter(source, macros or {}, allow_compare).convert(tree)


def evaluate_expr(node: Node, env: Mapping[str, Union[int, Fraction]]) -> Value:
    return node.evaluate({k: Fraction(v) for k, v in env.items() if v is not None})
