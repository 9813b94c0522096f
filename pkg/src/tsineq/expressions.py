"""Arithmetic expression mini-language for case files and function roles.

Grammar (usual precedence, ^ right-associative and binding tightest):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?
    atom   := NUMBER | VAR | FUNC '(' expr (',' expr)* ')' | '(' expr ')'

Variables: ``t`` (scale point) and ``lam`` (free family parameter, bound only
by sharpness probes).  Functions: exp, log, sqrt, abs, min, max, pow.
Evaluation is numpy-aware so arrays of points evaluate in one call.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParseError

_FUNCTIONS = {"exp", "log", "sqrt", "abs", "min", "max", "pow"}
_ARITY = {"exp": 1, "log": 1, "sqrt": 1, "abs": 1, "min": 2, "max": 2, "pow": 2}
_VARS = {"t", "lam"}


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class Bin:
    op: str  # + - * / ^
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple["Expression", ...]


Expression = Num | Var | Neg | Bin | Call


# ---------------------------------------------------------------------------
# tokenizer


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER IDENT OP LPAREN RPAREN COMMA END
    text: str
    pos: int


def _tokenize(src: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit() or (c == "." and i + 1 < n and src[i + 1].isdigit()):
            j = i
            while j < n and (src[j].isdigit() or src[j] == "."):
                j += 1
            if j < n and src[j] in "eE":
                k = j + 1
                if k < n and src[k] in "+-":
                    k += 1
                if k < n and src[k].isdigit():
                    j = k
                    while j < n and src[j].isdigit():
                        j += 1
            text = src[i:j]
            try:
                value = float(text)
            except ValueError:
                raise ParseError(i, f"malformed number {text!r}")
            if not np.isfinite(value):
                raise ParseError(i, f"number literal {text!r} overflows")
            toks.append(_Token("NUMBER", text, i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(_Token("IDENT", src[i:j], i))
            i = j
            continue
        if c in "+-*/^":
            toks.append(_Token("OP", c, i))
            i += 1
            continue
        if c == "(":
            toks.append(_Token("LPAREN", c, i))
            i += 1
            continue
        if c == ")":
            toks.append(_Token("RPAREN", c, i))
            i += 1
            continue
        if c == ",":
            toks.append(_Token("COMMA", c, i))
            i += 1
            continue
        raise ParseError(i, f"unexpected character {c!r}")
    toks.append(_Token("END", "", n))
    return toks


# ---------------------------------------------------------------------------
# recursive-descent parser


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def advance(self) -> _Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(tok.pos, f"found {tok.text or 'end of input'!r}", (what,))
        return self.advance()

    def parse(self) -> Expression:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ParseError(tok.pos, f"unexpected trailing {tok.text!r}",
                             ("+", "-", "*", "/", "^", "end of input"))
        return node

    def expr(self) -> Expression:
        node = self.term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self.advance().text
            node = Bin(op, node, self.term())
        return node

    def term(self) -> Expression:
        node = self.unary()
        while self.peek().kind == "OP" and self.peek().text in "*/":
            op = self.advance().text
            node = Bin(op, node, self.unary())
        return node

    def unary(self) -> Expression:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expression:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "^":
            self.advance()
            return Bin("^", base, self.unary())  # right-associative
        return base

    def atom(self) -> Expression:
        tok = self.peek()
        if tok.kind == "NUMBER":
            self.advance()
            return Num(float(tok.text))
        if tok.kind == "IDENT":
            self.advance()
            name = tok.text
            if name in _VARS:
                return Var(name)
            if name in _FUNCTIONS:
                self.expect("LPAREN", "(")
                args = [self.expr()]
                while self.peek().kind == "COMMA":
                    self.advance()
                    args.append(self.expr())
                self.expect("RPAREN", ")")
                if len(args) != _ARITY[name]:
                    raise ParseError(tok.pos,
                                     f"{name} takes {_ARITY[name]} argument(s), got {len(args)}")
                return Call(name, tuple(args))
            raise ParseError(tok.pos, f"unknown identifier {name!r}",
                             tuple(sorted(_VARS | _FUNCTIONS)))
        if tok.kind == "LPAREN":
            self.advance()
            node = self.expr()
            self.expect("RPAREN", ")")
            return node
        raise ParseError(tok.pos, f"found {tok.text or 'end of input'!r}",
                         ("number", "variable", "function", "("))


def parse_expression(text: str) -> Expression:
    """Parse the mini-language; syntax errors carry a byte offset."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation


def evaluate(node: Expression, t, lam=None):
    """Evaluate at a scalar or numpy array t.  lam binds the family parameter."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        if node.name == "t":
            return t
        if lam is None:
            raise ValueError("expression uses 'lam' but no family parameter is bound")
        return lam
    if isinstance(node, Neg):
        return -evaluate(node.operand, t, lam)
    if isinstance(node, Bin):
        a = evaluate(node.left, t, lam)
        b = evaluate(node.right, t, lam)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            if node.op == "/":
                return np.divide(a, b)
            return np.power(a, b)
    a = evaluate(node.args[0], t, lam)
    if node.func == "exp":
        return np.exp(a)
    if node.func == "log":
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.log(a)
    if node.func == "sqrt":
        with np.errstate(invalid="ignore"):
            return np.sqrt(a)
    if node.func == "abs":
        return np.abs(a)
    b = evaluate(node.args[1], t, lam)
    if node.func == "min":
        return np.minimum(a, b)
    if node.func == "max":
        return np.maximum(a, b)
    with np.errstate(invalid="ignore", over="ignore"):
        return np.power(a, b)


# ---------------------------------------------------------------------------
# symbolic derivative (d/dx); returns None where the tree is not smooth


def differentiate(node: Expression, var: str = "t") -> Expression | None:
    if isinstance(node, Num):
        return Num(0.0)
    if isinstance(node, Var):
        return Num(1.0) if node.name == var else Num(0.0)
    if isinstance(node, Neg):
        d = differentiate(node.operand, var)
        return None if d is None else Neg(d)
    if isinstance(node, Bin):
        da = differentiate(node.left, var)
        db = differentiate(node.right, var)
        if da is None or db is None:
            return None
        a, b = node.left, node.right
        if node.op == "+":
            return Bin("+", da, db)
        if node.op == "-":
            return Bin("-", da, db)
        if node.op == "*":
            return Bin("+", Bin("*", da, b), Bin("*", a, db))
        if node.op == "/":
            num = Bin("-", Bin("*", da, b), Bin("*", a, db))
            return Bin("/", num, Bin("^", b, Num(2.0)))
        # a^b: constant exponent keeps the power-rule shape, otherwise exp/log
        if isinstance(b, Num):
            return Bin("*", Bin("*", Num(b.value), Bin("^", a, Num(b.value - 1.0))), da)
        inner = Bin("+", Bin("*", db, Call("log", (a,))), Bin("/", Bin("*", b, da), a))
        return Bin("*", Bin("^", a, b), inner)
    if node.func in ("abs", "min", "max"):
        return None
    da = differentiate(node.args[0], var)
    if da is None:
        return None
    if node.func == "exp":
        return Bin("*", Call("exp", node.args), da)
    if node.func == "log":
        return Bin("/", da, node.args[0])
    if node.func == "sqrt":
        return Bin("/", da, Bin("*", Num(2.0), Call("sqrt", node.args)))
    # pow(a, b) == a^b
    return differentiate(Bin("^", node.args[0], node.args[1]), var)


# ---------------------------------------------------------------------------
# printer; parse(to_string(ast)) == ast


def to_string(node: Expression) -> str:
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"(-{to_string(node.operand)})"
    if isinstance(node, Bin):
        return f"({to_string(node.left)} {node.op} {to_string(node.right)})"
    args = ", ".join(to_string(a) for a in node.args)
    return f"{node.func}({args})"
