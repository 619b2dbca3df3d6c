"""Concrete syntax: tokenizer, recursive-descent parser and printer.

Grammar::

    expr    ::= 'let' VAR '=' expr 'in' expr
              | 'letrec' FNAME '/' NAT '=' 'fun' '(' vars ')' '->' expr 'in' expr
              | 'fun' '(' vars ')' '->' expr
              | 'try' expr 'of' VAR '->' expr 'catch' catchvars '->' expr
              | addexpr
    addexpr ::= mulexpr (('+' | '-') mulexpr)*
    mulexpr ::= primary ('*' primary)*
    primary ::= INT | '-' INT | QATOM | FNAME '/' NAT | VAR | '(' expr ')'
              | 'apply' expr '(' exprs ')'
              | 'call' FNAME '(' exprs ')'
    catchvars ::= '(' VAR ',' VAR ',' VAR ')' | VAR VAR VAR

``FNAME`` is a bare lowercase name or a quoted atom.  Binary operators are
sugar for ``call '+'(l, r)`` and friends.  ``%`` starts a comment that runs
to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ._deep import deep
from .syntax import (ATOM_RE, Atom, EApp, ECall, EFun, EFunId, ELet, ELetRec,
                     ELit, ETry, EVar, Expression, FunctionIdentifier, Integer)

KEYWORDS = frozenset(
    ["let", "letrec", "in", "fun", "apply", "call", "try", "of", "catch"])
OPERATORS = ("+", "-", "*")


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class ParseError(Exception):
    def __init__(self, span: SourceSpan, message: str, expected=()):
        self.span = span
        self.message = message
        self.expected = list(expected)
        super().__init__(f"{message} at {span.start}")


@dataclass
class Token:
    kind: str  # int, var, name, atom, punct, eof
    text: str
    start: int
    end: int
    value: object = field(default=None)


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\n]+|%[^\n]*)
  | (?P<int>[0-9]+)
  | (?P<var>[A-Z_][a-zA-Z0-9_@]*)
  | (?P<name>[a-z][a-zA-Z0-9_@]*)
  | (?P<punct>->|[()=,/+*-])
""", re.VERBOSE)


def _byte_offsets(src: str):
    offsets, pos = [], 0
    for ch in src:
        offsets.append(pos)
        pos += len(ch.encode("utf-8"))
    offsets.append(pos)
    return offsets


class _Lexer:
    def __init__(self, src: str):
        self.src = src
        self.offsets = _byte_offsets(src)

    def span(self, start, end):
        return SourceSpan(self.offsets[start], self.offsets[end])

    def error(self, start, end, msg, expected=()):
        raise ParseError(self.span(start, end), msg, expected)

    def tokens(self) -> list[Token]:
        src, i, out = self.src, 0, []
        while i < len(src):
            if src[i] == "'":
                out.append(self._atom(i))
                i = out[-1].end
                continue
            m = _TOKEN_RE.match(src, i)
            if m is None:
                self.error(i, i + 1, f"unexpected character {src[i]!r}")
            kind = m.lastgroup
            if kind != "ws":
                text = m.group()
                value = int(text) if kind == "int" else None
                out.append(Token(kind, text, i, m.end(), value))
            i = m.end()
        out.append(Token("eof", "", len(src), len(src)))
        return out

    def _atom(self, start: int) -> Token:
        src, i, chars = self.src, start + 1, []
        while True:
            if i >= len(src):
                self.error(start, i, "unterminated atom", ["'"])
            ch = src[i]
            if ch == "'":
                break
            if ch == "\\":
                if i + 1 < len(src) and src[i + 1] in "\\'":
                    chars.append(src[i + 1])
                    i += 2
                    continue
                self.error(i, min(i + 2, len(src)), "bad escape in atom")
            if not (" " <= ch <= "~"):
                self.error(i, i + 1, "atoms must be printable ASCII")
            chars.append(ch)
            i += 1
        if not chars:
            self.error(start, i + 1, "empty atom")
        name = "".join(chars)
        return Token("atom", src[start:i + 1], start, i + 1, name)


class _Parser:
    def __init__(self, src: str):
        self.lex = _Lexer(src)
        self.toks = self.lex.tokens()
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def fail(self, msg, expected=(), tok=None):
        tok = tok or self.tok
        self.lex.error(tok.start, max(tok.end, tok.start), msg, expected)

    def at(self, text) -> bool:
        t = self.tok
        return t.kind in ("punct", "name") and t.text == text

    def take(self) -> Token:
        t = self.tok
        self.pos += 1
        return t

    def expect(self, text) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", [text])
        return self.take()

    def var(self) -> str:
        if self.tok.kind != "var":
            self.fail(f"expected a variable, found {self.tok.text or 'end of input'!r}",
                      ["variable"])
        return self.take().text

    def nat(self) -> int:
        if self.tok.kind != "int":
            self.fail("expected an arity", ["natural number"])
        return self.take().value

    def fname(self) -> str:
        t = self.tok
        if t.kind == "atom" or (t.kind == "name" and t.text not in KEYWORDS):
            self.take()
            return t.value if t.kind == "atom" else t.text
        self.fail("expected a function name", ["atom"])

    def fid(self) -> FunctionIdentifier:
        start = self.tok
        name = self.fname()
        self.expect("/")
        arity = self.nat()
        try:
            return FunctionIdentifier(name, arity)
        except ValueError as err:
            self.fail(str(err), tok=start)

    def build(self, start: Token, ctor, *args):
        try:
            return ctor(*args)
        except ValueError as err:
            self.fail(str(err), tok=start)

    def sequence(self, item) -> list:
        self.expect("(")
        items = []
        if not self.at(")"):
            items.append(item())
            while self.at(","):
                self.take()
                items.append(item())
        self.expect(")")
        return items

    def catch_vars(self) -> list:
        if not self.at("("):
            return [self.var(), self.var(), self.var()]
        self.take()
        vl = [self.var()]
        for _ in range(2):
            self.expect(",")
            vl.append(self.var())
        self.expect(")")
        return vl

    # expressions

    def expr(self) -> Expression:
        t = self.tok
        if t.kind == "name":
            if t.text == "let":
                self.take()
                v = self.var()
                self.expect("=")
                value = self.expr()
                self.expect("in")
                return ELet(v, value, self.expr())
            if t.text == "letrec":
                self.take()
                fid = self.fid()
                self.expect("=")
                self.expect("fun")
                params = self.sequence(self.var)
                self.expect("->")
                fun_body = self.expr()
                self.expect("in")
                body = self.expr()
                return self.build(t, ELetRec, fid, params, fun_body, body)
            if t.text == "fun":
                self.take()
                params = self.sequence(self.var)
                self.expect("->")
                return self.build(t, EFun, params, self.expr())
            if t.text == "try":
                self.take()
                e1 = self.expr()
                self.expect("of")
                v = self.var()
                self.expect("->")
                e2 = self.expr()
                self.expect("catch")
                vl = self.catch_vars()
                self.expect("->")
                e3 = self.expr()
                return self.build(t, ETry, e1, v, e2, vl, e3)
        return self.additive()

    def additive(self) -> Expression:
        left = self.multiplicative()
        while self.at("+") or self.at("-"):
            op = self.take().text
            left = ECall(op, (left, self.multiplicative()))
        return left

    def multiplicative(self) -> Expression:
        left = self.primary()
        while self.at("*"):
            self.take()
            left = ECall("*", (left, self.primary()))
        return left

    def primary(self) -> Expression:
        t = self.tok
        if t.kind == "int":
            self.take()
            return ELit(Integer(t.value))
        if t.kind == "var":
            self.take()
            return EVar(t.text)
        if self.at("-"):
            self.take()
            if self.tok.kind != "int":
                self.fail("expected an integer after '-'", ["integer"])
            return ELit(Integer(-self.take().value))
        if self.at("("):
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind == "atom":
            if self.toks[self.pos + 1].text == "/":
                return EFunId(self.fid())
            self.take()
            return ELit(Atom(t.value))
        if t.kind == "name":
            if t.text == "apply":
                self.take()
                f = self.expr()
                return EApp(f, self.sequence(self.expr))
            if t.text == "call":
                self.take()
                name = self.fname()
                return ECall(name, self.sequence(self.expr))
            if t.text not in KEYWORDS:
                return EFunId(self.fid())
        self.fail(f"unexpected {t.text or 'end of input'!r}",
                  ["expression"])

    def program(self) -> Expression:
        e = self.expr()
        if self.tok.kind != "eof":
            self.fail(f"unexpected {self.tok.text!r} after expression", ["end of input"])
        return e


@deep
def parse(src) -> Expression:
    """Parse a program; raises :class:`ParseError` on any malformed input."""
    if isinstance(src, (bytes, bytearray)):
        try:
            src = bytes(src).decode("utf-8")
        except UnicodeDecodeError as err:
            raise ParseError(SourceSpan(err.start, err.end), "input is not valid UTF-8")
    try:
        return _Parser(src).program()
    except RecursionError:
        raise ParseError(SourceSpan(0, len(src.encode("utf-8"))), "expression nested too deeply")


# printing

_TOP, _ADD, _MUL, _PRIM = range(4)


def quote_atom(name: str) -> str:
    return "'" + name.replace("\\", "\\\\").replace("'", "\\'") + "'"


def print_fname(name: str) -> str:
    if ATOM_RE.match(name) and name not in KEYWORDS:
        return name
    return quote_atom(name)


def print_fid(fid: FunctionIdentifier) -> str:
    return f"{print_fname(fid.name)}/{fid.arity}"


def _infix(e: Expression) -> bool:
    return isinstance(e, ECall) and e.name in OPERATORS and len(e.args) == 2


def _print(e: Expression, level: int) -> str:
    match e:
        case ELit(Integer(n)):
            return str(n)
        case ELit(Atom(name)):
            return quote_atom(name)
        case EVar(name):
            return name
        case EFunId(fid):
            return print_fid(fid)
        case ECall(op, (l, r)) if op in ("+", "-"):
            s = f"{_print(l, _ADD)} {op} {_print(r, _MUL)}"
            return f"({s})" if level > _ADD else s
        case ECall("*", (l, r)):
            s = f"{_print(l, _MUL)} * {_print(r, _PRIM)}"
            return f"({s})" if level > _MUL else s
        case ECall(name, args):
            return f"call {quote_atom(name)}({_args(args)})"
        case EApp(f, args):
            head = _print(f, _TOP)
            if not isinstance(f, (EVar, EFunId, ELit)):
                head = f"({head})"
            return f"apply {head}({_args(args)})"
    match e:
        case EFun(params, body):
            s = f"fun({', '.join(params)}) -> {_print(body, _TOP)}"
        case ELet(var, value, body):
            s = f"let {var} = {_print(value, _TOP)} in {_print(body, _TOP)}"
        case ELetRec(fid, params, fun_body, body):
            s = (f"letrec {print_fid(fid)} = fun({', '.join(params)}) -> "
                 f"{_print(fun_body, _TOP)} in {_print(body, _TOP)}")
        case ETry(e1, var, e2, vl, e3):
            s = (f"try {_print(e1, _TOP)} of {var} -> {_print(e2, _TOP)} "
                 f"catch ({', '.join(vl)}) -> {_print(e3, _TOP)}")
        case _:
            raise TypeError(f"not an expression: {e!r}")
    return f"({s})" if level > _TOP else s


def _args(args) -> str:
    return ", ".join(_print(a, _TOP) for a in args)


@deep
def print_expr(e: Expression) -> str:
    """Canonical one-line rendering; ``parse(print_expr(e)) == e``."""
    return _print(e, _TOP)
