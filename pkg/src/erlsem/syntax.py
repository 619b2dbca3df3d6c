"""Abstract syntax of the sequential Core Erlang subset.

Nine expression constructors, literals (atoms and integers), variables and
function identifiers.  All nodes are frozen dataclasses holding tuples, so
they are hashable, comparable by structure and safe to share.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_@]*\Z")
VAR_RE = re.compile(r"[A-Z_][a-zA-Z0-9_@]*\Z")


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("atom name must be non-empty")

    def __repr__(self):
        return f"Atom({self.name!r})"


@dataclass(frozen=True)
class Integer:
    value: int

    def __repr__(self):
        return f"Integer({self.value})"


Literal = Union[Atom, Integer]
Var = str


@dataclass(frozen=True, order=True)
class FunctionIdentifier:
    name: str
    arity: int

    def __post_init__(self):
        if not ATOM_RE.match(self.name):
            raise ValueError(f"bad function name {self.name!r}")
        if self.arity < 0:
            raise ValueError("arity must be a natural number")

    def __str__(self):
        return f"{self.name}/{self.arity}"


def _check_distinct(names, what):
    if len(set(names)) != len(names):
        raise ValueError(f"{what} must be pairwise distinct: {list(names)}")


def is_var_name(name) -> bool:
    return isinstance(name, str) and bool(VAR_RE.match(name))


class Expression:
    """Base class of the expression constructors."""

    __slots__ = ()


@dataclass(frozen=True)
class ELit(Expression):
    lit: Literal


@dataclass(frozen=True)
class EVar(Expression):
    name: Var


@dataclass(frozen=True)
class EFunId(Expression):
    fid: FunctionIdentifier


@dataclass(frozen=True)
class EFun(Expression):
    params: tuple[Var, ...]
    body: Expression

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        _check_distinct(self.params, "fun parameters")


@dataclass(frozen=True)
class ECall(Expression):
    name: str
    args: tuple[Expression, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class EApp(Expression):
    fun: Expression
    args: tuple[Expression, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class ELet(Expression):
    var: Var
    value: Expression
    body: Expression


@dataclass(frozen=True)
class ELetRec(Expression):
    fid: FunctionIdentifier
    params: tuple[Var, ...]
    fun_body: Expression
    body: Expression

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        _check_distinct(self.params, "letrec parameters")
        if self.fid.arity != len(self.params):
            raise ValueError(
                f"letrec {self.fid} declares arity {self.fid.arity} "
                f"but has {len(self.params)} parameters")


@dataclass(frozen=True)
class ETry(Expression):
    """``try e1 of V -> e2 catch (C, R, D) -> e3``."""

    expr: Expression
    var: Var
    body: Expression
    catch_vars: tuple[Var, Var, Var]
    handler: Expression

    def __post_init__(self):
        object.__setattr__(self, "catch_vars", tuple(self.catch_vars))
        if len(self.catch_vars) != 3:
            raise ValueError("try needs exactly three catch variables")
        _check_distinct(self.catch_vars, "catch variables")


def lit(x) -> ELit:
    """Shorthand: ``lit(4)`` is an integer literal, ``lit('a')`` an atom."""
    if isinstance(x, bool):
        raise TypeError("booleans are not literals")
    if isinstance(x, int):
        return ELit(Integer(x))
    return ELit(Atom(x))


def children(e: Expression) -> tuple[Expression, ...]:
    match e:
        case ELit() | EVar() | EFunId():
            return ()
        case EFun(_, body):
            return (body,)
        case ECall(_, args):
            return args
        case EApp(f, args):
            return (f, *args)
        case ELet(_, v, b):
            return (v, b)
        case ELetRec(_, _, fb, b):
            return (fb, b)
        case ETry(e1, _, e2, _, e3):
            return (e1, e2, e3)
    raise TypeError(f"not an expression: {e!r}")


def subexpressions(e: Expression) -> Iterator[Expression]:
    """Pre-order walk over ``e`` and all of its descendants."""
    stack = [e]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def expr_size(e: Expression) -> int:
    return sum(1 for _ in subexpressions(e))


def free_names(e: Expression) -> frozenset:
    """Variables (str) and function identifiers occurring free in ``e``."""
    match e:
        case ELit():
            return frozenset()
        case EVar(name):
            return frozenset([name])
        case EFunId(fid):
            return frozenset([fid])
        case EFun(params, body):
            return free_names(body) - set(params)
        case ECall(_, args):
            return frozenset().union(*map(free_names, args))
        case EApp(f, args):
            return free_names(f).union(*map(free_names, args))
        case ELet(var, value, body):
            return free_names(value) | (free_names(body) - {var})
        case ELetRec(fid, params, fun_body, body):
            inner = free_names(fun_body) - set(params) - {fid}
            return inner | (free_names(body) - {fid})
        case ETry(e1, var, e2, vl, e3):
            return (free_names(e1) | (free_names(e2) - {var})
                    | (free_names(e3) - set(vl)))
    raise TypeError(f"not an expression: {e!r}")


def free_vars(e: Expression) -> frozenset[str]:
    return frozenset(n for n in free_names(e) if isinstance(n, str))


def fresh_var(avoid) -> str:
    """Smallest name of the sequence X0, X1, ... not in ``avoid``."""
    i = 0
    while f"X{i}" in avoid:
        i += 1
    return f"X{i}"
