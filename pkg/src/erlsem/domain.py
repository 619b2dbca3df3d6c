"""Semantic domain shared by the three engines.

An evaluation outcome is either a :class:`Value` (``VLit`` or ``VClos``) or an
:class:`Exc` triple; code tells the two apart with ``isinstance(x, Exc)``.
Side-effect traces are tuples of :class:`SideEffect` and only ever grow by
appending.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from .syntax import Atom, Expression, FunctionIdentifier, Literal, Var

if TYPE_CHECKING:
    from .env import Environment


@dataclass(frozen=True)
class FunctionExpression:
    params: tuple[Var, ...]
    body: Expression


@dataclass(frozen=True)
class VLit:
    lit: Literal


@dataclass(frozen=True)
class VClos:
    env: Environment
    ext: tuple[tuple[FunctionIdentifier, FunctionExpression], ...]
    params: tuple[Var, ...]
    body: Expression

    @property
    def arity(self) -> int:
        return len(self.params)


Value = Union[VLit, VClos]


class ExceptionClass(enum.Enum):
    ERROR = "error"
    THROW = "throw"
    EXIT = "exit"


@dataclass(frozen=True)
class Exc:
    """Exception triple: class plus two reason values."""

    cls: ExceptionClass
    reason: Value
    details: Value


Outcome = Union[VLit, VClos, Exc]
ListOutcome = Union[tuple, Exc]


class SideEffectId(enum.Enum):
    INPUT = "input"
    OUTPUT = "output"


@dataclass(frozen=True)
class SideEffect:
    id: SideEffectId
    args: tuple


Trace = tuple  # tuple[SideEffect, ...]
EMPTY_TRACE: Trace = ()


def atom(name: str) -> VLit:
    return VLit(Atom(name))


def is_exception(res) -> bool:
    return isinstance(res, Exc)


def make_badfun(v: Value) -> Exc:
    return Exc(ExceptionClass.ERROR, atom("badfun"), v)


def make_badarity(v: Value) -> Exc:
    assert isinstance(v, VClos), "badarity is only raised for closures"
    return Exc(ExceptionClass.ERROR, atom("badarity"), v)


def exclass_to_value(c: ExceptionClass) -> VLit:
    return atom(c.value)


def value_equal(a, b) -> bool:
    """Structural equality of values (and outcomes).

    Environments compare as key-sorted association sequences, so two
    closures whose captured environments were built in different insertion
    orders are equal.
    """
    return a == b


# Functional result types.  Timeout and Failure carry no data and are
# singletons; compare them with ``is``.

@dataclass(frozen=True)
class Result:
    res: Outcome
    eff: Trace


class _Marker:
    __slots__ = ("_name",)

    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name

    def __reduce__(self):
        return self._name


TIMEOUT = _Marker("TIMEOUT")
FAILURE = _Marker("FAILURE")


@dataclass(frozen=True)
class LResult:
    res: ListOutcome
    eff: Trace


LTIMEOUT = _Marker("LTIMEOUT")
LFAILURE = _Marker("LFAILURE")

ResultType = Union[Result, _Marker]
ResultListType = Union[LResult, _Marker]
