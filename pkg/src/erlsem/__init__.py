"""Three executable semantics for a small Core Erlang fragment.

* :mod:`erlsem.bigstep` searches for and checks relational derivations,
* :mod:`erlsem.pretty` evaluates with intermediate terms,
* :mod:`erlsem.fbs` is a definitional interpreter driven by a clock.

:mod:`erlsem.difftest` compares them on generated programs.
"""

from .domain import (FAILURE, LFAILURE, LTIMEOUT, TIMEOUT, Exc,
                     ExceptionClass, LResult, Result, SideEffect,
                     SideEffectId, VClos, VLit)
from .env import EMPTY_ENV, Environment
from .frontend import ParseError, SourceSpan, parse, print_expr
from .syntax import (Atom, EApp, ECall, EFun, EFunId, ELet, ELetRec, ELit,
                     ETry, EVar, Expression, FunctionIdentifier, Integer)

__version__ = "0.1.0"

__all__ = [
    "Atom", "EApp", "ECall", "EFun", "EFunId", "ELet", "ELetRec", "ELit",
    "EMPTY_ENV", "ETry", "EVar", "Environment", "Exc", "ExceptionClass",
    "Expression", "FAILURE", "FunctionIdentifier", "Integer", "LFAILURE",
    "LResult", "LTIMEOUT", "ParseError", "Result", "SideEffect",
    "SideEffectId", "SourceSpan", "TIMEOUT", "VClos", "VLit", "parse",
    "print_expr",
]
