"""Built-in functions reachable through ``call``.

Arithmetic works on two integer arguments.  ``fwrite`` logs an output effect
and returns ``'ok'``; ``fread`` logs an input effect and returns its argument,
which stands in for the scripted input so evaluation stays a pure function.
"""

from __future__ import annotations

import operator

from .domain import (Exc, ExceptionClass, Outcome, SideEffect, SideEffectId,
                     Trace, VLit, atom)
from .syntax import Integer


def _error(tag: str, fname: str) -> Exc:
    return Exc(ExceptionClass.ERROR, atom(tag), atom(fname))


def _arith(op):
    def run(fname, vals, eff):
        if (len(vals) == 2 and all(isinstance(v, VLit) and isinstance(v.lit, Integer)
                                   for v in vals)):
            return VLit(Integer(op(vals[0].lit.value, vals[1].lit.value))), eff
        return _error("badarith", fname), eff
    return run


def _fwrite(fname, vals, eff):
    if len(vals) != 1:
        return _error("badarg", fname), eff
    return atom("ok"), eff + (SideEffect(SideEffectId.OUTPUT, tuple(vals)),)


def _fread(fname, vals, eff):
    if len(vals) != 1:
        return _error("badarg", fname), eff
    return vals[0], eff + (SideEffect(SideEffectId.INPUT, tuple(vals)),)


BUILTINS = {
    "+": _arith(operator.add),
    "-": _arith(operator.sub),
    "*": _arith(operator.mul),
    "fwrite": _fwrite,
    "fread": _fread,
}

ARITHMETIC = ("+", "-", "*")
EFFECTFUL = ("fwrite", "fread")


def eval_builtin(fname: str, vals, eff: Trace) -> tuple[Outcome, Trace]:
    impl = BUILTINS.get(fname)
    if impl is None:
        return _error("undef", fname), eff
    return impl(fname, tuple(vals), eff)
