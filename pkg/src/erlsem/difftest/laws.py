"""Executable checks of two expression equivalences.

Wrapping: ``e`` behaves like ``let X = fun() -> e in apply X()``.

Swapping: ``let A = e1 in let B = e2 in A + B`` behaves like the version
with the two bindings exchanged, except that the side effects of ``e1`` and
``e2`` appear in the opposite order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .._deep import deep
from ..builtins import eval_builtin
from ..domain import (EMPTY_TRACE, TIMEOUT, Exc, Result, SideEffect, Trace,
                      VClos, value_equal)
from ..env import EMPTY_ENV
from ..fbs import eval_fbos_expr
from ..syntax import (EApp, ECall, EFun, ELet, EVar, Expression, free_names,
                      free_vars, fresh_var)

# Clock spent by the wrapper before re-entering ``e``: one tick for the
# outer let and one for the application.  Building the closure is a sibling
# call and does not reduce the clock left for the body.
WRAP_CLOCK_OVERHEAD = 2
# Each binding of the swap sides sits under at most two lets.
SWAP_CLOCK_OVERHEAD = 2


def _run(e: Expression, clock: int):
    return eval_fbos_expr(clock, EMPTY_ENV, e, EMPTY_TRACE)


def wrap(e: Expression) -> Expression:
    x = fresh_var(free_vars(e))
    return ELet(x, EFun((), e), EApp(EVar(x), ()))


def _same(r1, r2) -> bool:
    if r1 is TIMEOUT or r2 is TIMEOUT:
        return r1 is r2
    return (isinstance(r1, Result) and isinstance(r2, Result)
            and value_equal(r1.res, r2.res) and r1.eff == r2.eff)


@deep
def check_equiv_wrap(e: Expression, clock: int,
                     overhead: int = WRAP_CLOCK_OVERHEAD) -> bool:
    return _same(_run(e, clock), _run(wrap(e), clock + overhead))


class SwapVerdict(enum.Enum):
    HOLDS = "holds"              # both sides give values, traces transposed
    CONDITIONAL = "conditional"  # an operand raises; each side matches its prediction
    VACUOUS = "vacuous"          # an operand runs out of clock
    FAILS = "fails"


@dataclass(frozen=True)
class SwapSides:
    left: Expression
    right: Expression


def observable(v):
    """``v`` with every closure environment cut down to the names it can reach.

    Closures capture the whole environment, so a closure built under the
    swap bindings also carries them.  Those entries can never be read.
    """
    match v:
        case VClos(env, ext, params, body):
            reach = free_names(body) - set(params)
            for _, f in ext:
                reach |= free_names(f.body) - set(f.params)
            kept = env.restrict(reach)
            return VClos(type(env)((k, observable(x)) for k, x in kept.items()),
                         ext, params, body)
        case Exc(cls, reason, details):
            return Exc(cls, observable(reason), observable(details))
    return v


def observable_trace(eff: Trace) -> Trace:
    return tuple(SideEffect(s.id, tuple(map(observable, s.args))) for s in eff)


def swap_sides(e1: Expression, e2: Expression) -> SwapSides:
    avoid = free_vars(e1) | free_vars(e2)
    a = fresh_var(avoid)
    b = fresh_var(avoid | {a})
    total = ECall("+", (EVar(a), EVar(b)))
    return SwapSides(ELet(a, e1, ELet(b, e2, total)),
                     ELet(b, e2, ELet(a, e1, total)))


def _predict(first, second) -> tuple:
    """Expected (result, trace) of ``let _ = first in let _ = second in +``.

    ``first`` and ``second`` are the operands' stand-alone results from the
    empty trace; builtins only ever append, so traces concatenate.
    """
    if isinstance(first.res, Exc):
        return first.res, first.eff
    if isinstance(second.res, Exc):
        return second.res, first.eff + second.eff
    return None, first.eff + second.eff


@deep
def swap_verdict(e1: Expression, e2: Expression, clock: int,
                 overhead: int = SWAP_CLOCK_OVERHEAD) -> SwapVerdict:
    r1, r2 = _run(e1, clock), _run(e2, clock)
    if not (isinstance(r1, Result) and isinstance(r2, Result)):
        return SwapVerdict.VACUOUS
    sides = swap_sides(e1, e2)
    left = _run(sides.left, clock + overhead)
    right = _run(sides.right, clock + overhead)
    if not (isinstance(left, Result) and isinstance(right, Result)):
        return SwapVerdict.FAILS

    left = Result(observable(left.res), observable_trace(left.eff))
    right = Result(observable(right.res), observable_trace(right.eff))
    r1 = Result(observable(r1.res), observable_trace(r1.eff))
    r2 = Result(observable(r2.res), observable_trace(r2.eff))
    l_res, l_eff = _predict(r1, r2)
    r_res, r_eff = _predict(r2, r1)
    raised = l_res is not None or r_res is not None
    if not raised:
        total, _ = eval_builtin("+", (r1.res, r2.res), EMPTY_TRACE)
        l_res = r_res = total
    if not (value_equal(left.res, l_res) and left.eff == l_eff
            and value_equal(right.res, r_res) and right.eff == r_eff):
        return SwapVerdict.FAILS
    if raised:
        return SwapVerdict.CONDITIONAL
    # Direct form of the law: same value, and the right trace is the left one
    # with the two operand segments exchanged.
    k = len(r1.eff)
    transposed: Trace = left.eff[k:] + left.eff[:k]
    if value_equal(left.res, right.res) and right.eff == transposed:
        return SwapVerdict.HOLDS
    return SwapVerdict.FAILS


def check_equiv_swap(e1: Expression, e2: Expression, clock: int) -> bool:
    return swap_verdict(e1, e2, clock) is not SwapVerdict.FAILS
