"""Functional big-step semantics: a total interpreter driven by a fuel clock.

Every recursive call of :func:`eval_fbos_expr` receives the clock minus one;
a zero clock yields ``TIMEOUT``.  :func:`eval_elems` evaluates argument lists
with an already-clocked evaluator and consumes no fuel itself.
"""

from __future__ import annotations

from functools import partial

from ._deep import deep
from .builtins import eval_builtin
from .domain import (EMPTY_TRACE, FAILURE, LFAILURE, LTIMEOUT, TIMEOUT, Exc,
                     LResult, Result, ResultListType, ResultType, Trace, VClos, VLit,
                     exclass_to_value, make_badarity, make_badfun)
from .env import (EMPTY_ENV, Environment, append_funs_to_env,
                  append_try_vars_to_env, append_vars_to_env, get_env,
                  get_value, insert_value, make_closure)
from .syntax import (EApp, ECall, EFun, EFunId, ELet, ELetRec, ELit, ETry,
                     EVar, Expression)

DEFAULT_CLOCK = 1000


def eval_elems(f, env: Environment, exps, eff: Trace) -> ResultListType:
    vals = []
    for e in exps:
        r = f(env, e, eff)
        if r is TIMEOUT:
            return LTIMEOUT
        if r is FAILURE:
            return LFAILURE
        if isinstance(r.res, Exc):
            return LResult(r.res, r.eff)
        vals.append(r.res)
        eff = r.eff
    return LResult(tuple(vals), eff)


def _lift(lr) -> ResultType:
    """Map a non-value list result to the corresponding expression result."""
    if lr is LTIMEOUT:
        return TIMEOUT
    if lr is LFAILURE:
        return FAILURE
    return Result(lr.res, lr.eff)


def _eval(clock: int, env: Environment, exp: Expression, eff: Trace) -> ResultType:
    if clock <= 0:
        return TIMEOUT
    clock -= 1
    match exp:
        case ELit(l):
            return Result(VLit(l), eff)
        case EVar(name):
            return Result(get_value(env, name), eff)
        case EFunId(fid):
            return Result(get_value(env, fid), eff)
        case EFun(params, body):
            return Result(make_closure(env, params, body), eff)
        case EApp(fexp, args):
            r = _eval(clock, env, fexp, eff)
            if not isinstance(r, Result) or isinstance(r.res, Exc):
                return r
            v = r.res
            lr = eval_elems(partial(_eval, clock), env, args, r.eff)
            if not isinstance(lr, LResult) or isinstance(lr.res, Exc):
                return _lift(lr)
            vals, eff2 = lr.res, lr.eff
            if isinstance(v, VClos):
                if len(v.params) == len(vals):
                    body_env = append_vars_to_env(v.params, vals, get_env(v.env, v.ext))
                    return _eval(clock, body_env, v.body, eff2)
                return Result(make_badarity(v), eff2)
            return Result(make_badfun(v), eff2)
        case ECall(fname, args):
            lr = eval_elems(partial(_eval, clock), env, args, eff)
            if not isinstance(lr, LResult) or isinstance(lr.res, Exc):
                return _lift(lr)
            res, eff2 = eval_builtin(fname, lr.res, lr.eff)
            return Result(res, eff2)
        case ELet(var, value, body):
            r = _eval(clock, env, value, eff)
            if not isinstance(r, Result) or isinstance(r.res, Exc):
                return r
            return _eval(clock, insert_value(env, var, r.res), body, r.eff)
        case ELetRec(fid, params, fun_body, body):
            env2 = append_funs_to_env([fid], [params], [fun_body], env)
            return _eval(clock, env2, body, eff)
        case ETry(e1, var, e2, vl, e3):
            r = _eval(clock, env, e1, eff)
            if not isinstance(r, Result):
                return r
            if isinstance(r.res, Exc):
                ex = r.res
                env3 = append_try_vars_to_env(
                    vl, [exclass_to_value(ex.cls), ex.reason, ex.details], env)
                return _eval(clock, env3, e3, r.eff)
            return _eval(clock, insert_value(env, var, r.res), e2, r.eff)
    raise TypeError(f"not an expression: {exp!r}")


@deep
def eval_fbos_expr(clock: int, env: Environment, exp: Expression,
                   eff: Trace) -> ResultType:
    return _eval(clock, env, exp, eff)


@deep
def eval_program(exp: Expression, clock: int = DEFAULT_CLOCK) -> ResultType:
    return _eval(clock, EMPTY_ENV, exp, EMPTY_TRACE)
