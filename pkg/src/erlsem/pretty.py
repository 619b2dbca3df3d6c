"""Pretty-big-step semantics over source and intermediate terms.

Each rule has at most two premises.  Intermediate terms record which
sub-terms were already evaluated; they never carry side-effect traces, so
the trace is threaded through the judgment exactly as in the source rules.

Applications and lists follow the ``AApp1``/``AApp2``/``AList`` scheme.
``call``, ``let`` and ``try`` are split the same way through ``ACall``,
``ALet`` and ``ATry``.  Evaluation is syntax-directed; only the last step of
an application chooses between three rules, by closure-ness and arity.

A depth budget is decremented on every rule application, and exhausting
it yields ``TIMEOUT`` (``LTIMEOUT`` for lists).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from ._deep import deep
from .builtins import eval_builtin
from .domain import (EMPTY_TRACE, LTIMEOUT, TIMEOUT, Exc, ListOutcome,
                     LResult, Outcome, Result, ResultListType, ResultType,
                     Trace, Value, VClos, VLit, exclass_to_value,
                     make_badarity, make_badfun)
from .env import (EMPTY_ENV, Environment, append_funs_to_env,
                  append_try_vars_to_env, append_vars_to_env, get_env,
                  get_value, insert_value, make_closure)
from .syntax import (EApp, ECall, EFun, EFunId, ELet, ELetRec, ELit, ETry,
                     EVar, Expression, Var)


class PrettyRule(str, enum.Enum):
    LIT = "Lit"
    VAR = "Var"
    FUNID = "FunId"
    FUN = "Fun"
    LETREC = "LetRec"
    APP1 = "App1"
    EXC_APP1 = "ExcApp1"
    FIN_APP1 = "FinApp1"
    EXC_APP2 = "ExcApp2"
    FIN_APP2 = "FinApp2"
    EXC_APP2_BADFUN = "ExcApp2Badfun"
    EXC_APP2_BADARITY = "ExcApp2Badarity"
    FIN_LIST = "FinList"
    EXC_LIST = "ExcList"
    STEP_LIST = "StepList"
    CALL = "Call"
    FIN_CALL = "FinCall"
    EXC_CALL = "ExcCall"
    LET = "Let"
    FIN_LET = "FinLet"
    EXC_LET = "ExcLet"
    TRY = "Try"
    FIN_TRY = "FinTry"
    CATCH = "Catch"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class AApp1:
    res: Outcome
    args: tuple[Expression, ...]


@dataclass(frozen=True)
class AApp2:
    fun: Value
    res: ListOutcome


@dataclass(frozen=True)
class ACall:
    name: str
    res: ListOutcome


@dataclass(frozen=True)
class ALet:
    var: Var
    res: Outcome
    body: Expression


@dataclass(frozen=True)
class ATry:
    res: Outcome
    var: Var
    body: Expression
    catch_vars: tuple[Var, Var, Var]
    handler: Expression


@dataclass(frozen=True)
class AList:
    rest: tuple[Expression, ...]
    res: ListOutcome


AuxExpression = Union[AApp1, AApp2, ACall, ALet, ATry]
PrettyTerm = Union[Expression, AuxExpression]


def mk_result(res: Outcome, vals: tuple) -> ListOutcome:
    if isinstance(res, Exc):
        return res
    return tuple(vals) + (res,)


class _Evaluator:
    def __init__(self):
        self.trace: list[PrettyRule] = []

    def apply(self, rule: PrettyRule):
        self.trace.append(rule)

    def eval(self, env: Environment, t, eff: Trace, depth: int) -> ResultType:
        if depth <= 0:
            return TIMEOUT
        d = depth - 1
        match t:
            # source terms
            case ELit(l):
                self.apply(PrettyRule.LIT)
                return Result(VLit(l), eff)
            case EVar(name):
                self.apply(PrettyRule.VAR)
                return Result(get_value(env, name), eff)
            case EFunId(fid):
                self.apply(PrettyRule.FUNID)
                return Result(get_value(env, fid), eff)
            case EFun(params, body):
                self.apply(PrettyRule.FUN)
                return Result(make_closure(env, params, body), eff)
            case ELetRec(fid, params, fun_body, body):
                self.apply(PrettyRule.LETREC)
                return self.eval(append_funs_to_env([fid], [params], [fun_body], env),
                                 body, eff, d)
            case EApp(fexp, args):
                self.apply(PrettyRule.APP1)
                r = self.eval(env, fexp, eff, d)
                if r is TIMEOUT:
                    return r
                return self.eval(env, AApp1(r.res, args), r.eff, d)
            case ECall(name, args):
                self.apply(PrettyRule.CALL)
                lr = self.eval_list(env, AList(args, ()), eff, d)
                if lr is LTIMEOUT:
                    return TIMEOUT
                return self.eval(env, ACall(name, lr.res), lr.eff, d)
            case ELet(var, value, body):
                self.apply(PrettyRule.LET)
                r = self.eval(env, value, eff, d)
                if r is TIMEOUT:
                    return r
                return self.eval(env, ALet(var, r.res, body), r.eff, d)
            case ETry(e1, var, e2, vl, e3):
                self.apply(PrettyRule.TRY)
                r = self.eval(env, e1, eff, d)
                if r is TIMEOUT:
                    return r
                return self.eval(env, ATry(r.res, var, e2, vl, e3), r.eff, d)

            # intermediate terms
            case AApp1(Exc() as ex, _):
                self.apply(PrettyRule.EXC_APP1)
                return Result(ex, eff)
            case AApp1(v, args):
                self.apply(PrettyRule.FIN_APP1)
                lr = self.eval_list(env, AList(args, ()), eff, d)
                if lr is LTIMEOUT:
                    return TIMEOUT
                return self.eval(env, AApp2(v, lr.res), lr.eff, d)
            case AApp2(_, Exc() as ex):
                self.apply(PrettyRule.EXC_APP2)
                return Result(ex, eff)
            case AApp2(VClos() as clos, vals) if len(clos.params) == len(vals):
                self.apply(PrettyRule.FIN_APP2)
                body_env = append_vars_to_env(clos.params, vals, get_env(clos.env, clos.ext))
                return self.eval(body_env, clos.body, eff, d)
            case AApp2(VClos() as clos, _):
                self.apply(PrettyRule.EXC_APP2_BADARITY)
                return Result(make_badarity(clos), eff)
            case AApp2(v, _):
                self.apply(PrettyRule.EXC_APP2_BADFUN)
                return Result(make_badfun(v), eff)
            case ACall(_, Exc() as ex):
                self.apply(PrettyRule.EXC_CALL)
                return Result(ex, eff)
            case ACall(name, vals):
                self.apply(PrettyRule.FIN_CALL)
                res, eff2 = eval_builtin(name, vals, eff)
                return Result(res, eff2)
            case ALet(_, Exc() as ex, _):
                self.apply(PrettyRule.EXC_LET)
                return Result(ex, eff)
            case ALet(var, v, body):
                self.apply(PrettyRule.FIN_LET)
                return self.eval(insert_value(env, var, v), body, eff, d)
            case ATry(Exc() as ex, _, _, vl, e3):
                self.apply(PrettyRule.CATCH)
                env3 = append_try_vars_to_env(
                    vl, [exclass_to_value(ex.cls), ex.reason, ex.details], env)
                return self.eval(env3, e3, eff, d)
            case ATry(v, var, e2, _, _):
                self.apply(PrettyRule.FIN_TRY)
                return self.eval(insert_value(env, var, v), e2, eff, d)
        raise TypeError(f"not a pretty-big-step term: {t!r}")

    def eval_list(self, env: Environment, al: AList, eff: Trace,
                  depth: int) -> ResultListType:
        if depth <= 0:
            return LTIMEOUT
        d = depth - 1
        if isinstance(al.res, Exc):
            self.apply(PrettyRule.EXC_LIST)
            return LResult(al.res, eff)
        if not al.rest:
            self.apply(PrettyRule.FIN_LIST)
            return LResult(al.res, eff)
        self.apply(PrettyRule.STEP_LIST)
        head, rest = al.rest[0], al.rest[1:]
        r = self.eval(env, head, eff, d)
        if r is TIMEOUT:
            return LTIMEOUT
        return self.eval_list(env, AList(rest, mk_result(r.res, al.res)), r.eff, d)


@deep
def eval_pretty(env: Environment, t: PrettyTerm, eff: Trace,
                depth_limit: int) -> tuple[ResultType, list[PrettyRule]]:
    ev = _Evaluator()
    return ev.eval(env, t, eff, depth_limit), ev.trace


@deep
def eval_list_pretty(env: Environment, al: AList, eff: Trace,
                     depth_limit: int) -> tuple[ResultListType, list[PrettyRule]]:
    ev = _Evaluator()
    return ev.eval_list(env, al, eff, depth_limit), ev.trace


def run_pretty(exp: Expression, depth_limit: int = 1000):
    """Evaluate a closed program from the empty environment and trace."""
    return eval_pretty(EMPTY_ENV, exp, EMPTY_TRACE, depth_limit)
