"""Derivation trees of the relational big-step semantics and their checker.

A node states ``<env, expr, eff_in> => <result, eff_out>`` and names the
rule it instantiates.  Premises appear as ``children`` in premise order:
the function expression (applications), then the argument derivations, then
the body.  List premises keep their value and trace vectors in ``aux``.

The checker re-derives every side condition from scratch and shares no
rule logic with the proof search, so it can serve as an oracle for it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .._deep import deep
from ..builtins import eval_builtin
from ..domain import (Exc, Outcome, Trace, VClos, VLit, exclass_to_value,
                      make_badarity, make_badfun)
from ..env import (Environment, append_funs_to_env, append_try_vars_to_env,
                   append_vars_to_env, get_env, get_value, insert_value)
from ..syntax import (EApp, ECall, EFun, EFunId, ELet, ELetRec, ELit, ETry,
                      EVar, Expression)


class RuleName(str, enum.Enum):
    LIT = "Lit"
    VAR = "Var"
    FUNID = "FunId"
    FUN = "Fun"
    CALL = "Call"
    APP = "App"
    LET = "Let"
    LETREC = "LetRec"
    TRY = "Try"
    CATCH = "Catch"
    APP_EXC1 = "AppExc1"
    APP_EXC2 = "AppExc2"
    APP_EXC3 = "AppExc3"
    APP_EXC4 = "AppExc4"
    CALL_EXC = "CallExc"
    LET_EXC = "LetExc"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Aux:
    vals: tuple = ()
    effs: tuple = ()
    i: Optional[int] = None


@dataclass(frozen=True)
class Derivation:
    rule: RuleName
    env: Environment
    expr: Expression
    eff_in: Trace
    result: Outcome
    eff_out: Trace
    children: tuple = ()
    aux: Optional[Aux] = None

    def nodes(self):
        """Pre-order iteration over every node of the tree."""
        stack = [self]
        while stack:
            d = stack.pop()
            yield d
            stack.extend(reversed(d.children))

    def height(self) -> int:
        return 1 + max((c.height() for c in self.children), default=0)


def nth_def(effs, default: Trace, i: int) -> Trace:
    assert 0 <= i <= len(effs), "index past the end of the trace vector"
    return default if i == 0 else effs[i - 1]


def last(effs, default: Trace) -> Trace:
    return effs[-1] if effs else default


class InvalidDerivation(Exception):
    def __init__(self, path, message):
        self.path = tuple(path)
        self.message = message
        where = "/".join(map(str, self.path)) or "root"
        super().__init__(f"{where}: {message}")


class _Checker:
    def fail(self, path, msg):
        raise InvalidDerivation(path, msg)

    def expect(self, cond, path, msg):
        if not cond:
            self.fail(path, msg)

    def premise(self, d, env, expr, eff, path):
        """``d`` must be a valid derivation for configuration (env, expr, eff)."""
        self.expect(isinstance(d, Derivation), path, "premise is not a derivation")
        self.expect(d.expr == expr, path, "premise expression mismatch")
        self.expect(d.eff_in == eff, path, "premise input trace mismatch")
        self.expect(d.env == env, path, "premise environment mismatch")
        self.node(d, path)

    def all_values(self, kids, env, es, vals, effs, eff1, path):
        self.expect(len(kids) == len(es) == len(vals) == len(effs), path,
                    "list premise lengths differ")
        for j, (kid, e) in enumerate(zip(kids, es)):
            p = path + (f"arg{j}",)
            self.premise(kid, env, e, nth_def(effs, eff1, j), p)
            self.expect(not isinstance(kid.result, Exc) and kid.result == vals[j], p,
                        "argument value mismatch")
            self.expect(kid.eff_out == nth_def(effs, eff1, j + 1), p,
                        "argument output trace mismatch")

    def prefix_values(self, kids, env, es, vals, i, effs, eff1, path):
        self.expect(i is not None and 0 <= i < len(es), path, "prefix index out of range")
        self.expect(len(vals) == i and len(effs) == i, path, "prefix lengths differ from i")
        self.all_values(kids, env, es[:i], vals, effs, eff1, path)

    def aux(self, d, path):
        self.expect(d.aux is not None, path, "list rule without aux data")
        return d.aux

    def node(self, d: Derivation, path=()):
        rule, env, e, eff1 = d.rule, d.env, d.expr, d.eff_in
        kids = d.children
        exp = self.expect

        def arity(n):
            exp(len(kids) == n, path, f"{rule} expects {n} premises, got {len(kids)}")

        def ends_with(res, eff):
            exp(d.result == res, path, f"{rule} result mismatch")
            exp(d.eff_out == eff, path, f"{rule} output trace mismatch")

        match rule:
            case RuleName.LIT:
                exp(isinstance(e, ELit), path, "Lit on non-literal")
                arity(0)
                ends_with(VLit(e.lit), eff1)
            case RuleName.VAR:
                exp(isinstance(e, EVar), path, "Var on non-variable")
                arity(0)
                ends_with(get_value(env, e.name), eff1)
            case RuleName.FUNID:
                exp(isinstance(e, EFunId), path, "FunId on non-identifier")
                arity(0)
                ends_with(get_value(env, e.fid), eff1)
            case RuleName.FUN:
                exp(isinstance(e, EFun), path, "Fun on non-function")
                arity(0)
                ends_with(VClos(env, (), e.params, e.body), eff1)
            case RuleName.LETREC:
                exp(isinstance(e, ELetRec), path, "LetRec on non-letrec")
                arity(1)
                env2 = append_funs_to_env([e.fid], [e.params], [e.fun_body], env)
                self.premise(kids[0], env2, e.body, eff1, path + ("body",))
                ends_with(kids[0].result, kids[0].eff_out)
            case RuleName.LET | RuleName.LET_EXC:
                exp(isinstance(e, ELet), path, f"{rule} on non-let")
                arity(2 if rule is RuleName.LET else 1)
                first = kids[0]
                self.premise(first, env, e.value, eff1, path + ("value",))
                if rule is RuleName.LET_EXC:
                    exp(isinstance(first.result, Exc), path, "LetExc needs an exception")
                    ends_with(first.result, first.eff_out)
                else:
                    exp(not isinstance(first.result, Exc), path, "Let needs a value")
                    self.premise(kids[1], insert_value(env, e.var, first.result), e.body,
                                 first.eff_out, path + ("body",))
                    ends_with(kids[1].result, kids[1].eff_out)
            case RuleName.TRY | RuleName.CATCH:
                exp(isinstance(e, ETry), path, f"{rule} on non-try")
                arity(2)
                first, second = kids
                self.premise(first, env, e.expr, eff1, path + ("expr",))
                if rule is RuleName.TRY:
                    exp(not isinstance(first.result, Exc), path, "Try needs a value")
                    env2 = insert_value(env, e.var, first.result)
                    self.premise(second, env2, e.body, first.eff_out, path + ("body",))
                else:
                    ex = first.result
                    exp(isinstance(ex, Exc), path, "Catch needs an exception")
                    env3 = append_try_vars_to_env(
                        e.catch_vars, [exclass_to_value(ex.cls), ex.reason, ex.details], env)
                    self.premise(second, env3, e.handler, first.eff_out, path + ("handler",))
                ends_with(second.result, second.eff_out)
            case RuleName.CALL:
                exp(isinstance(e, ECall), path, "Call on non-call")
                a = self.aux(d, path)
                arity(len(e.args))
                self.all_values(kids, env, e.args, a.vals, a.effs, eff1, path)
                res, eff2 = eval_builtin(e.name, a.vals, last(a.effs, eff1))
                ends_with(res, eff2)
            case RuleName.CALL_EXC:
                exp(isinstance(e, ECall), path, "CallExc on non-call")
                a = self.aux(d, path)
                exp(a.i is not None, path, "CallExc without index")
                arity(a.i + 1)
                self.prefix_values(kids[:-1], env, e.args, a.vals, a.i, a.effs, eff1, path)
                bad = kids[-1]
                self.premise(bad, env, e.args[a.i], last(a.effs, eff1), path + (f"arg{a.i}",))
                exp(isinstance(bad.result, Exc), path, "CallExc argument must raise")
                ends_with(bad.result, bad.eff_out)
            case RuleName.APP_EXC3:
                exp(isinstance(e, EApp), path, "AppExc3 on non-application")
                arity(1)
                self.premise(kids[0], env, e.fun, eff1, path + ("fun",))
                exp(isinstance(kids[0].result, Exc), path, "AppExc3 needs an exception")
                ends_with(kids[0].result, kids[0].eff_out)
            case RuleName.APP | RuleName.APP_EXC1 | RuleName.APP_EXC2 | RuleName.APP_EXC4:
                exp(isinstance(e, EApp), path, f"{rule} on non-application")
                exp(len(kids) >= 1, path, "application without premises")
                a = self.aux(d, path)
                fd = kids[0]
                self.premise(fd, env, e.fun, eff1, path + ("fun",))
                v = fd.result
                exp(not isinstance(v, Exc), path, f"{rule} needs a function value")
                eff2 = fd.eff_out
                if rule is RuleName.APP_EXC4:
                    exp(a.i is not None, path, "AppExc4 without index")
                    arity(a.i + 2)
                    self.prefix_values(kids[1:-1], env, e.args, a.vals, a.i, a.effs, eff2, path)
                    bad = kids[-1]
                    self.premise(bad, env, e.args[a.i], last(a.effs, eff2),
                                 path + (f"arg{a.i}",))
                    exp(isinstance(bad.result, Exc), path, "AppExc4 argument must raise")
                    ends_with(bad.result, bad.eff_out)
                    return
                n = len(e.args)
                arity(n + (2 if rule is RuleName.APP else 1))
                self.all_values(kids[1:n + 1], env, e.args, a.vals, a.effs, eff2, path)
                eff3 = last(a.effs, eff2)
                if rule is RuleName.APP_EXC1:
                    exp(not isinstance(v, VClos), path, "AppExc1 needs a non-closure")
                    ends_with(make_badfun(v), eff3)
                elif rule is RuleName.APP_EXC2:
                    exp(isinstance(v, VClos), path, "AppExc2 needs a closure")
                    exp(len(v.params) != len(a.vals), path, "AppExc2 needs an arity mismatch")
                    ends_with(make_badarity(v), eff3)
                else:
                    exp(isinstance(v, VClos), path, "App needs a closure")
                    exp(len(v.params) == len(a.vals), path, "App needs matching arity")
                    body_env = append_vars_to_env(v.params, a.vals, get_env(v.env, v.ext))
                    body = kids[-1]
                    self.premise(body, body_env, v.body, eff3, path + ("body",))
                    ends_with(body.result, body.eff_out)
            case _:
                self.fail(path, f"unknown rule {rule!r}")


@deep
def explain_derivation(d: Derivation) -> Optional[InvalidDerivation]:
    """Return the first problem found in ``d``, or ``None`` if it is valid."""
    try:
        _Checker().node(d)
    except InvalidDerivation as err:
        return err
    except (TypeError, AttributeError, IndexError, ValueError, AssertionError) as err:
        return InvalidDerivation((), f"malformed derivation: {err}")
    return None


def check_derivation(d: Derivation) -> bool:
    return explain_derivation(d) is None


def check_eval_all(children, env, es, vals, effs, eff1) -> bool:
    try:
        _Checker().all_values(tuple(children), env, tuple(es), tuple(vals),
                              tuple(effs), eff1, ())
    except InvalidDerivation:
        return False
    return True


def check_eval_prefix(children, env, es, vals, i, effs, eff1) -> bool:
    try:
        _Checker().prefix_values(tuple(children), env, tuple(es), tuple(vals), i,
                                 tuple(effs), eff1, ())
    except InvalidDerivation:
        return False
    return True
