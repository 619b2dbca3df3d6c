"""Backtracking proof search for the relational big-step semantics.

For each expression head the applicable rules are tried in a fixed order
(value rules first, then the exception rules).  List premises are not
guessed: argument values and traces are produced left to right by searching
each argument in turn.

Sub-searches are memoised per configuration, so alternatives that share
premises (the five application rules all start by evaluating the function
expression) do not redo the work.  The memo is keyed on object identity,
which is sound because the table keeps every key object alive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .._deep import deep
from ..builtins import eval_builtin
from ..domain import (EMPTY_TRACE, Exc, Trace, VClos, VLit, exclass_to_value,
                      make_badarity, make_badfun)
from ..env import (EMPTY_ENV, Environment, append_funs_to_env,
                   append_try_vars_to_env, append_vars_to_env, get_env,
                   get_value, insert_value)
from ..syntax import (EApp, ECall, EFun, EFunId, ELet, ELetRec, ELit, ETry,
                      EVar, Expression)
from .derivation import Aux, Derivation, RuleName

R = RuleName

DEFAULT_ORDER: tuple[RuleName, ...] = (
    R.LIT, R.VAR, R.FUNID, R.FUN, R.CALL, R.APP, R.LET, R.LETREC, R.TRY,
    R.CATCH, R.APP_EXC1, R.APP_EXC2, R.APP_EXC3, R.APP_EXC4, R.CALL_EXC,
    R.LET_EXC,
)

RULES_FOR = {
    ELit: {R.LIT},
    EVar: {R.VAR},
    EFunId: {R.FUNID},
    EFun: {R.FUN},
    ELetRec: {R.LETREC},
    ECall: {R.CALL, R.CALL_EXC},
    EApp: {R.APP, R.APP_EXC1, R.APP_EXC2, R.APP_EXC3, R.APP_EXC4},
    ELet: {R.LET, R.LET_EXC},
    ETry: {R.TRY, R.CATCH},
}


@dataclass(frozen=True)
class Found:
    derivation: Derivation


class SearchStatus(enum.Enum):
    DEPTH_EXHAUSTED = "depth_exhausted"
    NO_DERIVATION = "no_derivation"


DEPTH_EXHAUSTED = SearchStatus.DEPTH_EXHAUSTED
NO_DERIVATION = SearchStatus.NO_DERIVATION

SearchOutcome = Union[Found, SearchStatus]


class ProofSearch:
    """One search session.

    With ``exhaustive=True`` every derivation of every configuration is
    enumerated instead of stopping at the first one.
    """

    def __init__(self, rule_order: Optional[Sequence[RuleName]] = None,
                 exhaustive: bool = False):
        order = tuple(RuleName(r) for r in (rule_order or DEFAULT_ORDER))
        self.candidates = {
            cls: tuple(r for r in order if r in rules) for cls, rules in RULES_FOR.items()}
        self.exhaustive = exhaustive
        self.hit_limit = False
        self.memo: dict = {}

    def derive(self, env: Environment, e: Expression, eff: Trace,
               depth: int) -> list[Derivation]:
        if depth <= 0:
            self.hit_limit = True
            return []
        key = (id(env), id(e), id(eff), depth)
        entry = self.memo.get(key)
        if entry is not None:
            return entry[0]
        found: list[Derivation] = []
        for rule in self.candidates[type(e)]:
            for d in _RULES[rule](self, env, e, eff, depth - 1):
                found.append(d)
                if not self.exhaustive:
                    break
            if found and not self.exhaustive:
                break
        self.memo[key] = (found, env, e, eff)
        return found

    def configurations(self):
        """(env, expr, eff_in, derivations) for every searched configuration."""
        for found, env, e, eff in self.memo.values():
            yield env, e, eff, found


def _values(s: ProofSearch, env, es, eff, d) -> Iterator[tuple]:
    """All ways the list ``es`` evaluates to values: (vals, effs, derivations)."""
    if not es:
        yield (), (), ()
        return
    for k in s.derive(env, es[0], eff, d):
        if isinstance(k.result, Exc):
            continue
        for vals, effs, kids in _values(s, env, es[1:], k.eff_out, d):
            yield (k.result,) + vals, (k.eff_out,) + effs, (k,) + kids


def _raising(s: ProofSearch, env, es, eff, d) -> Iterator[tuple]:
    """Prefixes that evaluate to values followed by an element that raises."""
    for i in range(len(es)):
        for vals, effs, kids in _values(s, env, es[:i], eff, d):
            for bad in s.derive(env, es[i], effs[-1] if effs else eff, d):
                if isinstance(bad.result, Exc):
                    yield i, vals, effs, kids, bad


def _lit(s, env, e, eff, d):
    yield Derivation(R.LIT, env, e, eff, VLit(e.lit), eff)


def _var(s, env, e, eff, d):
    yield Derivation(R.VAR, env, e, eff, get_value(env, e.name), eff)


def _funid(s, env, e, eff, d):
    yield Derivation(R.FUNID, env, e, eff, get_value(env, e.fid), eff)


def _fun(s, env, e, eff, d):
    yield Derivation(R.FUN, env, e, eff, VClos(env, (), e.params, e.body), eff)


def _letrec(s, env, e, eff, d):
    env2 = append_funs_to_env([e.fid], [e.params], [e.fun_body], env)
    for b in s.derive(env2, e.body, eff, d):
        yield Derivation(R.LETREC, env, e, eff, b.result, b.eff_out, (b,))


def _call(s, env, e, eff, d):
    for vals, effs, kids in _values(s, env, e.args, eff, d):
        res, eff2 = eval_builtin(e.name, vals, effs[-1] if effs else eff)
        yield Derivation(R.CALL, env, e, eff, res, eff2, kids, Aux(vals, effs))


def _call_exc(s, env, e, eff, d):
    for i, vals, effs, kids, bad in _raising(s, env, e.args, eff, d):
        yield Derivation(R.CALL_EXC, env, e, eff, bad.result, bad.eff_out,
                         kids + (bad,), Aux(vals, effs, i))


def _fun_values(s, env, e, eff, d):
    for f in s.derive(env, e.fun, eff, d):
        if not isinstance(f.result, Exc):
            yield f


def _app(s, env, e, eff, d):
    for f in _fun_values(s, env, e, eff, d):
        clos = f.result
        if not isinstance(clos, VClos):
            continue
        for vals, effs, kids in _values(s, env, e.args, f.eff_out, d):
            if len(clos.params) != len(vals):
                continue
            body_env = append_vars_to_env(clos.params, vals, get_env(clos.env, clos.ext))
            start = effs[-1] if effs else f.eff_out
            for b in s.derive(body_env, clos.body, start, d):
                yield Derivation(R.APP, env, e, eff, b.result, b.eff_out,
                                 (f,) + kids + (b,), Aux(vals, effs))


def _app_exc1(s, env, e, eff, d):
    for f in _fun_values(s, env, e, eff, d):
        if isinstance(f.result, VClos):
            continue
        for vals, effs, kids in _values(s, env, e.args, f.eff_out, d):
            yield Derivation(R.APP_EXC1, env, e, eff, make_badfun(f.result),
                             effs[-1] if effs else f.eff_out, (f,) + kids, Aux(vals, effs))


def _app_exc2(s, env, e, eff, d):
    for f in _fun_values(s, env, e, eff, d):
        clos = f.result
        if not isinstance(clos, VClos):
            continue
        for vals, effs, kids in _values(s, env, e.args, f.eff_out, d):
            if len(clos.params) == len(vals):
                continue
            yield Derivation(R.APP_EXC2, env, e, eff, make_badarity(clos),
                             effs[-1] if effs else f.eff_out, (f,) + kids, Aux(vals, effs))


def _app_exc3(s, env, e, eff, d):
    for f in s.derive(env, e.fun, eff, d):
        if isinstance(f.result, Exc):
            yield Derivation(R.APP_EXC3, env, e, eff, f.result, f.eff_out, (f,))


def _app_exc4(s, env, e, eff, d):
    for f in _fun_values(s, env, e, eff, d):
        for i, vals, effs, kids, bad in _raising(s, env, e.args, f.eff_out, d):
            yield Derivation(R.APP_EXC4, env, e, eff, bad.result, bad.eff_out,
                             (f,) + kids + (bad,), Aux(vals, effs, i))


def _let(s, env, e, eff, d):
    for v in s.derive(env, e.value, eff, d):
        if isinstance(v.result, Exc):
            continue
        for b in s.derive(insert_value(env, e.var, v.result), e.body, v.eff_out, d):
            yield Derivation(R.LET, env, e, eff, b.result, b.eff_out, (v, b))


def _let_exc(s, env, e, eff, d):
    for v in s.derive(env, e.value, eff, d):
        if isinstance(v.result, Exc):
            yield Derivation(R.LET_EXC, env, e, eff, v.result, v.eff_out, (v,))


def _try(s, env, e, eff, d):
    for v in s.derive(env, e.expr, eff, d):
        if isinstance(v.result, Exc):
            continue
        for b in s.derive(insert_value(env, e.var, v.result), e.body, v.eff_out, d):
            yield Derivation(R.TRY, env, e, eff, b.result, b.eff_out, (v, b))


def _catch(s, env, e, eff, d):
    for v in s.derive(env, e.expr, eff, d):
        ex = v.result
        if not isinstance(ex, Exc):
            continue
        env3 = append_try_vars_to_env(
            e.catch_vars, [exclass_to_value(ex.cls), ex.reason, ex.details], env)
        for h in s.derive(env3, e.handler, v.eff_out, d):
            yield Derivation(R.CATCH, env, e, eff, h.result, h.eff_out, (v, h))


_RULES = {
    R.LIT: _lit, R.VAR: _var, R.FUNID: _funid, R.FUN: _fun, R.LETREC: _letrec,
    R.CALL: _call, R.CALL_EXC: _call_exc, R.APP: _app, R.APP_EXC1: _app_exc1,
    R.APP_EXC2: _app_exc2, R.APP_EXC3: _app_exc3, R.APP_EXC4: _app_exc4,
    R.LET: _let, R.LET_EXC: _let_exc, R.TRY: _try, R.CATCH: _catch,
}


@deep
def search(env: Environment, expr: Expression, eff_in: Trace, depth_limit: int,
           rule_order: Optional[Sequence[RuleName]] = None) -> SearchOutcome:
    if depth_limit < 1:
        raise ValueError("depth_limit must be at least 1")
    s = ProofSearch(rule_order)
    found = s.derive(env, expr, eff_in, depth_limit)
    if found:
        return Found(found[0])
    return DEPTH_EXHAUSTED if s.hit_limit else NO_DERIVATION


def search_program(expr: Expression, depth_limit: int = 1000,
                   rule_order: Optional[Sequence[RuleName]] = None) -> SearchOutcome:
    return search(EMPTY_ENV, expr, EMPTY_TRACE, depth_limit, rule_order)


@deep
def enumerate_derivations(env: Environment, expr: Expression, eff_in: Trace,
                          depth_limit: int) -> tuple[list[Derivation], ProofSearch]:
    """Every derivation of the configuration within the depth limit."""
    s = ProofSearch(exhaustive=True)
    return s.derive(env, expr, eff_in, depth_limit), s
