"""Cross-engine comparison and per-program property checks."""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .._deep import deep
from ..bigstep import (DEFAULT_ORDER, DEPTH_EXHAUSTED, Found, ProofSearch,
                       RuleName, SearchOutcome, enumerate_derivations, search)
from ..domain import EMPTY_TRACE, TIMEOUT, Result, ResultType, value_equal
from ..env import EMPTY_ENV
from ..fbs import eval_fbos_expr
from ..pretty import PrettyRule, eval_pretty
from ..syntax import Expression


class Verdict(enum.Enum):
    AGREE = "agree"
    ALL_DIVERGED = "all_diverged"
    DISAGREE = "disagree"


@dataclass(frozen=True)
class Outcomes:
    fbs: ResultType
    pretty: tuple[ResultType, list[PrettyRule]]
    bigstep: SearchOutcome


@dataclass(frozen=True)
class DiffReport:
    program: Expression
    outcomes: Outcomes
    verdict: Verdict
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.DISAGREE


def _terminal(r):
    """(result, trace) of a terminal outcome, or None if it diverged."""
    if isinstance(r, Found):
        return r.derivation.result, r.derivation.eff_out
    if isinstance(r, Result):
        return r.res, r.eff
    return None


def agree(outcomes: Outcomes) -> tuple[Verdict, str]:
    fbs, (pretty, _), big = outcomes.fbs, outcomes.pretty, outcomes.bigstep
    if fbs is TIMEOUT and pretty is TIMEOUT and big is DEPTH_EXHAUSTED:
        return Verdict.ALL_DIVERGED, ""
    named = {"fbs": _terminal(fbs), "pretty": _terminal(pretty), "bigstep": _terminal(big)}
    stuck = [k for k, v in named.items() if v is None]
    if stuck:
        return Verdict.DISAGREE, f"no terminal result from {', '.join(stuck)}"
    ref_res, ref_eff = named["fbs"]
    for name in ("pretty", "bigstep"):
        res, eff = named[name]
        if not value_equal(res, ref_res):
            return Verdict.DISAGREE, f"{name} result {res!r} != fbs result {ref_res!r}"
        if eff != ref_eff:
            return Verdict.DISAGREE, f"{name} trace {eff!r} != fbs trace {ref_eff!r}"
    return Verdict.AGREE, ""


@deep
def run_all_engines(e: Expression, fuel: int = 1000, depth: int = 1000) -> Outcomes:
    return Outcomes(
        fbs=eval_fbos_expr(fuel, EMPTY_ENV, e, EMPTY_TRACE),
        pretty=eval_pretty(EMPTY_ENV, e, EMPTY_TRACE, depth),
        bigstep=search(EMPTY_ENV, e, EMPTY_TRACE, depth),
    )


def diff(e: Expression, fuel: int = 1000, depth: int = 1000) -> DiffReport:
    outcomes = run_all_engines(e, fuel, depth)
    verdict, detail = agree(outcomes)
    return DiffReport(e, outcomes, verdict, detail)


@deep
def check_monotone(e: Expression, max_clock: int, window: Optional[int] = None) -> bool:
    """Once some clock yields a Result, every larger clock yields the same one.

    Larger clocks are checked up to ``max_clock``, or only ``window`` steps
    past the first success when a window is given.
    """
    if max_clock < 1:
        raise ValueError("max_clock must be at least 1")
    first = None
    for c in range(1, max_clock + 1):
        r = eval_fbos_expr(c, EMPTY_ENV, e, EMPTY_TRACE)
        if isinstance(r, Result):
            first = (c, r)
            break
    if first is None:
        return True
    c0, r0 = first
    top = max_clock if window is None else c0 + window
    for c in range(c0 + 1, top + 1):
        if eval_fbos_expr(c, EMPTY_ENV, e, EMPTY_TRACE) != r0:
            return False
    return True


def _classify(outcome: SearchOutcome):
    if isinstance(outcome, Found):
        return outcome.derivation.result, outcome.derivation.eff_out
    return outcome


@deep
def check_determinism(e: Expression, orders: int = 10, depth: int = 1000,
                      seed: int = 0) -> bool:
    """Proof search under random rule orders always reaches the same verdict."""
    if orders < 2:
        raise ValueError("orders must be at least 2")
    rng = random.Random(seed)
    seen = None
    for k in range(orders):
        order = list(DEFAULT_ORDER)
        if k:
            rng.shuffle(order)
        got = _classify(search(EMPTY_ENV, e, EMPTY_TRACE, depth, order))
        if seen is None:
            seen = got
        elif got != seen:
            return False
    return True


@deep
def exclusive_results(e: Expression, depth: int = 1000) -> bool:
    """No configuration reached by exhaustive search has two distinct results."""
    _, s = enumerate_derivations(EMPTY_ENV, e, EMPTY_TRACE, depth)
    for _env, _expr, _eff, found in s.configurations():
        if len({(d.result, d.eff_out) for d in found}) > 1:
            return False
    return True


def rule_coverage(programs, depth: int = 1000) -> Counter:
    """How often each big-step rule occurs across the programs' derivations."""
    counts = Counter({r: 0 for r in RuleName})
    for e in programs:
        r = search(EMPTY_ENV, e, EMPTY_TRACE, depth)
        if isinstance(r, Found):
            counts.update(d.rule for d in r.derivation.nodes())
    return counts


def search_session(e: Expression, depth: int = 1000) -> ProofSearch:
    s = ProofSearch()
    deep(s.derive)(EMPTY_ENV, e, EMPTY_TRACE, depth)
    return s
