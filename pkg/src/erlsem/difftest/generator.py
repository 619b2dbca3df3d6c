"""Random generation of closed, well-scoped programs.

Generation is budget driven: every call receives a node budget and returns
an expression no larger than it.  A light type hint (``want``) steers
sub-expressions towards integers or closures of a given arity, so most
programs compute something; a small error rate deliberately breaks the hint
to exercise every exception rule.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from ..builtins import ARITHMETIC, EFFECTFUL
from ..syntax import (ATOM_RE, Atom, EApp, ECall, EFun, EFunId, ELet, ELetRec,
                      ELit, ETry, EVar, Expression, FunctionIdentifier,
                      Integer)

VAR_POOL = ("X", "Y", "Z", "W", "V")
FUN_POOL = ("f", "g", "h")
MAX_ARITY = 3

LEAF_RATE = 0.4
MISTAKE_RATE = 0.08
RAISE_RATE = 0.06


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_size: int = 30
    max_int: int = 10
    atom_pool: tuple[str, ...] = ("a", "b", "c", "ok")
    allow_effects: bool = True

    def __post_init__(self):
        if self.max_size < 1:
            raise ValueError("max_size must be at least 1")
        if not self.atom_pool:
            raise ValueError("atom_pool must be nonempty")
        for name in self.atom_pool:
            if not ATOM_RE.match(name):
                raise ValueError(f"not an atom name: {name!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        object.__setattr__(self, "atom_pool", tuple(self.atom_pool))


# hints: None (anything), "int", or ("fun", arity)
Hint = object


@dataclass(frozen=True)
class _Scope:
    vars: dict = field(default_factory=dict)   # name -> hint
    funs: tuple = ()                           # bound FunctionIdentifiers

    def bind(self, name, hint) -> "_Scope":
        return _Scope({**self.vars, name: hint}, self.funs)

    def bind_fun(self, fid) -> "_Scope":
        return _Scope(self.vars, tuple(f for f in self.funs if f != fid) + (fid,))


def _split(rng: random.Random, total: int, k: int) -> list[int]:
    """k positive sizes summing to at most ``total`` (requires total >= k)."""
    sizes = [1] * k
    for _ in range(rng.randint(0, total - k)):
        sizes[rng.randrange(k)] += 1
    return sizes


class _Gen:
    def __init__(self, cfg: GenConfig, rng: random.Random):
        self.cfg = cfg
        self.rng = rng

    def mistake(self) -> bool:
        return self.rng.random() < MISTAKE_RATE

    # leaves

    def int_lit(self) -> ELit:
        m = self.cfg.max_int
        return ELit(Integer(self.rng.randint(-m, m)))

    def atom_lit(self) -> ELit:
        return ELit(Atom(self.rng.choice(self.cfg.atom_pool)))

    def leaf(self, sc: _Scope, want: Hint) -> Expression:
        rng = self.rng
        matching = [v for v, h in sc.vars.items() if want is None or h == want]
        if want == "int":
            if matching and rng.random() < 0.5:
                return EVar(rng.choice(matching))
            return self.int_lit()
        if isinstance(want, tuple):
            fids = [f for f in sc.funs if f.arity == want[1]]
            pool = [EVar(v) for v in matching] + [EFunId(f) for f in fids]
            if pool:
                return rng.choice(pool)
            return EFun((), self.int_lit()) if want[1] == 0 else self.int_lit()
        pool = [EVar(v) for v in sc.vars] + [EFunId(f) for f in sc.funs]
        r = rng.random()
        if pool and r < 0.45:
            return rng.choice(pool)
        return self.int_lit() if r < 0.8 else self.atom_lit()

    # compound forms

    def gen(self, sc: _Scope, budget: int, want: Hint = None,
            root: bool = False) -> Expression:
        if want is not None and self.mistake():
            want = None
        if budget <= 1 or (not root and self.rng.random() < LEAF_RATE):
            return self.leaf(sc, want)
        if self.rng.random() < RAISE_RATE:
            return self.raising(sc, budget)
        if isinstance(want, tuple):
            return self.fun_like(sc, budget, want[1])
        options = [self.let, self.call, self.app]
        if budget >= 3:
            options += [self.letrec, self.try_]
        if want is None:
            options += [self.fun, self.let]
        if self.cfg.allow_effects:
            options.append(self.effect)
        return self.rng.choice(options)(sc, budget, want)

    def raising(self, sc, budget) -> Expression:
        """A small expression that raises when evaluated."""
        rng = self.rng
        k = rng.randrange(4)
        if k == 0:
            return ECall(rng.choice(ARITHMETIC), (self.atom_lit(), self.leaf(sc, "int")))
        if k == 1:
            return EApp(rng.choice([self.int_lit(), self.atom_lit()]), ())
        if k == 2 and budget >= 3:
            return EApp(self.fun_of_arity(sc, budget - 2, 0), (self.int_lit(),))
        return ECall(rng.choice(ARITHMETIC), (self.int_lit(),))

    def params(self, n: int) -> tuple[str, ...]:
        return tuple(self.rng.sample(VAR_POOL, n))

    def fun(self, sc, budget, want=None) -> Expression:
        n = self.rng.randint(0, min(MAX_ARITY, 2))
        return self.fun_of_arity(sc, budget, n)

    def fun_of_arity(self, sc, budget, n) -> EFun:
        params = self.params(n)
        inner = sc
        for p in params:
            inner = inner.bind(p, "int")
        return EFun(params, self.gen(inner, budget - 1, "int"))

    def fun_like(self, sc, budget, n) -> Expression:
        """Something that evaluates to a closure of arity ``n``."""
        r = self.rng.random()
        if r < 0.6:
            return self.fun_of_arity(sc, budget, n)
        if r < 0.8 and budget >= 3:
            return self.let(sc, budget, ("fun", n))
        return self.leaf(sc, ("fun", n))

    def value_hint(self, e: Expression) -> Hint:
        match e:
            case ELit(Integer()):
                return "int"
            case EFun(params, _):
                return ("fun", len(params))
            case ECall(name, _) if name in ARITHMETIC:
                return "int"
        return None

    def let(self, sc, budget, want=None) -> Expression:
        if budget < 3:
            return self.leaf(sc, want)
        vb, bb = _split(self.rng, budget - 1, 2)
        var = self.rng.choice(VAR_POOL)
        value = self.gen(sc, vb, self.rng.choice([None, "int", ("fun", self.rng.randint(0, 2))]))
        return ELet(var, value, self.gen(sc.bind(var, self.value_hint(value)), bb, want))

    def letrec(self, sc, budget, want=None) -> Expression:
        rng = self.rng
        n = rng.randint(0, 2)
        fid = FunctionIdentifier(rng.choice(FUN_POOL), n)
        params = self.params(n)
        fb, bb = _split(rng, budget - 1, 2)
        inner = sc
        for p in params:
            inner = inner.bind(p, "int")
        # Recursive calls always diverge (there are no conditionals), so the
        # function body only sees itself occasionally.
        if rng.random() < 0.2:
            inner = inner.bind_fun(fid)
        if rng.random() < 0.1:
            # an unconditional self call: diverges whenever it is applied
            fun_body = EApp(EFunId(fid), tuple(self.int_lit() for _ in range(n)))
            body = EApp(EFunId(fid), tuple(self.int_lit() for _ in range(n)))
            if rng.random() < 0.5 and bb >= 2:
                body = self.gen(sc.bind_fun(fid), bb, want)
            return ELetRec(fid, params, fun_body, body)
        fun_body = self.gen(inner, fb, "int")
        return ELetRec(fid, params, fun_body, self.gen(sc.bind_fun(fid), bb, want))

    def call(self, sc, budget, want=None) -> Expression:
        rng = self.rng
        names = list(ARITHMETIC)
        if self.cfg.allow_effects and want != "int":
            names += list(EFFECTFUL) * 3
        elif self.cfg.allow_effects:
            names.append("fread")
        name = rng.choice(names)
        n = 2 if name in ARITHMETIC else 1
        if self.mistake():
            n = rng.randint(0, MAX_ARITY)
        n = min(n, budget - 1)
        sizes = _split(rng, budget - 1, n) if n else []
        arg_want = "int" if name in ARITHMETIC or want == "int" else None
        return ECall(name, tuple(self.gen(sc, s, arg_want) for s in sizes))

    def effect(self, sc, budget, want=None) -> Expression:
        name = "fread" if want == "int" else self.rng.choice(EFFECTFUL)
        return ECall(name, (self.gen(sc, budget - 1, want),))

    def app(self, sc, budget, want=None) -> Expression:
        rng = self.rng
        n = rng.randint(0, MAX_ARITY)
        n = min(n, budget - 2)
        hb, *sizes = _split(rng, budget - 1, n + 1)
        arity = n
        if self.mistake():
            arity = rng.randint(0, MAX_ARITY)
        if rng.random() < 0.1:
            head = self.raising(sc, hb)
        elif rng.random() < 0.05:
            head = self.gen(sc, hb, rng.choice(["int", None]))
        else:
            head = self.fun_like(sc, hb, arity)
        return EApp(head, tuple(self.raising(sc, s) if rng.random() < 0.06
                                else self.gen(sc, s, "int") for s in sizes))

    def try_(self, sc, budget, want=None) -> Expression:
        rng = self.rng
        if budget < 4:
            return self.let(sc, budget, want)
        eb, bb, hb = _split(rng, budget - 1, 3)
        var = rng.choice(VAR_POOL)
        catch_vars = self.params(3)
        if rng.random() < 0.25:
            e1 = self.raising(sc, eb)
        else:
            e1 = self.gen(sc, eb, rng.choice([None, "int"]))
        body = self.gen(sc.bind(var, self.value_hint(e1)), bb, want)
        hsc = sc
        for v in catch_vars:
            hsc = hsc.bind(v, None)
        return ETry(e1, var, body, catch_vars, self.gen(hsc, hb, want))


def generate(cfg: GenConfig, n: int, want: Optional[str] = None) -> list[Expression]:
    """``n`` closed programs, each of size at most ``cfg.max_size``.

    The result depends only on ``cfg`` and ``n``.  ``want="int"`` biases the
    programs towards integer results (useful for the swap law).
    """
    rng = random.Random(cfg.seed)
    g = _Gen(cfg, rng)
    return [g.gen(_Scope(), rng.randint(1, cfg.max_size), want, root=True)
            for _ in range(n)]
