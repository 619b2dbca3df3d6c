"""Evaluation environments and the helpers the semantics rules use.

Keys are either variable names (``str``) or :class:`FunctionIdentifier`.
Environments are persistent: every update returns a new object.
"""

from __future__ import annotations

from typing import Iterable, Union

from .domain import (Exc, ExceptionClass, FunctionExpression, Outcome, VClos,
                     Value, atom)
from .syntax import Expression, FunctionIdentifier, Var

EnvKey = Union[str, FunctionIdentifier]


def key_order(k: EnvKey):
    """Variables first, then function identifiers; lexicographic within."""
    if isinstance(k, str):
        return (0, k, 0)
    return (1, k.name, k.arity)


def render_key(k: EnvKey) -> str:
    return k if isinstance(k, str) else str(k)


class Environment:
    __slots__ = ("_map", "_hash")

    def __init__(self, bindings=()):
        self._map = dict(bindings)
        self._hash = None

    @classmethod
    def _wrap(cls, m: dict) -> Environment:
        env = cls.__new__(cls)
        env._map = m
        env._hash = None
        return env

    def get(self, key: EnvKey):
        return self._map.get(key)

    def __contains__(self, key):
        return key in self._map

    def __len__(self):
        return len(self._map)

    def keys(self) -> list[EnvKey]:
        return sorted(self._map, key=key_order)

    def items(self) -> list[tuple[EnvKey, Value]]:
        return [(k, self._map[k]) for k in self.keys()]

    def __iter__(self):
        return iter(self.keys())

    def insert(self, key: EnvKey, value: Value) -> Environment:
        m = dict(self._map)
        m[key] = value
        return Environment._wrap(m)

    def restrict(self, keys: Iterable[EnvKey]) -> Environment:
        keep = set(keys)
        return Environment._wrap({k: v for k, v in self._map.items() if k in keep})

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Environment):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{render_key(k)}: {v!r}" for k, v in self.items())
        return f"Environment({{{inner}}})"


EMPTY_ENV = Environment()


def get_value(env: Environment, key: EnvKey) -> Outcome:
    v = env.get(key)
    if v is None:
        return Exc(ExceptionClass.ERROR, atom("novar"), atom(render_key(key)))
    return v


def insert_value(env: Environment, key: EnvKey, value: Value) -> Environment:
    return env.insert(key, value)


def append_vars_to_env(names, values, env: Environment) -> Environment:
    assert len(names) == len(values), "variable/value count mismatch"
    if not names:
        return env
    m = dict(env._map)
    for name, value in zip(names, values):
        m[name] = value
    return Environment._wrap(m)


def append_try_vars_to_env(names, values, env: Environment) -> Environment:
    assert len(names) == len(values) == 3, "try binds exactly three names"
    return append_vars_to_env(names, values, env)


def append_funs_to_env(fids, paramss, bodies, env: Environment) -> Environment:
    assert len(fids) == len(paramss) == len(bodies)
    ext = tuple(
        (fid, FunctionExpression(tuple(ps), body))
        for fid, ps, body in zip(fids, paramss, bodies))
    m = dict(env._map)
    for fid, fexp in ext:
        m[fid] = VClos(env, ext, fexp.params, fexp.body)
    return Environment._wrap(m)


def get_env(ref: Environment, ext) -> Environment:
    """Rebind the recursive group ``ext`` over ``ref`` (unfolds the knot)."""
    if not ext:
        return ref
    m = dict(ref._map)
    for fid, fexp in ext:
        m[fid] = VClos(ref, ext, fexp.params, fexp.body)
    return Environment._wrap(m)


def make_closure(env: Environment, params, body: Expression) -> VClos:
    return VClos(env, (), tuple(params), body)


__all__ = [
    "EMPTY_ENV", "EnvKey", "Environment", "Var", "append_funs_to_env",
    "append_try_vars_to_env", "append_vars_to_env", "get_env", "get_value",
    "insert_value", "key_order", "make_closure", "render_key",
]
