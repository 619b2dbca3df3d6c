"""Canonical JSON documents for values, results, traces and derivations.

Integers are decimal strings (they are unbounded), atoms are
``{"atom": name}`` and closures carry their environment as sorted
``[key, value]`` pairs with bodies in concrete syntax.  :func:`dumps` sorts
keys, so equal inputs give byte-identical output.

Derivation nodes also record their environment, which makes a document
self-contained enough for :func:`erlsem.bigstep.check_derivation`.
"""

from __future__ import annotations

import json

from ._deep import deep
from .bigstep import (DEPTH_EXHAUSTED, NO_DERIVATION, Aux, Derivation, Found,
                      RuleName)
from .domain import (FAILURE, TIMEOUT, Exc, ExceptionClass,
                     FunctionExpression, Result, SideEffect, SideEffectId,
                     VClos, VLit)
from .env import Environment
from .frontend import parse, print_expr
from .syntax import Atom, FunctionIdentifier, Integer


class DecodeError(ValueError):
    pass


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# encoding

def encode_key(k) -> dict:
    if isinstance(k, str):
        return {"var": k}
    return {"funid": {"name": k.name, "arity": k.arity}}


def encode_env(env: Environment) -> list:
    return [[encode_key(k), encode_value(v)] for k, v in env.items()]


def encode_value(v) -> dict:
    match v:
        case VLit(Integer(n)):
            return {"int": str(n)}
        case VLit(Atom(name)):
            return {"atom": name}
        case VClos(env, ext, params, body):
            return {"closure": {
                "env": encode_env(env),
                "ext": [[encode_key(fid), {"params": list(f.params), "body": print_expr(f.body)}]
                        for fid, f in ext],
                "params": list(params),
                "body": print_expr(body),
            }}
    raise TypeError(f"not a value: {v!r}")


def encode_outcome(o) -> dict:
    if isinstance(o, Exc):
        return {"kind": "exception", "class": o.cls.value,
                "reason": encode_value(o.reason), "details": encode_value(o.details)}
    return {"kind": "value", "value": encode_value(o)}


def encode_trace(eff) -> list:
    return [{"id": s.id.value, "args": [encode_value(a) for a in s.args]} for s in eff]


def encode_result(r) -> dict:
    """Engine result document: ``result`` plus ``effects`` when terminal."""
    if isinstance(r, Found):
        r = Result(r.derivation.result, r.derivation.eff_out)
    if isinstance(r, Result):
        return {"result": encode_outcome(r.res), "effects": encode_trace(r.eff)}
    kinds = {id(TIMEOUT): "timeout", id(FAILURE): "failure",
             id(DEPTH_EXHAUSTED): "depth_exhausted", id(NO_DERIVATION): "no_derivation"}
    kind = kinds.get(id(r))
    if kind is None:
        raise TypeError(f"not an engine result: {r!r}")
    return {"result": {"kind": kind}}


@deep
def encode_derivation(d: Derivation) -> dict:
    node = {
        "rule": d.rule.value,
        "env": encode_env(d.env),
        "expr": print_expr(d.expr),
        "eff_in": encode_trace(d.eff_in),
        "result": encode_outcome(d.result),
        "eff_out": encode_trace(d.eff_out),
        "children": [encode_derivation(c) for c in d.children],
    }
    if d.aux is not None:
        aux = {"vals": [encode_value(v) for v in d.aux.vals],
               "effs": [encode_trace(e) for e in d.aux.effs]}
        if d.aux.i is not None:
            aux["i"] = d.aux.i
        node["aux"] = aux
    return node


# decoding

def _field(doc, name, kind=None):
    if not isinstance(doc, dict) or name not in doc:
        raise DecodeError(f"missing field {name!r}")
    v = doc[name]
    if kind is not None and not isinstance(v, kind):
        raise DecodeError(f"field {name!r} has the wrong type")
    return v


def _parse(src):
    if not isinstance(src, str):
        raise DecodeError("expression must be a string")
    try:
        return parse(src)
    except Exception as err:  # ParseError, but decoding never leaks others
        raise DecodeError(f"bad expression {src!r}: {err}") from err


def decode_key(doc):
    if isinstance(doc, dict) and "var" in doc:
        return _field(doc, "var", str)
    f = _field(doc, "funid", dict)
    try:
        return FunctionIdentifier(_field(f, "name", str), _field(f, "arity", int))
    except ValueError as err:
        raise DecodeError(str(err)) from err


def decode_env(doc) -> Environment:
    if not isinstance(doc, list):
        raise DecodeError("environment must be a list of pairs")
    pairs = []
    for item in doc:
        if not isinstance(item, list) or len(item) != 2:
            raise DecodeError("environment entries are [key, value] pairs")
        pairs.append((decode_key(item[0]), decode_value(item[1])))
    return Environment(pairs)


def decode_value(doc):
    if not isinstance(doc, dict) or len(doc) != 1:
        raise DecodeError(f"not a value document: {doc!r}")
    try:
        if "int" in doc:
            return VLit(Integer(int(_field(doc, "int", str))))
        if "atom" in doc:
            return VLit(Atom(_field(doc, "atom", str)))
    except ValueError as err:
        raise DecodeError(str(err)) from err
    c = _field(doc, "closure", dict)
    ext = []
    for item in _field(c, "ext", list):
        if not isinstance(item, list) or len(item) != 2:
            raise DecodeError("ext entries are [funid, function] pairs")
        fexp = FunctionExpression(tuple(_field(item[1], "params", list)),
                                  _parse(_field(item[1], "body")))
        ext.append((decode_key(item[0]), fexp))
    return VClos(decode_env(_field(c, "env")), tuple(ext),
                 tuple(_field(c, "params", list)), _parse(_field(c, "body")))


def decode_outcome(doc):
    kind = _field(doc, "kind", str)
    if kind == "value":
        return decode_value(_field(doc, "value"))
    if kind == "exception":
        try:
            cls = ExceptionClass(_field(doc, "class", str))
        except ValueError as err:
            raise DecodeError(str(err)) from err
        return Exc(cls, decode_value(_field(doc, "reason")), decode_value(_field(doc, "details")))
    raise DecodeError(f"unknown outcome kind {kind!r}")


def decode_trace(doc) -> tuple:
    if not isinstance(doc, list):
        raise DecodeError("trace must be a list")
    out = []
    for item in doc:
        try:
            sid = SideEffectId(_field(item, "id", str))
        except ValueError as err:
            raise DecodeError(str(err)) from err
        out.append(SideEffect(sid, tuple(decode_value(a) for a in _field(item, "args", list))))
    return tuple(out)


@deep
def decode_derivation(doc) -> Derivation:
    try:
        rule = RuleName(_field(doc, "rule", str))
    except ValueError as err:
        raise DecodeError(str(err)) from err
    aux = None
    if "aux" in doc:
        a = _field(doc, "aux", dict)
        i = a.get("i")
        if i is not None and not isinstance(i, int):
            raise DecodeError("aux index must be an integer")
        aux = Aux(tuple(decode_value(v) for v in _field(a, "vals", list)),
                  tuple(decode_trace(e) for e in _field(a, "effs", list)), i)
    return Derivation(
        rule=rule,
        env=decode_env(_field(doc, "env")),
        expr=_parse(_field(doc, "expr")),
        eff_in=decode_trace(_field(doc, "eff_in")),
        result=decode_outcome(_field(doc, "result")),
        eff_out=decode_trace(_field(doc, "eff_out")),
        children=tuple(decode_derivation(c) for c in _field(doc, "children", list)),
        aux=aux,
    )
