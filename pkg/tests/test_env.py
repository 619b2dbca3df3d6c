import pytest
from hypothesis import given
from hypothesis import strategies as st

from erlsem.domain import (Exc, ExceptionClass, FunctionExpression, Result,
                           VClos, VLit, atom)
from erlsem.env import (EMPTY_ENV, Environment, append_funs_to_env,
                        append_try_vars_to_env, append_vars_to_env, get_env,
                        get_value, insert_value)
from erlsem.fbs import eval_program
from erlsem.frontend import parse
from erlsem.syntax import FunctionIdentifier, Integer, lit
from strategies import fids, values, var_names

F0 = FunctionIdentifier("f", 0)
F1 = FunctionIdentifier("f", 1)
ONE, TWO = VLit(Integer(1)), VLit(Integer(2))

keys = var_names | fids


def env_of(pairs):
    env = EMPTY_ENV
    for k, v in pairs:
        env = insert_value(env, k, v)
    return env


envs = st.lists(st.tuples(keys, values), max_size=6).map(env_of)


def test_get_value():
    five = VLit(Integer(5))
    assert get_value(env_of([("X", five)]), "X") == five
    assert get_value(EMPTY_ENV, "X") == Exc(ExceptionClass.ERROR, atom("novar"), atom("X"))
    assert get_value(EMPTY_ENV, F1) == Exc(ExceptionClass.ERROR, atom("novar"), atom("f/1"))
    clos = VClos(EMPTY_ENV, (), ("X",), lit(1))
    assert get_value(env_of([(F1, clos)]), F1) == clos


def test_insert_value():
    assert insert_value(EMPTY_ENV, "X", ONE) == Environment([("X", ONE)])
    assert insert_value(env_of([("X", ONE)]), "X", TWO) == Environment([("X", TWO)])
    assert insert_value(env_of([("X", ONE)]), "Y", TWO) == Environment([("X", ONE), ("Y", TWO)])
    # persistent: the original is untouched
    base = env_of([("X", ONE)])
    insert_value(base, "X", TWO)
    assert get_value(base, "X") == ONE


def test_key_order():
    env = env_of([(F1, ONE), ("Y", ONE), (FunctionIdentifier("a", 2), ONE), ("X", ONE), (F0, ONE)])
    assert env.keys() == ["X", "Y", FunctionIdentifier("a", 2), F0, F1]


def test_append_vars_to_env():
    env = EMPTY_ENV.insert("Q", ONE)
    assert append_vars_to_env([], [], env) is env
    assert append_vars_to_env(["Y", "Z"], [atom("a"), atom("b")], EMPTY_ENV) == \
        Environment([("Y", atom("a")), ("Z", atom("b"))])
    assert append_vars_to_env(["X"], [ONE], env_of([("X", VLit(Integer(0)))])) == \
        Environment([("X", ONE)])
    with pytest.raises(AssertionError):
        append_vars_to_env(["X"], [], EMPTY_ENV)


def test_append_funs_and_get_env():
    env = EMPTY_ENV.insert("Q", ONE)
    assert append_funs_to_env([], [], [], env) == env
    ext = ((F0, FunctionExpression((), lit("a"))),)
    expected = Environment([(F0, VClos(EMPTY_ENV, ext, (), lit("a")))])
    assert append_funs_to_env([F0], [[]], [lit("a")], EMPTY_ENV) == expected
    assert get_env(env, ()) is env
    assert get_env(EMPTY_ENV, ext) == expected


def test_try_vars():
    env = EMPTY_ENV.insert("Q", ONE)
    vals = [atom("error"), atom("badfun"), VLit(Integer(5))]
    out = append_try_vars_to_env(["C", "R", "D"], vals, env)
    assert [get_value(out, k) for k in "CRD"] == vals
    assert out.restrict(env.keys()) == env
    with pytest.raises(AssertionError):
        append_try_vars_to_env(["C", "R"], vals[:2], env)


def test_recursive_group_sees_itself():
    assert eval_program(parse("letrec f/1 = fun(X) -> apply f/1(X) in 'ok'")) == \
        Result(atom("ok"), ())
    from erlsem.domain import TIMEOUT
    prog = parse("letrec f/0 = fun() -> apply f/0() in apply f/0()")
    assert all(eval_program(prog, c) is TIMEOUT for c in range(1, 101))


def test_catch_binds_class_atom():
    assert eval_program(parse("try (apply 5()) of X -> X catch C R D -> C")) == \
        Result(atom("error"), ())


@given(envs, keys, values)
def test_insert_then_get(env, k, v):
    assert get_value(insert_value(env, k, v), k) == v


@given(envs, keys, keys, values)
def test_insert_leaves_other_keys(env, k, k2, v):
    if k != k2:
        assert get_value(insert_value(env, k, v), k2) == get_value(env, k2)


@given(envs, st.lists(st.tuples(var_names, values), max_size=5))
def test_append_vars_is_a_fold(env, pairs):
    names = [n for n, _ in pairs]
    vals = [v for _, v in pairs]
    folded = env
    for n, v in pairs:
        folded = insert_value(folded, n, v)
    assert append_vars_to_env(names, vals, env) == folded


@given(envs, fids)
def test_get_env_leaves_other_keys(env, fid):
    ext = ((fid, FunctionExpression(("X",), lit(1))),)
    out = get_env(env, ext)
    others = [k for k in env.keys() if k != fid]
    assert out.restrict(others) == env.restrict(others)
    assert get_value(out, fid) == VClos(env, ext, ("X",), lit(1))
