import random

from hypothesis import given
from hypothesis import strategies as st

from erlsem.builtins import BUILTINS, eval_builtin
from erlsem.domain import (Exc, ExceptionClass, SideEffect, SideEffectId,
                           VLit, atom)
from erlsem.syntax import Integer
from strategies import atom_names, values

ERROR = ExceptionClass.ERROR


def i(n):
    return VLit(Integer(n))


def test_table():
    assert set(BUILTINS) == {"+", "-", "*", "fwrite", "fread"}


def test_examples():
    assert eval_builtin("+", [i(4), i(5)], ()) == (i(9), ())
    assert eval_builtin("+", [atom("a"), i(1)], ()) == (Exc(ERROR, atom("badarith"), atom("+")), ())
    assert eval_builtin("fwrite", [atom("a")], ()) == \
        (atom("ok"), (SideEffect(SideEffectId.OUTPUT, (atom("a"),)),))
    assert eval_builtin("fread", [i(4)], ()) == (i(4), (SideEffect(SideEffectId.INPUT, (i(4),)),))
    assert eval_builtin("nope", [], ()) == (Exc(ERROR, atom("undef"), atom("nope")), ())


def test_shape_errors():
    assert eval_builtin("*", [i(1)], ())[0] == Exc(ERROR, atom("badarith"), atom("*"))
    assert eval_builtin("-", [i(1), i(2), i(3)], ())[0] == Exc(ERROR, atom("badarith"), atom("-"))
    assert eval_builtin("fwrite", [], ())[0] == Exc(ERROR, atom("badarg"), atom("fwrite"))
    assert eval_builtin("fread", [i(1), i(2)], ())[0] == Exc(ERROR, atom("badarg"), atom("fread"))


def test_arithmetic_matches_integer_oracle():
    rng = random.Random(11)
    ops = {"+": lambda a, b: a + b, "-": lambda a, b: a - b, "*": lambda a, b: a * b}
    for _ in range(1000):
        a, b = rng.randint(-2 ** 80, 2 ** 80), rng.randint(-2 ** 80, 2 ** 80)
        name = rng.choice(sorted(ops))
        assert eval_builtin(name, [i(a), i(b)], ()) == (i(ops[name](a, b)), ())


names = st.sampled_from(sorted(BUILTINS)) | atom_names
traces = st.lists(st.builds(SideEffect, st.sampled_from(SideEffectId),
                            st.lists(values, max_size=2).map(tuple))).map(tuple)


@given(names, st.lists(values, max_size=3), traces)
def test_trace_only_grows_and_is_pure(name, vals, eff):
    res, eff2 = eval_builtin(name, vals, eff)
    assert eff2[:len(eff)] == eff
    assert len(eff2) - len(eff) <= 1
    assert eval_builtin(name, vals, eff) == (res, eff2)
