import pytest
from hypothesis import given

from erlsem.domain import (EMPTY_TRACE, TIMEOUT, Exc, ExceptionClass,
                           LTIMEOUT, VClos, VLit, atom, exclass_to_value,
                           make_badarity, make_badfun, value_equal)
from erlsem.env import EMPTY_ENV
from erlsem.syntax import EVar, Integer, lit
from strategies import values

ERROR = ExceptionClass.ERROR


def test_badfun_and_badarity():
    five = VLit(Integer(5))
    assert make_badfun(five) == Exc(ERROR, atom("badfun"), five)
    assert make_badfun(atom("a")) == Exc(ERROR, atom("badfun"), atom("a"))
    clos = VClos(EMPTY_ENV, (), ("Y",), EVar("Y"))
    assert make_badfun(clos).details == clos
    assert make_badarity(clos) == Exc(ERROR, atom("badarity"), clos)
    nullary = VClos(EMPTY_ENV, (), (), lit("a"))
    assert make_badarity(nullary) == Exc(ERROR, atom("badarity"), nullary)
    with pytest.raises(AssertionError):
        make_badarity(five)


def test_exclass_to_value():
    assert exclass_to_value(ExceptionClass.ERROR) == atom("error")
    assert exclass_to_value(ExceptionClass.THROW) == atom("throw")
    assert exclass_to_value(ExceptionClass.EXIT) == atom("exit")
    images = {exclass_to_value(c) for c in ExceptionClass}
    assert len(images) == len(ExceptionClass) == 3


def test_value_equal_examples():
    assert value_equal(VLit(Integer(9)), VLit(Integer(9)))
    assert not value_equal(atom("a"), atom("b"))
    one, two = VLit(Integer(1)), VLit(Integer(2))
    env_xy = EMPTY_ENV.insert("X", one).insert("Y", two)
    env_yx = EMPTY_ENV.insert("Y", two).insert("X", one)
    c1 = VClos(env_xy, (), ("Z",), EVar("X"))
    c2 = VClos(env_yx, (), ("Z",), EVar("X"))
    assert value_equal(c1, c2)
    assert hash(c1) == hash(c2)
    assert not value_equal(c1, VClos(env_xy, (), ("W",), EVar("X")))


@given(values, values, values)
def test_value_equal_is_an_equivalence(a, b, c):
    assert value_equal(a, a)
    assert value_equal(a, b) == value_equal(b, a)
    if value_equal(a, b) and value_equal(b, c):
        assert value_equal(a, c)


def test_markers_are_singletons():
    import pickle
    assert pickle.loads(pickle.dumps(TIMEOUT)) is TIMEOUT
    assert TIMEOUT is not LTIMEOUT
    assert EMPTY_TRACE == ()
