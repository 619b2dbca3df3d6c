import pytest
from hypothesis import given
from hypothesis import strategies as st

from erlsem.frontend import ParseError, parse, print_expr
from erlsem.syntax import (Atom, EApp, ECall, EFun, EFunId, ELet, ELetRec,
                           ELit, ETry, EVar, FunctionIdentifier, lit)
from strategies import expressions


def test_examples(first_example, second_example):
    assert parse("'a'") == ELit(Atom("a"))
    assert first_example == ELet("X", EFun(["Y", "Z"], EVar("Y")),
                                 EApp(EVar("X"), [lit("a"), lit("b")]))
    assert second_example == ELet("X", lit(4), ELet("Y", lit(5), EApp(
        EFun(["X", "Y"], ECall("+", [EVar("X"), EVar("Y")])), [EVar("X"), EVar("Y")])))
    assert print_expr(lit(4)) == "4"


def test_operators_desugar_to_calls():
    assert parse("X + Y") == parse("call '+'(X, Y)") == ECall("+", [EVar("X"), EVar("Y")])
    assert parse("1 - 2 - 3") == ECall("-", [ECall("-", [lit(1), lit(2)]), lit(3)])
    assert parse("1 + 2 * 3") == ECall("+", [lit(1), ECall("*", [lit(2), lit(3)])])
    assert parse("(1 + 2) * 3") == ECall("*", [ECall("+", [lit(1), lit(2)]), lit(3)])
    assert parse("X - -3") == ECall("-", [EVar("X"), lit(-3)])


def test_other_forms():
    f1 = FunctionIdentifier("f", 1)
    assert parse("apply X('a','b')") == parse("apply X ('a', 'b')")
    assert parse("letrec f/1 = fun(X) -> apply f/1(X) in apply f/1(2)") == ELetRec(
        f1, ["X"], EApp(EFunId(f1), [EVar("X")]), EApp(EFunId(f1), [lit(2)]))
    t = ETry(lit(1), "V", EVar("V"), ["C", "R", "D"], EVar("C"))
    assert parse("try 1 of V -> V catch (C, R, D) -> C") == t
    assert parse("try 1 of V -> V catch C R D -> C") == t
    assert parse("call fwrite('a')") == parse("call 'fwrite'('a')") == ECall("fwrite", [lit("a")])
    assert parse("'f'/0") == EFunId(FunctionIdentifier("f", 0))
    assert parse("% comment\n  4 % trailing") == lit(4)


def test_fixed_point(first_example, second_example, diverging):
    for e in (first_example, second_example, diverging):
        text = print_expr(e)
        assert parse(text) == e
        assert print_expr(parse(text)) == text


def test_quoted_atoms_round_trip():
    e = lit("it's a \\ test")
    assert print_expr(e) == "'it\\'s a \\\\ test'"
    assert parse(print_expr(e)) == e


@pytest.mark.parametrize("src, pos", [
    ("let X = 1 in", 12),
    ("let x = 1 in x", 4),
    ("fun(X, X) -> 1", 0),
    ("letrec f/1 = fun() -> 1 in 2", 0),
    ("'unterminated", 0),
    ("''", 0),
    ("4 4", 2),
    ("apply", 5),
    ("'\\q'", 1),
    ("let X = 'é' in X", 9),
    ("try 1 of V -> V catch (C, R) -> C", 27),
    ("$", 0),
])
def test_errors(src, pos):
    with pytest.raises(ParseError) as info:
        parse(src)
    err = info.value
    assert err.span.start == pos
    assert 0 <= err.span.start <= err.span.end <= len(src.encode("utf-8"))


def test_error_offsets_are_bytes():
    src = "% é\n$"
    with pytest.raises(ParseError) as info:
        parse(src)
    assert info.value.span.start == len("% é\n".encode("utf-8"))


def test_invalid_utf8():
    with pytest.raises(ParseError):
        parse(b"let X = \xff in X")
    assert parse("let X = 1 in X".encode()) == ELet("X", lit(1), EVar("X"))


def test_deep_nesting_parses():
    src = "(" * 3000 + "1" + ")" * 3000
    assert parse(src) == lit(1)


@given(expressions)
def test_parse_print_round_trip(e):
    assert parse(print_expr(e)) == e


@given(st.binary(max_size=60))
def test_parser_is_total_on_bytes(data):
    try:
        parse(data)
    except ParseError as err:
        assert 0 <= err.span.start <= err.span.end <= len(data)


@given(st.text(alphabet="()'-+*,=/ %\nXYfa1letrcinfuaplytyocth>", max_size=60))
def test_parser_is_total_on_token_soup(src):
    try:
        print_expr(parse(src))
    except ParseError:
        pass
