"""Hypothesis strategies for syntax trees and values."""

from hypothesis import strategies as st

from erlsem.domain import VLit
from erlsem.syntax import (Atom, EApp, ECall, EFun, EFunId, ELet, ELetRec,
                           ELit, ETry, EVar, FunctionIdentifier, Integer)

var_names = st.from_regex(r"[A-Z_][a-zA-Z0-9_@]{0,3}", fullmatch=True)
fun_names = st.from_regex(r"[a-z][a-zA-Z0-9_@]{0,3}", fullmatch=True)
# any printable ASCII, including quotes and backslashes
atom_names = st.text(st.characters(min_codepoint=32, max_codepoint=126), min_size=1, max_size=5)

literals = st.one_of(st.integers(-10 ** 20, 10 ** 20).map(Integer), atom_names.map(Atom))
fids = st.builds(FunctionIdentifier, fun_names, st.integers(0, 3))
values = literals.map(VLit)


def distinct_vars(min_size=0, max_size=3):
    return st.lists(var_names, min_size=min_size, max_size=max_size, unique=True)


def _compound(children):
    args = st.lists(children, max_size=3)
    letrec = st.integers(0, 3).flatmap(lambda n: st.builds(
        ELetRec,
        st.builds(FunctionIdentifier, fun_names, st.just(n)),
        distinct_vars(n, n), children, children))
    return st.one_of(
        st.builds(EFun, distinct_vars(), children),
        st.builds(ECall, st.one_of(st.sampled_from(["+", "-", "*"]), atom_names), args),
        st.builds(EApp, children, args),
        st.builds(ELet, var_names, children, children),
        letrec,
        st.builds(ETry, children, var_names, children, distinct_vars(3, 3), children),
    )


expressions = st.recursive(
    st.one_of(literals.map(ELit), var_names.map(EVar), fids.map(EFunId)),
    _compound, max_leaves=25)
