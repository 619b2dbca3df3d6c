import pytest

from erlsem.bigstep import DEPTH_EXHAUSTED, RuleName, search_program
from erlsem.builtins import BUILTINS, EFFECTFUL
from erlsem.difftest import (GenConfig, Outcomes, SwapVerdict, Verdict, agree,
                             check_determinism, check_equiv_swap,
                             check_equiv_wrap, check_monotone, diff,
                             exclusive_results, generate, rule_coverage,
                             swap_sides, swap_verdict, wrap)
from erlsem.domain import (TIMEOUT, Result, SideEffect, SideEffectId, VLit,
                           atom)
from erlsem.fbs import eval_program
from erlsem.frontend import parse, print_expr
from erlsem.syntax import (ECall, ELet, EApp, EFun, EVar, Integer, expr_size,
                           free_names, lit, subexpressions)


def i(n):
    return VLit(Integer(n))


def test_generate_contract():
    cfg = GenConfig(seed=9, max_size=12)
    assert generate(cfg, 0) == []
    progs = generate(cfg, 300)
    assert progs == generate(cfg, 300)
    assert progs != generate(GenConfig(seed=10, max_size=12), 300)
    for e in progs:
        assert free_names(e) == frozenset()
        assert expr_size(e) <= 12
        assert parse(print_expr(e)) == e
        for node in subexpressions(e):
            if isinstance(node, ECall):
                assert node.name in BUILTINS


def test_generate_without_effects():
    for e in generate(GenConfig(seed=3, allow_effects=False), 300):
        assert not any(isinstance(n, ECall) and n.name in EFFECTFUL for n in subexpressions(e))
        r = eval_program(e)
        assert r is TIMEOUT or r.eff == ()


def test_gen_config_validation():
    with pytest.raises(ValueError):
        GenConfig(max_size=0)
    with pytest.raises(ValueError):
        GenConfig(atom_pool=())
    with pytest.raises(ValueError):
        GenConfig(seed=-1)


def test_agree_predicate():
    nine = Result(i(9), ())
    found9 = search_program(parse("4 + 5"))
    assert agree(Outcomes(nine, (nine, []), found9))[0] is Verdict.AGREE
    assert agree(Outcomes(TIMEOUT, (TIMEOUT, []), DEPTH_EXHAUSTED))[0] is Verdict.ALL_DIVERGED
    a, b = Result(atom("a"), ()), Result(atom("b"), ())
    verdict, detail = agree(Outcomes(a, (b, []), search_program(lit("a"))))
    assert verdict is Verdict.DISAGREE and "pretty" in detail
    verdict, detail = agree(Outcomes(TIMEOUT, (nine, []), found9))
    assert verdict is Verdict.DISAGREE and "fbs" in detail
    traced = Result(i(9), (SideEffect(SideEffectId.OUTPUT, (i(1),)),))
    verdict, detail = agree(Outcomes(traced, (traced, []), found9))
    assert verdict is Verdict.DISAGREE and "trace" in detail


def test_check_monotone(second_example, diverging):
    assert check_monotone(lit("a"), 5)
    assert check_monotone(second_example, 1000)
    assert check_monotone(diverging, 100)
    with pytest.raises(ValueError):
        check_monotone(lit("a"), 0)


def test_wrap_law_examples():
    assert wrap(lit(4)) == ELet("X0", EFun([], lit(4)), EApp(EVar("X0"), []))
    assert wrap(EVar("X0")).var == "X1"
    assert check_equiv_wrap(lit(4), 1000)
    fwrite = ECall("fwrite", [lit("a")])
    assert check_equiv_wrap(fwrite, 1000)
    assert eval_program(wrap(fwrite)) == Result(
        atom("ok"), (SideEffect(SideEffectId.OUTPUT, (atom("a"),)),))
    assert check_equiv_wrap(parse("apply 5()"), 1000)
    assert eval_program(wrap(parse("apply 5()"))).res.reason == atom("badfun")


def test_wrap_law_at_every_clock(second_example):
    # two ticks of compensation are exact: the law holds even where e times out
    for c in range(0, 10):
        assert check_equiv_wrap(second_example, c)
    assert not check_equiv_wrap(second_example, 5, overhead=1)


def test_swap_law_examples():
    assert swap_verdict(lit(4), lit(5), 1000) is SwapVerdict.HOLDS
    sides = swap_sides(lit(4), lit(5))
    assert eval_program(sides.left) == eval_program(sides.right) == Result(i(9), ())
    r4, r5 = ECall("fread", [lit(4)]), ECall("fread", [lit(5)])
    assert swap_verdict(r4, r5, 1000) is SwapVerdict.HOLDS
    inp = lambda n: SideEffect(SideEffectId.INPUT, (i(n),))  # noqa: E731
    sides = swap_sides(r4, r5)
    assert eval_program(sides.left) == Result(i(9), (inp(4), inp(5)))
    assert eval_program(sides.right) == Result(i(9), (inp(5), inp(4)))
    bad = parse("apply 5()")
    assert swap_verdict(bad, r5, 1000) is SwapVerdict.CONDITIONAL
    sides = swap_sides(bad, r5)
    assert eval_program(sides.left).eff == ()
    assert eval_program(sides.right).eff == (inp(5),)
    assert check_equiv_swap(bad, r5, 1000)


def test_swap_law_vacuous_on_divergence(diverging):
    assert swap_verdict(diverging, lit(1), 100) is SwapVerdict.VACUOUS


def test_determinism_examples():
    assert check_determinism(lit("a"), 10)
    e = parse("apply (fun(Y) -> Y)('a','b')")
    assert check_determinism(e, 10)
    assert search_program(e).derivation.rule is RuleName.APP_EXC2
    with pytest.raises(ValueError):
        check_determinism(lit("a"), 1)


def test_exclusive_results_on_small_programs():
    for e in generate(GenConfig(seed=1, max_size=7), 300):
        assert exclusive_results(e)


def test_corpus_diff_and_rule_coverage(corpus):
    reports = [diff(e) for e in corpus]
    assert all(r.ok for r in reports)
    assert sum(r.verdict is Verdict.ALL_DIVERGED for r in reports) > 0
    counts = rule_coverage(corpus)
    assert set(counts) == set(RuleName)
    assert min(counts.values()) >= 10, counts


def test_swap_holds_when_a_closure_is_read_under_the_bindings():
    from erlsem.difftest import observable, swap_verdict, SwapVerdict
    from erlsem.frontend import parse
    e1 = parse("call fread(4)")
    e2 = parse("call fread(fun(Z) -> Z)")
    assert swap_verdict(e1, e2, 1000) is SwapVerdict.HOLDS
    from erlsem.fbs import eval_program
    r = eval_program(parse("let A = 1 in fun(Z) -> Z"), 1000)
    assert observable(r.res) == eval_program(parse("fun(Z) -> Z"), 1000).res
    kept = eval_program(parse("let A = 1 in fun(Z) -> A"), 1000)
    assert observable(kept.res) == kept.res
