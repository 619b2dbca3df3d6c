"""Command-line interface.

Exit status: 0 on success, 1 when a checked property fails, 2 on usage or
parse errors.  Documents go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._deep import run_deep
from .bigstep import Found, explain_derivation, search
from .difftest import GenConfig, diff, generate, swap_verdict, SwapVerdict
from .difftest.laws import check_equiv_wrap
from .domain import EMPTY_TRACE, Exc, Result, VClos, VLit
from .env import EMPTY_ENV
from .fbs import eval_fbos_expr
from .frontend import ParseError, parse, print_expr, quote_atom
from .jsonio import (DecodeError, decode_derivation, dumps, encode_derivation,
                     encode_result)
from .pretty import eval_pretty
from .syntax import Atom, Integer

ENGINES = ("bigstep", "pretty", "fbs")
EMIT_CHOICES = ("result", "trace", "derivation", "rule-trace")


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be a natural number")
    return n


def _positive(text: str) -> int:
    n = _natural(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _seed(text: str) -> int:
    n = _natural(text)
    if n >= 2 ** 64:
        raise argparse.ArgumentTypeError("must fit in 64 bits")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="erlsem", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, programs=True):
        sp.add_argument("--format", choices=("json", "text"), default="json")
        if programs:
            sp.add_argument("-e", dest="sources", action="append", default=[],
                            metavar="SRC", help="inline program (repeatable)")
            sp.add_argument("files", nargs="*", metavar="FILE",
                            help="program file ('-' for stdin)")
            sp.add_argument("--fuel", type=_natural, default=1000)
            sp.add_argument("--depth", type=_natural, default=1000)

    ev = sub.add_parser("eval", help="evaluate a program")
    common(ev)
    ev.add_argument("--engine", choices=ENGINES + ("all",), default="fbs")
    ev.add_argument("--emit", action="append", choices=EMIT_CHOICES,
                    help="parts of the result document (repeatable)")

    df = sub.add_parser("diff", help="compare the three engines on a program")
    common(df)

    fz = sub.add_parser("fuzz", help="compare the engines on generated programs")
    common(fz, programs=False)
    fz.add_argument("--seed", type=_seed, default=0)
    fz.add_argument("--count", type=_positive, default=100)
    fz.add_argument("--max-size", type=_positive, default=30)
    fz.add_argument("--fuel", type=_natural, default=1000)
    fz.add_argument("--depth", type=_natural, default=1000)

    eq = sub.add_parser("equiv", help="check an equivalence law")
    common(eq)
    eq.add_argument("--law", choices=("wrap", "swap"), required=True)

    ck = sub.add_parser("check", help="validate a derivation JSON document")
    common(ck, programs=False)
    ck.add_argument("file", metavar="FILE", help="derivation document ('-' for stdin)")
    return p


# helpers

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as err:
        raise UsageError(f"cannot read {path}: {err}") from err


def _programs(args, count=None):
    sources = list(args.sources) + [_read(f) for f in args.files]
    if count is not None and len(sources) != count:
        raise UsageError(f"expected {count} program(s), got {len(sources)}")
    out = []
    for src in sources:
        try:
            out.append(parse(src))
        except ParseError as err:
            raise UsageError(render_parse_error(src, err)) from err
    return out


def render_parse_error(src: str, err: ParseError) -> str:
    expected = f" (expected {', '.join(err.expected)})" if err.expected else ""
    return f"parse error at byte {err.span.start}: {err.message}{expected}"


def render_value(v) -> str:
    match v:
        case VLit(Integer(n)):
            return str(n)
        case VLit(Atom(name)):
            return quote_atom(name)
        case VClos(_, _, params, body):
            return f"<closure fun({', '.join(params)}) -> {print_expr(body)}>"
    return repr(v)


def render_result(r) -> str:
    if isinstance(r, Found):
        r = Result(r.derivation.result, r.derivation.eff_out)
    if not isinstance(r, Result):
        return encode_result(r)["result"]["kind"]
    if isinstance(r.res, Exc):
        out = (f"exception {r.res.cls.value}:{render_value(r.res.reason)} "
               f"{render_value(r.res.details)}")
    else:
        out = render_value(r.res)
    effects = ", ".join(f"{s.id.value}({', '.join(map(render_value, s.args))})" for s in r.eff)
    return f"{out}  effects: [{effects}]"


def _emit(args, doc, text: str):
    print(dumps(doc) if args.format == "json" else text)


# commands

def _run_engine(engine, e, args):
    if engine == "fbs":
        return eval_fbos_expr(args.fuel, EMPTY_ENV, e, EMPTY_TRACE), None
    if engine == "pretty":
        return eval_pretty(EMPTY_ENV, e, EMPTY_TRACE, args.depth)
    if args.depth < 1:
        raise UsageError("--depth must be at least 1 for bigstep")
    return search(EMPTY_ENV, e, EMPTY_TRACE, args.depth), None


def _engine_doc(engine, outcome, extra, emit) -> dict:
    full = encode_result(outcome)
    doc = {}
    if "result" in emit:
        doc["result"] = full["result"]
    if "trace" in emit and "effects" in full:
        doc["effects"] = full["effects"]
    if "derivation" in emit and engine == "bigstep" and isinstance(outcome, Found):
        doc["derivation"] = encode_derivation(outcome.derivation)
    if "rule-trace" in emit and engine == "pretty":
        doc["rule_trace"] = [r.value for r in extra]
    return doc


def cmd_eval(args) -> int:
    [e] = _programs(args, 1)
    emit = set(args.emit or ("result", "trace"))
    engines = ENGINES if args.engine == "all" else (args.engine,)
    docs, lines = {}, []
    for engine in engines:
        outcome, extra = _run_engine(engine, e, args)
        docs[engine] = _engine_doc(engine, outcome, extra, emit)
        lines.append(f"{engine}: {render_result(outcome)}")
    if args.engine == "all":
        _emit(args, {"engines": docs}, "\n".join(lines))
    else:
        _emit(args, docs[args.engine], lines[0].split(": ", 1)[1])
    return 0


def _report_doc(report) -> dict:
    o = report.outcomes
    return {
        "program": print_expr(report.program),
        "verdict": report.verdict.value,
        "detail": report.detail,
        "engines": {"fbs": encode_result(o.fbs), "pretty": encode_result(o.pretty[0]),
                    "bigstep": encode_result(o.bigstep)},
    }


def cmd_diff(args) -> int:
    [e] = _programs(args, 1)
    report = diff(e, args.fuel, args.depth)
    text = f"{report.verdict.value} {report.detail}".rstrip()
    _emit(args, _report_doc(report), text)
    return 0 if report.ok else 1


def cmd_fuzz(args) -> int:
    cfg = GenConfig(seed=args.seed, max_size=args.max_size)
    for i, e in enumerate(generate(cfg, args.count)):
        report = diff(e, args.fuel, args.depth)
        if not report.ok:
            doc = {"index": i, **_report_doc(report)}
            _emit(args, doc, f"{i} {report.verdict.value}: {print_expr(e)}\n  {report.detail}")
            return 1
        _emit(args, {"index": i, "verdict": report.verdict.value},
              f"{i} {report.verdict.value}")
    return 0


def cmd_equiv(args) -> int:
    if args.law == "wrap":
        [e] = _programs(args, 1)
        holds = check_equiv_wrap(e, args.fuel)
        doc = {"law": "wrap", "holds": holds}
        text = "holds" if holds else "fails"
    else:
        e1, e2 = _programs(args, 2)
        verdict = swap_verdict(e1, e2, args.fuel)
        holds = verdict is not SwapVerdict.FAILS
        doc = {"law": "swap", "holds": holds, "verdict": verdict.value}
        text = verdict.value
    _emit(args, doc, text)
    return 0 if holds else 1


def cmd_check(args) -> int:
    try:
        doc = json.loads(_read(args.file))
        if isinstance(doc, dict) and "derivation" in doc:
            doc = doc["derivation"]  # an ``eval --emit derivation`` document
        d = decode_derivation(doc)
    except (json.JSONDecodeError, DecodeError, RecursionError) as err:
        raise UsageError(f"not a derivation document: {err}") from err
    problem = explain_derivation(d)
    doc = {"valid": problem is None}
    if problem is not None:
        doc["error"] = str(problem)
    _emit(args, doc, "valid" if problem is None else f"invalid: {problem}")
    return 0 if problem is None else 1


COMMANDS = {"eval": cmd_eval, "diff": cmd_diff, "fuzz": cmd_fuzz,
            "equiv": cmd_equiv, "check": cmd_check}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return 0 if exit_.code == 0 else 2
    try:
        return run_deep(COMMANDS[args.command], args)
    except UsageError as err:
        print(f"erlsem: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
