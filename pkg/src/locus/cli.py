"""Command-line interface.

Exit codes: 0 verdict true (or generation succeeded), 1 verdict false,
2 input error, 3 resource limit exceeded. ``--json`` prints a machine
readable report instead of the one-line summary.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .automata import Dfa, as_nfa, enumerate_words, format_word
from .dot import to_dot
from .errors import InputError, LocusError, ResourceLimitError
from .inclusion import InclusionConfig, inclusion, universality
from .io import dumps_automaton, read_automaton
from .local import cartesian_oracle, extract_local_spec, is_local_dfa, is_local_nfa, local_closure
from .reduction import greibach_gadget, is_infix_free, verify_reduction
from .regex import glushkov, marked_automaton, parse_regex

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
ENGINE_NAMES = {"antichain": "antichain", "oracle": "determinize-oracle"}


def _state_cap():
    """Cap on explored state pairs (and subsets, for the oracle engine) from LOCUS_STATE_CAP."""
    raw = os.environ.get("LOCUS_STATE_CAP")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"LOCUS_STATE_CAP must be an integer, got {raw!r}") from None
    if cap <= 0:
        raise InputError("LOCUS_STATE_CAP must be positive")
    return cap


def _config(engine: str = "antichain") -> InclusionConfig:
    cap = _state_cap()
    if cap is None:
        return InclusionConfig(ENGINE_NAMES[engine])
    return InclusionConfig(ENGINE_NAMES[engine], cap)


def _emit_text(path, text: str) -> None:
    if path:
        Path(path).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


class Result:
    """What a subcommand hands back to the dispatcher."""

    def __init__(self, verdict=None, witness=None, stats=None, result=None, summary=""):
        self.verdict = verdict
        self.witness = witness
        self.stats = stats or {}
        self.result = result
        self.summary = summary


def _report_stats(report) -> dict:
    return {"explored": report.explored, "elapsed": report.elapsed}


def _decision(name: str, report) -> Result:
    summary = f"{name}: {'yes' if report.verdict else 'no'}"
    if isinstance(report.witness, tuple):
        summary += f"\nwitness: {format_word(report.witness)}"
    elif report.witness is not None:
        summary += f"\nwitness: {report.witness}"
    return Result(report.verdict, report.witness_json(), _report_stats(report), summary=summary)


def cmd_check_local(args) -> Result:
    a = read_automaton(args.file)
    if args.dfa:
        if not isinstance(a, Dfa):
            raise InputError(f"{args.file}: --dfa needs a file with \"deterministic\": true")
        return _decision("local", is_local_dfa(a))
    return _decision("local", is_local_nfa(as_nfa(a), _config(args.engine)))


def cmd_check_universal(args) -> Result:
    return _decision("universal", universality(as_nfa(read_automaton(args.file)), _config(args.engine)))


def cmd_check_inclusion(args) -> Result:
    b = as_nfa(read_automaton(args.left))
    a = as_nfa(read_automaton(args.right))
    return _decision("included", inclusion(b, a, _config(args.engine)))


def cmd_check_infix_free(args) -> Result:
    return _decision("infix-free", is_infix_free(as_nfa(read_automaton(args.file))))


def cmd_gadget(args) -> Result:
    g = greibach_gadget(as_nfa(read_automaton(args.file)))
    text = dumps_automaton(g.automaton, {"fresh_symbols": g.fresh_symbols.as_dict()})
    if args.output:
        _emit_text(args.output, text)
    summary = f"gadget: {g.automaton.state_count} states" + (f", written to {args.output}" if args.output else "")
    return Result(result=json.loads(text), summary=summary if args.output else text)


def _verify_one(path: str) -> dict:
    try:
        check = verify_reduction(as_nfa(read_automaton(path)), _config())
    except LocusError as exc:
        return {"file": path, "error": str(exc)}
    return {"file": path, "universal": check.universal, "gadget_local": check.gadget_local,
            "gadget_infix_free": check.gadget_infix_free, "consistent": check.consistent}


def cmd_verify_reduction(args) -> Result:
    start = time.perf_counter()
    if args.corpus:
        files = sorted(str(p) for p in Path(args.corpus).glob("*.json"))
        if not files:
            raise InputError(f"no .json files in {args.corpus}")
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                rows = list(pool.map(_verify_one, files))
        else:
            rows = [_verify_one(f) for f in files]
        errors = [r for r in rows if "error" in r]
        if errors:
            raise InputError(f"{errors[0]['file']}: {errors[0]['error']}")
        ok = all(r["consistent"] for r in rows)
        bad = [r["file"] for r in rows if not r["consistent"]]
        summary = f"consistent: {sum(r['consistent'] for r in rows)}/{len(rows)}"
        if bad:
            summary += "\ninconsistent: " + ", ".join(bad)
        return Result(ok, stats={"files": len(rows), "elapsed": time.perf_counter() - start},
                      result=rows, summary=summary)
    if not args.file:
        raise InputError("verify-reduction needs a file or --corpus DIR")
    check = verify_reduction(as_nfa(read_automaton(args.file)), _config())
    row = {"universal": check.universal, "gadget_local": check.gadget_local,
           "gadget_infix_free": check.gadget_infix_free, "consistent": check.consistent}
    summary = ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in row.items())
    return Result(check.consistent, stats={"elapsed": time.perf_counter() - start},
                  result=row, summary=summary)


def cmd_closure(args) -> Result:
    d = local_closure(as_nfa(read_automaton(args.file)))
    text = dumps_automaton(d)
    if args.output:
        _emit_text(args.output, text)
        return Result(result=json.loads(text), summary=f"closure: {d.state_count} states, written to {args.output}")
    return Result(result=json.loads(text), summary=text)


def cmd_extract_spec(args) -> Result:
    spec = extract_local_spec(as_nfa(read_automaton(args.file)))
    text = spec.to_json()
    if args.output:
        _emit_text(args.output, text)
    return Result(result=json.loads(text), summary=text)


def cmd_oracle_cartesian(args) -> Result:
    start = time.perf_counter()
    w = cartesian_oracle(as_nfa(read_automaton(args.file)), args.max_len)
    stats = {"max_len": args.max_len, "elapsed": time.perf_counter() - start}
    if w is None:
        return Result(True, stats=stats, summary=f"no letter-Cartesian violation up to length {args.max_len}")
    return Result(False, w.to_json(), stats, summary=f"violation: {w}")


def cmd_enum(args) -> Result:
    words = enumerate_words(read_automaton(args.file), args.max_len)
    return Result(result=[list(w) for w in words], stats={"count": len(words)},
                  summary="\n".join(format_word(w) for w in words))


def cmd_regex_compile(args) -> Result:
    alphabet = [s for s in args.alphabet.split(",") if s] if args.alphabet is not None else None
    r = parse_regex(args.expr, alphabet)
    a = marked_automaton(r) if args.marked else glushkov(r, alphabet)
    text = dumps_automaton(a)
    if args.output:
        _emit_text(args.output, text)
        return Result(result=json.loads(text), summary=f"regex: {a.state_count} states, written to {args.output}")
    return Result(result=json.loads(text), summary=text)


def cmd_export_dot(args) -> Result:
    text = to_dot(read_automaton(args.file), Path(args.file).stem)
    if args.output:
        _emit_text(args.output, text)
    return Result(result=text, summary=text.rstrip("\n") if not args.output else f"written to {args.output}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="locus", description="Locality and related decisions for finite automata.")
    p.add_argument("--json", action="store_true", help="print a JSON report on standard output")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a JSON report on standard output")
        sp.set_defaults(func=func)
        return sp

    def engine(sp):
        sp.add_argument("--engine", choices=sorted(ENGINE_NAMES), default="antichain")

    sp = add("check-local", cmd_check_local, "decide whether the language is local")
    sp.add_argument("file")
    sp.add_argument("--dfa", action="store_true", help="input is a DFA; use the polynomial product search")
    engine(sp)
    sp = add("check-universal", cmd_check_universal, "decide whether the language is all words")
    sp.add_argument("file")
    engine(sp)
    sp = add("check-inclusion", cmd_check_inclusion, "decide L(LEFT) ⊆ L(RIGHT)")
    sp.add_argument("left")
    sp.add_argument("right")
    engine(sp)
    sp = add("check-infix-free", cmd_check_infix_free, "decide infix-freeness")
    sp.add_argument("file")
    sp = add("gadget", cmd_gadget, "build the hard instance for a seed automaton")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp = add("verify-reduction", cmd_verify_reduction, "check gadget locality against seed universality")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--corpus", help="directory of automaton files")
    sp.add_argument("--jobs", type=int, default=1)
    sp = add("closure", cmd_closure, "local closure as a DFA")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp = add("extract-spec", cmd_extract_spec, "first/last letters and forbidden bigrams")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp = add("oracle-cartesian", cmd_oracle_cartesian, "bounded brute-force letter-Cartesian check")
    sp.add_argument("file")
    sp.add_argument("--max-len", type=int, default=8)
    sp = add("enum", cmd_enum, "list accepted words up to a length")
    sp.add_argument("file")
    sp.add_argument("--max-len", type=int, required=True)
    sp = add("regex-compile", cmd_regex_compile, "compile a regular expression (Glushkov)")
    sp.add_argument("expr")
    sp.add_argument("--alphabet", help="comma-separated symbols")
    sp.add_argument("--marked", action="store_true", help="rename every literal occurrence apart")
    sp.add_argument("-o", "--output")
    sp = add("export-dot", cmd_export_dot, "Graphviz rendering")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    return p


def _inputs(args) -> dict:
    skip = {"func", "json", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_TRUE
    if getattr(args, "max_len", 0) < 0:
        print("locus: error: --max-len must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    try:
        res = args.func(args)
    except ResourceLimitError as exc:
        return _fail(args, EXIT_RESOURCE, "resource limit", exc)
    except LocusError as exc:
        return _fail(args, EXIT_INPUT, "input error", exc)
    code = EXIT_TRUE if res.verdict is None or res.verdict else EXIT_FALSE
    if args.json:
        report = {"command": args.command, "verdict": res.verdict, "witness": res.witness,
                  "stats": res.stats, "inputs": _inputs(args)}
        if res.result is not None:
            report["result"] = res.result
        print(json.dumps(report, ensure_ascii=False))
    elif res.summary:
        print(res.summary)
    return code


def _fail(args, code: int, kind: str, exc: Exception) -> int:
    if args.json:
        print(json.dumps({"command": args.command, "error": kind, "message": str(exc),
                          "inputs": _inputs(args)}, ensure_ascii=False))
    print(f"locus: {kind}: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
