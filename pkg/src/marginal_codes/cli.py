"""Command-line front end: ``margcode SUBCOMMAND ...``.

Exit codes: 0 satisfied / maximal / success, 1 violated / not maximal,
2 usage, format or precondition error, 3 cap exceeded or bounded confidence.
"""

import argparse
import json
import os
import sys
import time

from . import automata, properties as props, transducer as tr
from .errors import CapExceeded, FormatError, MarginalCodesError, NotSatisfying
from .fileformat import EPS_TOKEN, dump, load, parse_machine, serialize  # noqa: F401

OK, VIOLATED, USAGE, CAPPED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def show(word):
    return EPS_TOKEN if word == "" else word


def _word_arg(text):
    return "" if text == EPS_TOKEN else text


def _load_aut(path):
    m = load(path, kind="nfa")
    return m


def _load_trans(arg, alphabet=None):
    """A transducer file, or a builtin name when no such file exists."""
    if not os.path.exists(arg) and arg in tr.BUILTINS:
        if alphabet is None:
            raise UsageError(f"builtin {arg!r} needs an alphabet")
        return tr.builtin(arg, alphabet)
    return load(arg, kind="transducer")


def _margin(args):
    return props.FIN if args.fin else props.Margin(args.k)


# reports ---------------------------------------------------------------------

def witness_to_json(w):
    if w is None:
        return None
    if isinstance(w, props.InfiniteViolation):
        p = w.pump
        return {"kind": "infinite", "u": p.u, "y": p.y, "z": p.z, "y_prime": p.y_prime}
    return {"kind": "finite", "u": w.u, "violators": list(w.violators)}


def witness_from_json(d):
    if d["kind"] == "infinite":
        return props.InfiniteViolation(tr.PumpFamily(d["u"], d["y"], d["z"], d["y_prime"]))
    if d["kind"] == "finite":
        return props.FiniteViolation(d["u"], tuple(d["violators"]))
    raise ValueError(f"unknown witness kind {d['kind']!r}")


def witness_lines(w):
    if isinstance(w, props.InfiniteViolation):
        p = w.pump
        return [f"u: {show(p.u)}", f"y: {show(p.y)}", f"z: {show(p.z)}",
                f"y_prime: {show(p.y_prime)}",
                "pump: y z^i y_prime is related to u and lies in L for every i >= 0"]
    return [f"u: {show(w.u)}"] + [f"violator: {show(v)}" for v in w.violators]


def _emit(args, report, lines):
    if getattr(args, "json", False):
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


# subcommands -----------------------------------------------------------------

def cmd_check(args):
    start = time.perf_counter()
    a = _load_aut(args.aut)
    t = _load_trans(args.trans, a.alphabet)
    spec = props.PropertySpec(t, _margin(args), input_altering=args.input_altering)
    verdict = props.satisfies(a, spec)
    elapsed = time.perf_counter() - start
    report = {
        "verdict": "satisfied" if verdict.satisfied else "violated",
        "margin": str(spec.margin),
        "confidence": verdict.confidence,
        "timings": {"total_s": round(elapsed, 6)},
        "inputs": {"aut": args.aut, "trans": args.trans},
    }
    if verdict.witness is not None:
        report["witness"] = witness_to_json(verdict.witness)
    lines = [f"verdict: {report['verdict']}", f"margin: {report['margin']}",
             f"confidence: {verdict.confidence}"]
    if args.witness and verdict.witness is not None:
        lines += witness_lines(verdict.witness)
    lines.append(f"time: {elapsed:.3f}s")
    _emit(args, report, lines)
    if not verdict.satisfied:
        return VIOLATED
    return OK if verdict.confidence == "full" else CAPPED


def cmd_verify(args):
    with open(args.report, encoding="utf-8") as fh:
        report = json.load(fh)
    inputs = report.get("inputs", {})
    aut = args.aut or inputs.get("aut")
    trans = args.trans or inputs.get("trans")
    if not aut or not trans:
        raise UsageError("report names no inputs; pass --aut and --trans")
    a = _load_aut(aut)
    t = _load_trans(trans, a.alphabet)
    margin = props.Margin.parse(report["margin"])
    if report["verdict"] == "satisfied":
        # nothing to replay; recheck instead
        again = props.satisfies(a, props.PropertySpec(t, margin))
        ok = again.satisfied
    else:
        ok = props.replays(a, t, margin, witness_from_json(report["witness"]))
    print("verify: ok" if ok else "verify: FAILED")
    return OK if ok else VIOLATED


def cmd_maximal(args):
    a = _load_aut(args.aut)
    t = _load_trans(args.trans, a.alphabet)
    try:
        gap = props.maximality_gap(a, t)
    except NotSatisfying as exc:
        print(f"maximal: undefined ({exc})")
        return VIOLATED
    if gap is None:
        print("maximal: yes")
        return OK
    print("maximal: no")
    print(f"gap: {show(gap)}")
    return VIOLATED


def cmd_extend(args):
    a = _load_aut(args.aut)
    t = _load_trans(args.trans, a.alphabet)
    try:
        z = props.extend_fin(a, t)
    except NotSatisfying as exc:
        print(f"extend: {exc}")
        return VIOLATED
    print(f"z: {show(z)}")
    return OK


def cmd_builtin(args):
    m = tr.builtin(args.name, args.alphabet)
    if args.output:
        dump(m, args.output)
    else:
        sys.stdout.write(serialize(m))
    return OK


def cmd_apply(args):
    t = _load_trans(args.trans)
    word = _word_arg(args.word)
    out = automata.enumerate_words(tr.apply(t, word), args.maxlen)
    for v in out:
        print(show(v))
    return OK


def cmd_oracle(args):
    a = _load_aut(args.aut)
    t = _load_trans(args.trans, a.alphabet)
    margin = _margin(args)
    verdict = props.oracle_satisfies(a, props.PropertySpec(t, margin), args.max_u)
    print(f"verdict: {'satisfied' if verdict.satisfied else 'violated'}")
    print(f"margin: {margin}")
    print(f"confidence: {verdict.confidence} (|u| <= {args.max_u})")
    if verdict.witness is not None:
        print("\n".join(witness_lines(verdict.witness)))
        return VIOLATED
    return OK


def cmd_info(args):
    if args.aut:
        a = _load_aut(args.aut)
        tt = automata.trim(a)
        w = automata.shortest_word(a)
        print("kind: automaton")
        print(f"alphabet: {' '.join(a.alphabet)}")
        print(f"states: {len(a.states)} (trim {len(tt.states)})")
        print(f"transitions: {len(a.transitions)}")
        print(f"empty: {'yes' if w is None else 'no'}")
        if w is not None:
            print(f"shortest: {show(w)}")
            finite = automata.is_finite_language(a)
            print(f"finite: {'yes' if finite else 'no'}")
            if finite:
                print(f"words: {automata.count_words(a)}")
        return OK
    t = _load_trans(args.trans)
    tt = tr.trim(t)
    print("kind: transducer")
    print(f"alphabet: {' '.join(t.alphabet)}")
    print(f"states: {len(t.states)} (trim {len(tt.states)})")
    print(f"transitions: {len(t.transitions)}")
    print(f"proper epsilon-input cycle: {'yes' if tr.has_proper_eps_input_cycle(tt) else 'no'}")
    print(f"identity only: {'yes' if tr.realizes_only_identity(tt) else 'no'}")
    if not tr.has_proper_eps_input_cycle(tt):
        fn = tr.is_k_valued(tt, 1)
        print(f"functional: {'yes' if fn.k_valued else 'no'}")
    return OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="margcode",
        description="Decide transducer-described code properties with margins.")
    sub = p.add_subparsers(dest="command", required=True)

    def margin_flags(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--k", type=int, help="exact margin k >= 0")
        g.add_argument("--fin", action="store_true", help="finitely-margin variant")

    def machines(sp):
        sp.add_argument("--aut", required=True, help="automaton file")
        sp.add_argument("--trans", required=True, help="transducer file or builtin name")

    sp = sub.add_parser("check", help="decide satisfaction")
    machines(sp)
    margin_flags(sp)
    sp.add_argument("--input-altering", action="store_true",
                    help="assert that no word maps to itself")
    sp.add_argument("--witness", action="store_true", help="print the witness")
    sp.add_argument("--json", action="store_true", help="JSON report")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("verify", help="replay the witness of a JSON report")
    sp.add_argument("report")
    sp.add_argument("--aut")
    sp.add_argument("--trans")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("maximal", help="classic maximality test")
    machines(sp)
    sp.set_defaults(func=cmd_maximal)

    sp = sub.add_parser("extend", help="one finitely-margin extension step")
    machines(sp)
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("builtin", help="write a builtin transducer")
    sp.add_argument("name", choices=tr.BUILTINS)
    sp.add_argument("--alphabet", required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_builtin)

    sp = sub.add_parser("apply", help="list outputs of a transducer on a word")
    sp.add_argument("--trans", required=True)
    sp.add_argument("--word", required=True, help=f"input word ({EPS_TOKEN} for empty)")
    sp.add_argument("--maxlen", type=int, required=True)
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("oracle", help="brute-force check over short words")
    machines(sp)
    margin_flags(sp)
    sp.add_argument("--max-u", type=int, required=True)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("info", help="describe a machine file")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--aut")
    g.add_argument("--trans")
    sp.set_defaults(func=cmd_info)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    if getattr(args, "k", None) is not None and args.k < 0:
        print("error: --k must be >= 0", file=sys.stderr)
        return USAGE
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAPPED
    except (FormatError, UsageError, MarginalCodesError, ValueError, OSError,
            KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
