"""Command-line interface.

Exit codes: verdict commands (``run``, ``pair``, ``oracle``, ``step``) exit 0
on a positive answer, 1 on a negative one and 2 when fuel or search bounds
ran out.  Usage errors exit 64, invalid words or relations 65, and a failed
internal cross-check 70.

Column orders of the CSV outputs:

* ``sigma``: k, sigma, phase1, phase2, phase3[, verified]
* ``sequences``: n, s, t, T, s', t', T'
* ``dehn``: n, value, witness_u, witness_v
* ``collatz``: step, m, n
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import engine, oracle
from .errors import AdianError, InternalMismatch, SearchBoundExceeded
from .presentation import is_residually_finite_monadic, parse_relation, pi, relative_length
from .words import DEFAULT_CAP, EMPTY_SYMBOL, format_word, parse_word
from .pi import collatz as collatz_mod
from .pi import macro as macro_mod
from .pi import sequences as seq_mod

EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_INTERNAL = 70
DEFAULT_FUEL = 10_000


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _word(args, name):
    return parse_word(getattr(args, name), args.cap)


def _pres(args):
    return parse_relation(args.relation, args.cap)


def _show(w, compact=False):
    return format_word(w, compact=compact, empty=EMPTY_SYMBOL)


def _writer(out):
    return csv.writer(out, lineterminator="\n")


# --- commands ---------------------------------------------------------------


def cmd_decompose(args, out):
    pres = _pres(args)
    dec = engine.decompose(pres, _word(args, "word"))
    print(f"0: {dec.render(args.compact)}", file=out)
    return 0


def cmd_step(args, out):
    pres = _pres(args)
    nxt = engine.step(pres, _word(args, "word"))
    if nxt is None:
        print("headless", file=out)
        return 1
    print(_show(nxt, args.compact), file=out)
    return 0


def _emit_records(records, args, out):
    for record in records:
        if args.format == "jsonl":
            print(record.to_json(), file=out)
        else:
            print(record.format(args.compact), file=out)


def cmd_run(args, out):
    pres = _pres(args)
    w = _word(args, "word")
    if args.trace:
        _emit_records(engine.trace_word(pres, w, args.fuel, args.letter), args, out)
    verdict = engine.run_divisibility(pres, w, args.letter, args.fuel)
    if args.format == "jsonl":
        print(json.dumps({"outcome": verdict.outcome.value, "steps": verdict.steps_used, "final": verdict.final}), file=out)
    else:
        print(f"{verdict.outcome.value} after {verdict.steps_used} steps: {_show(verdict.final, args.compact)}", file=out)
    return {engine.Outcome.YES: 0, engine.Outcome.NO: 1, engine.Outcome.OUT_OF_FUEL: 2}[verdict.outcome]


def cmd_pair(args, out):
    pres = _pres(args)
    u, v = _word(args, "u"), _word(args, "v")
    if args.trace:
        if args.rewrite == "second":
            raise ValueError("--trace is only available with --rewrite first")
        _emit_records(engine.trace_pair(pres, u, v, args.fuel), args, out)
    result = engine.pair_run(pres, u, v, args.fuel, args.rewrite)
    if args.format == "jsonl":
        record = {"verdict": type(result).__name__}
        if isinstance(result, engine.Equal):
            record["k"] = result.k
        else:
            record["pair"] = [result.state.u, result.state.v]
            record["steps"] = result.state.steps
        print(json.dumps(record), file=out)
    else:
        print(result, file=out)
    if isinstance(result, engine.Equal):
        return 0
    return 1 if isinstance(result, engine.NotEqual) else 2


def cmd_oracle(args, out):
    pres = _pres(args)
    u, v = _word(args, "u"), _word(args, "v")
    try:
        found = oracle.shortest_chain(pres, u, v, args.depth, args.length_cap, args.budget)
    except SearchBoundExceeded as exc:
        print(f"search bound exceeded: {exc}", file=out)
        return 2
    if found is None:
        print(f"no chain of length <= {args.depth}", file=out)
        return 1
    k, chain = found
    print(k, file=out)
    for w in chain:
        print(_show(w, args.compact), file=out)
    return 0


def cmd_dehn(args, out):
    pres = _pres(args)
    low = args.min_length if args.min_length is not None else args.max_length
    samples = [
        oracle.dehn_function_at(pres, n, args.depth, args.length_cap, args.fuel, not args.no_cross_check, args.budget)
        for n in range(low, args.max_length + 1)
    ]
    if args.format == "csv":
        out.write(oracle.dehn_csv(samples))
    else:
        for s in samples:
            u, v = s.witnesses
            note = f" ({len(s.inconclusive)} inconclusive pairs)" if s.inconclusive else ""
            print(f"d({s.n}) >= {s.value}  witness ({_show(u)}, {_show(v)}){note}", file=out)
    return 0


def cmd_sigma(args, out):
    N = args.n
    kit = seq_mod.SequenceKit(N)
    writer = _writer(out)
    header = ["k", "sigma", "phase1", "phase2", "phase3"]
    verifying = args.verify_macro or args.verify_naive
    if verifying:
        header.append("verified")
    if args.format == "csv":
        writer.writerow(header)
    for k in range(1, args.k_max + 1):
        value = seq_mod.sigma(N, k, kit)
        row = [k, value, *seq_mod.phase_charges(N, k, kit)]
        checks = []
        if args.verify_macro:
            state = macro_mod.macro_main(N, k)
            if state.steps != value:
                raise InternalMismatch(f"macro engine gives {state.steps} for k={k}")
            checks.append("macro")
        if args.verify_naive:
            w = seq_mod.witness(k)
            result = engine.pair_run(pi(N), w.u, w.v, value)
            if result != engine.Equal(value):
                raise InternalMismatch(f"naive engine gives {result} for k={k}")
            checks.append("naive")
        if verifying:
            row.append("+".join(checks))
        if args.format == "csv":
            writer.writerow(row)
        else:
            line = f"k={k} sigma={value} phases={row[2]}+{row[3]}+{row[4]}"
            if verifying:
                line += f" verified({row[-1]})"
            print(line, file=out)
    return 0


def cmd_sequences(args, out):
    if args.format == "csv":
        out.write(seq_mod.sequences_csv(args.n, args.count))
        return 0
    kit = seq_mod.SequenceKit(args.n)
    for name in seq_mod.NAMES:
        values = ", ".join(str(kit.value(name, i)) for i in range(args.count))
        print(f"{name}_{args.n}(n): {values}", file=out)
    return 0


def cmd_macro(args, out):
    state = macro_mod.macro_main(args.n, args.k)
    for entry in state.lemma_log:
        if args.format == "jsonl":
            print(json.dumps({
                "lemma": entry.lemma,
                "params": list(entry.params),
                "steps": entry.steps,
                "phase": entry.phase,
                "at_step": entry.at_step,
                "first": entry.first.format(),
                "second": entry.second.format(),
            }), file=out)
        else:
            params = ",".join(map(str, entry.params))
            print(f"{entry.at_step}: {entry.lemma}({params}) +{entry.steps} "
                  f"({entry.first.format() or EMPTY_SYMBOL}, {entry.second.format() or EMPTY_SYMBOL})", file=out)
    if args.format != "jsonl":
        charges = state.phase_charges()
        phases = " + ".join(str(charges[p]) for p in macro_mod.PHASES)
        print(f"total {state.steps} = {phases}", file=out)
    return 0


def cmd_collatz(args, out):
    if args.format == "csv":
        out.write(collatz_mod.trajectory_csv(args.n, args.m, args.mm, args.fuel))
    else:
        for i, s in enumerate(collatz_mod.collatz_trajectory(args.n, args.m, args.mm, args.fuel)):
            print(f"{i}: ({s.m}, {s.n})", file=out)
    result = collatz_mod.collatz_run(args.n, args.m, args.mm, args.fuel)
    if isinstance(result, collatz_mod.Terminated):
        if args.format != "csv":
            print(f"terminated after {result.iterations} steps at ({result.final.m}, {result.final.n})", file=out)
        return 0
    if args.format != "csv":
        print(f"out of fuel after {result.iterations} steps", file=out)
    return 2


def cmd_classify(args, out):
    pres = _pres(args)
    print(f"relation: {pres.lhs} = {pres.rhs}", file=out)
    print("left cycle-free: yes", file=out)
    print(f"relative length of lhs: {relative_length(pres.lhs)}", file=out)
    print(f"monadic: {'yes' if pres.is_monadic else 'no'}", file=out)
    if pres.is_monadic:
        rf = is_residually_finite_monadic(pres.middle)
        print(f"residually finite: {'yes' if rf else 'no'}", file=out)
    return 0


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adian", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum length of an expanded input word")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, relation=True):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func)
        if relation:
            p.add_argument("--relation", required=True, help='relation "LHS=RHS", e.g. "baa(ba)^2=a"')
        return p

    p = add("decompose", cmd_decompose, "print the prefix decomposition of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--compact", action="store_true")

    p = add("step", cmd_step, "apply one step of the algorithm to a word")
    p.add_argument("--word", required=True)
    p.add_argument("--compact", action="store_true")

    p = add("run", cmd_run, "decide left divisibility of a word by a letter")
    p.add_argument("--word", required=True)
    p.add_argument("--letter", choices=["a", "b"], default=None)
    p.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--format", choices=["text", "jsonl"], default="text")
    p.add_argument("--compact", action="store_true")

    p = add("pair", cmd_pair, "decide equality of two words and compute their Dehn distance")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--rewrite", choices=["first", "second"], default="first")
    p.add_argument("--format", choices=["text", "jsonl"], default="text")
    p.add_argument("--compact", action="store_true")

    p = add("oracle", cmd_oracle, "shortest chain of elementary transformations by search")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--length-cap", type=int, default=None)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_NODE_BUDGET)
    p.add_argument("--compact", action="store_true")

    p = add("dehn", cmd_dehn, "evaluate the Dehn function at small lengths")
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--min-length", type=int, default=None)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--length-cap", type=int, default=None)
    p.add_argument("--fuel", type=int, default=100_000)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_NODE_BUDGET)
    p.add_argument("--no-cross-check", action="store_true")
    p.add_argument("--format", choices=["text", "csv"], default="text")

    p = add("sigma", cmd_sigma, "table of sigma_N(k) with phase charges", relation=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--verify-macro", action="store_true")
    p.add_argument("--verify-naive", action="store_true")
    p.add_argument("--format", choices=["text", "csv"], default="text")

    p = add("sequences", cmd_sequences, "tables of s, t, T, s', t', T'", relation=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=6)
    p.add_argument("--format", choices=["text", "csv"], default="text")

    p = add("macro", cmd_macro, "run the macro engine on (U_k, V_k) in Pi_N", relation=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["text", "jsonl"], default="text")

    p = add("collatz", cmd_collatz, "iterate the Collatz-like map f_N", relation=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mm", type=int, required=True)
    p.add_argument("--fuel", type=int, default=10**6)
    p.add_argument("--format", choices=["text", "csv"], default="text")

    add("classify", cmd_classify, "structural facts about a relation")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "fuel", 0) < 0:
            parser.error("--fuel must be nonnegative")
        if args.command in ("sigma", "sequences", "macro", "collatz") and args.n < 2:
            parser.error("--n must be at least 2")
        if getattr(args, "k_max", 1) < 1 or getattr(args, "k", 1) < 1:
            parser.error("k must be at least 1")
    except SystemExit as exc:
        # argparse exits on --help and on usage errors; report the status instead
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except InternalMismatch as exc:
        print(f"adian: internal mismatch: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (AdianError, ValueError) as exc:
        print(f"adian: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
