"""Command-line interface: ``braidrev <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import explorer, reversing, verifier
from .words import ALPHABETIC, NUMERIC, BraidError, format_word, parse

EXIT_OK, EXIT_DOMAIN, EXIT_RESOURCE = 0, 1, 2


def _style(args) -> str:
    return NUMERIC if getattr(args, "numeric", False) else ALPHABETIC


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _word(args, text: str):
    if args.strands < 2:
        raise BraidError("--strands must be at least 2")
    return parse(text, args.strands)


def cmd_reverse(args) -> int:
    w = _word(args, args.word)
    fn = reversing.reverse_left if args.command == "reverse-left" else reversing.reverse_right
    num, den, steps = fn(w)
    fmt = lambda x: format_word(x, _style(args))  # noqa: E731
    if args.command == "reverse-left":
        final = den.inverse() + num
        labels = ("N_L", "D_L")
    else:
        final = num + den.inverse()
        labels = ("N_R", "D_R")
    doc = {
        "word": fmt(w),
        "strands": w.strands,
        "direction": "left" if args.command == "reverse-left" else "right",
        "numerator": fmt(num),
        "denominator": fmt(den),
        "final": fmt(final),
        "steps": steps,
    }
    _emit(args, doc, [f"{labels[0]}: {fmt(num)}", f"{labels[1]}: {fmt(den)}", f"final: {fmt(final)}", f"steps: {steps}"])
    return EXIT_OK


def cmd_grid(args) -> int:
    w = _word(args, args.word)
    g = reversing.build_grid(w)
    if args.json:
        print(json.dumps(g.to_dict(), indent=2))
        return EXIT_OK
    print(g.ascii_art())
    if not args.ascii_art:
        num, den = reversing.simple_factor_counts(w)
        print(f"p={g.p} q={g.q} corner_missing={str(g.corner_missing).lower()}")
        print(f"simple factors: numerator {num}, denominator {den}")
    return EXIT_OK


def cmd_wordproblem(args) -> int:
    w = _word(args, args.word)
    result = verifier.word_problem(w)
    _emit(args, {"word": format_word(w, _style(args)), "strands": w.strands, "trivial": result},
          [f"trivial: {str(result).lower()}"])
    return EXIT_OK


def cmd_equivalent(args) -> int:
    w1, w2 = _word(args, args.word1), _word(args, args.word2)
    result = verifier.equivalent(w1, w2)
    _emit(args, {"word1": format_word(w1, _style(args)), "word2": format_word(w2, _style(args)),
                 "strands": w1.strands, "equivalent": result},
          [f"equivalent: {str(result).lower()}"])
    return EXIT_OK


def _load_trace(path: str) -> explorer.Trace:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if text.lstrip().startswith("{"):
        return explorer.Trace.from_dict(json.loads(text))
    return explorer.Trace.from_text(text)


def cmd_replay(args) -> int:
    trace = _load_trace(args.tracefile)
    res = explorer.replay(trace)
    doc = {
        "valid": res.ok,
        "steps": len(trace.steps),
        "variant": trace.variant,
        "final": format_word(trace.final, _style(args)),
        "failed_step": res.index,
        "reason": res.reason,
    }
    lines = [f"valid: {str(res.ok).lower()}", f"steps: {len(trace.steps)}",
             f"final: {format_word(trace.final, _style(args))}"]
    if not res.ok:
        lines.append(f"first bad step: {res.index} ({res.reason})")
    _emit(args, doc, lines)
    return EXIT_OK if res.ok else EXIT_DOMAIN


def _write_or_print(text: str, output) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_family(args) -> int:
    trace = explorer.prop2_family(args.k) if args.name == "prop2" else explorer.prop4_family(args.k)
    if args.emit_trace:
        text = json.dumps(trace.to_dict(), indent=2) + "\n" if args.json else trace.to_text(_style(args))
        _write_or_print(text, args.output)
        return EXIT_OK
    res = explorer.replay(trace)
    doc = {
        "family": args.name,
        "k": args.k,
        "variant": trace.variant,
        "start": format_word(trace.start, _style(args)),
        "final": format_word(trace.final, _style(args)),
        "length": len(trace.final),
        "steps": len(trace.steps),
        "valid": res.ok,
    }
    _emit(args, doc, [f"{k}: {v}" for k, v in doc.items()])
    return EXIT_OK


def cmd_explore(args) -> int:
    w = _word(args, args.word)
    report = explorer.search_max_length(
        w, args.moves, args.variant, args.budget, target=args.target
    )
    doc = report.to_dict()
    if args.report:
        Path(args.report).write_text(json.dumps(doc, indent=2) + "\n")
    g = report.growth
    lines = [
        f"max length: {report.max_length_found} (start length {len(w)})",
        f"nodes explored: {report.nodes_explored}, words seen: {report.words_seen}",
        f"exhausted: {str(report.exhausted).lower()}",
        f"witness: {format_word(report.witness.final, _style(args))} ({len(report.witness.steps)} moves)",
        "growth: none" if g is None else
        f"growth: {format_word(g.word)} contains ancestor {format_word(g.ancestor)} at offset {g.offset}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_verify_bounds(args) -> int:
    report = verifier.check_bound(
        args.bound, args.strands, args.len, args.count, args.seed,
        strategies=args.strategies, depth=args.depth, jobs=args.jobs,
    )
    lines = [
        f"bound: {report.bound_id} (n={report.strands}, length={report.length})",
        f"samples: {report.samples}",
        f"max ratio: {float(report.max_ratio):.4f}",
        f"violations: {len(report.violations)}",
    ]
    _emit(args, report.to_dict(), lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidrev", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, strands=True):
        if strands:
            p.add_argument("--strands", "-n", type=int, required=True)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--numeric", action="store_true", help="print words as signed integers")
        return p

    for name in ("reverse", "reverse-left"):
        p = common(sub.add_parser(name, help=f"{name.replace('-', ' ')} a word to its numerator and denominator"))
        p.add_argument("word")
        p.set_defaults(func=cmd_reverse)

    p = common(sub.add_parser("grid", help="right reversing grid"))
    p.add_argument("word")
    p.add_argument("--ascii-art", action="store_true", help="only draw the grid")
    p.set_defaults(func=cmd_grid)

    p = common(sub.add_parser("wordproblem", help="does the word represent the identity?"))
    p.add_argument("word")
    p.set_defaults(func=cmd_wordproblem)

    p = common(sub.add_parser("equivalent", help="do two words represent the same braid?"))
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equivalent)

    p = common(sub.add_parser("replay", help="check a trace file step by step"), strands=False)
    p.add_argument("tracefile")
    p.set_defaults(func=cmd_replay)

    p = common(sub.add_parser("family", help="counterexample derivations"), strands=False)
    p.add_argument("name", choices=("prop2", "prop4"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit-trace", action="store_true", help="print the trace file")
    p.add_argument("--output", "-o", help="write the trace here instead of stdout")
    p.set_defaults(func=cmd_family)

    p = common(sub.add_parser("explore", help="best-first search for long words"))
    p.add_argument("word")
    p.add_argument("--moves", default="right,left,comm")
    p.add_argument("--variant", default=explorer.REDUCED, choices=explorer.VARIANTS)
    p.add_argument("--budget", type=int, default=100_000, help="expanded nodes")
    p.add_argument("--target", type=int, help="stop once a word this long is found")
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=cmd_explore)

    p = common(sub.add_parser("verify-bounds", help="empirical length-bound checks"))
    p.add_argument("--bound", choices=verifier.BOUND_IDS, default=verifier.PROP5_FINAL)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--strategies", type=int, help="random strategies per word (prop3-i)")
    p.add_argument("--depth", type=int, help="move depth (prop3-ii, prop3-iii)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_bounds)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (reversing.BudgetExceeded, verifier.ResourceLimit, MemoryError) as exc:
        print(f"braidrev: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (BraidError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"braidrev: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
