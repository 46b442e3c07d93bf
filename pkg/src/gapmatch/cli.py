"""Command-line interface: ``search``, ``score``, ``gen`` and ``bench``.

Occurrences are written as ``pattern<TAB>end`` lines, with 1-based pattern
numbers and 0-based end positions, sorted by end position then pattern.
The row engine reads the text in 64-symbol chunks, so in a streaming
setting its reports trail the input by up to 63 positions.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from gapmatch import _engine
from gapmatch.bench import (
    BENCH_HEADER,
    ENGINES,
    EngineDisagreement,
    GenParams,
    generate_patterns,
    random_text,
    run_bench,
    run_engine,
)
from gapmatch.column import preprocess
from gapmatch.decompose import decompose_set
from gapmatch.motif import compile_features, format_scores, parse_feature_file, score_sequence
from gapmatch.ordering import greedy_order, realized_cost
from gapmatch.pattern import PatternSyntaxError, jbar_transform, parse_pattern_file

def read_fasta(data: bytes) -> bytes:
    """Sequence content of a FASTA file: header and comment lines dropped, whitespace removed."""
    return b"".join(
        b"".join(line.split())
        for line in data.splitlines()
        if not line.startswith((b">", b";"))
    )


def _read_text(args) -> bytes:
    data = Path(args.text).read_bytes()
    return read_fasta(data) if args.fasta else data


def _write(args, payload: str) -> None:
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)


def _int_list(value: str) -> list[int]:
    try:
        return [int(x) for x in value.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from None


def cmd_search(args) -> int:
    ps = parse_pattern_file(Path(args.patterns).read_bytes())
    if not len(ps):
        raise ValueError(f"{args.patterns} contains no patterns")
    text = _read_text(args)
    identity = list(range(len(ps)))
    order = greedy_order(ps) if args.order == "greedy" else identity
    ordered = ps.reordered(order)
    if args.report_gj_cost:
        print(f"gj_cost\tinput={realized_cost(ps, identity)}\t"
              f"{args.order}={realized_cost(ps, order)}", file=sys.stderr)

    t0 = time.perf_counter()
    if args.algorithm == "column":
        jset = jbar_transform(ordered)
        if args.decompose_gaps:
            jset = decompose_set(jset)
        matcher = preprocess(jset)
        occs = matcher.search(text)
        gap_count, work = len(matcher.G), matcher.work_per_column
    else:
        occs = run_engine(args.algorithm, ordered, text, decompose=args.decompose_gaps)
        gap_count, work = len(ordered.gap_set), realized_cost(ordered, identity)
    elapsed = time.perf_counter() - t0

    hits = sorted((o.end, order[o.pattern]) for o in occs)
    _write(args, "".join(f"{k + 1}\t{end}\n" for end, k in hits))
    print(
        f"n={len(text)}\tklen={ordered.klen}\tG={gap_count}\tsum_Gj={work}\t"
        f"occ={len(hits)}\tseconds={elapsed:.4f}\tengine={args.algorithm}/{_engine.BACKEND}",
        file=sys.stderr,
    )
    return 0


def cmd_score(args) -> int:
    features = parse_feature_file(Path(args.features).read_bytes())
    m = args.m or max((f.last for f in features), default=0)
    if m < 1:
        raise ValueError("motif length is unknown; pass --m")
    text = _read_text(args)
    scores = score_sequence(compile_features(features, m), m, text)
    _write(args, format_scores(scores))
    return 0


def cmd_gen(args) -> int:
    text = _read_text(args)
    ps = generate_patterns(GenParams(args.k, args.l, args.b, args.count, args.seed), text)
    _write(args, ps.serialize().decode("latin-1"))
    return 0


def cmd_bench(args) -> int:
    if args.text:
        text = _read_text(args)
    else:
        text = random_text(args.n, args.alphabet.encode(), args.seed)
    rows = run_bench(
        text, args.k, args.l, args.b, args.count,
        engines=args.algorithm or ["column", "row"], reps=args.reps, seed=args.seed,
    )
    _write(args, BENCH_HEADER + "\n" + "".join(r.tsv() + "\n" for r in rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gapmatch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def text_args(p, required=True):
        p.add_argument("--text", required=required, help="text file (raw bytes)")
        p.add_argument("--fasta", action="store_true", help="strip FASTA headers and line breaks")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("search", help="report pattern occurrences")
    p.add_argument("--patterns", required=True, help="pattern file, one gapped pattern per line")
    text_args(p)
    p.add_argument("--algorithm", choices=ENGINES, default="column", help="matching engine (default: column)")
    p.add_argument("--decompose-gaps", action="store_true",
                   help="rewrite gaps over a power-of-two set first (column engine only)")
    p.add_argument("--order", choices=("input", "greedy"), default="input",
                   help="pattern layout order for the bit-vectors")
    p.add_argument("--report-gj-cost", action="store_true",
                   help="print the per-column gap work before and after reordering")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("score", help="score motif sites with weighted features")
    p.add_argument("--features", required=True, help="feature file: weight<TAB>pos:sym,...")
    text_args(p)
    p.add_argument("--m", type=int, default=0, help="motif length (default: largest feature position)")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("gen", help="sample random gapped patterns from a text")
    text_args(p)
    p.add_argument("--k", type=int, required=True, help="keywords per pattern")
    p.add_argument("--l", type=int, required=True, help="keyword length")
    p.add_argument("--b", type=int, required=True, help="maximum gap")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time engines over a parameter grid")
    text_args(p, required=False)
    p.add_argument("--n", type=int, default=1_000_000, help="random text length when --text is absent")
    p.add_argument("--alphabet", default="acgt", help="random text alphabet")
    p.add_argument("--k", type=_int_list, default=[6], help="comma-separated grid values")
    p.add_argument("--l", type=_int_list, default=[1])
    p.add_argument("--b", type=_int_list, default=[20])
    p.add_argument("--count", type=_int_list, default=[50])
    p.add_argument("--algorithm", action="append", choices=ENGINES,
                   help="engine to time; repeatable (default: column and row)")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, PatternSyntaxError, EngineDisagreement) as exc:
        print(f"gapmatch {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
