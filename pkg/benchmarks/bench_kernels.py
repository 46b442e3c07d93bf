"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --n 200000 --count 50 --b 40

Both backends must return identical occurrences; the script exits non-zero
otherwise.
"""

from __future__ import annotations

import argparse
import sys
import time

from gapmatch import _engine
from gapmatch.bench import GenParams, generate_patterns, random_text
from gapmatch.column import preprocess
from gapmatch.decompose import decompose_set
from gapmatch.pattern import jbar_transform
from gapmatch.row import RowMatcher


def timed(fn, reps):
    best = float("inf")
    result = None
    for _ in range(reps):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200_000)
    ap.add_argument("--alphabet", default="acgt")
    ap.add_argument("--k", type=int, default=6)
    ap.add_argument("--l", type=int, default=1)
    ap.add_argument("--b", type=int, default=40)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = _engine.available()
    if "compiled" not in backends:
        print("compiled kernels are not built; only the fallback can be timed", file=sys.stderr)

    text = random_text(args.n, args.alphabet.encode(), args.seed)
    ps = generate_patterns(GenParams(args.k, args.l, args.b, args.count, args.seed), text)
    engines = {
        "column": preprocess(jbar_transform(ps)),
        "column+decompose": preprocess(decompose_set(jbar_transform(ps))),
        "row": RowMatcher.prepare(ps),
    }

    print("engine\tbackend\tseconds\tMB/s\tocc\tspeedup")
    ok = True
    for name, matcher in engines.items():
        results = {}
        for backend in backends:
            secs, occs = timed(lambda: matcher.search(text, backend=backend), args.reps)
            results[backend] = (secs, occs)
        base = results.get("python", (None,))[0]
        for backend, (secs, occs) in results.items():
            speed = f"{base / secs:.1f}x" if base else "-"
            print(f"{name}\t{backend}\t{secs:.4f}\t{args.n / secs / 1e6:.2f}\t{len(occs)}\t{speed}")
        outputs = {tuple(occs) for _, occs in results.values()}
        if len(outputs) > 1:
            print(f"{name}: backends disagree", file=sys.stderr)
            ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
