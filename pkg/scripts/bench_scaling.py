#!/usr/bin/env python3
"""Reproduce the two scaling measurements as console tables.

Closure: build the extrema arrays over synthetic epsilon chains one
decade apart and report times, ratios, and instrumented edge visits.
Query: fix one large trie-shaped instance and double the pattern
length, reporting time per query, the consecutive-doubling ratio, the
index-operation count, and ops normalized by r * m.
"""

from __future__ import annotations

import argparse
import random
import time

from wgnfa import (
    GeneralizedAutomaton,
    build_closure_arrays,
    build_index,
    build_piece_trie,
    match_interval,
)


def epsilon_chain(e: int) -> GeneralizedAutomaton:
    edges = tuple((i + 1, i, b"") for i in range(1, e + 1))
    return GeneralizedAutomaton(
        state_count=e + 1, edges=edges, finals=frozenset({1})
    )


def bench_closure(decades: list[int], reps: int) -> None:
    print("closure scaling over epsilon chains")
    print("e\ttime_s\tvisits\tratio")
    prev = None
    for e in decades:
        a = epsilon_chain(e)
        times = []
        for _ in range(reps):
            t0 = time.perf_counter()
            arrays = build_closure_arrays(a)
            times.append(time.perf_counter() - t0)
        best = min(times)
        ratio = "-" if prev is None else f"{best / prev:.2f}"
        print(f"{e}\t{best:.4f}\t{arrays.edge_visits}\t{ratio}")
        prev = best


def bench_query(seed: int, reps: int, max_exp: int) -> None:
    rng = random.Random(seed)
    a = build_piece_trie(
        rng, n_strings=1300, max_string_len=28, max_piece_len=2, alphabet=b"abcd"
    )
    ix = build_index(a)
    print(f"query scaling on a {a.state_count}-state, r={ix.r} instance")
    print("m\ttime_s\tratio\tops\tops/(r*m)")
    base = bytes(random.Random(seed + 1).choice(b"abcd") for _ in range(1 << max_exp))
    prev = None
    for exp in range(8, max_exp + 1):
        m = 1 << exp
        pat = base[:m]
        times = []
        for _ in range(reps):
            t0 = time.perf_counter()
            res = match_interval(ix, pat)
            times.append(time.perf_counter() - t0)
        best = min(times)
        ratio = "-" if prev is None else f"{best / prev:.2f}"
        ops = res.trace.ops
        print(f"{m}\t{best:.4f}\t{ratio}\t{ops}\t{ops / (ix.r * m):.3f}")
        prev = best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--reps", type=int, default=3, help="repetitions, best kept")
    ap.add_argument("--seed", type=int, default=271828)
    ap.add_argument("--max-exp", type=int, default=14, help="largest pattern 2^k")
    ap.add_argument(
        "--decades",
        default="10000,100000,1000000",
        help="comma-separated epsilon chain sizes",
    )
    args = ap.parse_args()
    decades = [int(tok) for tok in args.decades.split(",") if tok]
    bench_closure(decades, args.reps)
    print()
    bench_query(args.seed, args.reps, args.max_exp)


if __name__ == "__main__":
    main()
