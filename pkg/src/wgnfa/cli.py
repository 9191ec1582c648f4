"""Command line front end.

Exit codes: 0 on success, 1 when validation fails or the fast and
brute-force paths diverge, 2 for usage errors, 3 for I/O and format
problems.  All tabular output is TSV on stdout; diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
import zlib
from pathlib import Path

from .closure import EpsilonCycleError, build_closure_arrays, build_marker_bits
from .crosscheck import crosscheck_instance
from .generate import sample_patterns
from .index import build_index
from .matcher import SentinelInPatternError, match_interval
from .model import (
    GeneralizedAutomaton,
    GnfaFormatError,
    escape_label,
    format_gnfa,
    parse_gnfa,
    parse_patterns,
    validate,
)
from .serial import IndexFormatError, deserialize, payload_bits, serialize


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _load_gnfa(path: str) -> GeneralizedAutomaton:
    return parse_gnfa(_read_bytes(path))


def cmd_build(args: argparse.Namespace) -> int:
    a = _load_gnfa(args.gnfa)
    rep = validate(a, args.axiom1_depth)
    if not rep.ok:
        for line in rep.lines():
            print(line, file=sys.stderr)
        return 1
    ix = build_index(a, with_sentinel=args.sentinel)
    Path(args.output).write_bytes(serialize(ix))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    a = _load_gnfa(args.gnfa)
    rep = validate(a, args.axiom1_depth)
    for line in rep.lines():
        print(line)
    cycle_ok = True
    try:
        build_closure_arrays(a)
        print("epsilon\tok")
    except EpsilonCycleError as exc:
        print(f"epsilon\tFAIL\t{exc}")
        cycle_ok = False
    return 0 if rep.ok and cycle_ok else 1


def cmd_closure(args: argparse.Namespace) -> int:
    a = _load_gnfa(args.gnfa)
    arrays = build_closure_arrays(a)
    markers = build_marker_bits(arrays)
    for i in range(1, a.state_count + 1):
        print(
            f"{i}\t{arrays.a_max[i]}\t{arrays.a_min[i]}"
            f"\t{int(markers.b_max[i])}\t{int(markers.b_min[i])}"
        )
    return 0


def cmd_query(args: argparse.Namespace) -> int:
    ix = deserialize(_read_bytes(args.index))
    patterns = parse_patterns(_read_bytes(args.patterns))
    for p in patterns:
        res = match_interval(ix, p)
        if args.trace and res.trace.steps:
            print(res.trace.dump_tsv())
        states = ",".join(str(q) for q in res.states())
        acc = "-" if res.accepted is None else ("1" if res.accepted else "0")
        print(f"{escape_label(p)}\t{res.lo}\t{res.hi}\t{res.count}\t{states}\t{acc}")
    return 0


def _default_battery(a: GeneralizedAutomaton) -> list[bytes]:
    symbols = sorted({b for _, _, rho in a.edges for b in rho})
    out: list[bytes] = [b""]
    layer = [b""]
    for _ in range(3):
        layer = [p + bytes([s]) for p in layer for s in symbols]
        out.extend(layer)
    rng = random.Random(zlib.crc32(format_gnfa(a).encode()))
    for _ in range(30):
        length = rng.randint(4, 8)
        if symbols:
            out.append(bytes(rng.choice(symbols) for _ in range(length)))
    return out


def cmd_oracle_check(args: argparse.Namespace) -> int:
    a = _load_gnfa(args.gnfa)
    if args.patterns:
        patterns = parse_patterns(_read_bytes(args.patterns))
    else:
        patterns = _default_battery(a)
    problems = crosscheck_instance(a, patterns)
    if problems:
        for msg in problems:
            print(f"divergence\t{msg}")
        return 1
    print(f"ok\t{len(patterns)}\tpatterns")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    a = _load_gnfa(args.gnfa)
    ix = build_index(a)
    blob = serialize(ix)
    s = ix.summary
    bound = 64 * (s.label_symbol_total + s.edge_count + s.state_count)
    bits = payload_bits(blob)
    print(f"space.payload_bits\t{bits}")
    print(f"space.bound_bits\t{bound}")
    print(f"space.within_bound\t{1 if bits <= bound else 0}")
    print(f"space.file_bytes\t{len(blob)}")

    if args.pattern_lengths:
        lengths = [int(tok) for tok in args.pattern_lengths.split(",") if tok]
        symbols = sorted({b for _, _, rho in a.edges for b in rho})
        if not symbols:
            print("query\tskipped\tno labeled edges", file=sys.stderr)
            return 0
        rng = random.Random(1729)
        for length in lengths:
            pattern = bytes(rng.choice(symbols) for _ in range(length))
            best = None
            ops = 0
            for _ in range(3):
                t0 = time.perf_counter()
                res = match_interval(ix, pattern)
                dt = time.perf_counter() - t0
                ops = res.trace.ops
                best = dt if best is None else min(best, dt)
            denom = max(1, ix.r * length)
            print(f"query\t{length}\t{best:.6f}\t{ops}\t{ops / denom:.3f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wgnfa",
        description="Index and query string-labeled automata in Wheeler order.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="validate, index and serialize an automaton")
    b.add_argument("gnfa")
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--sentinel", action="store_true", help="support membership queries")
    b.add_argument("--axiom1-depth", type=int, default=0)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("validate", help="check structure and the order axioms")
    v.add_argument("gnfa")
    v.add_argument("--axiom1-depth", type=int, default=0)
    v.set_defaults(func=cmd_validate)

    q = sub.add_parser("query", help="run patterns against a serialized index")
    q.add_argument("index")
    q.add_argument("--patterns", default="-", help="pattern file, '-' for stdin")
    q.add_argument("--trace", action="store_true", help="dump per-step internals")
    q.set_defaults(func=cmd_query)

    c = sub.add_parser("closure", help="dump the epsilon closure arrays")
    c.add_argument("gnfa")
    c.set_defaults(func=cmd_closure)

    o = sub.add_parser("oracle-check", help="compare against brute force")
    o.add_argument("gnfa")
    o.add_argument("--patterns")
    o.set_defaults(func=cmd_oracle_check)

    be = sub.add_parser("bench", help="report index size and query timings")
    be.add_argument("gnfa")
    be.add_argument("--pattern-lengths", help="comma-separated pattern lengths")
    be.set_defaults(func=cmd_bench)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EpsilonCycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GnfaFormatError, IndexFormatError, SentinelInPatternError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
