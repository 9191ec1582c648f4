"""Agreement checks between the index path and the brute-force path.

Every pattern is pushed through both; besides raw equality this also
asserts the structural facts the whole design rests on, namely that
the matching states always form one contiguous block placed directly
after the strictly-below block, and that intervals on a sentinel index
are the plain intervals shifted by the extra lead state.
"""

from __future__ import annotations

from .closure import build_closure_arrays
from .index import build_index
from .matcher import match_interval
from .model import GeneralizedAutomaton, escape_label
from .oracle import (
    ShapeViolation,
    brute_accepts,
    brute_below_count,
    brute_closure,
    brute_match,
)


def crosscheck_instance(
    a: GeneralizedAutomaton,
    patterns: list[bytes],
    check_closure: bool = True,
) -> list[str]:
    """Returns divergence descriptions; an empty list means agreement."""
    problems: list[str] = []
    ix = build_index(a)
    ixs = build_index(a, with_sentinel=True)
    n = a.state_count

    if check_closure:
        arrays = build_closure_arrays(a)
        ref_max, ref_min = brute_closure(a)
        if arrays.a_max != ref_max:
            problems.append("closure a_max disagrees with brute-force search")
        if arrays.a_min != ref_min:
            problems.append("closure a_min disagrees with brute-force search")

    for p in patterns:
        tag = escape_label(p)
        res = match_interval(ix, p)
        if p == b"" and (res.lo, res.hi) != (1, n):
            problems.append(f"{tag}: empty pattern gave {res.lo}..{res.hi}, not 1..{n}")
            continue

        expected = brute_match(a, p)
        try:
            below = brute_below_count(a, p)
        except ShapeViolation as exc:
            problems.append(f"{tag}: {exc}")
            continue

        block = list(range(below + 1, below + 1 + len(expected)))
        if sorted(expected) != block:
            problems.append(
                f"{tag}: oracle states {sorted(expected)} are not the block "
                f"{below + 1}..{below + len(expected)}"
            )
            continue
        if list(res.states()) != block:
            problems.append(
                f"{tag}: interval {res.lo}..{res.hi} but oracle block "
                f"{below + 1}..{below + len(expected)}"
            )

        res_s = match_interval(ixs, p)
        if (res_s.lo, res_s.hi) != (res.lo, res.hi):
            problems.append(
                f"{tag}: sentinel interval {res_s.lo}..{res_s.hi} "
                f"differs from plain {res.lo}..{res.hi}"
            )
        if res_s.accepted != brute_accepts(a, p):
            problems.append(
                f"{tag}: membership {res_s.accepted} vs brute {not res_s.accepted}"
            )
    return problems
