"""Subpath queries against the index.

For a pattern alpha the answer is one interval of states: everything
reachable by some string ending in alpha.  The interval is pinned down
by two counters per pattern prefix,

  c[l] = number of states whose incoming strings all sort strictly
         below the length-l prefix (they form the prefix Q[1..c]),
  d[l] = c[l] plus the size of the suffixed block, i.e. the states
         with at least one incoming string ending in the prefix.

c and d are advanced one pattern symbol at a time.  The lower bound
step combines, for each chunk length k up to r, a cap on how many
length-k edges may enter the candidate block (counted out of the
interval already known for the l-k prefix) with a co-lexicographic cap
on the labels themselves, then rounds down to a closure marker.  The
upper bound step pushes the boundary up past forced edge targets and
suffix-labeled edges; when nothing forces it past c[l] the suffixed
block is empty and d[l] = c[l], otherwise the boundary rounds up to the
next closure marker.

Indexes built with the sentinel carry one extra lead state, so reported
intervals are shifted back down; membership (accepts) runs the same
recursion on sentinel-prefixed input and checks for final states,
without translating.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .index import WheelerIndex
from .model import SENTINEL, SENTINEL_BYTES, escape_label


class SentinelInPatternError(ValueError):
    """Patterns may not contain the reserved byte 0x01."""


@dataclass
class StepRecord:
    ell: int
    f: dict[int, int] = field(default_factory=dict)
    g: dict[int, int] = field(default_factory=dict)
    j_star: int = 0
    i_star: int = 0
    h_star: int = 0
    t_star: int = 0
    c: int = 0
    d: int = 0


@dataclass
class MatchTrace:
    pattern: bytes
    r: int
    c: list[int]
    d: list[int]
    steps: list[StepRecord] = field(default_factory=list)
    ops: int = 0  # index operations issued

    def dump_tsv(self) -> str:
        """One row per consumed symbol: l, prefix, f_1..f_r, g_1..g_r,
        j*, i*, h*, t*, c[l], d[l].  Dashes mark inapplicable entries."""
        rows = []
        for rec in self.steps:
            cols = [str(rec.ell), escape_label(self.pattern[: rec.ell])]
            cols += [str(rec.f[k]) if k in rec.f else "-" for k in range(1, self.r + 1)]
            cols += [str(rec.g[k]) if k in rec.g else "-" for k in range(1, self.r + 1)]
            cols += [
                str(rec.j_star),
                str(rec.i_star),
                str(rec.h_star),
                str(rec.t_star),
                str(rec.c),
                str(rec.d),
            ]
            rows.append("\t".join(cols))
        return "\n".join(rows)


@dataclass(frozen=True)
class QueryResult:
    lo: int
    hi: int
    count: int
    accepted: bool | None
    trace: MatchTrace

    def states(self) -> range:
        return range(self.lo, self.hi + 1)


def step_less(ix: WheelerIndex, trace: MatchTrace, ell: int) -> int:
    """Advance the strictly-below boundary to c[ell].

    Candidate j must not receive more length-k edges than leave the
    already-known strictly-below prefix for the l-k cut (that count is
    f_k), and no state up to j may receive a length-k edge whose label
    sorts at or above the current prefix.  The tightest j is then
    rounded down to a closure marker.
    """
    alpha = trace.pattern
    rec = StepRecord(ell=ell)
    j = ix.n_states
    for k in range(1, min(ix.r, ell - 1) + 1):
        chunk = alpha[ell - k : ell]
        fk = ix.out_count(chunk, trace.c[ell - k])
        trace.ops += 1
        rec.f[k] = fk
        bound = ix.max_prefix_with_in_at_most(chunk, fk)
        trace.ops += 1
        if bound < j:
            j = bound
    # every label comparison looks at most r bytes back, and one extra
    # byte keeps the longer-than-k strictness decisions identical, so a
    # bounded tail stands in for the whole prefix at O(r) per step
    prefix = alpha[max(0, ell - ix.r - 1) : ell]
    for k in range(1, ix.r + 1):
        hit = ix.min_state_with_len_k_label_ge(k, prefix)
        trace.ops += 1
        if hit is not None and hit - 1 < j:
            j = hit - 1
    rec.j_star = j
    t = ix.marker_floor(j)
    trace.ops += 1
    rec.t_star = t
    rec.c = t
    trace.steps.append(rec)
    return t


def step_lesseq(ix: WheelerIndex, trace: MatchTrace, ell: int, c_ell: int) -> int:
    """Advance the at-or-suffixed boundary to d[ell], given c[ell].

    Wherever the wider interval for an l-k cut emits more length-k
    chunk edges than the strict one (g_k > f_k), the boundary must reach
    the g_k-th smallest target of that chunk; it must also reach any
    edge whose whole label ends with the current prefix.  If neither
    pushes past c[ell] the suffixed block is empty; otherwise round up
    to the next closure marker.
    """
    alpha = trace.pattern
    rec = trace.steps[ell - 1]
    forced = 0
    for k in range(1, min(ix.r, ell - 1) + 1):
        chunk = alpha[ell - k : ell]
        gk = ix.out_count(chunk, trace.d[ell - k])
        trace.ops += 1
        rec.g[k] = gk
        if gk > rec.f[k]:
            pos = ix.min_prefix_with_in_at_least(chunk, gk)
            trace.ops += 1
            if pos > forced:
                forced = pos
    # same bounded tail as in step_less: a prefix longer than r can
    # never be a label suffix, and shorter ones are passed whole
    i_star = ix.max_state_with_suffix_label(alpha[max(0, ell - ix.r - 1) : ell])
    trace.ops += 1
    rec.i_star = i_star
    h = max(c_ell, i_star, forced)
    rec.h_star = h
    if h == c_ell:
        d = h
    else:
        d = ix.marker_ceiling(h)
        trace.ops += 1
    rec.d = d
    return d


def run_steps(ix: WheelerIndex, pattern: bytes) -> MatchTrace:
    """The raw recursion, in index numbering and with no translation."""
    trace = MatchTrace(pattern=pattern, r=ix.r, c=[0], d=[ix.n_states])
    for ell in range(1, len(pattern) + 1):
        c = step_less(ix, trace, ell)
        trace.c.append(c)
        d = step_lesseq(ix, trace, ell, c)
        trace.d.append(d)
    return trace


def match_interval(ix: WheelerIndex, pattern: bytes) -> QueryResult:
    """States reachable by some string ending in `pattern`.

    On a sentinel index the reported interval is translated back to the
    original numbering and `accepted` reports exact membership; on a
    plain index `accepted` is None.  The empty pattern answers (1, n)
    directly without touching the index.
    """
    if SENTINEL in pattern:
        raise SentinelInPatternError("pattern contains the reserved byte 0x01")
    shift = 1 if ix.sentinel_mode else 0
    if not pattern:
        n = ix.n_states - shift
        trace = MatchTrace(pattern=pattern, r=ix.r, c=[0], d=[ix.n_states])
        accepted = accepts(ix, pattern) if ix.sentinel_mode else None
        return QueryResult(lo=1, hi=n, count=n, accepted=accepted, trace=trace)
    trace = run_steps(ix, pattern)
    lo, hi = trace.c[-1] + 1, trace.d[-1]
    if shift:
        lo, hi = max(lo - 1, 1), hi - 1
    count = max(0, hi - lo + 1)
    accepted = accepts(ix, pattern) if ix.sentinel_mode else None
    return QueryResult(lo=lo, hi=hi, count=count, accepted=accepted, trace=trace)


def accepts(ix: WheelerIndex, pattern: bytes) -> bool:
    """Exact membership of `pattern` in the automaton's language.

    Requires a sentinel index: the recursion runs on the pattern with
    the sentinel prepended, whose suffixed block is exactly the set of
    states whose incoming strings equal the pattern, and acceptance is
    a final-state check on that block.
    """
    if not ix.sentinel_mode:
        raise ValueError("membership needs an index built with the sentinel")
    if SENTINEL in pattern:
        raise SentinelInPatternError("pattern contains the reserved byte 0x01")
    trace = run_steps(ix, SENTINEL_BYTES + pattern)
    return ix.finals_in(trace.c[-1] + 1, trace.d[-1])
