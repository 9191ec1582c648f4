"""Binary container for a built index.

Layout, all integers little-endian:

  magic   "WGNE" (4 bytes)
  version 0x01   (1 byte)
  flags   1 byte, bit 0 set when the index was built with the sentinel
  8 sections, each an 8-byte payload length followed by the payload:
    1 summary        width byte w in {1,2,4,8}, then six w-byte ints:
                     states, edges, total label bytes, alphabet size,
                     max label length, epsilon edge count
    2 finals         packed bits, one per state
    3 b_max markers  packed bits
    4 b_min markers  packed bits
    5 dictionary     label count, then per label (sorted by reversed
                     bytes): length + raw bytes
    6 postings       per dictionary entry: edge count, that many
                     ascending sources, that many ascending targets
    7 length tables  for each k = 1..r: row count, then rows of
                     (label id, target) sorted by reversed label
    8 edge table     row count, then all labeled edges as
                     (label id, target) rows in the same sort
  checksum 8 bytes: byte sum of everything above, mod 2^64

The width w is the smallest of 1/2/4/8 bytes that fits every integer in
the file, so small automata serialize compactly while anything up to
2^64 still round-trips.  Sections 7 and 8 are redundant given 5 and 6
but are stored anyway so a reader can map the file without re-deriving
sort orders.
"""

from __future__ import annotations

import numpy as np

from .index import LabelPostings, WheelerIndex
from .model import AutomatonSummary, colex_key

MAGIC = b"WGNE"
VERSION = 1
FLAG_SENTINEL = 0x01


class IndexFormatError(ValueError):
    """Raised for unreadable index files (magic, version, truncation,
    checksum, or inconsistent section contents)."""


def _byte_sum(data: bytes) -> int:
    if not data:
        return 0
    return int(np.frombuffer(data, dtype=np.uint8).sum(dtype=np.uint64)) % (1 << 64)


def _pick_width(vmax: int) -> int:
    for w in (1, 2, 4):
        if vmax < 1 << (8 * w):
            return w
    return 8


class _Writer:
    def __init__(self, width: int):
        self.width = width
        self.parts: list[bytes] = []

    def u(self, value: int) -> None:
        self.parts.append(int(value).to_bytes(self.width, "little"))

    def raw(self, data: bytes) -> None:
        self.parts.append(data)

    def payload(self) -> bytes:
        return b"".join(self.parts)


def serialize(ix: WheelerIndex) -> bytes:
    s = ix.summary
    label_list = list(ix.labels)
    label_id = {rho: i for i, rho in enumerate(label_list)}
    vmax = max(
        s.state_count,
        s.edge_count,
        s.label_symbol_total,
        s.alphabet_size,
        s.max_label_len,
        s.epsilon_edge_count,
        len(label_list),
    )
    w = _pick_width(vmax)

    wr = _Writer(w)
    wr.raw(bytes([w]))
    for v in (
        s.state_count,
        s.edge_count,
        s.label_symbol_total,
        s.alphabet_size,
        s.max_label_len,
        s.epsilon_edge_count,
    ):
        wr.u(v)
    sec_summary = wr.payload()

    sec_finals = ix.finals.to_bytes()
    sec_bmax = ix.b_max.to_bytes()
    sec_bmin = ix.b_min.to_bytes()

    wr = _Writer(w)
    wr.u(len(label_list))
    for rho in label_list:
        wr.u(len(rho))
        wr.raw(rho)
    sec_dict = wr.payload()

    wr = _Writer(w)
    for rho in label_list:
        p = ix.postings[rho]
        wr.u(len(p.sources))
        for v in p.sources:
            wr.u(v)
        for v in p.targets:
            wr.u(v)
    sec_postings = wr.payload()

    wr = _Writer(w)
    for k in range(1, s.max_label_len + 1):
        rows = _length_rows(ix, k)
        wr.u(len(rows))
        for rho, tgt in rows:
            wr.u(label_id[rho])
            wr.u(tgt)
    sec_lengths = wr.payload()

    wr = _Writer(w)
    rows = _colex_rows(ix)
    wr.u(len(rows))
    for rho, tgt in rows:
        wr.u(label_id[rho])
        wr.u(tgt)
    sec_colex = wr.payload()

    body = bytearray()
    body += MAGIC
    body.append(VERSION)
    body.append(FLAG_SENTINEL if ix.sentinel_mode else 0)
    for sec in (
        sec_summary,
        sec_finals,
        sec_bmax,
        sec_bmin,
        sec_dict,
        sec_postings,
        sec_lengths,
        sec_colex,
    ):
        body += len(sec).to_bytes(8, "little")
        body += sec
    body += _byte_sum(bytes(body)).to_bytes(8, "little")
    return bytes(body)


def payload_bits(data: bytes) -> int:
    """Summed size of the eight section payloads, in bits.

    This is the content the succinct space accounting is about; the
    fixed 78 bytes of magic, version, flags, section lengths and
    checksum are framing overhead on top.
    """
    pos = 6
    total = 0
    for _ in range(8):
        ln = int.from_bytes(data[pos : pos + 8], "little")
        total += ln
        pos += 8 + ln
    return 8 * total


def _length_rows(ix: WheelerIndex, k: int) -> list[tuple[bytes, int]]:
    tab = ix._by_len.get(k)
    if tab is None:
        return []
    return [(rl[::-1], t) for rl, t in zip(tab.rev_labels, tab.targets)]


def _colex_rows(ix: WheelerIndex) -> list[tuple[bytes, int]]:
    ct = ix._colex
    return [(rl[::-1], t) for rl, t in zip(ct.rev_labels, ct.targets)]


class _Reader:
    def __init__(self, data: bytes, width: int = 1):
        self.data = data
        self.pos = 0
        self.width = width

    def take(self, k: int) -> bytes:
        if self.pos + k > len(self.data):
            raise IndexFormatError("truncated index file")
        out = self.data[self.pos : self.pos + k]
        self.pos += k
        return out

    def u(self) -> int:
        return int.from_bytes(self.take(self.width), "little")

    def done(self) -> bool:
        return self.pos == len(self.data)


def deserialize(data: bytes) -> WheelerIndex:
    if len(data) < 6:
        raise IndexFormatError("truncated index file")
    if data[:4] != MAGIC:
        raise IndexFormatError("bad magic, not an index file")
    if data[4] != VERSION:
        raise IndexFormatError(f"unsupported index version {data[4]}")
    flags = data[5]
    if flags & ~FLAG_SENTINEL:
        raise IndexFormatError(f"unknown flag bits 0x{flags:02x}")

    # walk the section frame before touching the checksum, so a cut-off
    # file reports as truncation and not as a sum mismatch
    body_end = len(data) - 8
    pos = 6
    bounds = []
    for _ in range(8):
        if pos + 8 > body_end:
            raise IndexFormatError("truncated index file")
        ln = int.from_bytes(data[pos : pos + 8], "little")
        pos += 8
        if pos + ln > body_end:
            raise IndexFormatError("truncated index file")
        bounds.append((pos, pos + ln))
        pos += ln
    if pos != body_end:
        raise IndexFormatError("trailing bytes after final section")

    stored_sum = int.from_bytes(data[-8:], "little")
    if _byte_sum(data[:body_end]) != stored_sum:
        raise IndexFormatError("checksum mismatch")
    sections = [data[a:b] for a, b in bounds]

    rd = _Reader(sections[0])
    w = rd.take(1)[0]
    if w not in (1, 2, 4, 8):
        raise IndexFormatError(f"bad integer width {w}")
    rd.width = w
    summary = AutomatonSummary(*(rd.u() for _ in range(6)))
    if not rd.done():
        raise IndexFormatError("oversized summary section")
    n = summary.state_count

    def unpack_bits(payload: bytes, what: str) -> np.ndarray:
        if len(payload) != (n + 7) // 8:
            raise IndexFormatError(f"{what} bit section has the wrong length")
        return np.unpackbits(np.frombuffer(payload, dtype=np.uint8), count=n)

    finals_bits = unpack_bits(sections[1], "finals")
    bmax_bits = unpack_bits(sections[2], "b_max")
    bmin_bits = unpack_bits(sections[3], "b_min")

    rd = _Reader(sections[4], w)
    label_count = rd.u()
    labels = []
    for _ in range(label_count):
        ln = rd.u()
        labels.append(rd.take(ln))
    if not rd.done():
        raise IndexFormatError("oversized dictionary section")
    if labels != sorted(labels, key=colex_key):
        raise IndexFormatError("dictionary not in sorted order")

    rd = _Reader(sections[5], w)
    postings = {}
    for rho in labels:
        cnt = rd.u()
        sources = tuple(rd.u() for _ in range(cnt))
        targets = tuple(rd.u() for _ in range(cnt))
        postings[rho] = LabelPostings(sources, targets)
    if not rd.done():
        raise IndexFormatError("oversized postings section")

    rd = _Reader(sections[6], w)
    length_rows: dict[int, list[tuple[bytes, int]]] = {}
    for k in range(1, summary.max_label_len + 1):
        cnt = rd.u()
        if not cnt:
            continue
        rows = []
        for _ in range(cnt):
            lid = rd.u()
            if lid >= label_count:
                raise IndexFormatError("label id out of range")
            rows.append((labels[lid][::-1], rd.u()))
        length_rows[k] = rows
    if not rd.done():
        raise IndexFormatError("oversized length table section")

    rd = _Reader(sections[7], w)
    cnt = rd.u()
    colex_rows = []
    for _ in range(cnt):
        lid = rd.u()
        if lid >= label_count:
            raise IndexFormatError("label id out of range")
        colex_rows.append((labels[lid][::-1], rd.u()))
    if not rd.done():
        raise IndexFormatError("oversized edge table section")

    ix = WheelerIndex(
        summary=summary,
        sentinel_mode=bool(flags & FLAG_SENTINEL),
        finals_bits=finals_bits,
        b_max_bits=bmax_bits,
        b_min_bits=bmin_bits,
        labels=tuple(labels),
        postings=postings,
        length_rows=length_rows,
        colex_rows=colex_rows,
    )
    return ix
