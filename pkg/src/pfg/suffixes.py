"""Segment join and its suffix/LCP/ID/position arrays (the suffix table)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import PAD, SENTINEL, SEPARATOR, PrefixFreeGraph

# Byte -> rank lookup implementing $ < # < . < input bytes.
_RANK_LUT = np.arange(256, dtype=np.int64) + 3
_RANK_LUT[ord(SENTINEL)] = 0
_RANK_LUT[ord(SEPARATOR)] = 1
_RANK_LUT[ord(PAD)] = 2


@dataclass
class SegmentJoin:
    """All segment contents concatenated with separators and a sentinel."""

    text: str
    boundaries: list[int]  # start offset of each segment in text


@dataclass
class SuffixTable:
    """Parallel arrays over the segment join, in sorted-suffix order."""

    sa: list[int]
    lcp: list[int]
    seg_id: list[int]
    pos: list[int]

    def __len__(self) -> int:
        return len(self.sa)


def build_join(graph: PrefixFreeGraph) -> SegmentJoin:
    parts = []
    boundaries = []
    offset = 0
    for seg in graph.segments:
        boundaries.append(offset)
        parts.append(seg.content)
        parts.append(SEPARATOR)
        offset += len(seg.content) + 1
    parts.append(SENTINEL)
    return SegmentJoin(text="".join(parts), boundaries=boundaries)


def suffix_array_ints(symbols) -> list[int]:
    """Suffix array of an integer sequence by prefix doubling (lexsort)."""
    ranks = np.asarray(symbols, dtype=np.int64)
    n = ranks.size
    if n == 0:
        return []
    if n == 1:
        return [0]
    order = np.argsort(ranks, kind="stable")
    r = np.empty(n, dtype=np.int64)
    sorted_vals = ranks[order]
    changed = np.ones(n, dtype=bool)
    changed[1:] = sorted_vals[1:] != sorted_vals[:-1]
    r[order] = np.cumsum(changed) - 1
    h = 1
    while r[order[-1]] != n - 1:
        key2 = np.full(n, -1, dtype=np.int64)
        key2[: n - h] = r[h:]
        order = np.lexsort((key2, r))
        a = r[order]
        b = key2[order]
        changed = np.ones(n, dtype=bool)
        changed[1:] = (a[1:] != a[:-1]) | (b[1:] != b[:-1])
        nr = np.empty(n, dtype=np.int64)
        nr[order] = np.cumsum(changed) - 1
        r = nr
        h *= 2
    return order.tolist()


def suffix_array(text: str) -> list[int]:
    """Suffix array of ``text`` under the reserved-character ranking."""
    raw = np.frombuffer(text.encode("ascii"), dtype=np.uint8)
    return suffix_array_ints(_RANK_LUT[raw])


def lcp_array(text: str, sa: list[int]) -> list[int]:
    """Kasai's algorithm; LCP[0] = -1 by convention."""
    n = len(sa)
    isa = inverse(sa)
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = isa[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and text[i + h] == text[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    lcp[0] = -1
    return lcp


def inverse(sa: list[int]) -> list[int]:
    """Inverse permutation: isa[sa[i]] = i."""
    isa = [0] * len(sa)
    for i, p in enumerate(sa):
        isa[p] = i
    return isa


def annotate(join: SegmentJoin, sa: list[int]) -> tuple[list[int], list[int]]:
    """Segment index and in-segment offset per sorted suffix.

    Separator positions take the preceding segment's id with offset equal
    to its length; the final sentinel takes id = segment count, offset 0.
    """
    n = len(join.text)
    seg_id_text = [0] * n
    pos_text = [0] * n
    sid = 0
    offset = 0
    for p in range(n - 1):
        seg_id_text[p] = sid
        pos_text[p] = offset
        if join.text[p] == SEPARATOR:
            sid += 1
            offset = 0
        else:
            offset += 1
    seg_id_text[n - 1] = len(join.boundaries)  # the sentinel row
    pos_text[n - 1] = 0
    seg_id = [seg_id_text[p] for p in sa]
    pos = [pos_text[p] for p in sa]
    return seg_id, pos


def build_suffix_table(graph: PrefixFreeGraph) -> SuffixTable:
    join = build_join(graph)
    sa = suffix_array(join.text)
    lcp = lcp_array(join.text, sa)
    seg_id, pos = annotate(join, sa)
    return SuffixTable(sa=sa, lcp=lcp, seg_id=seg_id, pos=pos)
