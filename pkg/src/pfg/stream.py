"""Streaming the pangenome suffix array from the suffix and segment tables.

Iteration walks the suffix table in sorted order, skips rows with no
pangenome counterpart, groups the remaining rows into blocks of equal
segment suffixes, and merges each block's occurrence lists by right-context
rank.  Memory stays proportional to the two tables plus the widest block;
the pangenome text is never materialized.
"""

from __future__ import annotations

import heapq
from typing import Iterator, NamedTuple

from .graph import PrefixFreeGraph
from .occurrences import SegmentTable
from .suffixes import SuffixTable


class Emission(NamedTuple):
    index: int
    sa: int
    seg_id: int
    pos: int
    bwt: str | None


def is_skipped(seg_id: int, pos: int, lengths: list[int], k: int) -> bool:
    """True for sentinel/separator rows and segment suffixes of length <= k."""
    if seg_id >= len(lengths):
        return True  # the sentinel row
    return lengths[seg_id] - pos <= k  # separator (0) or inside trigger/pads


def block_end(table: SuffixTable, start: int, lengths: list[int], k: int) -> int:
    """Exclusive end of the block of equal segment suffixes starting at ``start``.

    Consecutive rows share a block iff the LCP reaches the previous row's
    segment-suffix length; such blocks are contiguous in the table.
    """
    n = len(table.sa)
    j = start + 1
    length = lengths[table.seg_id[start]] - table.pos[start]
    while j < n and table.lcp[j] >= length:
        # equal suffix length is forced by prefix-freeness
        assert lengths[table.seg_id[j]] - table.pos[j] == length
        j += 1
    return j


def emit_block(
    rows: list[tuple[int, int]],
    segment_table: SegmentTable,
    contents: list[str],
    with_bwt: bool = True,
) -> Iterator[tuple[int, int, int, str | None]]:
    """Merge the occurrence lists of a block's rows by ascending rank.

    ``rows`` holds (seg_id, pos) pairs; yields (sa, seg_id, pos, bwt).
    Ranks are globally unique, so no tie-break is needed.
    """

    def row_occurrences(sid, pos):
        for occ in segment_table.occurrences[sid]:
            yield occ.rank, occ.start + pos, sid, pos, occ.prev

    if len(rows) == 1:
        sid, pos = rows[0]
        merged = row_occurrences(sid, pos)
    else:
        merged = heapq.merge(*(row_occurrences(sid, pos) for sid, pos in rows))
    for _, sa, sid, pos, prev in merged:
        if with_bwt:
            yield sa, sid, pos, contents[sid][pos - 1] if pos else prev
        else:
            yield sa, sid, pos, None


def derive_bwt(content: str, pos: int, prev: str) -> str:
    """Character preceding an emission: in-segment when pos > 0, else the
    occurrence's stored preceding character."""
    return content[pos - 1] if pos else prev


def stream(
    graph: PrefixFreeGraph,
    suffix_table: SuffixTable,
    segment_table: SegmentTable,
    with_bwt: bool = True,
) -> Iterator[Emission]:
    """Yield (index, sa, id, pos[, bwt]) for every pangenome position."""
    k = graph.k
    lengths = segment_table.lengths
    nseg = len(lengths)
    contents = [seg.content for seg in graph.segments]
    seg_ids = suffix_table.seg_id
    positions = suffix_table.pos
    n = len(suffix_table.sa)
    expected = sum(
        (lengths[sid] - k) * len(occ)
        for sid, occ in enumerate(segment_table.occurrences)
    )
    counter = 0
    i = 0
    while i < n:
        sid = seg_ids[i]
        if sid >= nseg or lengths[sid] - positions[i] <= k:
            i += 1
            continue
        j = block_end(suffix_table, i, lengths, k)
        rows = [(seg_ids[r], positions[r]) for r in range(i, j)]
        for sa, esid, pos, bwt in emit_block(rows, segment_table, contents, with_bwt):
            yield Emission(counter, sa, esid, pos, bwt)
            counter += 1
        i = j
    if counter != expected:
        raise RuntimeError(f"emitted {counter} records, expected {expected}")
