"""Brute-force suffix array and BWT over the expanded pangenome text.

Deliberately naive ground truth for tests and the ``--verify`` flag;
restricted to small inputs (quadratic-ish behaviour).
"""

from __future__ import annotations

from bisect import bisect_right

from .graph import PAD, SENTINEL, Pangenome

MAX_ORACLE_BYTES = 50_000


def oracle_text(pangenome: Pangenome, k: int) -> tuple[str, list[int]]:
    """Each sequence followed by k pads; also the start offset of every
    sequence within the padded text."""
    parts = []
    starts = []
    offset = 0
    for _, data in pangenome.sequences:
        starts.append(offset)
        parts.append(data)
        parts.append(PAD * k)
        offset += len(data) + k
    return "".join(parts), starts


def oracle_sa(pangenome: Pangenome, k: int) -> list[int]:
    """Sort all suffixes of the padded text, drop pad positions, and map the
    survivors to pangenome coordinates."""
    if pangenome.total_length > MAX_ORACLE_BYTES:
        raise ValueError("oracle restricted to small inputs")
    text, starts = oracle_text(pangenome, k)
    keep = []
    shift = []  # pad characters before each kept position
    pads = 0
    pos = 0
    for _, data in pangenome.sequences:
        for _ in data:
            keep.append(pos)
            shift.append(pads)
            pos += 1
        pos += k
        pads += k
    order = sorted(range(len(keep)), key=lambda i: text[keep[i] :])
    return [keep[i] - shift[i] for i in order]


def oracle_bwt(pangenome: Pangenome, sa: list[int]) -> list[str]:
    """Preceding character of each suffix; SENTINEL at sequence starts."""
    bases = []
    offset = 0
    for _, data in pangenome.sequences:
        bases.append(offset)
        offset += len(data)
    out = []
    for s in sa:
        j = bisect_right(bases, s) - 1
        if s == bases[j]:
            out.append(SENTINEL)
        else:
            out.append(pangenome.sequences[j][1][s - bases[j] - 1])
    return out
