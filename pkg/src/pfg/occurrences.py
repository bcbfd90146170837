"""Path join and per-segment occurrence lists (the segment table)."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import SENTINEL, PrefixFreeGraph, pangenome_offsets, reconstruct
from .suffixes import inverse, suffix_array_ints

END = 0  # terminates the path join; smallest symbol
SEP = 1  # delimits paths; below every segment id
_ID_BASE = 2  # segment id i is stored as symbol i + 2


@dataclass
class PathJoin:
    """All ID-paths concatenated over the integer symbol alphabet."""

    symbols: list[int]
    origins: list[tuple[int, int] | None]  # (path, step) or None for END/SEP


@dataclass(frozen=True)
class Occurrence:
    start: int  # pangenome offset
    rank: int  # right-context rank (ISA of the following join position)
    prev: str  # preceding pangenome character, SENTINEL at sequence starts


@dataclass
class SegmentTable:
    """Per segment: length and occurrences sorted ascending by rank."""

    lengths: list[int]
    occurrences: list[list[Occurrence]]


def build_path_join(graph: PrefixFreeGraph) -> PathJoin:
    symbols = []
    origins = []
    for j, (_, path) in enumerate(graph.paths):
        for t, sid in enumerate(path):
            symbols.append(sid + _ID_BASE)
            origins.append((j, t))
        symbols.append(SEP)
        origins.append(None)
    symbols.append(END)
    origins.append(None)
    return PathJoin(symbols=symbols, origins=origins)


def occurrence_starts(graph: PrefixFreeGraph) -> list[list[int]]:
    """Pangenome start offset of every path step, per path."""
    offsets = pangenome_offsets(graph)
    k = graph.k
    starts = []
    for (_, path), base in zip(graph.paths, offsets):
        row = []
        s = base
        for sid in path:
            row.append(s)
            s += len(graph.content(sid)) - k
        starts.append(row)
    return starts


def right_context_ranks(join: PathJoin) -> list[list[int]]:
    """Rank of the join suffix following each occurrence, per path.

    The ranks are raw ISA values of the path-join suffix array; only their
    relative order matters.
    """
    isa = inverse(suffix_array_ints(join.symbols))
    ranks: list[list[int]] = []
    for i, origin in enumerate(join.origins):
        if origin is None:
            continue
        j, t = origin
        while len(ranks) <= j:
            ranks.append([])
        assert t == len(ranks[j])
        ranks[j].append(isa[i + 1])
    return ranks


def preceding_chars(graph: PrefixFreeGraph, starts: list[list[int]]) -> list[list[str]]:
    """Character before each occurrence; SENTINEL at sequence starts."""
    prevs = []
    for (_, path), row in zip(graph.paths, starts):
        base = row[0]
        seq = None
        chars = []
        for s in row:
            if s == base:
                chars.append(SENTINEL)
            else:
                if seq is None:
                    seq = reconstruct(graph, len(prevs))
                chars.append(seq[s - base - 1])
        prevs.append(chars)
    return prevs


def build_segment_table(graph: PrefixFreeGraph) -> SegmentTable:
    """Assemble lengths, starts, ranks and preceding characters."""
    starts = occurrence_starts(graph)
    ranks = right_context_ranks(build_path_join(graph))
    prevs = preceding_chars(graph, starts)
    occurrences: list[list[Occurrence]] = [[] for _ in graph.segments]
    for (_, path), s_row, r_row, p_row in zip(graph.paths, starts, ranks, prevs):
        for sid, s, r, p in zip(path, s_row, r_row, p_row):
            occurrences[sid].append(Occurrence(start=s, rank=r, prev=p))
    for occ in occurrences:
        occ.sort(key=lambda o: o.rank)
    lengths = [len(seg.content) for seg in graph.segments]
    return SegmentTable(lengths=lengths, occurrences=occurrences)
