"""GFA 1.0 serialization and parsing of prefix-free graphs.

Graphs are written with pad dots included in the S-lines and the trigger
length recorded as a ``TL`` header tag, so a GFA file alone fully
determines the graph and its joins.  Reverse orientations and GFA 2.0 are
unsupported.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FormatError, StructureError
from .graph import PAD, Pangenome, PrefixFreeGraph, Segment, validate


@dataclass
class GfaDocument:
    header_tags: dict[str, str] = field(default_factory=dict)
    segments: dict[str, str] = field(default_factory=dict)  # name -> sequence
    links: list[tuple[str, str, int]] = field(default_factory=list)
    # (name, segment names, per-step overlaps or None for "*")
    paths: list[tuple[str, list[str], list[int] | None]] = field(default_factory=list)

    @property
    def trigger_length(self) -> int | None:
        tag = self.header_tags.get("TL")
        return int(tag) if tag is not None else None


def write_gfa(graph: PrefixFreeGraph, sink) -> None:
    """Deterministic GFA 1.0 output: header, S by id, L sorted, P in order."""
    k = graph.k
    sink.write(f"H\tVN:Z:1.0\tTL:i:{k}\n")
    for seg in graph.segments:
        sink.write(f"S\t{seg.id}\t{seg.content}\n")
    pairs = sorted(
        {
            (path[t], path[t + 1])
            for _, path in graph.paths
            for t in range(len(path) - 1)
        }
    )
    for a, b in pairs:
        sink.write(f"L\t{a}\t+\t{b}\t+\t{k}M\n")
    for name, path in graph.paths:
        steps = ",".join(f"{sid}+" for sid in path)
        overlaps = ",".join(f"{k}M" for _ in range(len(path) - 1)) or "*"
        sink.write(f"P\t{name}\t{steps}\t{overlaps}\n")


def _parse_tags(fields, lineno):
    tags = {}
    for raw in fields:
        parts = raw.split(":", 2)
        if len(parts) != 3:
            raise FormatError(f"malformed tag {raw!r}", line=lineno)
        tags[parts[0]] = parts[2]
    return tags


def read_gfa(stream) -> GfaDocument:
    """Tolerant GFA parse: unknown record types are ignored."""
    doc = GfaDocument()
    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\r\n")
        if not line:
            continue
        fields = line.split("\t")
        kind = fields[0]
        if kind == "H":
            doc.header_tags.update(_parse_tags(fields[1:], lineno))
        elif kind == "S":
            if len(fields) < 3:
                raise FormatError("S-record needs a name and a sequence", line=lineno)
            doc.segments[fields[1]] = fields[2].upper()
        elif kind == "L":
            if len(fields) < 6:
                raise FormatError("L-record needs five fields", line=lineno)
            if fields[2] != "+" or fields[4] != "+":
                raise FormatError("reverse orientation is unsupported", line=lineno)
            doc.links.append((fields[1], fields[3], _parse_overlap(fields[5], lineno)))
        elif kind == "P":
            if len(fields) < 4:
                raise FormatError("P-record needs a name, steps and overlaps", line=lineno)
            name = fields[1]
            steps = []
            for step in fields[2].split(","):
                if step.endswith("-"):
                    raise FormatError(
                        f"reverse-orientation step {step!r} is unsupported", line=lineno
                    )
                if not step.endswith("+"):
                    raise FormatError(f"malformed step {step!r}", line=lineno)
                sid = step[:-1]
                if sid not in doc.segments:
                    raise FormatError(f"path step references unknown segment {sid!r}", line=lineno)
                steps.append(sid)
            if fields[3] == "*":
                overlaps = None
            else:
                overlaps = [_parse_overlap(o, lineno) for o in fields[3].split(",")]
                if len(overlaps) != len(steps) - 1:
                    raise FormatError("overlap count does not match step count", line=lineno)
            doc.paths.append((name, steps, overlaps))
    return doc


def _parse_overlap(token: str, lineno: int) -> int:
    if token == "*":
        return 0
    if not token.endswith("M") or not token[:-1].isdigit():
        raise FormatError(f"unsupported overlap {token!r}", line=lineno)
    return int(token[:-1])


def expand_gfa_paths(doc: GfaDocument) -> Pangenome:
    """Expand each path by overlap-eliding concatenation; strip trailing pads.

    Declared overlaps must agree with the actual segment sequences.
    """
    sequences = []
    for name, steps, overlaps in doc.paths:
        expanded = doc.segments[steps[0]]
        for t in range(1, len(steps)):
            nxt = doc.segments[steps[t]]
            ov = overlaps[t - 1] if overlaps is not None else 0
            if ov:
                if expanded[-ov:] != nxt[:ov]:
                    raise FormatError(
                        f"path {name!r} step {t}: declared overlap {ov} does not "
                        "match the segment sequences"
                    )
            expanded += nxt[ov:]
        expanded = expanded.rstrip(PAD)
        if not expanded:
            raise FormatError(f"path {name!r} expands to an empty sequence")
        sequences.append((name, expanded))
    return Pangenome(sequences=sequences)


def graph_from_gfa(doc: GfaDocument) -> PrefixFreeGraph:
    """Interpret a GFA document written by :func:`write_gfa` as a graph."""
    k = doc.trigger_length
    if k is None:
        raise FormatError("missing TL header tag (trigger length)")
    try:
        ids = sorted(doc.segments, key=int)
    except ValueError:
        raise FormatError("segment names must be integer ids")
    if [int(s) for s in ids] != list(range(len(ids))):
        raise FormatError("segment ids must be consecutive from 0")
    segments = [Segment(int(s), doc.segments[s]) for s in ids]
    paths = [(name, [int(s) for s in steps]) for name, steps, _ in doc.paths]
    graph = PrefixFreeGraph(k=k, segments=segments, paths=paths)
    report = validate(graph)
    if not report.ok:
        raise StructureError(
        "GFA does not encode a valid prefix-free graph: "
            + "; ".join(issue.message for issue in report.errors)
        )
    return graph
