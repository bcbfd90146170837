"""FASTA and trigger-list readers."""

from __future__ import annotations

from .automaton import TriggerSet
from .errors import ConfigError, FormatError
from .graph import _MIN_INPUT, Pangenome


def read_fasta(stream) -> Pangenome:
    """Parse a FASTA stream into a Pangenome.

    Names are headers up to the first whitespace; sequence lines are
    concatenated and uppercased; CR/LF is tolerated.
    """
    sequences = []
    name = None
    chunks: list[str] = []
    start_line = 0

    def flush(end_line):
        if name is None:
            return
        data = "".join(chunks)
        if not data:
            raise FormatError(f"record {name!r} has an empty sequence", line=start_line)
        sequences.append((name, data))

    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\r\n")
        if line.startswith(">"):
            flush(lineno)
            name = line[1:].split()[0] if line[1:].split() else ""
            if not name:
                raise FormatError("record has an empty name", line=lineno)
            chunks = []
            start_line = lineno
        elif line.strip():
            if name is None:
                raise FormatError("sequence data before the first header", line=lineno)
            part = line.strip().upper()
            for c in part:
                if ord(c) <= _MIN_INPUT:
                    raise FormatError(f"reserved or invalid character {c!r}", line=lineno)
            chunks.append(part)
    flush(None)
    if not sequences:
        raise FormatError("no FASTA records found", line=1)
    return Pangenome(sequences=sequences)


def read_triggers(stream) -> TriggerSet:
    """One trigger word per line; blank lines and #-comments are ignored."""
    words = []
    for line in stream:
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        words.append(word)
    if not words:
        raise ConfigError("trigger file contains no words")
    return TriggerSet.from_words(words)
