"""Command line tools: fasta2pfg, gfa2pfg and pfg2sa.

All three are filters: they read from standard input (or an optional file
argument), write results to standard output and diagnostics to standard
error.  Exit status 0 means no errors.
"""

from __future__ import annotations

import argparse
import sys

from .errors import PfgError
from .fasta import read_fasta, read_triggers
from .gfa import expand_gfa_paths, graph_from_gfa, read_gfa, write_gfa
from .graph import reconstruct, validate
from .occurrences import build_segment_table
from .oracle import MAX_ORACLE_BYTES, oracle_bwt, oracle_sa
from .partition import build_graph
from .stream import stream
from .suffixes import build_suffix_table


def _builder_parser(prog, description):
    parser = argparse.ArgumentParser(prog=prog, description=description)
    parser.add_argument("-t", "--triggers", required=True, help="trigger word file, one word per line")
    parser.add_argument("input", nargs="?", help="input file (default: standard input)")
    parser.add_argument("-q", "--quiet", action="store_true", help="suppress warnings")
    return parser


def _open_input(path, stdin):
    if path is None:
        return stdin, False
    return open(path), True


def _report_warnings(report, quiet, stderr):
    if quiet:
        return
    for issue in report.warnings:
        print(f"warning: {issue.message}", file=stderr)


def _run_builder(graph_source, args, stdout, stderr):
    with open(args.triggers) as fh:
        triggers = read_triggers(fh)
    pangenome = graph_source(triggers)
    graph = build_graph(pangenome, triggers)
    report = validate(graph)
    _report_warnings(report, args.quiet, stderr)
    if not report.ok:
        for issue in report.errors:
            print(f"error: {issue.message}", file=stderr)
        return 1
    write_gfa(graph, stdout)
    return 0


def fasta2pfg_main(argv=None, stdin=None, stdout=None, stderr=None):
    """Build a normalized prefix-free graph from FASTA and print it as GFA."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = _builder_parser("fasta2pfg", fasta2pfg_main.__doc__).parse_args(argv)
    try:
        source, close = _open_input(args.input, stdin)
        try:
            pangenome = read_fasta(source)
        finally:
            if close:
                source.close()
        return _run_builder(lambda _t: pangenome, args, stdout, stderr)
    except (PfgError, OSError) as exc:
        print(f"fasta2pfg: {exc}", file=stderr)
        return 1


def gfa2pfg_main(argv=None, stdin=None, stdout=None, stderr=None):
    """Re-partition the paths of a GFA graph and print the result as GFA."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = _builder_parser("gfa2pfg", gfa2pfg_main.__doc__).parse_args(argv)
    try:
        source, close = _open_input(args.input, stdin)
        try:
            doc = read_gfa(source)
        finally:
            if close:
                source.close()
        pangenome = expand_gfa_paths(doc)
        return _run_builder(lambda _t: pangenome, args, stdout, stderr)
    except (PfgError, OSError) as exc:
        print(f"gfa2pfg: {exc}", file=stderr)
        return 1


def pfg2sa_main(argv=None, stdin=None, stdout=None, stderr=None):
    """Stream the pangenome suffix array from a prefix-free-graph GFA."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = argparse.ArgumentParser(prog="pfg2sa", description=pfg2sa_main.__doc__)
    parser.add_argument("input", nargs="?", help="GFA file (default: standard input)")
    parser.add_argument("--bwt", action="store_true", help="append the BWT character to each line")
    parser.add_argument(
        "--verify",
        action="store_true",
        help="cross-check against the brute-force oracle (small inputs only)",
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="suppress warnings")
    args = parser.parse_args(argv)
    try:
        source, close = _open_input(args.input, stdin)
        try:
            doc = read_gfa(source)
        finally:
            if close:
                source.close()
        graph = graph_from_gfa(doc)
        suffix_table = build_suffix_table(graph)
        segment_table = build_segment_table(graph)
        emissions = stream(graph, suffix_table, segment_table, with_bwt=args.bwt or args.verify)
        if args.verify:
            from .graph import Pangenome

            pangenome = Pangenome(
                sequences=[
                    (name, reconstruct(graph, j))
                    for j, (name, _) in enumerate(graph.paths)
                ]
            )
            if pangenome.total_length > MAX_ORACLE_BYTES:
                print("pfg2sa: --verify is limited to small inputs", file=stderr)
                return 1
            expected_sa = oracle_sa(pangenome, graph.k)
            expected_bwt = oracle_bwt(pangenome, expected_sa)
            emissions = list(emissions)
            got_sa = [e.sa for e in emissions]
            got_bwt = [e.bwt for e in emissions]
            if got_sa != expected_sa or got_bwt != expected_bwt:
                print("pfg2sa: stream disagrees with the oracle", file=stderr)
                return 1
            if not args.quiet:
                print("verified against the brute-force oracle", file=stderr)
        for e in emissions:
            if args.bwt:
                stdout.write(f"{e.index}\t{e.sa}\t{e.seg_id}\t{e.pos}\t{e.bwt}\n")
            else:
                stdout.write(f"{e.index}\t{e.sa}\t{e.seg_id}\t{e.pos}\n")
        return 0
    except (PfgError, OSError, RuntimeError) as exc:
        print(f"pfg2sa: {exc}", file=stderr)
        return 1
