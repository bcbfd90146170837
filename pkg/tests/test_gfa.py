import io
import random

import pytest

from pfg import (
    FormatError,
    build_graph,
    expand_gfa_paths,
    graph_from_gfa,
    read_gfa,
    write_gfa,
)

from conftest import random_instance


def roundtrip(graph):
    buf = io.StringIO()
    write_gfa(graph, buf)
    return read_gfa(io.StringIO(buf.getvalue()))


class TestWriteGfa:
    def test_running_example(self, graph):
        buf = io.StringIO()
        write_gfa(graph, buf)
        lines = buf.getvalue().splitlines()
        s_lines = [l for l in lines if l.startswith("S")]
        p_lines = [l for l in lines if l.startswith("P")]
        assert [l.split("\t")[2] for l in s_lines] == [
            "ACAC", "ACG", "ACT..", "CAC", "CGAC", "CGTAC",
        ]
        assert [l.split("\t")[2] for l in p_lines] == [
            "3+,1+,5+,2+", "3+,0+,2+", "3+,1+,4+,2+",
        ]
        assert lines[0].startswith("H\tVN:Z:1.0\tTL:i:2")

    def test_links_present_with_k_overlap(self, graph):
        buf = io.StringIO()
        write_gfa(graph, buf)
        l_lines = [l for l in buf.getvalue().splitlines() if l.startswith("L")]
        assert l_lines
        assert all(l.split("\t")[5] == "2M" for l in l_lines)

    def test_deterministic(self, graph):
        a, b = io.StringIO(), io.StringIO()
        write_gfa(graph, a)
        write_gfa(graph, b)
        assert a.getvalue() == b.getvalue()

    def test_single_segment(self):
        from pfg import normalize

        g = normalize({0: "AB.."}, [[0]], k=2)
        buf = io.StringIO()
        write_gfa(g, buf)
        lines = buf.getvalue().splitlines()
        kinds = [l[0] for l in lines]
        assert kinds == ["H", "S", "P"]
        assert lines[2].split("\t")[3] == "*"


class TestReadGfa:
    def test_roundtrip_document(self, graph):
        doc = roundtrip(graph)
        assert len(doc.segments) == 6
        assert len(doc.paths) == 3
        assert doc.trigger_length == 2

    def test_star_overlaps_accepted(self):
        doc = read_gfa(io.StringIO("S\ta\tACGT\nP\tp\ta+\t*\n"))
        assert doc.paths[0][2] is None

    def test_reverse_orientation_rejected(self):
        with pytest.raises(FormatError) as exc:
            read_gfa(io.StringIO("S\t5\tACGT\nP\tp\t5-\t*\n"))
        assert "line 2" in str(exc.value)

    def test_unknown_segment_rejected(self):
        with pytest.raises(FormatError):
            read_gfa(io.StringIO("S\t0\tACGT\nP\tp\t1+\t*\n"))

    def test_unknown_record_types_ignored(self):
        doc = read_gfa(io.StringIO("W\twhatever\nS\t0\tACGT\n"))
        assert doc.segments == {"0": "ACGT"}


class TestExpandPaths:
    def test_running_example(self, graph):
        pangenome = expand_gfa_paths(roundtrip(graph))
        assert [d for _, d in pangenome.sequences] == [
            "CACGTACT", "CACACT", "CACGACT",
        ]

    def test_zero_overlap_concatenation(self):
        doc = read_gfa(io.StringIO("S\ta\tAC\nS\tb\tGT\nP\tp\ta+,b+\t*\n"))
        pangenome = expand_gfa_paths(doc)
        assert pangenome.sequences == [("p", "ACGT")]

    def test_mismatched_overlap_rejected(self):
        doc = read_gfa(io.StringIO("S\ta\tAC\nS\tb\tGT\nP\tp\ta+,b+\t1M\n"))
        with pytest.raises(FormatError):
            expand_gfa_paths(doc)


class TestGraphFromGfa:
    def test_roundtrip_preserves_graph(self, graph):
        parsed = graph_from_gfa(roundtrip(graph))
        assert parsed.k == graph.k
        assert [s.content for s in parsed.segments] == [
            s.content for s in graph.segments
        ]
        assert [p for _, p in parsed.paths] == [p for _, p in graph.paths]

    def test_missing_trigger_length_rejected(self):
        with pytest.raises(FormatError):
            graph_from_gfa(read_gfa(io.StringIO("S\t0\tAC..\nP\tp\t0+\t*\n")))


class TestFixedPoint:
    @pytest.mark.parametrize("seed", range(10))
    def test_repartition_is_identity(self, seed):
        rng = random.Random(2000 + seed)
        pangenome, triggers = random_instance(rng)
        first = build_graph(pangenome, triggers)
        expanded = expand_gfa_paths(roundtrip(first))
        second = build_graph(expanded, triggers)
        assert [s.content for s in second.segments] == [
            s.content for s in first.segments
        ]
        assert [p for _, p in second.paths] == [p for _, p in first.paths]
