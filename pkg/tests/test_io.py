import numpy as np
import pytest

from graphmix.generate import gen_directed, gen_pah
from graphmix.graph import AttributedGraph
from graphmix.inference import replay_loglik
from graphmix.netio import (
    NetworkFormatError,
    format_value,
    read_config,
    read_network,
    read_trace,
    write_config,
    write_network,
    write_trace,
)
from graphmix.rng import make_rng

from helpers import random_graph


def _roundtrip(g, tmp_path, name="net"):
    prefix = tmp_path / name
    write_network(g, prefix)
    return read_network(prefix, directed=g.directed)


# -- network files -----------------------------------------------------------------


def test_network_roundtrip_undirected(tmp_path):
    g = random_graph(25, directed=False, p=0.15, rng=make_rng(0))
    assert _roundtrip(g, tmp_path) == g


def test_network_roundtrip_directed(tmp_path):
    g = random_graph(25, directed=True, p=0.08, rng=make_rng(1))
    assert _roundtrip(g, tmp_path) == g


def test_network_roundtrip_generated(tmp_path):
    g, _ = gen_pah(120, 2, 0.3, 0.7, seed=5)
    assert _roundtrip(g, tmp_path) == g
    d, _ = gen_directed("dpah", 80, 0.01, 0.3, 0.8, seed=5)
    assert _roundtrip(d, tmp_path, "dnet") == d


def test_undirected_edges_written_canonically(tmp_path):
    g = AttributedGraph(False, [0, 1, 0])
    g.add_edge(2, 0)  # stored as (0, 2)
    g.add_edge(1, 0)
    write_network(g, tmp_path / "c")
    text = (tmp_path / "c_edges.csv").read_text()
    assert text == "source,target\n0,1\n0,2\n"


def test_edgeless_graph_writes_header_only_edge_file(tmp_path):
    g = AttributedGraph(False, [0, 1])
    write_network(g, tmp_path / "e")
    assert (tmp_path / "e_edges.csv").read_text() == "source,target\n"
    assert _roundtrip(g, tmp_path, "e") == g


def test_files_use_lf_and_trailing_newline(tmp_path):
    g = random_graph(10, directed=False, p=0.3, rng=make_rng(2))
    nodes, edges = write_network(g, tmp_path / "lf")
    for path in (nodes, edges):
        raw = path.read_bytes()
        assert b"\r" not in raw
        assert raw.endswith(b"\n")


def test_rewrites_are_byte_identical(tmp_path):
    g = random_graph(15, directed=True, p=0.1, rng=make_rng(3))
    write_network(g, tmp_path / "a")
    write_network(g, tmp_path / "b")
    assert (tmp_path / "a_nodes.csv").read_bytes() == (tmp_path / "b_nodes.csv").read_bytes()
    assert (tmp_path / "a_edges.csv").read_bytes() == (tmp_path / "b_edges.csv").read_bytes()


def _write_pair(tmp_path, nodes, edges):
    (tmp_path / "x_nodes.csv").write_text(nodes)
    (tmp_path / "x_edges.csv").write_text(edges)
    return tmp_path / "x"


@pytest.mark.parametrize(
    "nodes,edges,fragment",
    [
        ("id;class\n0,0\n", "source,target\n", "expected header"),
        ("id,class\n0,2\n", "source,target\n", "class must be 0 or 1"),
        ("id,class\n0,0\n2,0\n", "source,target\n", "dense and ascending"),
        ("id,class\nzero,0\n", "source,target\n", "must be an integer"),
        ("id,class\n0,0,9\n", "source,target\n", "expected 2 fields"),
        ("id,class\n", "source,target\n", "no nodes"),
        ("id,class\n0,0\n1,1\n", "source,target\n1,1\n", "self-loop"),
        ("id,class\n0,0\n1,1\n", "source,target\n1,0\n", "source < target"),
        ("id,class\n0,0\n1,1\n", "source,target\n0,1\n0,1\n", "duplicate edge"),
        ("id,class\n0,0\n1,1\n", "source,target\n0,5\n", "outside 0..1"),
        ("id,class\n0,0\n1,1\n", "header\n", "expected header"),
    ],
)
def test_malformed_network_files_are_rejected(tmp_path, nodes, edges, fragment):
    prefix = _write_pair(tmp_path, nodes, edges)
    with pytest.raises(NetworkFormatError) as exc:
        read_network(prefix, directed=False)
    assert fragment in str(exc.value)


def test_error_message_names_file_and_line(tmp_path):
    prefix = _write_pair(tmp_path, "id,class\n0,0\n1,3\n", "source,target\n")
    with pytest.raises(NetworkFormatError) as exc:
        read_network(prefix, directed=False)
    msg = str(exc.value)
    assert "x_nodes.csv:3:" in msg


def test_missing_file_is_a_format_error(tmp_path):
    with pytest.raises(NetworkFormatError) as exc:
        read_network(tmp_path / "nope", directed=False)
    assert "file not found" in str(exc.value)


def test_directed_rows_may_go_both_ways(tmp_path):
    prefix = _write_pair(
        tmp_path, "id,class\n0,0\n1,1\n", "source,target\n0,1\n1,0\n"
    )
    g = read_network(prefix, directed=True)
    assert g.num_edges == 2


# -- trace files --------------------------------------------------------------------


def test_trace_roundtrip_undirected(tmp_path):
    g, trace = gen_pah(60, 2, 0.3, 0.8, seed=7)
    write_network(g, tmp_path / "t")
    write_trace(trace, tmp_path / "t_trace.csv")
    g2 = read_network(tmp_path / "t", directed=False)
    t2 = read_trace(tmp_path / "t_trace.csv", g2)
    assert np.array_equal(t2.sources, trace.sources)
    assert np.array_equal(t2.targets, trace.targets)
    assert np.array_equal(t2.kinds, trace.kinds)
    assert t2.m == trace.m == 2
    assert replay_loglik(t2, "pah", h=0.8) == replay_loglik(trace, "pah", h=0.8)


def test_trace_roundtrip_directed(tmp_path):
    g, trace = gen_directed("dh", 40, 0.02, 0.3, 0.7, seed=8)
    write_network(g, tmp_path / "d")
    write_trace(trace, tmp_path / "d_trace.csv")
    g2 = read_network(tmp_path / "d", directed=True)
    t2 = read_trace(tmp_path / "d_trace.csv", g2)
    assert np.array_equal(t2.sources, trace.sources)
    assert t2.m is None
    assert replay_loglik(t2, "dh", h=0.7) == replay_loglik(trace, "dh", h=0.7)


def test_trace_kind_must_match_directedness(tmp_path):
    und = AttributedGraph(False, [0, 1, 1])
    dir_ = AttributedGraph(True, [0, 1, 1])
    p = tmp_path / "tr.csv"
    p.write_text("source,target,kind\n1,0,directed-pick\n")
    with pytest.raises(NetworkFormatError) as exc:
        read_trace(p, und)
    assert "does not match graph directedness" in str(exc.value)
    p.write_text("source,target,kind\n1,0,pah-pick\n")
    with pytest.raises(NetworkFormatError):
        read_trace(p, dir_)


def test_trace_rejects_unknown_kind_and_bad_rows(tmp_path):
    g = AttributedGraph(False, [0, 1, 1])
    p = tmp_path / "tr.csv"
    p.write_text("source,target,kind\n1,0,teleport\n")
    with pytest.raises(NetworkFormatError) as exc:
        read_trace(p, g)
    assert "unknown event kind" in str(exc.value) and "tr.csv:2:" in str(exc.value)
    p.write_text("source,target,kind\n1,0\n")
    with pytest.raises(NetworkFormatError):
        read_trace(p, g)
    p.write_text("source,target,kind\n9,0,pah-pick\n")
    with pytest.raises(NetworkFormatError):
        read_trace(p, g)
    p.write_text("source,target,kind\n")
    with pytest.raises(NetworkFormatError):
        read_trace(p, g)


# -- config files -------------------------------------------------------------------


def test_format_value_canonical_forms():
    assert format_value(True) == "true"
    assert format_value(False) == "false"
    assert format_value(0.5) == "0.5"
    assert format_value(1e-06) == "1e-06"
    assert format_value(7) == "7"
    assert format_value("pah") == "pah"


def test_config_roundtrip_sorted_and_none_dropped(tmp_path):
    p = tmp_path / "run.cfg"
    write_config(p, {"model": "pah", "h": 0.8, "n": 500, "ptc": None, "quiet": False})
    assert p.read_text() == "h=0.8\nmodel=pah\nn=500\nquiet=false\n"
    got = read_config(p)
    assert got == {"h": "0.8", "model": "pah", "n": "500", "quiet": "false"}


def test_config_comments_blanks_and_spacing(tmp_path):
    p = tmp_path / "run.cfg"
    p.write_text("# settings\n\n  h = 0.8  \nmodel=pah\n")
    assert read_config(p) == {"h": "0.8", "model": "pah"}


def test_config_rejections(tmp_path):
    p = tmp_path / "run.cfg"
    p.write_text("h=0.8\nbogus=1\n")
    with pytest.raises(NetworkFormatError) as exc:
        read_config(p, allowed_keys={"h"})
    assert "unknown config key" in str(exc.value) and ":2:" in str(exc.value)
    p.write_text("h=0.8\nh=0.9\n")
    with pytest.raises(NetworkFormatError):
        read_config(p)
    p.write_text("just a line\n")
    with pytest.raises(NetworkFormatError):
        read_config(p)
    with pytest.raises(NetworkFormatError):
        read_config(tmp_path / "absent.cfg")
