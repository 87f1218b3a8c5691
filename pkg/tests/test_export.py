from frobcirc.circulant import new_frobenius
from frobcirc.eisenstein import EJGraph, EJInt
from frobcirc.export import ej_labeler, to_dot, to_edge_list, undirected_edges


def test_edge_count():
    g = new_frobenius(49, 31)
    assert len(undirected_edges(g)) == 3 * 49


def test_edge_list_k7():
    out = to_edge_list(new_frobenius(7, 3))
    lines = out.strip().splitlines()
    assert len(lines) == 21
    assert lines[0] == "0 1"


def test_dot_output():
    out = to_dot(new_frobenius(13, 4), name="TL_13")
    assert out.startswith("graph TL_13 {")
    assert out.rstrip().endswith("}")
    assert out.count("--") == 39


def test_ej_graph_exports_same_format():
    ej = EJGraph(EJInt(1, 2))
    out = to_edge_list(ej, label=ej_labeler(ej))
    lines = out.strip().splitlines()
    assert len(lines) == 21  # EJ graph of norm 7 is K_7
    dot = to_dot(ej, name="EJ7", label=ej_labeler(ej))
    assert dot.count("--") == 21
    assert "0+0r" in dot
