import networkx as nx
import pytest

from springerlab.errors import TooLarge
from springerlab.hasse import hasse_edges, render_hasse
from springerlab.partitions import GroupType, dominates, enumerate_classes


def class_leq(a, b):
    return dominates(b.lam, a.lam)


def _graph(nodes):
    g = nx.DiGraph()
    g.add_nodes_from(range(len(nodes)))
    g.add_edges_from(hasse_edges(nodes, class_leq))
    return g


def test_b2_is_a_chain_of_four():
    nodes = enumerate_classes(GroupType("B", 2))
    assert hasse_edges(nodes, class_leq) == [(0, 1), (1, 2), (2, 3)]


def test_single_node_has_no_edges():
    nodes = enumerate_classes(GroupType("B", 1))[:1]
    assert hasse_edges(nodes, class_leq) == []
    assert "->" not in render_hasse(nodes, class_leq)


@pytest.mark.parametrize("g", ["D3", "C4", "B5", "D6"])
def test_diagram_is_acyclic_and_reduced(g):
    nodes = enumerate_classes(GroupType.parse(g))
    graph = _graph(nodes)
    assert nx.is_directed_acyclic_graph(graph)
    # covering relations only: no edge is implied by a longer path
    for i, j in graph.edges():
        assert not any(nx.has_path(graph, k, j) for k in graph.successors(i) if k != j)
    closure = nx.transitive_closure_dag(graph)
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if i != j:
                assert closure.has_edge(i, j) == class_leq(b, a)


def test_c3_incomparable_pair():
    nodes = enumerate_classes(GroupType("C", 3))
    labels = [str(c.lam) for c in nodes]
    graph = _graph(nodes)
    i, j = labels.index("[4,1,1]"), labels.index("[3,3]")
    assert not nx.has_path(graph, i, j) and not nx.has_path(graph, j, i)


def test_render_is_deterministic_dot():
    nodes = enumerate_classes(GroupType("B", 2))
    text = render_hasse(nodes, class_leq, label=lambda c: str(c.lam), name="B2", attrs=lambda c: {"shape": "box"})
    assert text == render_hasse(nodes, class_leq, label=lambda c: str(c.lam), name="B2", attrs=lambda c: {"shape": "box"})
    assert text.splitlines()[:3] == ['digraph "B2" {', "  rankdir=TB;", '  n0 [label="[5]", shape="box"];']
    assert "  n0 -> n1;" in text and text.endswith("}\n")


def test_labels_are_escaped():
    text = render_hasse(['a"b'], lambda x, y: True)
    assert r'label="a\"b"' in text


def test_too_large():
    with pytest.raises(TooLarge):
        hasse_edges(list(range(501)), lambda a, b: a <= b)
