"""Hasse diagrams of finite posets as Graphviz DOT text."""

from __future__ import annotations

from typing import Callable, Hashable, Sequence

import networkx as nx

from .errors import TooLarge

MAX_NODES = 500


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_edges(nodes: Sequence[Hashable], leq: Callable[[Hashable, Hashable], bool]) -> list[tuple[int, int]]:
    """Covering relations ``(i, j)`` with ``nodes[i] > nodes[j]``, as index pairs."""
    if len(nodes) > MAX_NODES:
        raise TooLarge(f"{len(nodes)} nodes exceed the limit of {MAX_NODES}")
    g = nx.DiGraph()
    g.add_nodes_from(range(len(nodes)))
    for i, x in enumerate(nodes):
        for j, y in enumerate(nodes):
            if i != j and leq(y, x):
                g.add_edge(i, j)
    return sorted(nx.transitive_reduction(g).edges())


def render_hasse(
    nodes: Sequence[Hashable],
    leq: Callable[[Hashable, Hashable], bool],
    label: Callable[[Hashable], str] = str,
    name: str = "hasse",
    attrs: Callable[[Hashable], dict[str, str]] | None = None,
) -> str:
    """DOT text with one node per element and an edge from each element to
    those it covers.  Output depends only on the order of ``nodes``."""
    edges = hasse_edges(nodes, leq)
    lines = [f"digraph {_quote(name)} {{", "  rankdir=TB;"]
    for i, x in enumerate(nodes):
        extra = "".join(f", {k}={_quote(v)}" for k, v in sorted((attrs(x) if attrs else {}).items()))
        lines.append(f"  n{i} [label={_quote(label(x))}{extra}];")
    lines.extend(f"  n{i} -> n{j};" for i, j in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
