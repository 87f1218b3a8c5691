"""DOT and edge-list export for circulant and EJ graphs.

Vertices are labeled by residue (circulants) or by the x+y*rho remainder
(EJ graphs); one undirected edge is written per unordered adjacent pair.
"""

from __future__ import annotations

from typing import Callable


def undirected_edges(g) -> list[tuple[int, int]]:
    edges = []
    for v in range(g.n):
        for w in g.neighbors(v):
            if v < w:
                edges.append((v, w))
    return edges


def to_edge_list(g, label: Callable[[int], str] = str) -> str:
    lines = [f"{label(v)} {label(w)}" for v, w in undirected_edges(g)]
    return "\n".join(lines) + "\n"


def to_dot(g, name: str = "G", label: Callable[[int], str] = str) -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f'  "{label(v)}";')
    for v, w in undirected_edges(g):
        lines.append(f'  "{label(v)}" -- "{label(w)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def ej_labeler(ej) -> Callable[[int], str]:
    return lambda i: str(ej.vertices[i])
