"""The intersection graph on connected order ideals.

Two connected ideals are adjacent when they intersect non-trivially: they
share an element and neither contains the other. The P-partition ring is a
complete intersection exactly when this graph is a matching (every vertex
has degree at most one).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .ideals import Ideal, connected_order_ideals
from .poset import Poset


def nontrivial_intersection(J1: Ideal | int, J2: Ideal | int) -> bool:
    a = J1.members if isinstance(J1, Ideal) else J1
    b = J2.members if isinstance(J2, Ideal) else J2
    both = a & b
    return both != 0 and both != a and both != b


@dataclass(frozen=True)
class GammaGraph:
    vertices: tuple[Ideal, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * len(self.vertices)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    def neighbours(self, i: int) -> list[int]:
        return [b if a == i else a for a, b in self.edges if i in (a, b)]


def build_gamma(P: Poset) -> GammaGraph:
    vertices = tuple(connected_order_ideals(P))
    masks = [J.members for J in vertices]
    edges = tuple(
        (i, j)
        for i in range(len(masks))
        for j in range(i + 1, len(masks))
        if nontrivial_intersection(masks[i], masks[j])
    )
    return GammaGraph(vertices, edges)


def degree_profile(G: GammaGraph) -> list[int]:
    return sorted(G.degrees)


def is_matching_union(G: GammaGraph) -> bool:
    """Disjoint union of isolated edges and vertices."""
    return all(d <= 1 for d in G.degrees)


def edge_ideal(G: GammaGraph) -> list[tuple[int, int]]:
    """Squarefree quadratic generators ``U_i * U_j``, one per edge."""
    return list(G.edges)


def format_edge_monomial(G: GammaGraph, edge: tuple[int, int]) -> str:
    i, j = edge
    return f"U{G.vertices[i]}*U{G.vertices[j]}"


def to_dot(G: GammaGraph) -> str:
    lines = ["graph Gamma {"]
    for i, J in enumerate(G.vertices):
        lines.append(f'  v{i} [label="{J}"];')
    for i, j in G.edges:
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
