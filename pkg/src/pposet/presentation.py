"""Binomial presentation of the P-partition ring and complete-intersection tests.

Variables ``U_J`` are indexed by the connected order ideals in canonical
order. Each non-trivially intersecting pair ``J1, J2`` contributes the
relation ``U_J1 U_J2 - U_{J1 u J2} * prod_i U_{C_i}`` where the ``C_i`` are
the connected components of ``J1 n J2``. Binomials are kept as index data;
no coefficient field is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import CIDisagreementError, InvariantError
from .gamma import GammaGraph, build_gamma, is_matching_union
from .ideals import Ideal, chi, connected_order_ideals, rank
from .poset import Poset, components
from .recognizer import Certificate, recognize, verify_certificate


@dataclass(frozen=True)
class Binomial:
    left: tuple[int, int]
    union: int
    parts: tuple[int, ...]
    degree: int

    @property
    def right(self) -> tuple[int, ...]:
        return (self.union,) + self.parts


def binomial_generators(P: Poset, gamma: GammaGraph | None = None) -> list[Binomial]:
    G = gamma or build_gamma(P)
    index = {J.members: k for k, J in enumerate(G.vertices)}
    out = []
    for i, j in G.edges:
        a, b = G.vertices[i].members, G.vertices[j].members
        try:
            union = index[a | b]
            parts = tuple(index[c] for c in components(P, a & b))
        except KeyError as exc:
            raise InvariantError(f"ideal {exc.args[0]:#b} missing from the variable list") from None
        out.append(Binomial((i, j), union, parts, G.vertices[i].size + G.vertices[j].size))
    return out


def check_homogeneity(P: Poset, b: Binomial, variables: list[Ideal] | None = None) -> bool:
    """Both monomials of ``b`` have the same multidegree under ``U_J -> chi_J``."""
    V = variables or connected_order_ideals(P)
    lhs = [x + y for x, y in zip(chi(P, V[b.left[0]]), chi(P, V[b.left[1]]))]
    rhs = [0] * P.n
    for k in b.right:
        rhs = [x + y for x, y in zip(rhs, chi(P, V[k]))]
    return lhs == rhs and b.degree == sum(V[k].size for k in b.right)


def format_binomial(b: Binomial, variables: list[Ideal]) -> str:
    lhs = "*".join(f"U{variables[k]}" for k in b.left)
    rhs = "*".join(f"U{variables[k]}" for k in b.right)
    return f"{lhs} - {rhs}"


@dataclass(frozen=True)
class CiVerdict:
    method: str
    is_ci: bool
    detail: Any


def ci_by_graph(P: Poset, gamma: GammaGraph | None = None) -> CiVerdict:
    G = gamma or build_gamma(P)
    return CiVerdict("graph", is_matching_union(G), max(G.degrees, default=0))


def ci_by_count(P: Poset, gamma: GammaGraph | None = None) -> CiVerdict:
    """Compare the number of relations with the codimension ``m - n``.

    ``m`` is the number of variables, ``s`` the number of minimal relations
    (edges of Gamma) and ``r`` the Krull dimension, the rank of the
    indicator vectors, which must equal ``n``.
    """
    G = gamma or build_gamma(P)
    m, s = len(G.vertices), len(G.edges)
    r = rank([chi(P, J) for J in G.vertices]) if G.vertices else 0
    if r != P.n:
        raise InvariantError(f"indicator vectors have rank {r}, expected {P.n}")
    return CiVerdict("count", m - s == r, {"m": m, "s": s, "r": r})


def ci_by_recognizer(P: Poset) -> CiVerdict:
    cert = recognize(P)
    if cert is not None and not verify_certificate(P, cert):
        raise InvariantError("recognizer produced a certificate that does not replay")
    return CiVerdict("recognizer", cert is not None, cert)


@dataclass(frozen=True)
class CiReport:
    is_ci: bool
    graph: CiVerdict
    count: CiVerdict
    recognizer: CiVerdict

    @property
    def certificate(self) -> Certificate | None:
        return self.recognizer.detail


def check_ci(P: Poset, gamma: GammaGraph | None = None) -> CiReport:
    """Run all three deciders; raise if they disagree."""
    if P.n == 0:
        raise ValueError("the empty poset has no forest-with-duplication certificate")
    G = gamma or build_gamma(P)
    graph, count, rec = ci_by_graph(P, G), ci_by_count(P, G), ci_by_recognizer(P)
    if not graph.is_ci == count.is_ci == rec.is_ci:
        raise CIDisagreementError(
            f"graph={graph.is_ci} count={count.is_ci} recognizer={rec.is_ci}"
        )
    return CiReport(graph.is_ci, graph, count, rec)
