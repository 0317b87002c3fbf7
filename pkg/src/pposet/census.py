"""Seeded random posets and the exhaustive labeled-poset census."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .gamma import build_gamma
from .hilbert import linear_extensions_brute
from .poset import Poset, transitive_closure, elements, is_isomorphic
from .presentation import check_ci

MAX_CENSUS_N = 6


def _threshold(p: float) -> int:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    return round(p * 2**64)


def _from_stream(n: int, p: float, bits: np.random.PCG64) -> Poset:
    # one raw 64-bit draw per pair (i, j), i < j, in row-major order
    cut = _threshold(p)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    draws = bits.random_raw(len(pairs)) if pairs else []
    up = [0] * n
    for (i, j), r in zip(pairs, draws):
        if int(r) < cut:
            up[i] |= 1 << j
    return Poset(n, transitive_closure(up))


def random_poset(n: int, p: float, seed: int) -> Poset:
    """Random poset: each ``i < j`` (``i`` before ``j`` numerically) is a
    generating relation with probability ``p``, then close.

    Randomness is the raw 64-bit output of PCG64 seeded through
    ``numpy.random.SeedSequence(seed)``, so results are platform independent.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return _from_stream(n, p, np.random.PCG64(np.random.SeedSequence(seed)))


def random_posets(n: int, p: float, seed: int, count: int) -> list[Poset]:
    """``count`` posets from independent child streams of ``seed``."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [_from_stream(n, p, np.random.PCG64(child)) for child in children]


def labeled_posets(n: int) -> Iterator[Poset]:
    """Every poset on ``0..n-1``, built by adjoining element ``n-1`` to each
    poset on ``0..n-2`` with every compatible (strict down-set, strict
    up-set) pair: an ideal ``D`` and a filter ``U`` lying entirely above it."""
    if n == 0:
        yield Poset(0, ())
        return
    bit = 1 << (n - 1)
    for P in labeled_posets(n - 1):
        subsets = range(1 << P.n)
        ideals = [D for D in subsets if all(not P.down[x] & ~D for x in elements(D))]
        filters = [U for U in subsets if all(not P.up[x] & ~U for x in elements(U))]
        for D in ideals:
            allowed = P.full
            for d in elements(D):
                allowed &= P.up[d]
            for U in filters:
                if U & ~allowed or U & D:
                    continue
                up = tuple(u | bit if D >> i & 1 else u for i, u in enumerate(P.up))
                yield Poset(n, up + (U,))


def labeled_posets_by_orientation(n: int) -> Iterator[Poset]:
    """Same set as :func:`labeled_posets`, by filtering all ``3^(n choose 2)``
    ways to orient or omit each pair for transitivity."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    choice = [0] * len(pairs)
    while True:
        up = [0] * n
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                up[i] |= 1 << j
            elif c == 2:
                up[j] |= 1 << i
        if all((up[j] & ~up[i]) == 0 for i in range(n) for j in elements(up[i])):
            yield Poset(n, tuple(up))
        k = 0
        while k < len(pairs) and choice[k] == 2:
            choice[k] = 0
            k += 1
        if k == len(pairs):
            return
        choice[k] += 1


@dataclass(frozen=True)
class CensusRow:
    n: int
    id: int
    m_ideals: int
    s_edges: int
    graph: bool
    count: bool
    recognizer: bool
    extensions: int

    @property
    def ci(self) -> bool:
        return self.graph

    def csv(self) -> str:
        return f"{self.n},{self.id},{self.m_ideals},{self.s_edges},{str(self.ci).lower()},{self.extensions}"


CSV_HEADER = "n,id,m_ideals,s_edges,ci,extensions"


def analyze_row(args: tuple[int, Poset]) -> CensusRow:
    idx, P = args
    G = build_gamma(P)
    report = check_ci(P, G)
    return CensusRow(
        n=P.n,
        id=idx,
        m_ideals=len(G.vertices),
        s_edges=len(G.edges),
        graph=report.graph.is_ci,
        count=report.count.is_ci,
        recognizer=report.recognizer.is_ci,
        extensions=linear_extensions_brute(P),
    )


def up_to_iso(posets: list[Poset]) -> list[tuple[int, Poset]]:
    """First representative of every isomorphism class, keeping original ids."""
    reps: list[tuple[int, Poset]] = []
    for idx, P in enumerate(posets):
        if not any(is_isomorphic(P, Q) for _, Q in reps):
            reps.append((idx, P))
    return reps


def census(n: int, jobs: int = 1, iso: bool = False) -> list[CensusRow]:
    """Analyze every labeled poset on ``n`` elements, in enumeration order."""
    if not 1 <= n <= MAX_CENSUS_N:
        raise ValueError(f"census supports 1 <= n <= {MAX_CENSUS_N}, got {n}")
    posets = list(labeled_posets(n))
    items = up_to_iso(posets) if iso else list(enumerate(posets))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(analyze_row, items, chunksize=256))
    return [analyze_row(item) for item in items]
