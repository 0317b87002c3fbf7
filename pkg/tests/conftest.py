from functools import lru_cache

import pytest
from hypothesis import strategies as st

from pposet.census import labeled_posets
from pposet.poset import Poset, relabel

CHAIN2 = Poset.from_relations(2, [(0, 1)])
ANTI2 = Poset.antichain(2)
V3 = Poset.from_relations(3, [(0, 1), (0, 2)])
LAMBDA3 = Poset.from_relations(3, [(0, 2), (1, 2)])
CLAW4 = Poset.from_relations(4, [(0, 1), (0, 2), (0, 3)])
DIAMOND4 = Poset.from_relations(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
SINGLE = Poset.antichain(1)
EMPTY = Poset.antichain(0)


@lru_cache(maxsize=None)
def all_posets(n: int) -> tuple[Poset, ...]:
    return tuple(labeled_posets(n))


def posets_up_to(nmax: int, nmin: int = 1):
    for n in range(nmin, nmax + 1):
        yield from all_posets(n)


@st.composite
def posets(draw, max_n: int = 6, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    P = Poset.from_relations(n, [pq for pq, keep in zip(pairs, chosen) if keep])
    perm = draw(st.permutations(range(n)))
    return relabel(P, perm)


@pytest.fixture(scope="session")
def census5():
    return list(posets_up_to(5))
