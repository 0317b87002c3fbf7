"""Order ideals, indicator vectors and P-partitions.

A P-partition here is the weak, order-reversing kind: a vector ``f`` of
non-negative integers with ``f[x] >= f[y]`` whenever ``x < y``. Its
semigroup is generated by the indicator vectors of connected order ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poset import Poset, components, elements, is_connected, is_down_closed


@dataclass(frozen=True)
class Ideal:
    """Non-empty down-closed subset of a poset, as a bitmask."""

    members: int
    connected: bool

    @property
    def elements(self) -> tuple[int, ...]:
        return elements(self.members)

    @property
    def size(self) -> int:
        return bin(self.members).count("1")

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def _down_closed_masks(P: Poset) -> list[int]:
    # grow ideals by adjoining minimal elements of the complement
    seen = {0}
    stack = [0]
    while stack:
        J = stack.pop()
        for x in range(P.n):
            if not J >> x & 1 and not P.down[x] & ~J:
                K = J | 1 << x
                if K not in seen:
                    seen.add(K)
                    stack.append(K)
    return sorted(seen)


def order_ideals(P: Poset) -> list[Ideal]:
    """All non-empty order ideals in ascending mask order."""
    return [Ideal(J, is_connected(P, J)) for J in _down_closed_masks(P) if J]


def connected_order_ideals(P: Poset) -> list[Ideal]:
    """Connected order ideals; this list fixes the variable order downstream."""
    return [J for J in order_ideals(P) if J.connected]


def chi(P: Poset, J: Ideal | int) -> tuple[int, ...]:
    members = J.members if isinstance(J, Ideal) else J
    return tuple(members >> i & 1 for i in range(P.n))


def is_p_partition(P: Poset, v: Sequence[int]) -> bool:
    if len(v) != P.n or any(x < 0 for x in v):
        return False
    return all(v[i] >= v[j] for i, j in P.relations)


def support(v: Sequence[int]) -> int:
    return sum(1 << i for i, x in enumerate(v) if x)


def decompose(P: Poset, f: Sequence[int]) -> list[Ideal]:
    """Write ``f`` as a sum of indicator vectors of connected ideals.

    Repeatedly peels off the connected components of the support of what is
    left. The returned list is a multiset in extraction order.
    """
    if not is_p_partition(P, f):
        raise ValueError(f"{tuple(f)} is not a P-partition")
    rest = list(f)
    out = []
    while any(rest):
        supp = support(rest)
        assert is_down_closed(P, supp)
        for comp in components(P, supp):
            out.append(Ideal(comp, True))
            for i in elements(comp):
                rest[i] -= 1
    return out


def bounded_p_partitions(P: Poset, bound: Sequence[int]):
    """Yield every P-partition ``g`` with ``0 <= g <= bound`` pointwise."""
    order = P.linear_extension()
    g = [0] * P.n

    def rec(k: int):
        if k == P.n:
            yield tuple(g)
            return
        x = order[k]
        top = min([bound[x]] + [g[y] for y in elements(P.down[x])])
        for v in range(top + 1):
            g[x] = v
            yield from rec(k + 1)
        g[x] = 0

    yield from rec(0)


def is_atom(P: Poset, f: Sequence[int]) -> bool:
    """True iff the non-zero P-partition ``f`` is not a sum of two non-zero ones."""
    if not is_p_partition(P, f):
        raise ValueError(f"{tuple(f)} is not a P-partition")
    if not any(f):
        raise ValueError("the zero P-partition is neither an atom nor decomposable")
    target = tuple(f)
    for g in bounded_p_partitions(P, f):
        if not any(g) or g == target:
            continue
        if is_p_partition(P, [a - b for a, b in zip(f, g)]):
            return False
    return True


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    basis: dict[int, list[Fraction]] = {}  # pivot column -> row with 1 there
    ncols = len(rows[0]) if rows else 0
    for row in rows:
        vec = [Fraction(x) for x in row]
        for c, b in basis.items():
            if vec[c]:
                factor = vec[c]
                vec = [x - factor * y for x, y in zip(vec, b)]
        c = next((i for i, x in enumerate(vec) if x), None)
        if c is None:
            continue
        lead = vec[c]
        vec = [x / lead for x in vec]
        for k, b in basis.items():
            if b[c]:
                factor = b[c]
                basis[k] = [x - factor * y for x, y in zip(b, vec)]
        basis[c] = vec
        if len(basis) == ncols:
            break
    return len(basis)
