"""Finite posets on ``0..n-1`` stored as bitmasks.

Subsets of a poset's ground set are plain ``int`` bitmasks throughout the
package (bit ``i`` set means element ``i`` is a member). Canonical order of a
list of subsets is ascending mask order.

A :class:`Poset` keeps, for every element, the mask of elements strictly
above it. Everything else (strict down-sets, the ``lt`` matrix, covers) is
derived on construction and checked against the partial-order axioms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CycleError, InvalidDuplicationError, InvariantError, PosetSyntaxError


def elements(mask: int) -> tuple[int, ...]:
    """Return the members of ``mask`` in ascending order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def format_subset(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


@dataclass(frozen=True)
class Poset:
    """Strict partial order on ``range(n)``.

    ``up[i]`` is the mask of elements ``j`` with ``i < j``. Construct through
    :meth:`from_relations` unless ``up`` is already transitively closed.
    """

    n: int
    up: tuple[int, ...]
    down: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.up) != self.n:
            raise InvariantError("up-set table has wrong length")
        full = (1 << self.n) - 1
        down = [0] * self.n
        for i, u in enumerate(self.up):
            if u & ~full:
                raise InvariantError(f"element {i} related to something outside the ground set")
            if u >> i & 1:
                raise InvariantError(f"relation is not irreflexive at {i}")
            for j in elements(u):
                if self.up[j] >> i & 1:
                    raise InvariantError(f"relation is not antisymmetric at ({i}, {j})")
                if self.up[j] & ~u:
                    raise InvariantError(f"relation is not transitive through {j}")
                down[j] |= 1 << i
        object.__setattr__(self, "down", tuple(down))

    @classmethod
    def from_relations(cls, n: int, relations: Iterable[tuple[int, int]]) -> "Poset":
        """Transitive closure of the generating relations ``i < j``."""
        up = [0] * n
        for i, j in relations:
            if not (0 <= i < n and 0 <= j < n):
                raise PosetSyntaxError(f"relation ({i}, {j}) outside 0..{n - 1}")
            up[i] |= 1 << j
        return cls(n, transitive_closure(up))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n, (0,) * n)

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_relations(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def less(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    @property
    def lt(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(self.less(i, j) for j in range(self.n)) for i in range(self.n))

    @property
    def relations(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in elements(self.up[i])]

    @property
    def covers(self) -> list[tuple[int, int]]:
        """Transitive reduction: pairs ``i < j`` with nothing strictly between."""
        return [(i, j) for i, j in self.relations if not (self.up[i] & self.down[j])]

    def comparable(self, i: int) -> int:
        return self.up[i] | self.down[i]

    def minimal(self) -> list[int]:
        return [i for i in range(self.n) if not self.down[i]]

    def maximal(self) -> list[int]:
        return [i for i in range(self.n) if not self.up[i]]

    def linear_extension(self) -> list[int]:
        return sorted(range(self.n), key=lambda i: (bin(self.down[i]).count("1"), i))


def transitive_closure(up: list[int]) -> tuple[int, ...]:
    up = list(up)
    for k in range(len(up)):
        bit = 1 << k
        for i in range(len(up)):
            if up[i] & bit:
                up[i] |= up[k]
    for i, u in enumerate(up):
        if u >> i & 1:
            raise CycleError(f"relations force element {i} below itself")
    return tuple(up)


def parse_poset(text: str) -> Poset:
    """Parse the ``n <count>`` / ``<i> <j>`` poset file format."""
    n = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise PosetSyntaxError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise PosetSyntaxError(f"line {lineno}: expected '<i> <j>', got {raw!r}")
        i, j = int(parts[0]), int(parts[1])
        if i >= n or j >= n:
            raise PosetSyntaxError(f"line {lineno}: element index out of range for n={n}")
        if i == j:
            raise PosetSyntaxError(f"line {lineno}: relation {i} < {i} is not strict")
        relations.append((i, j))
    if n is None:
        raise PosetSyntaxError("missing 'n <count>' header")
    return Poset.from_relations(n, relations)


def format_poset(P: Poset) -> str:
    lines = [f"n {P.n}"]
    lines.extend(f"{i} {j}" for i, j in P.covers)
    return "\n".join(lines) + "\n"


def up_set(P: Poset, x: int) -> int:
    """Weak up-set ``[x]``."""
    return P.up[x] | 1 << x


def down_set(P: Poset, x: int) -> int:
    """Weak down-set ``(x)``, the principal ideal generated by ``x``."""
    return P.down[x] | 1 << x


def components(P: Poset, s: int) -> list[int]:
    """Connected components of the comparability graph induced on ``s``."""
    out = []
    rest = s
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = P.comparable(low.bit_length() - 1) & rest & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rest &= ~comp
    return sorted(out)


def is_connected(P: Poset, s: int) -> bool:
    """True iff ``s`` is non-empty and its induced subposet is connected."""
    return s != 0 and len(components(P, s)) == 1


def is_down_closed(P: Poset, s: int) -> bool:
    return all(not (P.down[i] & ~s) for i in elements(s))


def restrict(P: Poset, s: int) -> tuple[Poset, tuple[int, ...]]:
    """Induced subposet on ``s``, relabelled ``0..|s|-1`` in ascending order.

    Returns the subposet and the original label of each new element.
    """
    labels = elements(s)
    index = {x: k for k, x in enumerate(labels)}
    up = tuple(mask_of(index[y] for y in elements(P.up[x] & s)) for x in labels)
    return Poset(len(labels), up), labels


def relabel(P: Poset, perm: Sequence[int]) -> Poset:
    """Poset in which element ``perm[i]`` plays the role of old element ``i``."""
    up = [0] * P.n
    for i in range(P.n):
        up[perm[i]] = mask_of(perm[j] for j in elements(P.up[i]))
    return Poset(P.n, tuple(up))


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    """``P`` followed by ``Q`` shifted by ``P.n``, with no relations across."""
    return Poset(P.n + Q.n, P.up + tuple(u << P.n for u in Q.up))


def hang(P: Poset, a: int, Q: Poset) -> Poset:
    """Place all of ``Q`` (shifted by ``P.n``) below ``a`` and close."""
    if not 0 <= a < P.n:
        raise ValueError(f"hanging point {a} not in poset of size {P.n}")
    above = up_set(P, a)
    return Poset(P.n + Q.n, P.up + tuple(u << P.n | above for u in Q.up))


def can_duplicate(P: Poset, a: int) -> bool:
    """Whether ``P`` splits as ``Q1`` hung at ``a`` over ``Q2 = (a) - {a}``.

    Every element strictly below ``a`` must see exactly ``[a]`` above it once
    the strict down-set of ``a`` is removed.
    """
    D = P.down[a]
    target = up_set(P, a)
    return all(P.up[d] & ~D == target for d in elements(D))


def duplicate(P: Poset, a: int) -> Poset:
    """Add element ``n`` with the same strict down- and up-set as ``a``."""
    if not 0 <= a < P.n:
        raise ValueError(f"duplication point {a} not in poset of size {P.n}")
    if not can_duplicate(P, a):
        raise InvalidDuplicationError(f"element {a} is not the bottom of a hung-on factor")
    new = 1 << P.n
    up = tuple(u | new if (P.down[a] >> i & 1) else u for i, u in enumerate(P.up))
    return Poset(P.n + 1, up + (P.up[a],))


def equals(P: Poset, Q: Poset) -> bool:
    return P == Q


def _profile(P: Poset, i: int) -> tuple[int, int]:
    return bin(P.down[i]).count("1"), bin(P.up[i]).count("1")


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    """Backtracking search for an order isomorphism ``P -> Q``."""
    if P.n != Q.n or len(P.relations) != len(Q.relations):
        return False
    prof_p = [_profile(P, i) for i in range(P.n)]
    prof_q = [_profile(Q, i) for i in range(Q.n)]
    if sorted(prof_p) != sorted(prof_q):
        return False
    order = P.linear_extension()
    image = [-1] * P.n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == P.n:
            return True
        x = order[k]
        for y in range(Q.n):
            if used >> y & 1 or prof_q[y] != prof_p[x]:
                continue
            # earlier elements of a linear extension are never above x
            if Q.up[y] & used:
                continue
            if any(bool(P.down[x] >> z & 1) != bool(Q.down[y] >> image[z] & 1) for z in order[:k]):
                continue
            image[x] = y
            used |= 1 << y
            if extend(k + 1):
                return True
            used &= ~(1 << y)
        image[x] = -1
        return False

    return extend(0)
