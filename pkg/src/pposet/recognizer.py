"""Recognition of forests with duplication.

A forest with duplication is built from one-element posets by disjoint
union, hanging one poset below an element of another, and duplicating an
element that sits at the bottom of a hung-on factor. :func:`recognize` runs
those operations backwards and returns a build tree whose replay gives back
the input poset with its original labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import CertificateError, PosetError
from .poset import (
    Poset,
    can_duplicate,
    components,
    disjoint_union,
    duplicate,
    elements,
    hang,
    relabel,
    restrict,
    up_set,
)


@dataclass(frozen=True)
class Single:
    label: int


@dataclass(frozen=True)
class DisjointUnion:
    left: "Certificate"
    right: "Certificate"


@dataclass(frozen=True)
class Hang:
    """``child`` placed below element ``a`` of ``parent``."""

    parent: "Certificate"
    a: int
    child: "Certificate"


@dataclass(frozen=True)
class Dup:
    """Copy of element ``a`` of ``tree`` added under the label ``a_prime``."""

    tree: "Certificate"
    a: int
    a_prime: int


Certificate = Union[Single, DisjointUnion, Hang, Dup]


def find_split(P: Poset) -> tuple[int, int] | None:
    comps = components(P, P.full)
    if len(comps) < 2:
        return None
    return comps[0], P.full & ~comps[0]


def find_duplication(P: Poset) -> tuple[int, int] | None:
    """Smallest incomparable pair with equal strict down- and up-sets whose
    removal of the second element leaves a poset duplicable at the first."""
    for a in range(P.n):
        for b in range(a + 1, P.n):
            if P.down[a] != P.down[b] or P.up[a] != P.up[b]:
                continue
            # equal strict sets already force a and b incomparable
            rest, labels = restrict(P, P.full & ~(1 << b))
            if can_duplicate(rest, labels.index(a)):
                return a, b
    return None


def find_hanging(P: Poset) -> tuple[int, int] | None:
    """Smallest ``a`` with a non-empty ``Q`` such that ``P = (P - Q)`` hung at
    ``a`` over ``Q``; ``Q`` is the union of every qualifying component."""
    for a in range(P.n):
        above = up_set(P, a)
        Q = 0
        for comp in components(P, P.full & ~above):
            tops = [m for m in elements(comp) if not P.up[m] & comp]
            if all(P.up[m] == above for m in tops):
                Q |= comp
        if Q:
            return a, Q
    return None


def _recognize(P: Poset, labels: tuple[int, ...]) -> Certificate | None:
    if P.n == 1:
        return Single(labels[0])

    def sub(mask: int) -> Certificate | None:
        Q, local = restrict(P, mask)
        return _recognize(Q, tuple(labels[i] for i in local))

    split = find_split(P)
    if split is not None:
        left, right = sub(split[0]), sub(split[1])
        if left is None or right is None:
            return None
        return DisjointUnion(left, right)
    pair = find_duplication(P)
    if pair is not None:
        a, b = pair
        tree = sub(P.full & ~(1 << b))
        return None if tree is None else Dup(tree, labels[a], labels[b])
    hung = find_hanging(P)
    if hung is not None:
        a, Q = hung
        parent, child = sub(P.full & ~Q), sub(Q)
        if parent is None or child is None:
            return None
        return Hang(parent, labels[a], child)
    return None


def recognize(P: Poset) -> Certificate | None:
    """Certificate of forest-with-duplication membership, or ``None``."""
    if P.n == 0:
        return None
    return _recognize(P, tuple(range(P.n)))


def _build(c: Certificate) -> tuple[Poset, tuple[int, ...]]:
    if isinstance(c, Single):
        return Poset(1, (0,)), (c.label,)
    if isinstance(c, DisjointUnion):
        (P, lp), (Q, lq) = _build(c.left), _build(c.right)
        return disjoint_union(P, Q), _join(lp, lq)
    if isinstance(c, Hang):
        (P, lp), (Q, lq) = _build(c.parent), _build(c.child)
        return hang(P, _index(lp, c.a), Q), _join(lp, lq)
    if isinstance(c, Dup):
        P, lp = _build(c.tree)
        return duplicate(P, _index(lp, c.a)), _join(lp, (c.a_prime,))
    raise CertificateError(f"unknown certificate node {c!r}")


def _join(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if set(a) & set(b):
        raise CertificateError(f"label collision: {sorted(set(a) & set(b))}")
    return a + b


def _index(labels: tuple[int, ...], a: int) -> int:
    try:
        return labels.index(a)
    except ValueError:
        raise CertificateError(f"label {a} does not occur in the subtree") from None


def replay(c: Certificate) -> Poset:
    """Apply the forward operations and restore the certificate's labels."""
    P, labels = _build(c)
    if sorted(labels) != list(range(P.n)):
        raise CertificateError(f"labels {sorted(labels)} are not 0..{P.n - 1}")
    return relabel(P, labels)


def verify_certificate(P: Poset, c: Certificate) -> bool:
    try:
        return replay(c) == P
    except PosetError:
        return False


def to_json(c: Certificate) -> dict:
    if isinstance(c, Single):
        return {"kind": "single", "label": c.label}
    if isinstance(c, DisjointUnion):
        return {"kind": "union", "left": to_json(c.left), "right": to_json(c.right)}
    if isinstance(c, Hang):
        return {"kind": "hang", "a": c.a, "parent": to_json(c.parent), "child": to_json(c.child)}
    return {"kind": "dup", "a": c.a, "a_prime": c.a_prime, "tree": to_json(c.tree)}


def from_json(obj: dict) -> Certificate:
    kind = obj.get("kind")
    if kind == "single":
        return Single(obj["label"])
    if kind == "union":
        return DisjointUnion(from_json(obj["left"]), from_json(obj["right"]))
    if kind == "hang":
        return Hang(from_json(obj["parent"]), obj["a"], from_json(obj["child"]))
    if kind == "dup":
        return Dup(from_json(obj["tree"]), obj["a"], obj["a_prime"])
    raise CertificateError(f"unknown certificate kind {kind!r}")


def format_tree(c: Certificate, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(c, Single):
        return f"{pad}single {c.label}\n"
    if isinstance(c, DisjointUnion):
        return f"{pad}union\n" + format_tree(c.left, indent + 1) + format_tree(c.right, indent + 1)
    if isinstance(c, Hang):
        return f"{pad}hang at {c.a}\n" + format_tree(c.parent, indent + 1) + format_tree(c.child, indent + 1)
    return f"{pad}dup {c.a} -> {c.a_prime}\n" + format_tree(c.tree, indent + 1)
