"""Hilbert series truncations and linear-extension counts.

The ring is graded by total value: a P-partition ``f`` has degree
``sum(f)``, so ``U_J`` has degree ``|J|``. Brute-force routines count
directly; the ``*_ci`` routines use the closed form available when the
ring is a complete intersection and refuse otherwise.
"""

from __future__ import annotations

from math import factorial, prod

from .errors import InvariantError, NotCIError, ResourceLimitError
from .gamma import build_gamma
from .poset import Poset, elements
from .presentation import check_ci

DEFAULT_STEP_LIMIT = 10**8


def hilbert_brute(P: Poset, degree: int, limit: int = DEFAULT_STEP_LIMIT) -> list[int]:
    """Coefficients ``a_0..a_degree``; ``a_d`` counts P-partitions of total ``d``."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    coeffs = [0] * (degree + 1)
    order = P.linear_extension()
    preds = [elements(P.down[x]) for x in order]
    pos = {x: k for k, x in enumerate(order)}
    preds = [[pos[y] for y in ys] for ys in preds]
    vals = [0] * P.n
    steps = 0

    def rec(k: int, left: int) -> None:
        nonlocal steps
        steps += 1
        if steps > limit:
            raise ResourceLimitError(f"more than {limit} enumeration steps")
        if k == P.n:
            coeffs[degree - left] += 1
            return
        top = min([left] + [vals[j] for j in preds[k]])
        for v in range(top + 1):
            vals[k] = v
            rec(k + 1, left - v)
        vals[k] = 0

    rec(0, degree)
    return coeffs


def _mul_one_minus(series: list[int], k: int) -> list[int]:
    # series * (1 - q^k), truncated
    return [c - (series[i - k] if i >= k else 0) for i, c in enumerate(series)]


def _div_one_minus(series: list[int], k: int) -> list[int]:
    # series / (1 - q^k) = series * (1 + q^k + q^2k + ...), truncated
    out = list(series)
    for i in range(k, len(out)):
        out[i] += out[i - k]
    return out


def _require_ci(P: Poset):
    G = build_gamma(P)
    if not check_ci(P, G).is_ci:
        raise NotCIError("P-partition ring is not a complete intersection")
    return G


def hilbert_ci(P: Poset, degree: int) -> list[int]:
    """Truncation of ``prod_edges (1 - q^(|J1|+|J2|)) / prod_J (1 - q^|J|)``."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    G = _require_ci(P)
    series = [1] + [0] * degree
    for i, j in G.edges:
        series = _mul_one_minus(series, G.vertices[i].size + G.vertices[j].size)
    for J in G.vertices:
        series = _div_one_minus(series, J.size)
    return series


def linear_extensions_brute(P: Poset) -> int:
    """Count linear extensions by dynamic programming over order ideals."""
    ways = {0: 1}
    for _ in range(P.n):
        nxt: dict[int, int] = {}
        for J, w in ways.items():
            for x in range(P.n):
                if not J >> x & 1 and not P.down[x] & ~J:
                    K = J | 1 << x
                    nxt[K] = nxt.get(K, 0) + w
        ways = nxt
    return ways.get(P.full, 0)


def linear_extensions_ci(P: Poset) -> int:
    """``n! * prod_edges (|J1|+|J2|) / prod_J |J|``, exact."""
    G = _require_ci(P)
    num = factorial(P.n) * prod(G.vertices[i].size + G.vertices[j].size for i, j in G.edges)
    den = prod(J.size for J in G.vertices)
    q, r = divmod(num, den)
    if r:
        raise InvariantError(f"extension count {num}/{den} is not an integer")
    return q
