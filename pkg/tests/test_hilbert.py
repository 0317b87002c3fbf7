from itertools import permutations, product

import pytest
from hypothesis import given, settings

from conftest import ANTI2, CHAIN2, CLAW4, DIAMOND4, EMPTY, V3, posets, posets_up_to
from pposet.errors import NotCIError, ResourceLimitError
from pposet.gamma import build_gamma, is_matching_union
from pposet.hilbert import hilbert_brute, hilbert_ci, linear_extensions_brute, linear_extensions_ci
from pposet.ideals import connected_order_ideals
from pposet.poset import Poset


def oracle_hilbert(P, D):
    lt = P.lt
    out = [0] * (D + 1)
    for f in product(range(D + 1), repeat=P.n):
        if sum(f) <= D and all(f[i] >= f[j] for i in range(P.n) for j in range(P.n) if lt[i][j]):
            out[sum(f)] += 1
    return out


def oracle_extensions(P):
    return sum(
        all(order.index(i) < order.index(j) for i, j in P.relations)
        for order in permutations(range(P.n))
    )


def test_brute_fixtures():
    assert hilbert_brute(V3, 3) == [1, 1, 3, 4]
    assert hilbert_brute(CHAIN2, 3) == [1, 1, 2, 2]
    assert hilbert_brute(EMPTY, 2) == [1, 0, 0]


def test_brute_against_oracle():
    for P in posets_up_to(4):
        assert hilbert_brute(P, 5) == oracle_hilbert(P, 5)


def test_ci_fixtures():
    assert hilbert_ci(V3, 3) == [1, 1, 3, 4]
    assert hilbert_ci(DIAMOND4, 2) == [1, 1, 3]
    with pytest.raises(NotCIError):
        hilbert_ci(CLAW4, 4)


def test_resource_guard():
    with pytest.raises(ResourceLimitError):
        hilbert_brute(Poset.antichain(6), 10, limit=1000)


def test_extension_fixtures():
    assert linear_extensions_brute(V3) == 2
    assert linear_extensions_brute(CLAW4) == 6
    assert linear_extensions_brute(Poset.antichain(3)) == 6
    assert linear_extensions_ci(V3) == 2
    assert linear_extensions_ci(DIAMOND4) == 2
    assert linear_extensions_ci(ANTI2) == 2
    with pytest.raises(NotCIError):
        linear_extensions_ci(CLAW4)


def test_extensions_against_oracle():
    for P in posets_up_to(5):
        assert linear_extensions_brute(P) == oracle_extensions(P)


def test_ci_closed_forms_exhaustive():
    for P in posets_up_to(5):
        if not is_matching_union(build_gamma(P)):
            continue
        assert hilbert_ci(P, 8) == hilbert_brute(P, 8)
        assert linear_extensions_ci(P) == linear_extensions_brute(P)


@settings(max_examples=50, deadline=None)
@given(posets(max_n=7, min_n=1))
def test_ci_closed_forms_random(P):
    if is_matching_union(build_gamma(P)):
        assert hilbert_ci(P, 6) == hilbert_brute(P, 6)
        assert linear_extensions_ci(P) == linear_extensions_brute(P)


@settings(max_examples=100, deadline=None)
@given(posets(max_n=5, min_n=1))
def test_low_coefficients(P):
    coeffs = hilbert_brute(P, 6)
    assert coeffs[0] == 1
    assert coeffs[1] == sum(J.size == 1 for J in connected_order_ideals(P))
    assert all(c >= 1 for c in coeffs)
