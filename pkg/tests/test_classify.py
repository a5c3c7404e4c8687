import pytest

from hollowsimplex.asymptotic import is_asymptotically_hollow
from hollowsimplex.classify import (
    SPORADIC_TRIPLES,
    TripleSet,
    classify_triples,
    doubling_family,
    family_identities,
    reference_triples,
    verify_family,
)


def test_doubling_family_values():
    assert doubling_family(4) == (6, 10, 15)
    assert doubling_family(5) == (28, 36, 63, 126)
    assert doubling_family(6) == (120, 136, 255, 510, 1020)
    with pytest.raises(ValueError):
        doubling_family(3)


def test_doubling_family_least_entry():
    for n in range(4, 10):
        a = doubling_family(n)
        assert len(a) == n - 1
        assert a[0] == min(a) == (1 << (n - 3)) * ((1 << (n - 2)) - 1)


def test_family_identities():
    for n in range(4, 10):
        assert all(family_identities(doubling_family(n)).values()), n


def test_family_is_asymptotically_hollow():
    for n in range(4, 10):
        assert is_asymptotically_hollow(doubling_family(n)), n


def test_verify_family_payload():
    checks = verify_family(5)
    assert checks["asymptotically_hollow"]
    assert checks["first_pair_sum"] and checks["prefix_sums"]


def test_triple_set_partition():
    ts = TripleSet.from_triples([(2, 3, 4), (2, 3, 5), (6, 10, 15), (2, 2, 3)])
    assert ts.family_xs == (2, 3)
    assert ts.sporadic == ((2, 3, 5), (6, 10, 15))
    assert (2, 3, 4) in ts.all_triples()


def test_reference_triples_boxes():
    full = reference_triples(60)
    assert full.sporadic == SPORADIC_TRIPLES
    assert full.family_xs == tuple(range(2, 60))
    small = reference_triples(10)
    assert small.sporadic == (
        (2, 3, 5), (2, 3, 8), (2, 5, 9), (3, 4, 6), (3, 5, 7), (3, 5, 8),
        (3, 8, 10), (4, 6, 9), (4, 7, 10),
    )
    assert reference_triples(15).sporadic[-1] == (6, 10, 15)
    assert reference_triples(3).family_xs == (2,)
    assert reference_triples(3).sporadic == ()


def test_classify_small_box():
    result = classify_triples(2, 5)
    assert result.sporadic == ((2, 3, 5),)
    # largest entry capped at x_max, so the family stops at x = 4
    assert result.family_xs == (2, 3, 4)


def test_classify_medium_box_matches_reference():
    result = classify_triples(6, 16)
    expected = reference_triples(16)
    assert result.sporadic == expected.sporadic
    assert result.family_xs == expected.family_xs


def test_classify_min_entry_six():
    result = classify_triples(7, 60, min_entry=6)
    assert result.sporadic == ((6, 10, 15),)
    assert result.family_xs == ()


def test_classify_min_entry_above_six_is_empty():
    result = classify_triples(10, 25, min_entry=7)
    assert result.sporadic == () and result.family_xs == ()


def test_classify_validation():
    with pytest.raises(ValueError):
        classify_triples(1, 10)
    with pytest.raises(ValueError):
        classify_triples(10, 5)


def test_classify_threads_deterministic():
    assert classify_triples(3, 10, threads=2) == classify_triples(3, 10)


def test_every_reference_triple_passes_criterion():
    for t in reference_triples(60).all_triples():
        assert is_asymptotically_hollow(t), t
