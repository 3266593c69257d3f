import json
from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from wtrunc.characters import (
    BUDGET_ENV,
    CharacterBudgetError,
    GeneratorProfile,
    OracleTooLarge,
    QSeries,
    TruncationMismatch,
    brute_force_dim,
    first_discrepancy,
    fock_character,
    free_character,
    generator_profile_of,
    orbifold_character,
    term_budget,
)


def partitions_count(d, parts):
    """Number of multisets of modes: by direct recursion over allowed part sizes."""
    parts = sorted(parts, reverse=True)

    def go(rest, i):
        if rest == 0:
            return 1
        if i == len(parts):
            return 0
        return sum(go(rest - j * parts[i], i + 1) for j in range(rest // parts[i] + 1))

    return go(d, 0)


def test_free_single_generator():
    assert list(free_character(GeneratorProfile.of(2), 6)) == [1, 0, 1, 1, 2, 2, 4]


def test_free_all_even_weight_six():
    assert free_character(GeneratorProfile.even(), 6)[6] == 7


def test_empty_profile_is_vacuum():
    assert list(free_character(GeneratorProfile(), 5)) == [1, 0, 0, 0, 0, 0]


def test_first_discrepancy():
    a = free_character(GeneratorProfile.of(2), 6)
    b = free_character(GeneratorProfile.of(2, 4), 6)
    assert first_discrepancy(a, b) == 4
    assert first_discrepancy(a, a) is None
    with pytest.raises(TruncationMismatch):
        first_discrepancy(a, a.truncate(3))


def test_profile_rejects_mixed_input():
    with pytest.raises(ValueError):
        GeneratorProfile(weights=(2,), all_even=True)


@given(st.integers(1, 6), st.integers(0, 14))
def test_free_matches_mode_counting(top, N):
    # a weight-w generator contributes modes of weight w, w+1, ...
    profile = GeneratorProfile.even(2 * top)
    modes = [j for w in profile.weights for j in range(w, N + 1)]
    expected = []
    for d in range(N + 1):
        expected.append(_count_with_multiplicity(d, Counter(modes)))
    assert list(free_character(profile, N)) == expected


def _count_with_multiplicity(d, counter):
    items = sorted(counter.items())

    def go(rest, i):
        if rest == 0:
            return 1
        if i == len(items):
            return 0
        size, mult = items[i]
        total = 0
        for j in range(rest // size + 1):
            total += _multichoose(mult, j) * go(rest - j * size, i + 1)
        return total

    return go(d, 0)


def _multichoose(n, k):
    return comb(n + k - 1, k)


@given(st.integers(1, 8), st.integers(0, 24))
def test_finite_even_profile_agrees_then_undercounts(M, N):
    finite = free_character(GeneratorProfile.even(2 * M), N)
    full = free_character(GeneratorProfile.even(), N)
    for w in range(N + 1):
        assert finite[w] <= full[w]
        if w <= 2 * M + 1:
            assert finite[w] == full[w]


def test_fock_one_boson_is_partitions():
    assert list(fock_character(1, 10)) == [partitions_count(d, range(1, d + 1)) for d in range(11)]


def test_orbifold_n1_low_weights():
    assert list(orbifold_character(1, 4)) == [1, 0, 1, 1, 3]


def test_orbifold_n1_known_series():
    assert list(orbifold_character(1, 13)) == [1, 0, 1, 1, 3, 3, 7, 8, 16, 20, 35, 46, 76, 101]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_orbifold_bounded_by_fock(n):
    orb = orbifold_character(n, 10)
    fock = fock_character(2 * n, 10)
    assert all(0 <= a <= b for a, b in zip(orb, fock))
    assert orb[0] == 1 and orb[1] == 0


@pytest.mark.parametrize("n,d", [(n, d) for n in (1, 2) for d in range(9)])
def test_orbifold_matches_brute_force(n, d):
    assert orbifold_character(n, d)[d] == brute_force_dim(n, d)


def test_brute_force_small_values():
    assert brute_force_dim(1, 1) == 0
    assert brute_force_dim(2, 2) == 1
    assert brute_force_dim(1, 0) == 1


def test_oracle_guard():
    with pytest.raises(OracleTooLarge):
        brute_force_dim(2, 8, guard=10)


def test_budget_exhaustion_carries_partial():
    with pytest.raises(CharacterBudgetError) as info:
        orbifold_character(3, 12, budget=50)
    assert info.value.budget == 50


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "123")
    assert term_budget() == 123
    monkeypatch.setenv(BUDGET_ENV, "lots")
    with pytest.raises(ValueError):
        term_budget()
    monkeypatch.setenv(BUDGET_ENV, "40")
    with pytest.raises(CharacterBudgetError):
        orbifold_character(2, 10)


def test_generator_profile_recovers_free_weights():
    series = free_character(GeneratorProfile.of(2, 3, 3, 5), 12)
    assert generator_profile_of(series) == [(2, 1), (3, 2), (5, 1)]


def test_n1_profile_shows_first_relation():
    prof = generator_profile_of(orbifold_character(1, 14))
    assert prof[:5] == [(2, 1), (4, 1), (6, 1), (8, 1), (10, 1)]
    assert prof[5] == (14, -1)


def test_series_serialization():
    s = QSeries((1, 0, 2))
    assert s.to_csv() == "weight,coefficient\n0,1\n1,0\n2,2\n"
    assert json.loads(s.to_json()) == {"truncation": 2, "coefficients": [1, 0, 2]}
