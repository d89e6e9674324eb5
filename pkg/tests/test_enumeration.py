import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kapaths.enumeration import (
    ColorMode,
    ColoredHumpPath,
    Restriction,
    StepComposition,
    binomial,
    compositions,
    count_kary_peak_paths,
    count_paths,
    count_restricted,
    count_SUD,
    count_SUU,
    count_super,
    count_table,
    delta_divides,
    enumerate_colored,
    enumerate_paths,
    enumerate_restricted,
    enumerate_super,
    kary_peak_census,
    kary_peak_paths_by_derivation,
    lemma_census,
    total_statistic,
)
from kapaths.errors import MalformedColoredPath
from kapaths.multiset import multiset_permutations
from kapaths.path_core import INFINITY, Hump, PathParams, is_nonnegative, parse_path

MOTZKIN = PathParams(1, 1)
SCHRODER = PathParams(1, 2)
DYCK = PathParams(1, INFINITY)
TERNARY = PathParams(2, INFINITY)


def words(stream):
    return [path.word for path in stream]


def test_multiset_permutations_lexicographic():
    assert list(multiset_permutations("aab")) == [tuple("aab"), tuple("aba"), tuple("baa")]
    assert list(multiset_permutations([])) == [()]
    assert len(list(multiset_permutations([0, 0, 1, 1, 2]))) == 30


def test_compositions():
    assert compositions(3, MOTZKIN) == [StepComposition(0, 3), StepComposition(1, 1)]
    assert compositions(6, TERNARY) == [StepComposition(2, 0)]
    assert compositions(1, SCHRODER) == []
    assert compositions(-1, MOTZKIN) == []


def test_enumerate_paths_examples():
    assert words(enumerate_paths(2, MOTZKIN)) == ["UD", "HH"]
    assert words(enumerate_paths(6, TERNARY)) == ["UUDDDD", "UDUDDD", "UDDUDD"]
    assert words(enumerate_paths(0, PathParams(3, 2))) == [""]
    assert words(enumerate_paths(1, DYCK)) == []


def test_enumerate_super_examples():
    assert words(enumerate_super(2, MOTZKIN)) == ["UD", "DU", "HH"]
    assert len(list(enumerate_super(3, MOTZKIN))) == 7
    assert words(enumerate_super(0, MOTZKIN)) == [""]


@pytest.mark.parametrize("params", [MOTZKIN, SCHRODER, DYCK, TERNARY, PathParams(3, 2), PathParams(2, 3)])
@pytest.mark.parametrize("n", range(0, 9))
def test_streams_are_sorted_and_unique(params, n):
    for stream in (enumerate_paths(n, params), enumerate_super(n, params)):
        steps = [path.steps for path in stream]
        assert steps == sorted(steps)
        assert len(set(steps)) == len(steps)


@pytest.mark.parametrize("params", [MOTZKIN, SCHRODER, DYCK, TERNARY, PathParams(3, 1), PathParams(2, 3)])
@pytest.mark.parametrize("n", range(0, 11))
def test_counts_match_enumeration(params, n):
    assert count_super(n, params) == len(list(enumerate_super(n, params)))
    assert count_paths(n, params) == len(list(enumerate_paths(n, params)))
    assert all(is_nonnegative(path) and path.is_closed and path.order == n
               for path in enumerate_paths(n, params))


def test_count_super_examples():
    assert count_super(3, MOTZKIN) == 7
    assert count_super(2, DYCK) == 2
    assert count_super(0, MOTZKIN) == 1
    assert count_super(-2, MOTZKIN) == 0


def test_known_sequences():
    # Motzkin, Schröder grandes (orden 2n), Catalan y caminos ternarios
    assert [count_paths(n, MOTZKIN) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]
    assert [count_paths(2 * n, SCHRODER) for n in range(6)] == [1, 2, 6, 22, 90, 394]
    assert [count_paths(2 * n, DYCK) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert [count_paths(3 * n, TERNARY) for n in range(5)] == [1, 1, 3, 12, 55]


def test_delta_divides():
    assert delta_divides(4, SCHRODER) == 1
    assert delta_divides(3, SCHRODER) == 0
    assert delta_divides(0, DYCK) == 1
    assert delta_divides(4, DYCK) == 0


def test_enumerate_restricted_examples():
    assert words(enumerate_restricted(2, MOTZKIN, Restriction.S_PRIME)) == ["UD", "DU"]
    assert words(enumerate_restricted(2, MOTZKIN, Restriction.S_DPRIME)) == ["UD", "DU"]
    assert len(list(enumerate_restricted(4, SCHRODER, Restriction.S_DPRIME))) == 10
    assert words(enumerate_restricted(0, MOTZKIN, Restriction.S_DPRIME)) == []


@pytest.mark.parametrize("params", [MOTZKIN, SCHRODER, PathParams(2, 3), DYCK, TERNARY])
@pytest.mark.parametrize("n", range(0, 10))
def test_restricted_counts(params, n):
    for which in Restriction:
        assert count_restricted(n, params, which) == len(list(enumerate_restricted(n, params, which)))


def test_enumerate_colored_examples():
    colored = list(enumerate_colored(2, MOTZKIN, ColorMode.HUMP))
    assert [(cp.path.word, cp.hump.up_index, cp.color) for cp in colored] == [("UD", 0, 1), ("UD", 0, 2)]
    assert len(list(enumerate_colored(3, MOTZKIN, ColorMode.PEAK))) == 4
    assert list(enumerate_colored(1, SCHRODER, ColorMode.HUMP)) == []


def test_total_statistic_examples():
    assert total_statistic(3, MOTZKIN, ColorMode.HUMP) == 3
    assert total_statistic(3, MOTZKIN, ColorMode.PEAK) == 2
    assert total_statistic(0, MOTZKIN, ColorMode.HUMP) == 0


def test_colored_path_validation():
    path = parse_path("UD", MOTZKIN)
    ColoredHumpPath(path, Hump(0, 0, 1), 2).validate()
    with pytest.raises(MalformedColoredPath):
        ColoredHumpPath(path, Hump(0, 0, 1), 3).validate()
    with pytest.raises(MalformedColoredPath):
        ColoredHumpPath(parse_path("DU", MOTZKIN), Hump(0, 0, 1), 1).validate()
    with pytest.raises(MalformedColoredPath):
        ColoredHumpPath(parse_path("HH", MOTZKIN), Hump(0, 0, 1), 1).validate()


def test_binomial_outside_range():
    assert binomial(3, -1) == 0
    assert binomial(3, 4) == 0
    assert binomial(5, 2) == 10


def test_count_suu_examples():
    assert count_SUU(2, 1, 1) == 1
    assert count_SUU(1, 1, 1) == 0
    assert count_SUU(2, 2, 1) == 1


def test_count_sud_examples():
    assert count_SUD(1, 1, 1) == 1
    assert count_SUD(2, 1, 2) == 1
    assert count_SUD(2, 1, 3) == 0


def test_lemma_counts_reject_zero():
    with pytest.raises(ValueError):
        count_SUU(0, 1, 1)
    with pytest.raises(ValueError):
        count_SUD(2, 1, 0)


def test_count_kary_peak_paths_examples():
    assert count_kary_peak_paths(2, 2, 1) == 1
    assert count_kary_peak_paths(2, 2, 2) == 2
    assert count_kary_peak_paths(3, 1, 2) == 3
    assert [count_kary_peak_paths(4, 1, m) for m in range(1, 5)] == [1, 6, 6, 1]


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 6))
def test_closed_forms_match_censuses(k, n):
    lemma = lemma_census(n, k)
    census = kary_peak_census(n, k)
    for m in range(1, n + 2):
        assert lemma.get(("UU", m), 0) == count_SUU(n, k, m)
        assert lemma.get(("UD", m), 0) == count_SUD(n, k, m)
        assert census.get(m, 0) == count_kary_peak_paths(n, k, m)
        assert kary_peak_paths_by_derivation(n, k, m) == count_kary_peak_paths(n, k, m)


def test_lemma_census_small():
    assert lemma_census(2, 1) == {("UU", 1): 1, ("UD", 2): 1, ("UD", 1): 1}
    assert lemma_census(1, 2) == {("UD", 1): 1}


def test_count_table_rows():
    rows = count_table([2], MOTZKIN)
    values = {row.family: row.value for row in rows}
    assert values == {
        "paths": 2, "super": 3, "s_prime": 2, "s_dprime": 2, "humps_total": 1, "peaks_total": 1,
    }
    assert {row.a for row in count_table([0], DYCK, ["super"])} == {"inf"}


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4),
       st.integers(min_value=0, max_value=14))
def test_count_paths_matches_enumeration_random(k, a, n):
    params = PathParams(k, a)
    assert count_paths(n, params) == sum(1 for _ in enumerate_paths(n, params))
