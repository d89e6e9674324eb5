import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kapaths.errors import HorizontalForbidden, IllegalCharacter, InvalidParams, NoPointsRight
from kapaths.enumeration import enumerate_paths
from kapaths.path_core import (
    DOWN,
    HORIZONTAL,
    INFINITY,
    UP,
    Hump,
    LatticePath,
    LatticePoint,
    PathParams,
    first_return_after,
    height_profile,
    humps,
    is_nonnegative,
    leftmost_crossing_up,
    parse_params,
    parse_path,
    peaks,
    reverse_path,
    rightmost_lowest_after,
)
from tests.worked_example import EXAMPLE_PARAMS, super_path

MOTZKIN = PathParams(1, 1)
SCHRODER = PathParams(1, 2)
DYCK = PathParams(1, INFINITY)
TERNARY = PathParams(2, INFINITY)


def test_parse_params_accepts_inf():
    assert parse_params(3, "inf").a == math.inf
    assert parse_params("2", "∞").is_kary
    assert parse_params(1, 2) == SCHRODER
    assert str(parse_params(3, "Infinity")) == "k=3, a=inf"


@pytest.mark.parametrize("k, a", [(0, 1), (-1, 2), (1, 0), (2, "x"), ("dos", 1)])
def test_invalid_params(k, a):
    with pytest.raises(InvalidParams):
        parse_params(k, a)


def test_params_reject_booleans():
    with pytest.raises(InvalidParams):
        PathParams(True, 1)


def test_parse_path_basic():
    path = parse_path("UD", MOTZKIN)
    assert path.steps == (UP, DOWN)
    assert path.order == 2
    assert path.word == "UD"


def test_parse_empty_path():
    path = parse_path("", PathParams(3, 2))
    assert path.steps == ()
    assert path.order == 0
    assert path.is_closed


def test_horizontal_width_counts_in_order():
    path = parse_path("UHD", SCHRODER)
    assert path.order == 4
    assert height_profile(path) == [1, 1, 0]


def test_illegal_character_reports_position():
    with pytest.raises(IllegalCharacter) as info:
        parse_path("UXD", MOTZKIN)
    assert info.value.position == 1
    assert info.value.char == "X"


def test_horizontal_forbidden_for_kary():
    with pytest.raises(HorizontalForbidden) as info:
        parse_path("UHD", DYCK)
    assert info.value.position == 1


@pytest.mark.parametrize("word, params, expected", [
    ("UD", MOTZKIN, [1, 0]),
    ("UDDUDD", TERNARY, [2, 1, 0, 2, 1, 0]),
    ("DU", MOTZKIN, [-1, 0]),
])
def test_height_profile(word, params, expected):
    assert height_profile(parse_path(word, params)) == expected


@pytest.mark.parametrize("word, params, expected", [
    ("UD", MOTZKIN, True),
    ("DU", MOTZKIN, False),
    ("UDDUDD", TERNARY, True),
])
def test_is_nonnegative(word, params, expected):
    assert is_nonnegative(parse_path(word, params)) is expected


@pytest.mark.parametrize("word, expected", [
    ("HUDDUDH", "HDUDDUH"),
    ("", ""),
    ("UD", "DU"),
])
def test_reverse_path(word, expected):
    assert reverse_path(parse_path(word, MOTZKIN)).word == expected


def test_humps():
    assert humps(parse_path("UHD", MOTZKIN)) == [Hump(0, 1, 2)]
    assert humps(parse_path("UUDDDD", TERNARY)) == [Hump(1, 0, 2)]
    assert humps(parse_path("HHH", MOTZKIN)) == []


def test_peaks():
    assert peaks(parse_path("UHD", MOTZKIN)) == []
    assert [p.up_index for p in peaks(parse_path("UDUDDD", TERNARY))] == [0, 2]
    assert peaks(parse_path("UD", MOTZKIN)) == [Hump(0, 0, 1)]


def test_hump_rejects_inconsistent_indices():
    with pytest.raises(ValueError):
        Hump(0, 1, 3)


def test_leftmost_crossing_up():
    assert leftmost_crossing_up(parse_path("DU", MOTZKIN)) == 1
    assert leftmost_crossing_up(parse_path("HH", MOTZKIN)) is None

    example = super_path()
    index = leftmost_crossing_up(example)
    assert example.start_point(index) == LatticePoint(7, -1)
    assert example.end_point(index) == LatticePoint(8, 2)


def test_first_return_after():
    assert first_return_after(parse_path("UD", MOTZKIN), 0) == LatticePoint(2, 0)
    assert first_return_after(parse_path("UUDD", MOTZKIN), 1) == LatticePoint(4, 0)
    assert first_return_after(super_path(), 7) == LatticePoint(14, 0)


def test_rightmost_lowest_after():
    assert rightmost_lowest_after(parse_path("UD", MOTZKIN), 0) == LatticePoint(2, 0)
    # empate en (2,0) y (4,0): gana el de más a la derecha
    assert rightmost_lowest_after(parse_path("UDUD", MOTZKIN), 0) == LatticePoint(4, 0)
    assert rightmost_lowest_after(super_path(), 7) == LatticePoint(30, -4)


def test_rightmost_lowest_without_points():
    with pytest.raises(NoPointsRight):
        rightmost_lowest_after(parse_path("UD", MOTZKIN), 2)


def test_worked_example_order():
    assert super_path().order == 38
    assert super_path().params == EXAMPLE_PARAMS


def test_concat_and_segment():
    path = parse_path("UDHUD", MOTZKIN)
    assert path.segment(0, 2).concat(path.segment(2, 5)) == path
    assert path.leading_horizontals() == 0
    assert parse_path("HHUD", MOTZKIN).leading_horizontals() == 2


words = st.text(alphabet="UDH", max_size=24)


@settings(max_examples=200, deadline=None)
@given(words)
def test_reverse_is_involution(word):
    path = parse_path(word, SCHRODER)
    assert reverse_path(reverse_path(path)) == path


@settings(max_examples=200, deadline=None)
@given(words)
def test_word_roundtrip_and_final_height(word):
    path = parse_path(word, PathParams(2, 3))
    assert path.word == word
    expected = 2 * word.count("U") - word.count("D")
    assert path.is_closed == (not word or expected == 0)
    assert path.order == word.count("U") + word.count("D") + 3 * word.count("H")


@settings(max_examples=200, deadline=None)
@given(words)
def test_humps_are_well_formed(word):
    path = parse_path(word, MOTZKIN)
    for hump in humps(path):
        assert path.steps[hump.up_index] is UP
        assert path.steps[hump.down_index] is DOWN
        assert all(step is HORIZONTAL for step in path.steps[hump.up_index + 1:hump.down_index])
    assert len(peaks(path)) == word.count("UD")


def scanned_points(word, params):
    """Puntos finales de cada paso recorriendo la palabra a mano"""
    x = y = 0
    points = []
    for letter in word:
        if letter == "U":
            x, y = x + 1, y + params.k
        elif letter == "D":
            x, y = x + 1, y - 1
        else:
            x += params.a
        points.append(LatticePoint(x, y))
    return points


WIDE = PathParams(2, 3)


@settings(max_examples=300, deadline=None)
@given(words, st.integers(min_value=0, max_value=80))
def test_first_return_matches_scan(word, x0):
    path = parse_path(word, WIDE)
    points = scanned_points(word, WIDE)
    assert [point.y for point in points] == height_profile(path)
    expected = next((point for point in points if point.x > x0 and point.y == 0), None)
    assert first_return_after(path, x0) == expected


@settings(max_examples=300, deadline=None)
@given(words, st.integers(min_value=0, max_value=80))
def test_rightmost_lowest_matches_scan(word, x0):
    path = parse_path(word, WIDE)
    right = [point for point in scanned_points(word, WIDE) if point.x > x0]
    if not right:
        with pytest.raises(NoPointsRight):
            rightmost_lowest_after(path, x0)
        return
    lowest = min(point.y for point in right)
    expected = max((point for point in right if point.y == lowest), key=lambda point: point.x)
    assert rightmost_lowest_after(path, x0) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=6), st.sampled_from([1, 2, 3]), st.sampled_from([1, 2, 3, INFINITY]))
def test_humps_of_nonnegative_paths_stay_above_axis(n, k, a):
    params = PathParams(k, a)
    for path in enumerate_paths(n, params):
        assert is_nonnegative(path) and path.is_closed
        for hump in humps(path):
            assert path.start_height(hump.up_index) >= 0
            assert path.heights[hump.down_index] >= 0


def test_lattice_path_from_list_is_normalized():
    assert LatticePath(MOTZKIN, [0, 1]) == parse_path("UD", MOTZKIN)
