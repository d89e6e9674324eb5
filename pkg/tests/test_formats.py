import json

import pytest

from kapaths.enumeration import ColorMode, ColoredHumpPath, enumerate_colored
from kapaths.errors import MalformedColoredPath
from kapaths.formats import (
    colored_from_dict,
    colored_from_path,
    colored_to_dict,
    path_from_json,
    path_to_json,
)
from kapaths.path_core import INFINITY, Hump, PathParams, parse_path

MOTZKIN = PathParams(1, 1)


def test_path_json_carries_extra_fields():
    path = parse_path("UDD", PathParams(2, INFINITY))
    text = path_to_json(path, reason="motivo")
    assert json.loads(text) == {"k": 2, "a": "inf", "word": "UDD", "reason": "motivo"}
    assert path_from_json(text) == path
    assert path_from_json(path_to_json(parse_path("", MOTZKIN))) == parse_path("", MOTZKIN)


def test_colored_dict_roundtrip():
    for cp in enumerate_colored(4, PathParams(1, 2), ColorMode.HUMP):
        assert colored_from_dict(colored_to_dict(cp)) == cp


def test_colored_from_path_finds_horizontal_run():
    cp = colored_from_path(parse_path("UHHD", MOTZKIN), 0, 2)
    assert cp == ColoredHumpPath(parse_path("UHHD", MOTZKIN), Hump(0, 2, 3), 2)


@pytest.mark.parametrize("word, index", [("UHH", 0), ("UD", 1), ("UD", 5)])
def test_colored_from_path_without_hump(word, index):
    with pytest.raises(MalformedColoredPath):
        colored_from_path(parse_path(word, MOTZKIN), index, 1)


@pytest.mark.parametrize("text", ["{", "[]", '{"k": 1, "word": "UD"}'])
def test_path_from_json_rejects_malformed(text):
    with pytest.raises(MalformedColoredPath):
        path_from_json(text)


def test_colored_from_dict_requires_all_fields():
    with pytest.raises(MalformedColoredPath):
        colored_from_dict({"path": {"k": 1, "a": 1, "word": "UD"}, "color": 1})
