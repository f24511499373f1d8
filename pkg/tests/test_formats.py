from fractions import Fraction as F

import pytest
from hypothesis import given

from amalgam.amalgams import WL, Integrable, Wiener
from amalgam.errors import AmalgamError, InvalidSpec
from amalgam.extreal import INF
from amalgam.formats import (dumps, function_from_json, function_to_json, load_function,
                             parse_spec)
from amalgam.norms import Lebesgue, Lorentz
from amalgam.stepfn import normalize

from strategies import step_functions


def test_parse_simple_specs():
    assert parse_spec("L:2") == Lebesgue(2)
    assert parse_spec("L:inf") == Lebesgue(INF)
    assert parse_spec("L:1/2") == Lebesgue(F(1, 2))
    assert parse_spec("Lorentz:2:1") == Lorentz(2, 1)


def test_parse_composite_specs():
    assert parse_spec("WL:L:1:L:inf") == WL(Lebesgue(1), Lebesgue(INF))
    assert parse_spec("WL:Lorentz:3:1:L:2") == WL(Lorentz(3, 1), Lebesgue(2))
    assert parse_spec("W:2:1") == Wiener(2, 1)
    assert parse_spec("Int:L:1/2") == Integrable(Lebesgue(F(1, 2)))
    assert parse_spec("Int:WL:L:1:L:1/2") == Integrable(WL(Lebesgue(1), Lebesgue(F(1, 2))))


@pytest.mark.parametrize("text", ["", "L", "L:0", "L:-1", "L:x", "L:2:3", "WL:L:1",
                                  "Int:Int:L:1", "W:1/2:1", "X:1", "WL:W:1:1:L:1"])
def test_bad_specs(text):
    with pytest.raises(InvalidSpec):
        parse_spec(text)


@pytest.mark.parametrize("spec", ["L:2", "Lorentz:3/2:inf", "WL:L:1:L:1/2", "W:inf:2",
                                  "Int:WL:L:1:L:2"])
def test_spec_str_round_trip(spec):
    assert str(parse_spec(spec)) == spec


def test_function_json():
    doc = {"pieces": [{"a": "1", "b": "inf", "c": "1", "alpha": "-1"}, {"a": 0, "b": "1/2", "c": "3"}]}
    f = function_from_json(doc)
    assert f == normalize([(0, F(1, 2), 3), (1, "inf", 1, -1)])
    assert function_to_json(f)["pieces"][0] == {"a": "0", "b": "1/2", "c": "3", "alpha": "0"}


@pytest.mark.parametrize("doc", [
    [],
    {"pieces": {}},
    {"pieces": [], "extra": 1},
    {"pieces": [{"a": "0", "b": "1"}]},
    {"pieces": [{"a": "0", "b": "1", "c": "1", "d": "2"}]},
    {"pieces": [{"a": "0", "b": "1", "c": 0.5}]},
    {"pieces": [{"a": "0", "b": "1", "c": "one"}]},
    {"pieces": [{"a": "0", "b": "2", "c": "1"}, {"a": "1", "b": "3", "c": "1"}]},
])
def test_bad_function_documents(doc):
    with pytest.raises(AmalgamError):
        function_from_json(doc)


def test_load_function_invalid_json(tmp_path):
    path = tmp_path / "f.json"
    path.write_text("{not json")
    with pytest.raises(InvalidSpec):
        load_function(str(path))


def test_dumps_sorts_keys():
    assert dumps({"b": 1, "a": {"d": 2, "c": 3}}) == '{"a": {"c": 3, "d": 2}, "b": 1}'


@given(step_functions())
def test_function_round_trip(f):
    assert function_from_json(function_to_json(f)) == f
