import json
import math

import pytest

from fagnano import jsonio


def test_floats_carry_17_significant_digits():
    text = jsonio.dumps({"phi": (1 + math.sqrt(5)) / 2})
    assert "1.6180339887498949" in text


def test_round_trip_types():
    doc = {
        "i": 3,
        "f": 0.1,
        "s": "x\"y",
        "b": True,
        "n": None,
        "seq": [1.5, [2, {}], {"k": []}],
    }
    parsed = json.loads(jsonio.dumps(doc))
    assert parsed["i"] == 3
    assert parsed["f"] == 0.1
    assert parsed["s"] == 'x"y'
    assert parsed["b"] is True
    assert parsed["n"] is None
    assert parsed["seq"][0] == 1.5


def test_key_order_is_insertion_order():
    text = jsonio.dumps({"z": 1, "a": 2, "m": 3})
    assert text.index('"z"') < text.index('"a"') < text.index('"m"')


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        jsonio.dumps({"bad": float("nan")})
    with pytest.raises(ValueError):
        jsonio.dumps([float("inf")])


def test_unknown_type_rejected():
    with pytest.raises(TypeError):
        jsonio.dumps({"obj": object()})


def test_deterministic_output():
    doc = {"values": [1 / 3, 2 / 7], "name": "r"}
    assert jsonio.dumps(doc) == jsonio.dumps(doc)
