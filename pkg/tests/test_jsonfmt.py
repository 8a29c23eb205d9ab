import json
import math
from fractions import Fraction

import numpy as np
import pytest

from qabel.jsonfmt import dumps, rational


def test_scalars():
    assert dumps(None) == "null"
    assert dumps(True) == "true"
    assert dumps(np.int64(3)) == "3"
    assert dumps(2.0) == "2.0"
    assert dumps(0.1) == "0.10000000000000001"
    assert dumps(1e300) == "1.0000000000000001e+300"
    assert dumps([math.inf, -math.inf, math.nan]) == '["inf", "-inf", "nan"]'


def test_exact_and_complex():
    assert rational(Fraction(6, 4)) == "3/2"
    assert rational(5) == "5"
    assert dumps(Fraction(-1, 3)) == '"-1/3"'
    assert dumps(1 + 2j) == '{"re": 1.0, "im": 2.0}'


def test_round_trip_and_order():
    obj = {"b": [1, 2.5, np.float64(0.25)], "a": {"x": "s"}}
    text = dumps(obj)
    assert json.loads(text) == {"b": [1, 2.5, 0.25], "a": {"x": "s"}}
    assert text.index('"b"') < text.index('"a"')
    assert dumps(obj) == text


def test_floats_round_trip_exactly():
    xs = [0.1 * k for k in range(50)] + [math.pi, 1 / 3, 5e-324]
    assert json.loads(dumps(xs)) == xs


def test_unknown_type():
    with pytest.raises(TypeError):
        dumps(object())
