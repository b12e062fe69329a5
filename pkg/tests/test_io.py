import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperspec import io
from hyperspec.errors import NotUniform, ParseError
from hyperspec.families import loose_path
from hyperspec.hypergraph import build

from _strategies import hypertrees


def test_parse_with_comments():
    G = io.parse_uhg("# a path\n3 5 2\n0 1 2\n# middle\n2 3 4\n")
    assert G == loose_path(5, 3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 5\n0 1 2\n", 1),
        ("3 5 2\n0 1 2\n", 1),
        ("3 5 1\n0 1\n", 2),
        ("3 5 1\n0 1 9\n", 2),
        ("3 5 2\n0 1 2\n0 1 2\n", 3),
        ("3 5 1\n0 1 x\n", 2),
        ("3 5 1\n0 1 2\n2 3 4\n", 3),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        io.parse_uhg(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_missing_header():
    with pytest.raises(ParseError):
        io.parse_uhg("# nothing\n")


def test_format_needs_uniform():
    with pytest.raises(NotUniform):
        io.format_uhg(build(4, [[0, 1, 2], [2, 3]]))


@settings(max_examples=100, deadline=None)
@given(hypertrees(min_edges=1))
def test_uhg_and_json_round_trip(T):
    assert io.parse_uhg(io.format_uhg(T)) == T
    assert io.hypergraph_from_dict(json.loads(io.dumps(io.hypergraph_to_dict(T)))) == T


def test_load_by_suffix(tmp_path):
    P = loose_path(7, 3)
    io.write_uhg(P, tmp_path / "p.uhg")
    (tmp_path / "p.json").write_text(io.dumps(io.hypergraph_to_dict(P)))
    assert io.load_hypergraph(tmp_path / "p.uhg") == P
    assert io.load_hypergraph(tmp_path / "p.json") == P
    (tmp_path / "bad.json").write_text("{")
    with pytest.raises(ParseError):
        io.load_hypergraph(tmp_path / "bad.json")


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_dumps_floats_round_trip_exactly(x):
    assert json.loads(io.dumps({"x": x}))["x"] == x


def test_dumps_shapes():
    text = io.dumps({"a": [1, 2.5, None, True], "b": np.float64(0.1), "c": np.arange(2), "d": math.inf})
    assert text == '{"a": [1, 2.5, null, true], "b": 0.10000000000000001, "c": [0, 1], "d": null}'
    with pytest.raises(TypeError):
        io.dumps({"x": object()})
