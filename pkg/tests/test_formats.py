import json

import pytest
from hypothesis import given, settings

from conftest import colored_graphs
from corpus import T1, T2
from mextremal import formats
from mextremal.errors import ColorOutOfRange, DuplicateEdge, GraphSyntaxError, Loop


def test_minimal_text_file():
    g = formats.parse_text("n 2\nr 2\ne 0 1 1\n")
    assert g.n == 2 and g.r == 2 and g.edge_counts() == (1, 0)


def test_comments_and_blank_lines():
    g = formats.parse_text("# header\n\nn 3  # vertices\nr 2\ne 0 1 1\ne 0 1 2\n")
    assert g.colors(0, 1) == frozenset({1, 2})


def test_text_round_trip_t2():
    assert formats.parse_text(formats.serialize_text(T2)) == T2


def test_json_round_trip_t1():
    text = formats.serialize_json(T1)
    assert json.loads(text)["n"] == 3
    assert formats.parse_json(text) == T1
    assert formats.loads(text) == T1


@pytest.mark.parametrize(
    "text, err",
    [
        ("n 2\nr 2\ne 0 1 9\n", ColorOutOfRange),
        ("n 2\nr 2\ne 1 1 1\n", Loop),
        ("n 2\nr 2\ne 0 1 1\ne 0 1 1\n", DuplicateEdge),
        ("n 2\nr 2\ne 1 0 1\n", GraphSyntaxError),
        ("n 2\nr 2\nx 0 1\n", GraphSyntaxError),
        ("n two\nr 2\n", GraphSyntaxError),
    ],
)
def test_parse_errors(text, err):
    with pytest.raises(err):
        formats.parse_text(text)


def test_syntax_error_carries_line_number():
    with pytest.raises(GraphSyntaxError) as info:
        formats.parse_text("n 2\nr 2\nbogus\n")
    assert info.value.line == 3


@settings(max_examples=80, deadline=None)
@given(colored_graphs(max_n=6, r=3))
def test_round_trips(g):
    assert formats.parse_text(formats.serialize_text(g)) == g
    assert formats.parse_json(formats.serialize_json(g)) == g


def test_dump_and_load(tmp_path):
    for ext in ("cg", "json"):
        path = tmp_path / f"t2.{ext}"
        formats.dump(T2, path)
        assert formats.load(path) == T2
