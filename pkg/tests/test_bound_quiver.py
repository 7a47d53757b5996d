from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import gentle_sample
from gentle_cm import fixture
from gentle_cm.bound_quiver import (
    Path,
    compose,
    enumerate_nonzero_paths,
    is_schurian,
    parse_presentation,
    presentation_from_json,
    presentation_to_json,
    serialize_presentation,
    validate_gentle,
)
from gentle_cm.errors import DomainError, InfiniteDimensionalError, QuiverFormatError

C3_TEXT = """# triangle
vertex 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 3 -> 1
rel b a
rel c b
rel a c
"""


def test_parse_c3():
    p = parse_presentation(C3_TEXT)
    assert p.vertices == ("1", "2", "3")
    assert [a.name for a in p.arrows] == ["a", "b", "c"]
    assert p.relations == {("b", "a"), ("c", "b"), ("a", "c")}


def test_parse_vertices_only():
    p = parse_presentation("vertex 1\nvertex 2 3\n\n")
    assert p.vertices == ("1", "2", "3") and not p.arrows
    assert validate_gentle(p).ok


@pytest.mark.parametrize("text, fragment", [
    ("vertex 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrel a a", "not composable"),
    ("vertex 1\nvertex 1", "duplicate vertex"),
    ("vertex 1 2\narrow a: 1 -> 2\narrow a: 2 -> 1", "duplicate arrow"),
    ("vertex 1\narrow a: 1 -> 9", "unknown vertex"),
    ("vertex 1\narrow a: 1 -> 1\nrel a b", "unknown arrow"),
    ("vertex 1\narrow a: 1 -> 1\nrel a a a", "length-2"),
    ("vertex 1\nfoo", "unknown statement"),
    ("vertex 1\narrow a 1 -> 1", "malformed"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(QuiverFormatError) as err:
        parse_presentation(text)
    assert fragment in str(err.value)
    assert str(err.value).startswith("line ")


def test_non_composable_relation_reports_line():
    with pytest.raises(QuiverFormatError, match="line 4"):
        parse_presentation("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrel a b")


def test_validate_examples():
    assert validate_gentle(fixture("C3")).ok
    star = parse_presentation("vertex 0 1 2 3\narrow a: 0 -> 1\narrow b: 0 -> 2\narrow c: 0 -> 3")
    assert "too many outgoing" in [v.clause for v in validate_gentle(star).violations]
    free = parse_presentation("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1")
    clauses = [v.clause for v in validate_gentle(free).violations]
    assert clauses == ["infinite dimensional"]


def test_validate_uniqueness_clauses():
    p = parse_presentation("vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 4")
    assert "non-zero continuation not unique" in [v.clause for v in validate_gentle(p).violations]
    p = parse_presentation(
        "vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 4\nrel b a\nrel c a")
    assert "zero continuation not unique" in [v.clause for v in validate_gentle(p).violations]


def test_compose_examples():
    c3 = fixture("C3")
    assert compose(c3, c3.path("b"), c3.path("a")) is None
    q = c3.path("a")
    assert compose(c3, Path.trivial("2"), q) == q
    assert compose(c3, q, Path.trivial("1")) == q
    hexagon = fixture("HEX")
    assert compose(hexagon, hexagon.path("a-"), hexagon.path("a+")) == hexagon.path("a-", "a+")
    with pytest.raises(DomainError):
        compose(c3, c3.path("a"), c3.path("a"))


def test_enumerate_counts():
    assert len(enumerate_nonzero_paths(fixture("A2"))) == 3
    assert len(enumerate_nonzero_paths(fixture("C3"))) == 6
    paths = enumerate_nonzero_paths(fixture("HEX"))
    assert len(paths) == 15
    assert sorted(len(p) for p in paths) == [0] * 6 + [1] * 6 + [2] * 3


def test_enumerate_order_is_deterministic():
    paths = enumerate_nonzero_paths(fixture("A2"))
    assert [str(p) for p in paths] == ["e(1)", "a", "e(2)"]


def test_enumerate_rejects_infinite():
    free = parse_presentation("vertex 1\narrow a: 1 -> 1")
    with pytest.raises(InfiniteDimensionalError):
        enumerate_nonzero_paths(free)


def test_schurian_examples():
    assert is_schurian(fixture("C3"))
    assert is_schurian(fixture("HEX"))
    assert not is_schurian(fixture("LOOP"))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_round_trips(seed):
    p = gentle_sample(seed)
    assert parse_presentation(serialize_presentation(p)) == p
    assert presentation_from_json(presentation_to_json(p)) == p


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_paths_closed_under_subpaths(seed):
    p = gentle_sample(seed)
    paths = set(enumerate_nonzero_paths(p))
    for x in paths:
        for i in range(len(x.arrows)):
            for j in range(i + 1, len(x.arrows) + 1):
                assert p.path(*x.arrows[i:j]) in paths


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_compose_associative_and_zero_stable(seed):
    p = gentle_sample(seed)
    paths = enumerate_nonzero_paths(p)
    arrows = [p.path(a.name) for a in p.arrows]
    for x in paths:
        for y in paths:
            if y.target != x.source:
                continue
            xy = compose(p, x, y)
            for z in arrows:
                if z.source != x.target:
                    continue
                zx = compose(p, z, x)
                left = None if zx is None else compose(p, zx, y)
                right = None if xy is None else compose(p, z, xy)
                assert left == right
                if xy is None:
                    assert right is None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_generated_presentations_are_gentle(seed):
    p = gentle_sample(seed)
    assert validate_gentle(p).ok
    enumerate_nonzero_paths(p)
