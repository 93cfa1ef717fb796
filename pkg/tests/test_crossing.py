import pytest

from puncgon.crossing import (
    compatible,
    crossing_matrix,
    crossing_number,
    lift,
)
from puncgon.geometry import TaggedEdge, enumerate_tagged_edges

from oracles import lift_scan_crossing, n3_case_rule_crossing


def test_central_central_rule():
    a = TaggedEdge.central(8, 2, 1)
    assert crossing_number(a, TaggedEdge.central(8, 2, -1)) == 0
    assert crossing_number(a, TaggedEdge.central(8, 5, -1)) == 1
    assert crossing_number(a, TaggedEdge.central(8, 5, 1)) == 0


def test_plain_plain_examples():
    # frozen from the wide-scan lift oracle
    assert crossing_number(TaggedEdge(5, 0, 4), TaggedEdge(5, 3, 2)) == 2
    assert crossing_number(TaggedEdge(4, 1, 3), TaggedEdge(4, 3, 1)) == 0
    assert lift_scan_crossing(TaggedEdge(5, 0, 4), TaggedEdge(5, 3, 2)) == 2
    assert lift_scan_crossing(TaggedEdge(4, 1, 3), TaggedEdge(4, 3, 1)) == 0


@pytest.mark.parametrize("n", range(3, 7))
def test_matches_wide_scan_oracle(n):
    edges = enumerate_tagged_edges(n)
    for m in edges:
        for other in edges:
            assert crossing_number(m, other) == lift_scan_crossing(m, other)


def test_n3_table_matches_case_rules():
    edges = enumerate_tagged_edges(3)
    table = crossing_matrix(3)
    for i, m in enumerate(edges):
        for j, other in enumerate(edges):
            assert table[i, j] == n3_case_rule_crossing(m, other)
    # row sums against the independent hand count
    for i, m in enumerate(edges):
        assert sum(table.values[i]) == sum(
            n3_case_rule_crossing(m, other) for other in edges
        )


@pytest.mark.parametrize("n", range(3, 8))
def test_symmetry_range_diagonal(n):
    edges = enumerate_tagged_edges(n)
    for i, m in enumerate(edges):
        assert crossing_number(m, m) == 0
        for other in edges[i + 1 :]:
            a, b = crossing_number(m, other), crossing_number(other, m)
            assert a == b
            assert a in (0, 1, 2)
            if m.is_central or other.is_central:
                assert a < 2


@pytest.mark.parametrize("n", range(3, 8))
def test_shared_endpoint_properties(n):
    for m in enumerate_tagged_edges(n):
        for other in enumerate_tagged_edges(n):
            if m.is_central and not other.is_central:
                if m.start in (other.start, other.end):
                    assert crossing_number(m, other) == 0
            if not m.is_central and not other.is_central:
                if {m.start, m.end} & {other.start, other.end}:
                    assert crossing_number(m, other) <= 1


def test_lift_chords():
    c = lift(TaggedEdge(8, 5, 1))
    assert (c.lo, c.hi, c.kind) == (5, 9, "chord")
    r = lift(TaggedEdge.central(8, 5, -1))
    assert (r.lo, r.hi, r.kind) == (5, None, "ray")


@pytest.mark.parametrize("n", range(3, 9))
def test_lift_window_invariant(n):
    for e in enumerate_tagged_edges(n):
        c = lift(e)
        if e.is_central:
            assert c.kind == "ray" and c.hi is None
        else:
            assert c.kind == "chord"
            assert c.lo + 2 <= c.hi <= c.lo + n - 1


def test_matrix_shape_and_symmetry():
    t = crossing_matrix(4)
    assert len(t.values) == 16 and all(len(r) == 16 for r in t.values)
    assert t.values == tuple(zip(*t.values))
    assert all(t.values[i][i] == 0 for i in range(16))
    with pytest.raises(ValueError):
        crossing_matrix(2)


def test_rejects_mixed_n():
    with pytest.raises(ValueError):
        crossing_number(TaggedEdge(5, 0, 2), TaggedEdge(6, 0, 2))


def test_compatible_helper():
    assert compatible(TaggedEdge(6, 0, 2), TaggedEdge(6, 0, 3))
    assert not compatible(TaggedEdge(6, 0, 2), TaggedEdge(6, 1, 3))
