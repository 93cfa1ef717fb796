import pytest

from puncgon.clusterops import ar_triangle, ext1_dim, verify_theorem2
from puncgon.crossing import crossing_number
from puncgon.geometry import (
    TaggedEdge,
    elementary_moves,
    enumerate_tagged_edges,
    tau,
)
from puncgon.mesh import build_window, hom_dim_closed_form


@pytest.mark.parametrize("n", range(3, 7))
def test_ext1_rigidity(n):
    for m in enumerate_tagged_edges(n):
        assert ext1_dim(m, m) == 0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ext1_symmetric_and_bounded(n):
    edges = enumerate_tagged_edges(n)
    for m in edges:
        for other in edges:
            v = ext1_dim(m, other)
            assert v == ext1_dim(other, m)
            assert v <= 2


@pytest.mark.parametrize("n", [3, 4])
def test_ext1_engines_agree(n):
    edges = enumerate_tagged_edges(n)
    for m in edges:
        for other in edges:
            assert ext1_dim(m, other, method="mesh") == ext1_dim(m, other)


def test_ext1_rejects_unknown_method():
    m = TaggedEdge(5, 0, 2)
    with pytest.raises(ValueError):
        ext1_dim(m, m, method="float")


def test_verify_theorem2_small():
    rep = verify_theorem2(3)
    assert rep.pairs_checked == 81 and rep.passed
    data = rep.to_json()
    assert data["passed"] and data["failures"] == []


def test_verify_theorem2_detects_corruption():
    def corrupted(m, other):
        v = crossing_number(m, other)
        if m.is_central and other.is_central:
            return 1 - v if m.start != other.start else v
        return v

    rep = verify_theorem2(4, crossing_fn=corrupted)
    assert not rep.passed
    assert len(rep.failures) > 0


def test_ar_triangle_case_shapes():
    # tau M plain with span 3: single middle summand
    m = TaggedEdge(8, 1, 3)  # tau m = 0-2
    tri = ar_triangle(m)
    assert tri.left == TaggedEdge(8, 0, 2)
    assert tri.middle == (TaggedEdge(8, 0, 3),)
    # middle spans: two plain summands
    m = TaggedEdge(8, 1, 5)
    tri = ar_triangle(m)
    assert set(tri.middle) == {TaggedEdge(8, 1, 4), TaggedEdge(8, 0, 5)}
    # tau M of span n: both tagged radii appear
    m = TaggedEdge(8, 2, 1)  # tau m = 1-0, span 8
    tri = ar_triangle(m)
    assert set(tri.middle) == {
        TaggedEdge(8, 2, 0),
        TaggedEdge.central(8, 1, 1),
        TaggedEdge.central(8, 1, -1),
    }
    # central M: single plain middle
    m = TaggedEdge.central(8, 3, 1)
    tri = ar_triangle(m)
    assert tri.left == TaggedEdge.central(8, 2, -1)
    assert tri.middle == (TaggedEdge(8, 3, 2),)


@pytest.mark.parametrize("n", range(3, 7))
def test_ar_triangle_structure(n):
    window = build_window(n, 0, 2 * n + 1)
    arrows_in: dict = {}
    for a, b in window.arrows():
        arrows_in.setdefault(b.zq, []).append(a)
    for m in enumerate_tagged_edges(n):
        tri = ar_triangle(m)
        assert tri.left == tau(m)
        assert 1 <= len(tri.middle) <= 3
        assert set(tri.middle) == set(elementary_moves(tri.left))
        for s in tri.middle:
            assert m in elementary_moves(s)
            # irreducible morphism witnesses on both sides of the mesh
            assert hom_dim_closed_form(tri.left, s) >= 1
            assert hom_dim_closed_form(s, m) >= 1
        # middle summands match the in-arrows of m in a window placing
        # m away from the border
        from puncgon.mesh import MeshVertex

        v = MeshVertex(1, m)
        preds = arrows_in.get(v.zq, [])
        assert sorted(str(p.edge) for p in preds) == sorted(
            str(s) for s in tri.middle
        )
