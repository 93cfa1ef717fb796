"""Crossing numbers of tagged edges via lifts to the universal cover.

The punctured polygon retracts to an annulus whose outer boundary carries
the vertices; the universal cover is a strip with the vertex set lifted
to the integers.  A plain edge a-b lifts to the chord family
(a + kn, a + ((b - a) mod n) + kn), a central edge at a to the ray family
{a + kn}.  Two tagged edges achieve minimal position simultaneously, so
the crossing number is the number of translates of one lift that
strictly interleave a fixed lift of the other:

  plain-plain      count k with  a~ < c~+kn < b~ < d~+kn  or
                                 c~+kn < a~ < d~+kn < b~
  central-plain    count k with  c~ < a~+kn < d~   (0 or 1)
  central-central  1 if the vertices differ and the tags differ, else 0

Shared lifted endpoints never count, and tags are ignored outside the
central-central case.  Values always lie in {0, 1, 2}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import TaggedEdge, edge_sort_key, enumerate_tagged_edges


@dataclass(frozen=True)
class LiftChord:
    """Canonical lift of a tagged edge to the universal-cover boundary line.

    Plain edges give a chord with lo + 2 <= hi <= lo + n - 1; central
    edges give a ray family {lo + kn} with hi unused.
    """

    lo: int
    hi: int | None
    kind: str  # "chord" or "ray"


def lift(e: TaggedEdge) -> LiftChord:
    if e.is_central:
        return LiftChord(e.start, None, "ray")
    return LiftChord(e.start, e.start + ((e.end - e.start) % e.n), "chord")


def _require_same_n(m: TaggedEdge, n_: TaggedEdge):
    if m.n != n_.n:
        raise ValueError(f"edges built for different polygons: n={m.n} vs n={n_.n}")


def crossing_number(m: TaggedEdge, other: TaggedEdge) -> int:
    """Minimal number of interior intersection points of two tagged edges."""
    _require_same_n(m, other)
    n = m.n
    if m.is_central and other.is_central:
        return 1 if (m.start != other.start and m.tag != other.tag) else 0
    if m.is_central or other.is_central:
        ray = m if m.is_central else other
        chord = lift(other if m.is_central else m)
        # the ray translate strictly inside the chord window, if any
        off = (ray.start - chord.lo) % n
        return 1 if 0 < off < chord.hi - chord.lo else 0
    a, b = lift(m).lo, lift(m).hi
    c0, d0 = lift(other).lo, lift(other).hi
    count = 0
    for k in range(-2, 3):
        c, d = c0 + k * n, d0 + k * n
        if a < c < b < d or c < a < d < b:
            count += 1
    return count


@dataclass(frozen=True)
class CrossingTable:
    """Full crossing-number table over the canonical edge order."""

    n: int
    edges: tuple[TaggedEdge, ...]
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, pair):
        i, j = pair
        return self.values[i][j]


def crossing_matrix(n: int) -> CrossingTable:
    if n < 3:
        raise ValueError(f"polygon size must be >= 3, got n={n}")
    edges = enumerate_tagged_edges(n)
    values = tuple(
        tuple(crossing_number(a, b) for b in edges) for a in edges
    )
    return CrossingTable(n, tuple(edges), values)


def compatible(m: TaggedEdge, other: TaggedEdge) -> bool:
    return crossing_number(m, other) == 0


def sorted_edges(edges) -> list[TaggedEdge]:
    return sorted(edges, key=edge_sort_key)
