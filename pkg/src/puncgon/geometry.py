"""The once-punctured polygon: tagged edges, elementary moves, translation.

The model surface is a regular polygon with vertices 0, ..., n-1 in
counterclockwise order and one puncture at the center.  A *tagged edge*
is an ordered vertex pair (a, b) with a tag in {+1, -1}; edges with
a != b always carry tag +1 (plain edges, drawn as arcs homotopic to the
counterclockwise boundary path from a to b), while each vertex a carries
the two *central* edges a|+ and a|- running from a to the puncture.  For
fixed n there are exactly n**2 tagged edges.

Construction of a :class:`TaggedEdge` enforces four validity conditions,
reported by code on failure:

  E1  both endpoints are vertices in {0, ..., n-1};
  E2  the tag is +1 or -1;
  E3  a plain edge (start != end) is untagged, i.e. has tag +1;
  E4  the counterclockwise boundary path from start to end carries at
      least 3 vertices (end is never the counterclockwise neighbor of
      start).

Serialized forms are ``"a-b"`` for plain edges and ``"a|+"`` / ``"a|-"``
for central edges; positions print as ``"(i,j)"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

Vertex = int


class InvalidEdgeError(ValueError):
    """A tagged-edge validity condition failed; ``code`` is one of E1-E4."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{message} (violates edge condition {code})")
        self.code = code


def ccw_neighbor(n: int, v: Vertex) -> Vertex:
    return (v + 1) % n


def cw_neighbor(n: int, v: Vertex) -> Vertex:
    return (v - 1) % n


def delta_len(n: int, a: Vertex, b: Vertex) -> int:
    """Number of vertices on the counterclockwise boundary path from a to b.

    Both endpoints are counted; the closed path from a around the polygon
    back to a counts a twice, giving n + 1.  Values lie in {2, ..., n+1},
    and b is the counterclockwise neighbor of a exactly when the value
    is 2.
    """
    if n < 3:
        raise ValueError(f"polygon needs at least 3 vertices, got n={n}")
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"vertices must lie in 0..{n - 1}, got {a}, {b}")
    if a == b:
        return n + 1
    return ((b - a - 1) % n) + 2


@dataclass(frozen=True)
class TaggedEdge:
    """One of the n**2 tagged edges of the punctured n-gon."""

    n: int
    start: Vertex
    end: Vertex
    tag: int = 1

    def __post_init__(self):
        if self.n < 3:
            raise InvalidEdgeError("E1", f"polygon size must be >= 3, got n={self.n}")
        if not (0 <= self.start < self.n and 0 <= self.end < self.n):
            raise InvalidEdgeError(
                "E1", f"vertices must lie in 0..{self.n - 1}, got ({self.start}, {self.end})"
            )
        if self.tag not in (1, -1):
            raise InvalidEdgeError("E2", f"tag must be +1 or -1, got {self.tag}")
        if self.start != self.end:
            if self.tag != 1:
                raise InvalidEdgeError(
                    "E3", f"plain edge {self.start}-{self.end} must have tag +1"
                )
            if delta_len(self.n, self.start, self.end) < 3:
                raise InvalidEdgeError(
                    "E4",
                    f"invalid edge {self.start}-{self.end}: end is the counterclockwise "
                    "neighbor of start, boundary span must be at least 3",
                )

    @property
    def is_central(self) -> bool:
        return self.start == self.end

    @property
    def span(self) -> int:
        """|delta| of the defining boundary path (n + 1 for central edges)."""
        return delta_len(self.n, self.start, self.end)

    @classmethod
    def plain(cls, n: int, a: Vertex, b: Vertex) -> "TaggedEdge":
        return cls(n, a, b, 1)

    @classmethod
    def central(cls, n: int, a: Vertex, tag: int) -> "TaggedEdge":
        return cls(n, a, a, tag)

    @classmethod
    def parse(cls, n: int, text: str) -> "TaggedEdge":
        """Parse the serialized form "a-b", "a|+" or "a|-"."""
        s = text.strip()
        try:
            if "|" in s:
                v, t = s.split("|", 1)
                tag = {"+": 1, "-": -1}[t.strip()]
                return cls(n, int(v), int(v), tag)
            a, b = s.rsplit("-", 1)
            return cls(n, int(a), int(b), 1)
        except (KeyError, ValueError) as exc:
            if isinstance(exc, InvalidEdgeError):
                raise
            raise InvalidEdgeError("E1", f"cannot parse edge {text!r}") from exc

    def __str__(self) -> str:
        if self.is_central:
            return f"{self.start}|{'+' if self.tag == 1 else '-'}"
        return f"{self.start}-{self.end}"

    def __repr__(self) -> str:
        return f"TaggedEdge({self.n}, {self!s})"


def edge_sort_key(e: TaggedEdge):
    """Canonical order: plain edges by (start, span), then central edges
    by (vertex, tag with + first)."""
    if e.is_central:
        return (1, e.start, 0 if e.tag == 1 else 1)
    return (0, e.start, e.span)


def enumerate_tagged_edges(n: int) -> list[TaggedEdge]:
    """All n**2 tagged edges, in the canonical order of :func:`edge_sort_key`."""
    if n < 3:
        raise ValueError(f"polygon size must be >= 3, got n={n}")
    out = []
    for a in range(n):
        for span in range(3, n + 1):
            out.append(TaggedEdge(n, a, (a + span - 1) % n, 1))
    for a in range(n):
        out.append(TaggedEdge.central(n, a, 1))
        out.append(TaggedEdge.central(n, a, -1))
    out.sort(key=edge_sort_key)
    return out


def elementary_moves(m: TaggedEdge) -> list[TaggedEdge]:
    """Targets of all elementary moves out of m.

    An elementary move advances one endpoint of the edge by one
    counterclockwise step (the model's irreducible morphisms).  With
    c, d the counterclockwise neighbors of start and end:

      * advancing the start gives (c, end), valid only when the span is
        at least 4;
      * advancing the end gives (start, d) when the span is below n, and
        splits into the two tagged central edges at start when the span
        is exactly n (then d coincides with start);
      * a central edge moves only to (c, start).

    Plain edges therefore have 1, 2 or 3 moves (for n = 3 the span-n
    case leaves just the two central targets), central edges exactly 1.
    """
    n = m.n
    c = ccw_neighbor(n, m.start)
    if m.is_central:
        return [TaggedEdge(n, c, m.start, 1)]
    out = []
    if m.span >= 4:
        out.append(TaggedEdge(n, c, m.end, 1))
    if m.span <= n - 1:
        out.append(TaggedEdge(n, m.start, ccw_neighbor(n, m.end), 1))
    else:
        out.append(TaggedEdge.central(n, m.start, 1))
        out.append(TaggedEdge.central(n, m.start, -1))
    return out


def tau(m: TaggedEdge) -> TaggedEdge:
    """Translation: rotate both endpoints one step clockwise, negating the
    tag on central edges."""
    n = m.n
    if m.is_central:
        return TaggedEdge.central(n, cw_neighbor(n, m.start), -m.tag)
    return TaggedEdge(n, cw_neighbor(n, m.start), cw_neighbor(n, m.end), 1)


def tau_inv(m: TaggedEdge) -> TaggedEdge:
    n = m.n
    if m.is_central:
        return TaggedEdge.central(n, ccw_neighbor(n, m.start), -m.tag)
    return TaggedEdge(n, ccw_neighbor(n, m.start), ccw_neighbor(n, m.end), 1)


def tau_power(m: TaggedEdge, k: int) -> TaggedEdge:
    n = m.n
    if m.is_central:
        return TaggedEdge.central(n, (m.start - k) % n, m.tag * (-1) ** (k % 2))
    return TaggedEdge(n, (m.start - k) % n, (m.end - k) % n, 1)


class Position(NamedTuple):
    """Grid coordinates of a tagged edge: column in {1..n}, level in {1..n}."""

    column: int
    level: int

    def __str__(self) -> str:
        return f"({self.column},{self.level})"


def grid_column(m: TaggedEdge, base: Vertex = 0) -> int:
    return ((m.start - base) % m.n) + 1


def grid_level(m: TaggedEdge, base: Vertex = 0) -> int:
    # Central edges occupy the two fork levels n-1 and n.  The top level n
    # holds, in grid column i, the tag with tag * (-1)**(i+1) == +1, so the
    # plus-tagged central edge of the base vertex sits at level n.  The
    # convention is pinned by the translation and Hom agreement suites.
    n = m.n
    if not m.is_central:
        return m.span - 2
    i = grid_column(m, base)
    return n if m.tag * (-1) ** (i + 1) == 1 else n - 1


def pos(m: TaggedEdge, base: Vertex = 0) -> Position:
    """Bijection from the n**2 tagged edges onto {1..n} x {1..n}.

    The plain edge of span 3 at the base vertex goes to (1, 1); plain
    edges sit at level span - 2, central edges at the fork levels
    n-1 and n by the tag/parity rule of :func:`grid_level`.
    """
    return Position(grid_column(m, base), grid_level(m, base))


def pos_inv(n: int, p: Position | tuple[int, int], base: Vertex = 0) -> TaggedEdge:
    """Inverse of :func:`pos`; rejects coordinates outside the grid."""
    i, j = p
    if not (1 <= i <= n):
        raise ValueError(f"column must lie in 1..{n}, got {i}")
    if not (1 <= j <= n):
        raise ValueError(f"level must lie in 1..{n}, got {j}")
    a = (base + i - 1) % n
    if j <= n - 2:
        return TaggedEdge(n, a, (a + j + 1) % n, 1)
    top = (-1) ** (i + 1)
    return TaggedEdge.central(n, a, top if j == n else -top)


def parse_edge_list(n: int, text: str) -> list[TaggedEdge]:
    """Parse a comma-separated list of edge strings."""
    items = [part for part in (p.strip() for p in text.split(",")) if part]
    return [TaggedEdge.parse(n, part) for part in items]
