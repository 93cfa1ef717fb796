"""Cluster-tilted algebras of a triangulation T: dimension vectors of the
quotient-category modules, the AR quiver of the ambient category, the AR
quiver of mod End(T)^op obtained by deleting T, and zero-relation probes.

A module over End(T)^op is determined here only by its dimension vector,
whose coordinate at T_i is the crossing number with T_i; the stacked
"Loewy" text rendering orders the support along the quiver's arrow flow
and is display sugar only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crossing import crossing_number
from .geometry import (
    TaggedEdge,
    edge_sort_key,
    elementary_moves,
    enumerate_tagged_edges,
    tau,
)
from .mesh import compose
from .triangulation import (
    QuiverPresentation,
    Triangulation,
    quiver_with_representatives,
)


@dataclass(frozen=True)
class DimensionVector:
    """Integer vector indexed by the edges of a triangulation."""

    labels: tuple[TaggedEdge, ...]
    coords: tuple[int, ...]

    def __getitem__(self, edge: TaggedEdge) -> int:
        return self.coords[self.labels.index(edge)]

    @property
    def support(self) -> tuple[TaggedEdge, ...]:
        return tuple(e for e, c in zip(self.labels, self.coords) if c)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def dimension_vector(m: TaggedEdge, t: Triangulation) -> DimensionVector:
    """Coordinate at T_i is the crossing number e(m, T_i); zero exactly on
    members of t, and each coordinate is at most 2."""
    if m.n != t.n:
        raise ValueError(f"edge has n={m.n}, triangulation n={t.n}")
    return DimensionVector(t.edges, tuple(crossing_number(m, e) for e in t.edges))


@dataclass(frozen=True)
class CategoryQuiver:
    """AR quiver of the whole category: all n**2 tagged edges, arrows the
    elementary moves, translation tau, wrapping cyclically."""

    n: int
    vertices: tuple[TaggedEdge, ...]
    arrows: tuple[tuple[TaggedEdge, TaggedEdge], ...]
    tau_pairs: tuple[tuple[TaggedEdge, TaggedEdge], ...]


def ar_quiver_of_category(n: int) -> CategoryQuiver:
    if n < 3:
        raise ValueError(f"polygon size must be >= 3, got n={n}")
    vertices = tuple(enumerate_tagged_edges(n))
    arrows = tuple(
        (m, target)
        for m in vertices
        for target in sorted(elementary_moves(m), key=edge_sort_key)
    )
    tau_pairs = tuple((m, tau(m)) for m in vertices)
    return CategoryQuiver(n, vertices, arrows, tau_pairs)


@dataclass(frozen=True)
class ModuleCategoryQuiver:
    """AR quiver of mod End(T)^op: the category quiver with T deleted and
    every surviving vertex labeled by its dimension vector."""

    triangulation: Triangulation
    vertices: tuple[TaggedEdge, ...]
    dimvecs: tuple[DimensionVector, ...]
    arrows: tuple[tuple[TaggedEdge, TaggedEdge], ...]
    tau_pairs: tuple[tuple[TaggedEdge, TaggedEdge], ...]

    def dimvec(self, m: TaggedEdge) -> DimensionVector:
        return self.dimvecs[self.vertices.index(m)]


def ar_quiver_of_tilted(t: Triangulation) -> ModuleCategoryQuiver:
    full = ar_quiver_of_category(t.n)
    deleted = set(t.edges)
    vertices = tuple(v for v in full.vertices if v not in deleted)
    dimvecs = tuple(dimension_vector(v, t) for v in vertices)
    arrows = tuple(
        (a, b) for a, b in full.arrows if a not in deleted and b not in deleted
    )
    tau_pairs = tuple(
        (a, b) for a, b in full.tau_pairs if a not in deleted and b not in deleted
    )
    return ModuleCategoryQuiver(t, vertices, dimvecs, arrows, tau_pairs)


@dataclass(frozen=True)
class VanishingEntry:
    arrows: tuple[tuple[int, int, int], ...]  # (source, target, instance)
    is_zero: bool

    def path_string(self, quiver: QuiverPresentation) -> str:
        verts = [self.arrows[0][0]] + [a[1] for a in self.arrows]
        return " -> ".join(str(quiver.vertices[v]) for v in verts)


@dataclass(frozen=True)
class VanishingReport:
    quiver: QuiverPresentation
    maxlen: int
    entries: tuple[VanishingEntry, ...]

    def zero_paths(self) -> tuple[VanishingEntry, ...]:
        return tuple(e for e in self.entries if e.is_zero)

    def nonzero_paths(self) -> tuple[VanishingEntry, ...]:
        return tuple(e for e in self.entries if not e.is_zero)


_PATH_CAP = 20000


def vanishing_paths_report(t: Triangulation, maxlen: int) -> VanishingReport:
    """Evaluate every arrow path of length 2..maxlen in the Gabriel quiver
    of End(T) and report which compositions vanish."""
    if maxlen < 2:
        raise ValueError(f"maxlen must be at least 2, got {maxlen}")
    quiver, reps = quiver_with_representatives(t)
    instances = [
        (i, j, s, reps[(i, j)][s])
        for (i, j, mult) in quiver.arrows
        for s in range(mult)
    ]
    by_source: dict[int, list[tuple[int, int, int, object]]] = {}
    for inst in instances:
        by_source.setdefault(inst[0], []).append(inst)
    entries: list[VanishingEntry] = []
    frontier = [(((i, j, s),), mor) for (i, j, s, mor) in instances]
    length = 1
    while length < maxlen and frontier:
        nxt = []
        for arrows, mor in frontier:
            tail = arrows[-1][1]
            for (i, j, s, rep) in by_source.get(tail, ()):
                composite = compose(mor, rep)
                path = arrows + ((i, j, s),)
                entries.append(VanishingEntry(path, composite.is_zero()))
                nxt.append((path, composite))
                if len(entries) > _PATH_CAP:
                    raise ValueError(
                        f"more than {_PATH_CAP} arrow paths; lower maxlen"
                    )
        frontier = nxt
        length += 1
    return VanishingReport(quiver, maxlen, tuple(entries))


def loewy_string(dv: DimensionVector, quiver: QuiverPresentation) -> str:
    """Stacked rendering of the support, ordered along the quiver's arrow
    flow (top = closest to the arrows' sources)."""
    idx = {e: i for i, e in enumerate(quiver.vertices)}
    seq: list[int] = []
    for e, c in zip(dv.labels, dv.coords):
        seq.extend([idx[e]] * c)
    if not seq:
        return "0"
    arrows = {(a, b) for a, b, _ in quiver.arrows}
    ordered: list[int] = []
    remaining = list(seq)
    while remaining:
        head = None
        for cand in remaining:
            if all((other, cand) not in arrows for other in remaining if other != cand):
                head = cand
                break
        if head is None:
            head = remaining[0]
        ordered.append(head)
        remaining.remove(head)
    return "/".join(str(v + 1) for v in ordered)
