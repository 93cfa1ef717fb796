"""Cluster-level operations: extension dimensions, the crossing-number
comparison over all pairs, and almost-split (AR) triangles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .crossing import crossing_number
from .geometry import TaggedEdge, edge_sort_key, elementary_moves, enumerate_tagged_edges, tau
from .mesh import hom_dim_closed_form, hom_dim_cluster


def ext1_dim(m: TaggedEdge, other: TaggedEdge, method: str = "closed") -> int:
    """dim Ext^1(m, other) = dim Hom(m, tau other).

    ``method`` picks the Hom engine: "closed" evaluates the grid closed
    form (the bulk fast path), "mesh" sums path-space dimensions over all
    shifts.
    """
    shifted = tau(other)
    if method == "closed":
        return hom_dim_closed_form(m, shifted)
    if method == "mesh":
        return hom_dim_cluster(m, shifted)
    raise ValueError(f"unknown method {method!r}, expected 'closed' or 'mesh'")


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of comparing ext1_dim against the crossing number."""

    n: int
    pairs_checked: int
    failures: tuple[tuple[str, str, int, int], ...]  # (M, N, ext1, crossing)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pairs_checked": self.pairs_checked,
            "failures": [
                {"M": m, "N": nn, "ext1": e, "crossing": c}
                for (m, nn, e, c) in self.failures
            ],
            "passed": self.passed,
        }


def verify_theorem2(
    n: int,
    method: str = "closed",
    crossing_fn: Callable[[TaggedEdge, TaggedEdge], int] | None = None,
) -> TheoremReport:
    """Check ext1_dim == crossing_number on all n**4 ordered pairs.

    ``crossing_fn`` is injectable so the harness itself can be mutation
    tested against a deliberately corrupted rule.
    """
    cross = crossing_fn or crossing_number
    edges = enumerate_tagged_edges(n)
    failures = []
    checked = 0
    for m in edges:
        for other in edges:
            checked += 1
            e1 = ext1_dim(m, other, method=method)
            cn = cross(m, other)
            if e1 != cn:
                failures.append((str(m), str(other), e1, cn))
    return TheoremReport(n, checked, tuple(failures))


@dataclass(frozen=True)
class ArTriangle:
    """Almost-split triangle tau M -> L -> M, with L given by its summands."""

    left: TaggedEdge
    middle: tuple[TaggedEdge, ...]
    right: TaggedEdge


def ar_triangle(m: TaggedEdge) -> ArTriangle:
    """The AR triangle ending at m.

    The middle summands are exactly the elementary-move targets of tau m
    (equivalently the move sources into m): one summand when tau m is
    central or spans only 3 boundary vertices, three when it spans n, two
    otherwise.
    """
    left = tau(m)
    middle = tuple(sorted(elementary_moves(left), key=edge_sort_key))
    if not 1 <= len(middle) <= 3:
        raise AssertionError(f"AR middle of {m} has {len(middle)} summands")
    return ArTriangle(left, middle, m)
