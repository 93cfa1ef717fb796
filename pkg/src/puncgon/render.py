"""Text, JSON, and DOT renderings of the engine's artifacts.

JSON schemas (stable, documented in the README):

  edges      {"n", "edges": [{"edge", "position": [i, j]}]}
  crossings  {"n", "edges": [str], "matrix": [[int]]}
  hom        {"n", "source", "target", "components": {shift: dim},
              "total", "closed_form"}
  quiver     {"n", "T": [str], "vertices": [str],
              "arrows": [[from, to, mult]]}
  ar-quiver  {"n", "T": [str] | null,
              "vertices": [{"edge", "dimvec" | null}],
              "arrows": [[from, to]], "tau": [[from, to]]}
"""

from __future__ import annotations

from .geometry import TaggedEdge, enumerate_tagged_edges, pos, pos_inv
from .mesh import MorphismSpace, hom_dim_closed_form
from .crossing import CrossingTable
from .tilted import (
    CategoryQuiver,
    ModuleCategoryQuiver,
    loewy_string,
)
from .triangulation import QuiverPresentation, Triangulation


def edges_json(n: int) -> dict:
    return {
        "n": n,
        "edges": [
            {"edge": str(e), "position": list(pos(e))} for e in enumerate_tagged_edges(n)
        ],
    }


def edges_text(n: int) -> str:
    lines = [f"{e}\t{pos(e)}" for e in enumerate_tagged_edges(n)]
    return "\n".join(lines)


def crossing_json(table: CrossingTable) -> dict:
    return {
        "n": table.n,
        "edges": [str(e) for e in table.edges],
        "matrix": [list(row) for row in table.values],
    }


def crossing_text(table: CrossingTable) -> str:
    labels = [str(e) for e in table.edges]
    width = max(len(s) for s in labels)
    head = " " * (width + 1) + " ".join(s.rjust(width) for s in labels)
    lines = [head]
    for label, row in zip(labels, table.values):
        lines.append(
            label.rjust(width) + " " + " ".join(str(v).rjust(width) for v in row)
        )
    return "\n".join(lines)


def hom_json(space: MorphismSpace) -> dict:
    return {
        "n": space.n,
        "source": str(space.source),
        "target": str(space.target),
        "components": {str(k): space.dim(k) for k in sorted(space.components)},
        "total": space.total_dim,
        "closed_form": hom_dim_closed_form(space.source, space.target),
    }


def hom_text(space: MorphismSpace, show_basis: bool = False) -> str:
    lines = [
        f"Hom({space.source}, {space.target}): total dimension {space.total_dim}"
    ]
    for k in sorted(space.components):
        lines.append(f"  shift {k}: dimension {space.dim(k)}")
        if show_basis:
            for p in space.components[k]:
                lines.append(f"    {p}")
    return "\n".join(lines)


def hom_grid_text(n: int, source: TaggedEdge) -> str:
    """Paper-style table of Hom dimensions out of one edge: rows are levels
    n..1, columns 1..n, dots for zero, source position marked with *."""
    src_pos = pos(source)
    rows = []
    for level in range(n, 0, -1):
        cells = []
        for col in range(1, n + 1):
            val = hom_dim_closed_form(source, pos_inv(n, (col, level)))
            cell = "." if val == 0 else str(val)
            if (col, level) == tuple(src_pos):
                cell = "*" + cell
            cells.append(cell.rjust(2))
        rows.append(f"level {level:2d} |" + " ".join(cells))
    return "\n".join(rows)


def _dot(name: str, nodes: list[tuple[str, str]], arrows: list[tuple[str, str]]) -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for node_id, label in nodes:
        lines.append(f'  "{node_id}" [label="{label}"];')
    for a, b in arrows:
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines)


def quiver_json(q: QuiverPresentation, t: Triangulation) -> dict:
    return {
        "n": t.n,
        "T": [str(e) for e in t.edges],
        "vertices": [str(e) for e in q.vertices],
        "arrows": [[str(q.vertices[a]), str(q.vertices[b]), k] for a, b, k in q.arrows],
    }


def quiver_text(q: QuiverPresentation) -> str:
    lines = [
        "vertices: "
        + ", ".join(f"T{i + 1}={e}" for i, e in enumerate(q.vertices))
    ]
    for a, b, k in q.arrows:
        mult = f" (x{k})" if k > 1 else ""
        lines.append(f"  T{a + 1} -> T{b + 1}{mult}")
    return "\n".join(lines)


def quiver_dot(q: QuiverPresentation) -> str:
    nodes = [(str(e), f"T{i + 1}: {e}") for i, e in enumerate(q.vertices)]
    arrows = []
    for a, b, k in q.arrows:
        arrows.extend([(str(q.vertices[a]), str(q.vertices[b]))] * k)
    return _dot("endomorphism_quiver", nodes, arrows)


def category_quiver_json(q: CategoryQuiver) -> dict:
    return {
        "n": q.n,
        "T": None,
        "vertices": [{"edge": str(v), "dimvec": None} for v in q.vertices],
        "arrows": [[str(a), str(b)] for a, b in q.arrows],
        "tau": [[str(a), str(b)] for a, b in q.tau_pairs],
    }


def category_quiver_dot(q: CategoryQuiver) -> str:
    nodes = [(str(v), f"{v} {pos(v)}") for v in q.vertices]
    return _dot("ar_quiver", nodes, [(str(a), str(b)) for a, b in q.arrows])


def tilted_quiver_json(q: ModuleCategoryQuiver) -> dict:
    return {
        "n": q.triangulation.n,
        "T": [str(e) for e in q.triangulation.edges],
        "vertices": [
            {"edge": str(v), "dimvec": list(dv.coords)}
            for v, dv in zip(q.vertices, q.dimvecs)
        ],
        "arrows": [[str(a), str(b)] for a, b in q.arrows],
        "tau": [[str(a), str(b)] for a, b in q.tau_pairs],
    }


def tilted_quiver_dot(q: ModuleCategoryQuiver) -> str:
    nodes = [
        (str(v), f"{v} {dv}") for v, dv in zip(q.vertices, q.dimvecs)
    ]
    return _dot("tilted_ar_quiver", nodes, [(str(a), str(b)) for a, b in q.arrows])


def dimvec_table_text(q: ModuleCategoryQuiver, gabriel: QuiverPresentation) -> str:
    lines = ["edge\tdimvec\tloewy"]
    for v, dv in zip(q.vertices, q.dimvecs):
        lines.append(f"{v}\t{dv}\t{loewy_string(dv, gabriel)}")
    return "\n".join(lines)
