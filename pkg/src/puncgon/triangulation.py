"""Triangulations of the punctured polygon: maximal non-crossing sets of
tagged edges, fans, flips, exchange factors, and endomorphism quivers.

Every maximal non-crossing set has exactly n elements; the enumeration
below does not assume this (it collects maximal sets of any size), so
the size law stays independently falsifiable.  Exchange factors are the
indecomposable summands of minimal right approximations over the rest of
the triangulation, computed from explicit Hom bases; a brute-force
search over small summand multisets, certified by exact surjectivity
checks with seeded generic maps, confirms minimality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .crossing import crossing_number
from .geometry import (
    TaggedEdge,
    edge_sort_key,
    enumerate_tagged_edges,
    tau,
)
from .linalg import FractionElim
from .mesh import Morphism, compose, morphism_space

DEFAULT_ENUMERATION_BOUND = 6


class ExchangeError(RuntimeError):
    """The flip/exchange structure failed an internal consistency check."""


@dataclass(frozen=True)
class Triangulation:
    """A maximal set of pairwise non-crossing tagged edges.

    Always has exactly n elements; the constructor enforces this, and the
    enumeration suite re-derives it without assuming it.
    """

    n: int
    edges: tuple[TaggedEdge, ...]

    def __post_init__(self):
        edges = tuple(sorted(set(self.edges), key=edge_sort_key))
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if e.n != self.n:
                raise ValueError(f"edge {e} belongs to n={e.n}, not n={self.n}")
        bad = _first_crossing_pair(edges)
        if bad is not None:
            raise ValueError(
                f"edges {bad[0]} and {bad[1]} cross (e={crossing_number(*bad)})"
            )
        missing = _extension_candidates(self.n, edges)
        if missing:
            raise ValueError(
                f"set is not maximal: {missing[0]} is compatible with every member"
            )
        if len(edges) != self.n:
            raise ValueError(
                f"maximal non-crossing set of unexpected size {len(edges)} != {self.n}"
            )

    @classmethod
    def of(cls, edges) -> "Triangulation":
        edges = list(edges)
        if not edges:
            raise ValueError("empty edge set")
        return cls(edges[0].n, tuple(edges))

    def __contains__(self, e: TaggedEdge) -> bool:
        return e in self.edges

    def __iter__(self):
        return iter(self.edges)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.edges)

    def replace(self, old: TaggedEdge, new: TaggedEdge) -> "Triangulation":
        return Triangulation(self.n, tuple(e for e in self.edges if e != old) + (new,))


def _first_crossing_pair(edges):
    for i, a in enumerate(edges):
        for b in edges[i + 1 :]:
            if crossing_number(a, b) != 0:
                return (a, b)
    return None


def _extension_candidates(n: int, edges) -> list[TaggedEdge]:
    members = set(edges)
    return [
        cand
        for cand in enumerate_tagged_edges(n)
        if cand not in members
        and all(crossing_number(cand, e) == 0 for e in edges)
    ]


def is_triangulation(edges) -> bool:
    """True iff the set is pairwise non-crossing and maximal."""
    edges = list(edges)
    if not edges:
        return False
    n = edges[0].n
    if any(e.n != n for e in edges):
        return False
    if _first_crossing_pair(edges) is not None:
        return False
    return not _extension_candidates(n, edges)


def fan_triangulation(n: int, base: int = 0) -> Triangulation:
    """All chords out of the base vertex plus both tagged radii there."""
    edges = [TaggedEdge.central(n, base, 1), TaggedEdge.central(n, base, -1)]
    edges += [TaggedEdge(n, base, (base + k) % n, 1) for k in range(2, n)]
    return Triangulation(n, tuple(edges))


def maximal_noncrossing_sets(n: int) -> list[frozenset[TaggedEdge]]:
    """Every maximal pairwise non-crossing set, of whatever size.

    Plain Bron-Kerbosch over the compatibility graph, emitting sets in
    lexicographic order of the canonical edge indices.
    """
    edges = enumerate_tagged_edges(n)
    count = len(edges)
    compat = [
        [crossing_number(edges[i], edges[j]) == 0 for j in range(count)]
        for i in range(count)
    ]
    out: list[frozenset[TaggedEdge]] = []

    def extend(chosen: list[int], candidates: list[int], excluded: list[int]):
        if not candidates and not excluded:
            out.append(frozenset(edges[i] for i in chosen))
            return
        cands = list(candidates)
        excl = list(excluded)
        while cands:
            v = cands[0]
            row = compat[v]
            extend(
                chosen + [v],
                [w for w in cands if w != v and row[w]],
                [w for w in excl if row[w]],
            )
            cands.pop(0)
            excl.append(v)

    extend([], list(range(count)), [])
    return out


def enumerate_triangulations(
    n: int, max_n: int = DEFAULT_ENUMERATION_BOUND
) -> list[Triangulation]:
    """All triangulations, in deterministic order.  The search is
    exponential; n above ``max_n`` is refused unless the bound is raised."""
    if n > max_n:
        raise ValueError(
            f"enumeration for n={n} exceeds the configured bound {max_n}; "
            "raise max_n to override"
        )
    return [Triangulation(n, tuple(s)) for s in maximal_noncrossing_sets(n)]


def flip(t: Triangulation, m: TaggedEdge) -> tuple[Triangulation, TaggedEdge]:
    """Exchange m for the unique other edge completing t minus m.

    The replacement always exists, is unique, and crosses m exactly once;
    anything else aborts loudly, since it would falsify the exchange
    property the engine is built on.
    """
    if m not in t:
        raise ValueError(f"edge {m} is not in the triangulation")
    rest = [e for e in t.edges if e != m]
    candidates = [
        cand
        for cand in enumerate_tagged_edges(t.n)
        if cand != m
        and cand not in rest
        and all(crossing_number(cand, e) == 0 for e in rest)
    ]
    if len(candidates) != 1:
        raise ExchangeError(
            f"flip of {m} in {t} has {len(candidates)} completions, expected 1"
        )
    new = candidates[0]
    return t.replace(m, new), new


@dataclass(frozen=True)
class ExchangeData:
    """Flip of one edge together with the factors of its exchange relation.

    A factor multiset has at most three members.  It is empty exactly when
    that side of the exchange quadrilateral lies entirely on the boundary,
    which happens precisely when the removed edge is the translate of the
    inserted one (or vice versa); the empty product renders as 1.
    """

    removed: TaggedEdge
    inserted: TaggedEdge
    side_factors: tuple[TaggedEdge, ...]
    coside_factors: tuple[TaggedEdge, ...]

    @property
    def has_boundary_side(self) -> bool:
        return not self.side_factors or not self.coside_factors

    def relation_string(self) -> str:
        def prod(factors):
            return "*".join(f"x[{f}]" for f in factors) if factors else "1"

        return (
            f"x[{self.removed}] * x[{self.inserted}] = "
            f"{prod(self.side_factors)} + {prod(self.coside_factors)}"
        )


class _HomContext:
    """Hom bases and pairwise composition products over a fixed edge set."""

    def __init__(self, edges: list[TaggedEdge]):
        self.edges = list(edges)
        self._spaces: dict[tuple[TaggedEdge, TaggedEdge], list[Morphism]] = {}
        self._flat: dict[tuple[TaggedEdge, TaggedEdge], list[tuple[int, int]]] = {}

    def basis(self, a: TaggedEdge, b: TaggedEdge) -> list[Morphism]:
        key = (a, b)
        if key not in self._spaces:
            space = morphism_space(a, b)
            self._spaces[key] = space.basis()
            self._flat[key] = [
                (k, i) for k in sorted(space.components) for i in range(space.dim(k))
            ]
        return self._spaces[key]

    def flatten(self, a: TaggedEdge, b: TaggedEdge, mor: Morphism) -> list[Fraction]:
        self.basis(a, b)
        slots = self._flat[(a, b)]
        return [mor.coeffs.get(slot, Fraction(0)) for slot in slots]

    def hom_dim(self, a: TaggedEdge, b: TaggedEdge) -> int:
        return len(self.basis(a, b))


def _top_multiplicities(
    ctx: _HomContext, context: list[TaggedEdge], target: TaggedEdge
) -> dict[TaggedEdge, int]:
    """Multiplicity of each context edge in the minimal right approximation
    of the target: the part of Hom(C, target) not reached by compositions
    through the other context edges."""
    mult: dict[TaggedEdge, int] = {}
    for c in context:
        dim = ctx.hom_dim(c, target)
        if dim == 0:
            continue
        elim = FractionElim(dim)
        for d in context:
            if d == c:
                continue
            for f in ctx.basis(c, d):
                for g in ctx.basis(d, target):
                    elim.add(ctx.flatten(c, target, compose(f, g)))
        top = dim - elim.rank
        if top:
            mult[c] = top
    return mult


def _admits_surjections(
    ctx: _HomContext,
    context: list[TaggedEdge],
    target: TaggedEdge,
    multiset: dict[TaggedEdge, int],
    rng: random.Random,
    trials: int = 4,
) -> bool:
    """Whether some map from the given sum makes every induced
    Hom(T_j, -) map onto Hom(T_j, target).  A passing seeded trial is an
    exact certificate; failure after all trials reports no."""
    summands = [(c, s) for c, k in sorted(multiset.items(), key=lambda kv: edge_sort_key(kv[0])) for s in range(k)]
    checks = [j for j in context if ctx.hom_dim(j, target) > 0]
    if not summands:
        return not checks
    for _ in range(trials):
        coeffs = {
            (c, s): [Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))
                     for _ in range(ctx.hom_dim(c, target))]
            for (c, s) in summands
        }
        ok = True
        for j in checks:
            want = ctx.hom_dim(j, target)
            elim = FractionElim(want)
            rank = 0
            for (c, s) in summands:
                fs = ctx.basis(c, target)
                for g in ctx.basis(j, c):
                    vec = [Fraction(0)] * want
                    for fi, f in enumerate(fs):
                        a = coeffs[(c, s)][fi]
                        if a:
                            prod = ctx.flatten(j, target, compose(g, f))
                            vec = [x + a * y for x, y in zip(vec, prod)]
                    if elim.add(vec):
                        rank += 1
                        if rank == want:
                            break
                if rank == want:
                    break
            if rank != want:
                ok = False
                break
        if ok:
            return True
    return False


def _search_minimal_multiset(
    ctx: _HomContext,
    context: list[TaggedEdge],
    target: TaggedEdge,
    rng: random.Random,
    cap: int = 3,
) -> dict[TaggedEdge, int]:
    """Brute-force search: smallest summand multiset (multiplicities <= 2)
    whose generic map surjects on every Hom(T_j, -)."""
    relevant = [c for c in context if ctx.hom_dim(c, target) > 0]
    best: dict[TaggedEdge, int] | None = None
    for total in range(0, cap + 1):
        for multiset in _multisets(relevant, total):
            if _admits_surjections(ctx, context, target, multiset, rng):
                best = multiset
                break
        if best is not None:
            break
    if best is None:
        raise ExchangeError(
            f"no approximation of {target} with at most {cap} summands"
        )
    return best


def _multisets(items: list[TaggedEdge], total: int):
    items = sorted(items, key=edge_sort_key)

    def rec(idx: int, remaining: int):
        if remaining == 0:
            yield {}
            return
        if idx == len(items):
            return
        for take in range(min(2, remaining), -1, -1):
            for rest in rec(idx + 1, remaining - take):
                if take:
                    yield {items[idx]: take, **rest}
                else:
                    yield rest

    yield from rec(0, total)


def _factors_tuple(multiset: dict[TaggedEdge, int]) -> tuple[TaggedEdge, ...]:
    out: list[TaggedEdge] = []
    for e in sorted(multiset, key=edge_sort_key):
        out.extend([e] * multiset[e])
    return tuple(out)


def exchange_sides(t: Triangulation, m: TaggedEdge) -> ExchangeData:
    """Factors of the exchange relation at m: the summands of the minimal
    right approximations of m and of its flip partner over t minus m."""
    _, inserted = flip(t, m)
    if crossing_number(m, inserted) != 1:
        raise ExchangeError(f"flip pair {m}, {inserted} has e != 1")
    context = [e for e in t.edges if e != m]
    ctx = _HomContext(context + [m, inserted])
    rng = random.Random(f"exchange:{t}:{m}")
    sides = _top_multiplicities(ctx, context, m)
    cosides = _top_multiplicities(ctx, context, inserted)
    for target, expected in ((m, sides), (inserted, cosides)):
        found = _search_minimal_multiset(ctx, context, target, rng)
        if found != expected:
            raise ExchangeError(
                f"approximation search for {target} found {found}, "
                f"expected {expected}"
            )
    data = ExchangeData(m, inserted, _factors_tuple(sides), _factors_tuple(cosides))
    for factors, tgt, other in (
        (data.side_factors, m, inserted),
        (data.coside_factors, inserted, m),
    ):
        if len(factors) > 3:
            raise ExchangeError(
                f"exchange factor multiset {factors} has more than 3 members"
            )
        # empty side = all-boundary quadrilateral side, exactly the tau case
        if bool(factors) == (tgt == tau(other)):
            raise ExchangeError(
                f"factor multiset for {tgt} is {'empty' if not factors else 'nonempty'} "
                f"but {tgt} {'is' if tgt == tau(other) else 'is not'} the translate of {other}"
            )
        for f in factors:
            if f not in context:
                raise ExchangeError(f"factor {f} escaped the triangulation")
            if crossing_number(f, m) != 0 or crossing_number(f, inserted) != 0:
                raise ExchangeError(f"factor {f} crosses an exchange diagonal")
    return data


@dataclass(frozen=True)
class QuiverPresentation:
    """Gabriel quiver of the endomorphism algebra of a triangulation."""

    vertices: tuple[TaggedEdge, ...]
    arrows: tuple[tuple[int, int, int], ...]  # (source index, target index, multiplicity)
    vanishing_paths: tuple = ()

    def arrow_multiplicity(self, i: int, j: int) -> int:
        for a, b, k in self.arrows:
            if (a, b) == (i, j):
                return k
        return 0

    def transposed(self) -> "QuiverPresentation":
        return QuiverPresentation(
            self.vertices,
            tuple((b, a, k) for a, b, k in self.arrows),
            self.vanishing_paths,
        )


def quiver_with_representatives(
    t: Triangulation,
) -> tuple[QuiverPresentation, dict[tuple[int, int], list[Morphism]]]:
    """The Gabriel quiver together with chosen irreducible representatives:
    arrow count i -> j is dim Hom(T_i, T_j) minus the span of compositions
    through the other members."""
    verts = list(t.edges)
    ctx = _HomContext(verts)
    arrows: list[tuple[int, int, int]] = []
    reps: dict[tuple[int, int], list[Morphism]] = {}
    for i, a in enumerate(verts):
        if ctx.hom_dim(a, a) != 1:
            raise ExchangeError(f"End({a}) is not one-dimensional")
        for j, b in enumerate(verts):
            if i == j:
                continue
            dim = ctx.hom_dim(a, b)
            if dim == 0:
                continue
            elim = FractionElim(dim)
            for k, c in enumerate(verts):
                if k in (i, j):
                    continue
                for f in ctx.basis(a, c):
                    for g in ctx.basis(c, b):
                        elim.add(ctx.flatten(a, b, compose(f, g)))
            mult = dim - elim.rank
            if mult == 0:
                continue
            chosen = []
            for idx, mor in enumerate(ctx.basis(a, b)):
                vec = [Fraction(0)] * dim
                vec[idx] = Fraction(1)
                if elim.add(vec):
                    chosen.append(mor)
                    if len(chosen) == mult:
                        break
            arrows.append((i, j, mult))
            reps[(i, j)] = chosen
    return QuiverPresentation(tuple(verts), tuple(arrows)), reps


def quiver_of_triangulation(t: Triangulation) -> QuiverPresentation:
    return quiver_with_representatives(t)[0]
