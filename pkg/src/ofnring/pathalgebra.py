"""Ranking, ordering and shortest paths with typed-OFN edge weights.

rank() is the defuzzifying functional: the mean of the two side integrals,
which for sides slope * h + offset is

    (up_slope + down_slope) / 2 * integral(h) + (up_offset + down_offset) / 2.

It is linear, so it is additive under ring addition, and that is exactly what
makes Bellman-Ford relaxation sound here: path weights are tuple sums, paths
compare by rank, and ties break by lexicographic tuple order so the outcome
does not depend on edge order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .bases import get_base
from .errors import DomainError, MixedTypeError, NegativeCycle
from .ring import TypedOfn, add, rectangular, side_eval

RankFn = Callable[[TypedOfn], float]


def rank(x: TypedOfn) -> float:
    """Mean of the side integrals over [0, 1]; finite for all registry bases."""
    b = get_base(x.base)
    t = x.coeffs
    if not math.isfinite(b.integral):
        raise DomainError(f"base {x.base!r} has no finite integral")
    return 0.5 * (t.up_slope + t.down_slope) * b.integral \
        + 0.5 * (t.up_offset + t.down_offset)


def _same_base(x: TypedOfn, y: TypedOfn) -> None:
    if x.base != y.base and not (x.is_rectangular or y.is_rectangular):
        raise MixedTypeError(f"cannot order base {x.base!r} against {y.base!r}")


def ofn_min(x: TypedOfn, y: TypedOfn, key: RankFn = rank) -> TypedOfn:
    """The operand with the smaller rank; equal ranks fall back to tuple order."""
    _same_base(x, y)
    kx, ky = key(x), key(y)
    if kx != ky:
        return x if kx < ky else y
    return x if x.coeffs <= y.coeffs else y


def pointwise_min_report(x: TypedOfn, y: TypedOfn,
                         grid: int = 101) -> list[tuple[float, float, float]]:
    """(alpha, min of up values, min of down values) on a uniform grid.

    The true pointwise minimum need not be a typed OFN; this is a report, not
    a ring element.
    """
    _same_base(x, y)
    if grid < 2:
        raise DomainError("grid must have at least 2 points")
    rows = []
    for k in range(grid):
        alpha = k / (grid - 1)
        rows.append((alpha,
                     min(side_eval(x, "up", alpha), side_eval(y, "up", alpha)),
                     min(side_eval(x, "down", alpha), side_eval(y, "down", alpha))))
    return rows


@dataclass(frozen=True)
class FuzzyDigraph:
    """A digraph whose edges carry typed-OFN weights on one common base."""

    nodes: int
    edges: tuple[tuple[int, int, TypedOfn], ...]
    base: str = "identity"

    def __post_init__(self):
        if self.nodes < 1:
            raise DomainError("a digraph needs at least one node")
        base = None
        for u, v, w in self.edges:
            if not (0 <= u < self.nodes and 0 <= v < self.nodes):
                raise DomainError(f"edge ({u}, {v}) leaves the node range")
            if not w.is_rectangular:
                if base is None:
                    base = w.base
                elif base != w.base:
                    raise MixedTypeError(
                        f"edge weights mix base {base!r} with {w.base!r}")
        object.__setattr__(self, "base", base if base is not None else self.base)


@dataclass(frozen=True)
class ShortestPathResult:
    source: int
    distances: tuple[TypedOfn | None, ...]
    predecessors: tuple[int | None, ...]


def shortest_paths(g: FuzzyDigraph, source: int,
                   key: RankFn = rank) -> ShortestPathResult:
    """Bellman-Ford relaxation under the (rank, tuple) order.

    Distances are tuple sums along the selected paths; unreachable nodes get
    None.  A cycle that keeps improving the order raises NegativeCycle.
    """
    if not 0 <= source < g.nodes:
        raise DomainError(f"source {source} is not a node")
    dist: list[TypedOfn | None] = [None] * g.nodes
    pred: list[int | None] = [None] * g.nodes
    dist[source] = rectangular(0.0, 0.0, base=g.base)

    def better(cand: TypedOfn, cur: TypedOfn | None) -> bool:
        if cur is None:
            return True
        kc, ku = key(cand), key(cur)
        if kc != ku:
            return kc < ku
        return cand.coeffs < cur.coeffs

    for _ in range(max(1, g.nodes - 1)):
        changed = False
        for u, v, w in g.edges:
            if dist[u] is None:
                continue
            cand = add(dist[u], w)
            if better(cand, dist[v]):
                dist[v] = cand
                pred[v] = u
                changed = True
        if not changed:
            break
    for u, v, w in g.edges:
        if dist[u] is not None and better(add(dist[u], w), dist[v]):
            raise NegativeCycle("relaxation keeps improving; negative-rank cycle")
    return ShortestPathResult(source, tuple(dist), tuple(pred))
