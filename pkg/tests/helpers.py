"""Shared test utilities: random OFN generators, closeness checks, slow oracles.

The proper-number generators are constructive (slope signs chosen per base
direction, dominance enforced with an explicit margin), so property suites
never rely on rejection sampling for the common case.
"""
from __future__ import annotations

import random
from collections import defaultdict

from ofnring import (GAUSSIAN_INVERSE, IDENTITY, LOG, SQRT, FuzzyDigraph,
                     TypedOfn, add, classify, rank, rectangular, typed)
from ofnring.bases import get_base

ALL_BASES = (IDENTITY, SQRT, GAUSSIAN_INVERSE, LOG)
BOUNDED_BASES = (IDENTITY, SQRT)


def close(a: float, b: float, tol: float = 1e-9) -> bool:
    """Relative closeness with an absolute floor of tol near zero."""
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def ofn_close(x: TypedOfn, y: TypedOfn, tol: float = 1e-9) -> bool:
    return all(close(a, b, tol)
               for a, b in zip(x.coeffs.as_tuple(), y.coeffs.as_tuple()))


def assert_tuple(x: TypedOfn, want: tuple[float, float, float, float]) -> None:
    assert x.coeffs.as_tuple() == want, f"{x.coeffs.as_tuple()} != {want}"


def random_proper(rng: random.Random, base: str,
                  orientation: str = "increasing",
                  max_gap: float = 2.0) -> TypedOfn:
    """A proper OFN with both side slopes nonzero and a strict dominance margin."""
    b = get_base(base)
    direction = 1 if b.increasing else -1
    rise = rng.uniform(0.1, 3.0) * direction
    fall = -rng.uniform(0.1, 3.0) * direction
    u_off = rng.uniform(-5.0, 5.0)
    gap = rng.uniform(0.05, max_gap)
    if b.unbounded:
        # the gap polynomial is monotone in h and tightest at h(1)
        d_off = u_off + gap
    else:
        d_off = u_off + (rise - fall) * b.value_at_one + gap
    tup = (rise, u_off, fall, d_off)
    if orientation == "decreasing":
        tup = (tup[2], tup[3], tup[0], tup[1])
    return typed(base, *tup)


def random_any(rng: random.Random, base: str, span: float = 10.0) -> TypedOfn:
    return typed(base, *(rng.uniform(-span, span) for _ in range(4)))


def random_improper(rng: random.Random, base: str) -> TypedOfn:
    while True:
        cand = random_any(rng, base)
        if not classify(cand).proper:
            return cand


def exhaustive_min_paths(g: FuzzyDigraph, source: int,
                         key=rank) -> list[TypedOfn | None]:
    """Best distance per node over every simple path: the slow oracle.

    No pruning: with possible negative-rank edges a worse prefix can still
    win, so every simple path is walked (fine at fixture size).
    """
    best: list[TypedOfn | None] = [None] * g.nodes
    start = rectangular(0.0, 0.0, base=g.base)
    best[source] = start
    adj = defaultdict(list)
    for u, v, w in g.edges:
        adj[u].append((v, w))

    def visit(node: int, dist: TypedOfn, seen: frozenset[int]) -> None:
        for v, w in adj[node]:
            if v in seen:
                continue
            nd = add(dist, w)
            cur = best[v]
            if cur is None or (key(nd), nd.coeffs) < (key(cur), cur.coeffs):
                best[v] = nd
            visit(v, nd, seen | {v})

    visit(source, start, frozenset({source}))
    return best
