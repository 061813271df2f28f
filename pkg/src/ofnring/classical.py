"""Classical L-R fuzzy numbers and extension-principle oracles.

This module is the reference semantics the ring is audited against: orthodox
fuzzy numbers with shape functions L and R, convex level sets, level-set
(interval) arithmetic, and two brute-force extension-principle evaluators.
Nothing here knows about orientation; that is the point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, FamilyMismatch, ImproperError, MixedTypeError
from .ring import Interval, TypedOfn, level_set, trapezoid
from .propriety import classify


@dataclass(frozen=True)
class SpreadFamily:
    """A pair of decreasing-shape generators via an increasing bijection of [0,1].

    `fwd` maps the normalized distance into membership (L and R share it
    here), `inv` recovers the distance from a level.  The shipped family is
    linear, giving straight trapezoid flanks.
    """

    tag: str
    fwd: Callable[[float], float]
    inv: Callable[[float], float]


LINEAR = SpreadFamily("linear", lambda t: t, lambda t: t)


@dataclass(frozen=True)
class LRFuzzyNumber:
    """Corners support_lo <= core_lo <= core_hi <= support_hi plus the family."""

    support_lo: float
    core_lo: float
    core_hi: float
    support_hi: float
    family: SpreadFamily = field(default=LINEAR)

    def __post_init__(self):
        c = (self.support_lo, self.core_lo, self.core_hi, self.support_hi)
        if any(not math.isfinite(v) for v in c):
            raise DomainError("corners must be finite")
        if not (c[0] <= c[1] <= c[2] <= c[3]):
            raise DomainError(f"corners must be ordered, got {c}")

    @property
    def left_spread(self) -> float:
        return self.core_lo - self.support_lo

    @property
    def right_spread(self) -> float:
        return self.support_hi - self.core_hi

    def corners(self) -> tuple[float, float, float, float]:
        return (self.support_lo, self.core_lo, self.core_hi, self.support_hi)


def lr_membership(n: LRFuzzyNumber, x: float) -> float:
    """Membership level at x; zero spreads degenerate into jumps."""
    if x < n.support_lo or x > n.support_hi:
        return 0.0
    if n.core_lo <= x <= n.core_hi:
        return 1.0
    if x < n.core_lo:
        return n.family.fwd((x - n.support_lo) / n.left_spread)
    return n.family.fwd((n.support_hi - x) / n.right_spread)


def lr_level_set(n: LRFuzzyNumber, alpha: float) -> Interval:
    """[support_lo + inv(alpha) * left_spread, support_hi - inv(alpha) * right_spread]."""
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")
    t = n.family.inv(alpha)
    return Interval(n.support_lo + t * n.left_spread,
                    n.support_hi - t * n.right_spread)


def levelset_add(x: LRFuzzyNumber, y: LRFuzzyNumber) -> LRFuzzyNumber:
    """Cornerwise sum; requires matching spread families."""
    if x.family.tag != y.family.tag:
        raise FamilyMismatch(f"{x.family.tag!r} vs {y.family.tag!r}")
    return LRFuzzyNumber(x.support_lo + y.support_lo,
                         x.core_lo + y.core_lo,
                         x.core_hi + y.core_hi,
                         x.support_hi + y.support_hi,
                         family=x.family)


def _membership_grid(n: LRFuzzyNumber, xs: np.ndarray) -> np.ndarray:
    out = np.zeros_like(xs, dtype=float)
    inside = (xs >= n.support_lo) & (xs <= n.support_hi)
    core = (xs >= n.core_lo) & (xs <= n.core_hi)
    out[core] = 1.0
    if n.left_spread > 0.0:
        left = inside & (xs < n.core_lo)
        out[left] = n.family.fwd((xs[left] - n.support_lo) / n.left_spread)
    if n.right_spread > 0.0:
        right = inside & (xs > n.core_hi)
        out[right] = n.family.fwd((n.support_hi - xs[right]) / n.right_spread)
    return out


def zadeh_add_grid(x: LRFuzzyNumber, y: LRFuzzyNumber,
                   grid: int = 2001) -> tuple[np.ndarray, np.ndarray]:
    """Sup-min convolution of the sum, sampled on `grid` output points.

    Returns (zs, levels).  This is the extension principle evaluated head on;
    it exists to audit levelset_add, not to be fast or exact.
    """
    if grid < 101:
        raise DomainError(f"grid must be at least 101, got {grid}")
    ts = np.linspace(x.support_lo, x.support_hi, grid)
    mu_x = _membership_grid(x, ts)
    zs = np.linspace(x.support_lo + y.support_lo, x.support_hi + y.support_hi, grid)
    levels = np.empty(grid)
    chunk = 256
    for start in range(0, grid, chunk):
        block = zs[start:start + chunk, None] - ts[None, :]
        mu_y = _membership_grid(y, block.ravel()).reshape(block.shape)
        levels[start:start + chunk] = np.minimum(mu_x[None, :], mu_y).max(axis=1)
    return zs, levels


def zadeh_mul_levelsets(x: LRFuzzyNumber, y: LRFuzzyNumber, alpha: float) -> Interval:
    """Level set of the product: endpoint products of the operand level sets."""
    ix = lr_level_set(x, alpha)
    iy = lr_level_set(y, alpha)
    products = (ix.lo * iy.lo, ix.lo * iy.hi, ix.hi * iy.lo, ix.hi * iy.hi)
    return Interval(min(products), max(products))


# ---------------------------------------------------------------------------
# bridge to the typed ring
# ---------------------------------------------------------------------------

def from_typed_trapezoid(x: TypedOfn, family: SpreadFamily = LINEAR) -> LRFuzzyNumber:
    """Forget orientation: a proper identity-base OFN as a classical number."""
    if x.base != "identity" and not x.is_rectangular:
        raise MixedTypeError(f"expected the identity base, got {x.base!r}")
    if not classify(x).proper:
        raise ImproperError("only proper numbers have a classical reading")
    outer = level_set(x, 0.0)
    core = level_set(x, 1.0)
    return LRFuzzyNumber(outer.lo, core.lo, core.hi, outer.hi, family=family)


def to_typed_trapezoid(n: LRFuzzyNumber) -> TypedOfn:
    """The increasing-orientation trapezoid with the same corners."""
    return trapezoid(n.core_lo - n.support_lo, n.support_lo,
                     n.core_hi - n.support_hi, n.support_hi)
