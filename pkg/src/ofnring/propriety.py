"""Propriety analysis: classification, pathology repair, membership inversion.

A typed OFN is proper when its sides are monotone the right way round for its
orientation and the up side stays on the correct side of the down side.  Both
facts are decided in closed form: the difference down - up is affine in h, so
its sign over [0, 1] is read off the h-range endpoint limits, never sampled.

Improper numbers fall into three repairable classes:

* type-ii: both slopes share a sign (the sides march in the same direction);
* type-iii: the sides have a coherent opposite-slope shape but their vertical
  order is violated somewhere (twisted or crossing sides);
* combined: same-sign slopes whose difference also changes sign.

correct() applies the class-specific repair; when a repair leaves the result
improper (the printed formulas do not always succeed) the rectangular collapse
of the original number is used instead and labelled "fallback".
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .bases import get_base
from .errors import DegenerateError, DomainError, ImproperError, WrongPathology
from .ring import (Interval, Orientation, Side, TypedOfn, level_set,
                   orientation, side_eval, typed)

PATHOLOGY_NONE = "none"
PATHOLOGY_II = "type-ii"
PATHOLOGY_III = "type-iii"
PATHOLOGY_COMBINED = "combined"


@dataclass(frozen=True)
class ProprietyReport:
    proper: bool
    orientation: Orientation
    same_sign: bool
    crossing: bool
    pathology: str


def _sign(v: float) -> int:
    return (v > 0) - (v < 0)


def _difference_limits(x: TypedOfn) -> tuple[float, float]:
    """Endpoint limits of down(alpha) - up(alpha) at alpha -> 0 and alpha = 1."""
    b = get_base(x.base)
    t = x.coeffs
    dslope = t.down_slope - t.up_slope
    doffset = t.down_offset - t.up_offset
    g1 = dslope * b.value_at_one + doffset
    g0 = doffset if dslope == 0.0 else dslope * b.limit_at_zero + doffset
    return g0, g1


def classify(x: TypedOfn) -> ProprietyReport:
    b = get_base(x.base)
    t = x.coeffs
    direction = 1 if b.increasing else -1
    up_dir = _sign(t.up_slope) * direction
    down_dir = _sign(t.down_slope) * direction
    same_sign = _sign(t.up_slope) == _sign(t.down_slope) != 0
    g0, g1 = _difference_limits(x)

    identical = (t.up_slope == t.down_slope and t.up_offset == t.down_offset)
    if identical:
        # identical non-constant sides overlap on their whole range
        crossing = t.up_slope != 0.0
        pathology = PATHOLOGY_COMBINED if crossing else PATHOLOGY_NONE
    elif same_sign:
        crossing = (g0 < 0.0 < g1) or (g1 < 0.0 < g0)
        pathology = PATHOLOGY_COMBINED if crossing else PATHOLOGY_II
    elif up_dir == 0 and down_dir == 0:
        # rectangular: constant sides are compatible with either orientation
        crossing = False
        pathology = PATHOLOGY_NONE
    else:
        increasing_shape = up_dir > 0 or down_dir < 0
        if increasing_shape:
            crossing = min(g0, g1) < 0.0
        else:
            crossing = max(g0, g1) > 0.0
        pathology = PATHOLOGY_III if crossing else PATHOLOGY_NONE

    return ProprietyReport(
        proper=pathology == PATHOLOGY_NONE,
        orientation=orientation(x),
        same_sign=same_sign,
        crossing=crossing,
        pathology=pathology,
    )


# ---------------------------------------------------------------------------
# corrections
# ---------------------------------------------------------------------------

def _require(x: TypedOfn, wanted: str) -> ProprietyReport:
    rep = classify(x)
    if rep.pathology != wanted:
        raise WrongPathology(f"expected {wanted}, classified {rep.pathology}")
    return rep


def correct_type_ii(x: TypedOfn) -> TypedOfn:
    """Replace the side that fights the orientation by its constant offset."""
    rep = _require(x, PATHOLOGY_II)
    t = x.coeffs
    sgn = _sign(t.up_slope)
    keep_up = (rep.orientation == "increasing") == (sgn > 0)
    if keep_up:
        return typed(x.base, t.up_slope, t.up_offset, 0.0, t.down_offset)
    return typed(x.base, 0.0, t.up_offset, t.down_slope, t.down_offset)


def correct_type_iii(x: TypedOfn) -> TypedOfn:
    """Untwist by exchanging the constant terms of the two sides."""
    _require(x, PATHOLOGY_III)
    t = x.coeffs
    return typed(x.base, t.up_slope, t.down_offset, t.down_slope, t.up_offset)


def _collapse(x: TypedOfn) -> TypedOfn:
    return typed(x.base, 0.0, side_eval(x, "up", 1.0), 0.0, side_eval(x, "down", 1.0))


def correct_combined(x: TypedOfn) -> TypedOfn:
    """Collapse both sides to their core values (a rectangular number)."""
    _require(x, PATHOLOGY_COMBINED)
    return _collapse(x)


def correct(x: TypedOfn) -> tuple[TypedOfn, str]:
    """Repair x if needed; returns (result, applied label).

    Labels: "none" (already proper), "ii", "iii", "combined", or "fallback"
    when the class-specific repair did not produce a proper number and the
    rectangular collapse of the original was used instead.
    """
    rep = classify(x)
    if rep.pathology == PATHOLOGY_NONE:
        return x, "none"
    if rep.pathology == PATHOLOGY_II:
        fixed, label = correct_type_ii(x), "ii"
    elif rep.pathology == PATHOLOGY_III:
        fixed, label = correct_type_iii(x), "iii"
    else:
        fixed, label = correct_combined(x), "combined"
    if not classify(fixed).proper:
        return _collapse(x), "fallback"
    return fixed, label


# ---------------------------------------------------------------------------
# membership functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MembershipBranch:
    """One invertible flank: alpha = h_inverse((v - offset) / slope) on [lo, hi]."""

    side: Side
    lo: float
    hi: float

    def __post_init__(self):
        if self.side.slope == 0.0 and self.lo < self.hi:
            raise DegenerateError("a constant side cannot span an interval")

    def invert(self, v: float) -> float:
        b = get_base(self.side.base)
        return b.inverse((v - self.side.offset) / self.side.slope)


@dataclass(frozen=True)
class MembershipFunction:
    lower: MembershipBranch | None
    upper: MembershipBranch | None
    core: Interval
    support: Interval


def _side_direction(s: Side) -> int:
    b = get_base(s.base)
    return _sign(s.slope) * (1 if b.increasing else -1)


def membership_from_sides(up: Side, down: Side) -> MembershipFunction:
    """Invert an arbitrary proper side pair (bases may differ per side)."""
    u0, u1 = up.value_limits()
    d0, d1 = down.value_limits()
    if u0 < d0 or (u0 == d0 and u1 <= d1):
        low, low_limits = up, (u0, u1)
        high, high_limits = down, (d0, d1)
    else:
        low, low_limits = down, (d0, d1)
        high, high_limits = up, (u0, u1)
    # the lower flank must rise to the core, the upper must fall to it
    if _side_direction(low) < 0 or _side_direction(high) > 0:
        raise ImproperError("side directions do not match the orientation")
    if low_limits[1] > high_limits[1]:
        raise ImproperError("sides overlap beyond the core")
    core = Interval(low_limits[1], high_limits[1])
    supp = Interval(min(low_limits[0], core.lo), max(high_limits[0], core.hi))
    lower = None
    if low.slope != 0.0:
        lower = MembershipBranch(low, low_limits[0], core.lo)
    upper = None
    if high.slope != 0.0:
        upper = MembershipBranch(high, core.hi, high_limits[0])
    return MembershipFunction(lower=lower, upper=upper, core=core, support=supp)


def membership(x: TypedOfn) -> MembershipFunction:
    """Membership function of a proper typed OFN (ImproperError otherwise)."""
    if not classify(x).proper:
        raise ImproperError("membership inversion requires a proper number")
    return membership_from_sides(x.up_side(), x.down_side())


def membership_eval(m: MembershipFunction, v: float) -> float:
    if math.isnan(v):
        return 0.0
    if m.core.contains_value(v):
        return 1.0
    if m.lower is not None and m.lower.lo <= v < m.lower.hi:
        return m.lower.invert(v)
    if m.upper is not None and m.upper.lo < v <= m.upper.hi:
        return m.upper.invert(v)
    return 0.0


# ---------------------------------------------------------------------------
# level-set nesting
# ---------------------------------------------------------------------------

def nesting_violation(x: TypedOfn, grid: int = 101) -> tuple[float, float] | None:
    """First adjacent alpha pair whose level sets fail to nest, if any.

    Proper numbers nest: level sets shrink as alpha grows.  Returns
    (alpha_low, alpha_high) with level_set(alpha_high) not contained in
    level_set(alpha_low), or None when nesting holds on the grid.
    """
    if grid < 2:
        raise DomainError("grid must have at least 2 points")
    alphas = [k / (grid - 1) for k in range(grid)]
    prev_alpha = alphas[0]
    prev = level_set(x, prev_alpha)
    for alpha in alphas[1:]:
        cur = level_set(x, alpha)
        if not prev.encloses(cur):
            return prev_alpha, alpha
        prev_alpha, prev = alpha, cur
    return None
