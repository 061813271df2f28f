"""Essential-tuple arithmetic for typed ordered fuzzy numbers.

A typed OFN over a base h is a pair of side functions

    up(alpha)   = up_slope   * h(alpha) + up_offset
    down(alpha) = down_slope * h(alpha) + down_offset

so the number is captured by the four coefficients (the essential tuple) plus
the base tag.  Addition, subtraction, multiplication and division act
componentwise on the tuples, which makes each fixed-base family a commutative
ring with zero (0,0,0,0) and unit (1,1,1,1).  Division is strict: any zero
component in the divisor raises.

Rectangular tuples (both slopes zero) are base-polymorphic: they combine with
operands of any base and the result adopts the typed operand's base.  Mixing
two genuinely typed bases raises MixedTypeError.

Side values at alpha=0 may be infinite for unbounded bases; infinities are
ordinary signed floats here, never sentinels, and 0 * inf is avoided by
construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

from .bases import IDENTITY, BaseFunction, get_base
from .errors import DivisionByZero, DomainError, MixedTypeError

SideName = Literal["up", "down"]

Orientation = Literal["increasing", "decreasing", "degenerate"]
SignClass = Literal["positive", "negative", "neither"]


@dataclass(frozen=True, order=True)
class EssentialTuple:
    """(up_slope, up_offset, down_slope, down_offset); ordering is lexicographic."""

    up_slope: float
    up_offset: float
    down_slope: float
    down_offset: float

    def __post_init__(self):
        for name, v in self.__dict__.items():
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise DomainError(f"tuple component {name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.up_slope, self.up_offset, self.down_slope, self.down_offset)


@dataclass(frozen=True)
class Interval:
    """A closed interval; endpoints may be infinite."""

    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi) or self.lo > self.hi:
            raise DomainError(f"bad interval [{self.lo}, {self.hi}]")

    def contains_value(self, v: float) -> bool:
        return self.lo <= v <= self.hi

    def encloses(self, other: "Interval") -> bool:
        """True when `other` is a subset of self."""
        return self.lo <= other.lo and other.hi <= self.hi

    def plus(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class Side:
    """One affine-in-h side, carrying its own base tag.

    TypedOfn keeps both sides on a single base; Side exists so that level-set
    and membership geometry can also be asked about classic mixed-base pairs
    such as (sqrt(alpha), 2 - alpha).
    """

    base: str
    slope: float
    offset: float

    def __post_init__(self):
        get_base(self.base)
        if not (math.isfinite(self.slope) and math.isfinite(self.offset)):
            raise DomainError("side coefficients must be finite")

    def value(self, alpha: float) -> float:
        return _affine(get_base(self.base), self.slope, self.offset, alpha)

    def value_limits(self) -> tuple[float, float]:
        """(value at alpha -> 0, value at alpha = 1), extended reals."""
        b = get_base(self.base)
        return (_affine(b, self.slope, self.offset, 0.0),
                self.slope * b.value_at_one + self.offset)


def _affine(b: BaseFunction, slope: float, offset: float, alpha: float) -> float:
    if slope == 0.0:
        return offset
    return slope * b.value(alpha) + offset


@dataclass(frozen=True)
class TypedOfn:
    """A typed ordered fuzzy number: base tag plus essential tuple."""

    base: str
    coeffs: EssentialTuple

    def __post_init__(self):
        get_base(self.base)

    @property
    def is_rectangular(self) -> bool:
        return self.coeffs.up_slope == 0.0 and self.coeffs.down_slope == 0.0

    def up_side(self) -> Side:
        return Side(self.base, self.coeffs.up_slope, self.coeffs.up_offset)

    def down_side(self) -> Side:
        return Side(self.base, self.coeffs.down_slope, self.coeffs.down_offset)

    def __add__(self, other: "TypedOfn") -> "TypedOfn":
        return add(self, other)

    def __sub__(self, other: "TypedOfn") -> "TypedOfn":
        return sub(self, other)

    def __mul__(self, other: "TypedOfn") -> "TypedOfn":
        return mul(self, other)

    def __truediv__(self, other: "TypedOfn") -> "TypedOfn":
        return div(self, other)

    def __neg__(self) -> "TypedOfn":
        return neg(self)


def typed(base: str, up_slope: float, up_offset: float,
          down_slope: float, down_offset: float) -> TypedOfn:
    return TypedOfn(base, EssentialTuple(up_slope, up_offset, down_slope, down_offset))


def trapezoid(up_slope: float, up_offset: float,
              down_slope: float, down_offset: float) -> TypedOfn:
    """Identity-base OFN (affine sides in alpha)."""
    return typed(IDENTITY, up_slope, up_offset, down_slope, down_offset)


def rectangular(up_offset: float, down_offset: float, base: str = IDENTITY) -> TypedOfn:
    return typed(base, 0.0, up_offset, 0.0, down_offset)


def crisp(v: float, base: str = IDENTITY) -> TypedOfn:
    return rectangular(v, v, base)


def zero(base: str = IDENTITY) -> TypedOfn:
    return typed(base, 0.0, 0.0, 0.0, 0.0)


def one(base: str = IDENTITY) -> TypedOfn:
    return typed(base, 1.0, 1.0, 1.0, 1.0)


# ---------------------------------------------------------------------------
# evaluation and geometry
# ---------------------------------------------------------------------------

def side_eval(x: TypedOfn, which: SideName, alpha: float) -> float:
    """Value of one side at alpha; may be +-inf at alpha=0 for unbounded bases."""
    b = get_base(x.base)
    t = x.coeffs
    if which == "up":
        return _affine(b, t.up_slope, t.up_offset, alpha)
    if which == "down":
        return _affine(b, t.down_slope, t.down_offset, alpha)
    raise DomainError(f"side must be 'up' or 'down', got {which!r}")


def level_set(x: TypedOfn, alpha: float) -> Interval:
    u = side_eval(x, "up", alpha)
    d = side_eval(x, "down", alpha)
    return Interval(min(u, d), max(u, d))


def level_set_of_sides(up: Side, down: Side, alpha: float) -> Interval:
    """Level set of an arbitrary (possibly mixed-base) side pair."""
    u = up.value(alpha)
    d = down.value(alpha)
    return Interval(min(u, d), max(u, d))


def support(x: TypedOfn) -> Interval:
    """Closure of the union of both side ranges over alpha in (0, 1]."""
    u0, u1 = x.up_side().value_limits()
    d0, d1 = x.down_side().value_limits()
    return Interval(min(u0, u1, d0, d1), max(u0, u1, d0, d1))


def sign_class(x: TypedOfn) -> SignClass:
    s = support(x)
    if s.lo > 0.0:
        return "positive"
    if s.hi < 0.0:
        return "negative"
    return "neither"


def orientation(x: TypedOfn) -> Orientation:
    """Which way the number points, decided by the side order near alpha=0.

    For unbounded bases the order near 0 is decided by the slope coefficients
    (ties by offsets); for bounded bases by the side values at alpha=0, with
    ties broken at alpha=1.  Identical sides are degenerate.
    """
    t = x.coeffs
    if t.up_slope == t.down_slope and t.up_offset == t.down_offset:
        return "degenerate"
    b = get_base(x.base)
    if b.unbounded:
        if t.up_slope != t.down_slope:
            if b.limit_at_zero > 0:
                up_below = t.up_slope < t.down_slope
            else:
                up_below = t.up_slope > t.down_slope
        else:
            up_below = t.up_offset < t.down_offset
    else:
        h0 = b.limit_at_zero
        u0 = t.up_slope * h0 + t.up_offset
        d0 = t.down_slope * h0 + t.down_offset
        if u0 != d0:
            up_below = u0 < d0
        else:
            h1 = b.value_at_one
            up_below = t.up_slope * h1 + t.up_offset < t.down_slope * h1 + t.down_offset
    return "increasing" if up_below else "decreasing"


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------

def _result_base(x: TypedOfn, y: TypedOfn) -> str:
    if x.base == y.base:
        return x.base
    if x.is_rectangular:
        return y.base
    if y.is_rectangular:
        return x.base
    raise MixedTypeError(
        f"cannot combine base {x.base!r} with base {y.base!r}; "
        "arithmetic across types is not defined")


def _combine(x: TypedOfn, y: TypedOfn,
             op: Callable[[float, float], float]) -> TypedOfn:
    base = _result_base(x, y)
    a, b = x.coeffs, y.coeffs
    return typed(base,
                 op(a.up_slope, b.up_slope),
                 op(a.up_offset, b.up_offset),
                 op(a.down_slope, b.down_slope),
                 op(a.down_offset, b.down_offset))


def add(x: TypedOfn, y: TypedOfn) -> TypedOfn:
    return _combine(x, y, lambda p, q: p + q)


def sub(x: TypedOfn, y: TypedOfn) -> TypedOfn:
    return _combine(x, y, lambda p, q: p - q)


def mul(x: TypedOfn, y: TypedOfn) -> TypedOfn:
    return _combine(x, y, lambda p, q: p * q)


def div(x: TypedOfn, y: TypedOfn) -> TypedOfn:
    if any(c == 0.0 for c in y.coeffs.as_tuple()):
        raise DivisionByZero(
            f"divisor tuple {y.coeffs.as_tuple()} has a zero component")
    return _combine(x, y, lambda p, q: p / q)


def neg(x: TypedOfn) -> TypedOfn:
    return scalar_mul(-1.0, x)


def scalar_mul(r: float, x: TypedOfn) -> TypedOfn:
    """Scale all four components by r (not the same as mul by crisp(r))."""
    if not math.isfinite(r):
        raise DomainError(f"scalar must be finite, got {r!r}")
    t = x.coeffs
    return typed(x.base, r * t.up_slope, r * t.up_offset,
                 r * t.down_slope, r * t.down_offset)
