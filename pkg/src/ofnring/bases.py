"""Base functions for typed ordered fuzzy numbers.

A base is a strictly monotone map h on (0, 1] with a closed-form inverse; the
sides of a typed OFN are affine images slope * h(alpha) + offset.  Everything
the rest of the package needs from h lives in one record: evaluation, the
inverse on the closure of the range, the (possibly infinite) limit at 0, the
value at 1, and the integral over [0, 1] used by the ranking functional.

The registry is closed at import time with the four shipped bases; additional
bases can be registered explicitly and are validated by a monotonicity sweep.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, RangeError, UnknownBaseError

IDENTITY = "identity"
SQRT = "sqrt"
GAUSSIAN_INVERSE = "gaussian-inverse"
LOG = "log"


@dataclass(frozen=True)
class BaseFunction:
    """A generator h with its inverse and the constants derived from it."""

    tag: str
    func: Callable[[float], float]
    inverse_func: Callable[[float], float]
    increasing: bool
    limit_at_zero: float
    value_at_one: float
    integral: float

    def value(self, alpha: float) -> float:
        """h(alpha); the alpha=0 endpoint returns the limit, which may be infinite."""
        if not 0.0 <= alpha <= 1.0:
            raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")
        if alpha == 0.0:
            return self.limit_at_zero
        return self.func(alpha)

    def inverse(self, t: float) -> float:
        """The alpha in [0, 1] with h(alpha) = t; t must lie in the range closure."""
        lo, hi = sorted((self.limit_at_zero, self.value_at_one))
        slack = 1e-9 * max(1.0, abs(t))
        if math.isnan(t) or t < lo - slack or t > hi + slack:
            raise RangeError(f"{t!r} is outside the range of {self.tag}")
        if t == self.limit_at_zero:
            return 0.0
        if t == self.value_at_one:
            return 1.0
        return min(1.0, max(0.0, self.inverse_func(t)))

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.limit_at_zero)


_REGISTRY: dict[str, BaseFunction] = {}


def _validate(b: BaseFunction) -> None:
    n = 1000
    prev = None
    for k in range(1, n + 1):
        alpha = k / n
        v = b.func(alpha)
        if not math.isfinite(v):
            raise DomainError(f"{b.tag}: h({alpha}) is not finite")
        if prev is not None:
            if b.increasing and not v > prev:
                raise DomainError(f"{b.tag}: h is not strictly increasing near {alpha}")
            if not b.increasing and not v < prev:
                raise DomainError(f"{b.tag}: h is not strictly decreasing near {alpha}")
        prev = v
    if abs(b.func(1.0) - b.value_at_one) > 1e-12:
        raise DomainError(f"{b.tag}: value_at_one does not match h(1)")
    if not math.isinf(b.limit_at_zero):
        # the recorded limit must continue the sweep's direction
        first = b.func(1.0 / n)
        if b.increasing and not b.limit_at_zero < first:
            raise DomainError(f"{b.tag}: limit_at_zero inconsistent with direction")
        if not b.increasing and not b.limit_at_zero > first:
            raise DomainError(f"{b.tag}: limit_at_zero inconsistent with direction")
    for k in range(1, 101):
        alpha = k / 100
        back = b.inverse_func(b.func(alpha))
        if abs(back - alpha) > 1e-9:
            raise DomainError(f"{b.tag}: inverse round trip fails at alpha={alpha}")


def register_base(b: BaseFunction) -> BaseFunction:
    """Validate a base record and add it to the registry (tags are unique)."""
    if b.tag in _REGISTRY:
        raise DomainError(f"base tag {b.tag!r} is already registered")
    _validate(b)
    _REGISTRY[b.tag] = b
    return b


def get_base(tag: str) -> BaseFunction:
    try:
        return _REGISTRY[tag]
    except KeyError:
        raise UnknownBaseError(f"unknown base tag {tag!r}") from None


def available_tags() -> tuple[str, ...]:
    return tuple(_REGISTRY)


register_base(BaseFunction(
    tag=IDENTITY,
    func=lambda a: a,
    inverse_func=lambda t: t,
    increasing=True,
    limit_at_zero=0.0,
    value_at_one=1.0,
    integral=0.5,
))

register_base(BaseFunction(
    tag=SQRT,
    func=math.sqrt,
    inverse_func=lambda t: t * t,
    increasing=True,
    limit_at_zero=0.0,
    value_at_one=1.0,
    integral=2.0 / 3.0,
))

# h(alpha) = sqrt(-2 log alpha): decreasing, +inf at 0, 0 at 1.  Inverting a side
# slope * h + offset produces the two branches of a Gaussian bell.
register_base(BaseFunction(
    tag=GAUSSIAN_INVERSE,
    func=lambda a: math.sqrt(-2.0 * math.log(a)),
    inverse_func=lambda t: math.exp(-0.5 * t * t),
    increasing=False,
    limit_at_zero=math.inf,
    value_at_one=0.0,
    integral=math.sqrt(math.pi / 2.0),
))

# h(alpha) = log alpha: increasing from -inf to 0; sides invert to exponentials.
register_base(BaseFunction(
    tag=LOG,
    func=math.log,
    inverse_func=math.exp,
    increasing=True,
    limit_at_zero=-math.inf,
    value_at_one=0.0,
    integral=-1.0,
))
