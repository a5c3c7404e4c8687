"""Exact integer and rational primitives.

Everything downstream leans on four things: the shifted remainder that lands
in {1, ..., x} instead of {0, ..., x-1}, gcd content of integer collections,
half-open rational intervals, and unions of all positive integer dilates of
such intervals. Endpoints are `fractions.Fraction`; no float ever enters a
comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Rational = Union[int, Fraction]


def rem_pos(x: int, y: int) -> int:
    """Remainder of y modulo x shifted into {1, ..., x}.

    Identical to y % x except that multiples of x map to x rather than 0.
    Requires x >= 2; y may be any integer.
    """
    if x < 2:
        raise ValueError(f"modulus must be >= 2, got {x}")
    r = y % x
    return x if r == 0 else r


def content(values: Iterable[int]) -> int:
    """gcd of the absolute values; 0 for an empty collection."""
    return math.gcd(*values)


@dataclass(frozen=True)
class HalfOpenInterval:
    """Rational interval [lo, hi); empty exactly when hi <= lo."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))

    @property
    def is_empty(self) -> bool:
        return self.hi <= self.lo

    def __contains__(self, value: Rational) -> bool:
        return self.lo <= value < self.hi

    def dilate(self, t: int) -> "HalfOpenInterval":
        """The scaled interval t*[lo, hi) = [t*lo, t*hi)."""
        if t < 1:
            raise ValueError(f"dilation factor must be positive, got {t}")
        return HalfOpenInterval(self.lo * t, self.hi * t)

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi})"


def interval(lo: Rational, hi: Rational) -> HalfOpenInterval:
    return HalfOpenInterval(Fraction(lo), Fraction(hi))


def ray_start(iv: HalfOpenInterval) -> Fraction:
    """Start of the infinite ray covered by the dilates of a nonempty interval.

    Consecutive dilates t*[lo, hi) and (t+1)*[lo, hi) overlap or touch once
    t*hi >= (t+1)*lo, i.e. t >= lo/(hi-lo); from the least such t0 onward the
    union of dilates is exactly [t0*lo, infinity).
    """
    if iv.is_empty:
        raise ValueError("empty interval covers no ray")
    if iv.lo <= 0:
        raise ValueError("interval must have positive lower endpoint")
    t0 = math.ceil(iv.lo / (iv.hi - iv.lo))
    return t0 * iv.lo


@dataclass(frozen=True)
class RaySummary:
    """Integers missed by a union of dilated intervals, plus its infinite ray.

    Every integer >= ray_start is covered by the union (ray_start is absent
    when every input interval is empty). `gaps` lists the integers in
    [1, horizon] covered by no dilate; all of them lie below ray_start.
    """

    ray_start: Optional[Fraction]
    gaps: tuple[int, ...]
    horizon: int


def scaled_union(intervals: Sequence[HalfOpenInterval], horizon: int) -> RaySummary:
    """Union of every positive integer dilate of the given intervals.

    Dilate enumeration is exhaustive up to the horizon (t runs until
    t*lo > horizon), so `gaps` is correct independently of ray detection;
    the ray is an exact reported fact, not an input to the gap computation.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be positive, got {horizon}")
    for iv in intervals:
        if iv.lo <= 0:
            raise ValueError(f"interval {iv} must have positive lower endpoint")
    covered = bytearray(horizon + 1)
    ray: Optional[Fraction] = None
    for iv in intervals:
        if iv.is_empty:
            continue
        start = ray_start(iv)
        ray = start if ray is None else min(ray, start)
        t = 1
        while t * iv.lo <= horizon:
            first = max(1, math.ceil(t * iv.lo))
            stop = min(horizon + 1, math.ceil(t * iv.hi))
            for y in range(first, stop):
                covered[y] = 1
            t += 1
    gaps = tuple(y for y in range(1, horizon + 1) if not covered[y])
    return RaySummary(ray_start=ray, gaps=gaps, horizon=horizon)
