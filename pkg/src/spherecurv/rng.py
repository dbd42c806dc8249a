"""Deterministic counter-based random streams.

The generator is SplitMix64 (Steele, Lea, Flood 2014): output i of a stream
with seed s is mix64(s + (i+1)*GOLDEN) where mix64 is the published finalizer.
Every draw is a pure function of (seed, counter), so streams are values:
drawing returns the drawn scalar together with the advanced stream, and any
stream can be split into an independent child without touching the parent.
All arithmetic is 64-bit wrapping integer arithmetic, identical on every
platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class RngStream:
    """Immutable position in a SplitMix64 sequence.

    seed and counter are 64-bit; draws return (value, next_stream) and never
    mutate. Two streams with equal (seed, counter) produce identical futures.
    """

    seed: int
    counter: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "seed", self.seed & _MASK64)
        object.__setattr__(self, "counter", self.counter & _MASK64)

    def _raw(self) -> tuple[int, "RngStream"]:
        value = _mix64(self.seed + ((self.counter + 1) * _GOLDEN & _MASK64))
        return value, replace(self, counter=self.counter + 1)

    def split(self, key: int) -> "RngStream":
        """Derive an independent child stream from an integer key."""
        child_seed = _mix64(self.seed ^ _mix64(((key & _MASK64) + 1) * _GOLDEN))
        return RngStream(seed=child_seed, counter=0)


def draw_u64(stream: RngStream) -> tuple[int, RngStream]:
    return stream._raw()


def draw_float(stream: RngStream, lo: float, hi: float) -> tuple[float, RngStream]:
    """Uniform float in [lo, hi) from the top 53 bits of one raw draw."""
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise ValueError(f"invalid float range [{lo}, {hi})")
    raw, nxt = stream._raw()
    u = (raw >> 11) * (2.0**-53)
    return lo + (hi - lo) * u, nxt


def draw_int(stream: RngStream, lo: int, hi: int) -> tuple[int, RngStream]:
    """Uniform integer in [lo, hi], bias-free via rejection."""
    if lo > hi:
        raise ValueError(f"invalid int range [{lo}, {hi}]")
    n = hi - lo + 1
    limit = (1 << 64) - ((1 << 64) % n)
    s = stream
    while True:
        raw, s = s._raw()
        if raw < limit:
            return lo + raw % n, s


def draw_rational(stream: RngStream, height: int) -> tuple[Fraction, RngStream]:
    """Random reduced fraction with |numerator| <= height, 1 <= denominator <= height.

    The bound survives reduction, so the height contract is exact.
    """
    if height < 1:
        raise ValueError(f"height must be >= 1, got {height}")
    num, s = draw_int(stream, -height, height)
    den, s = draw_int(s, 1, height)
    return Fraction(num, den), s


def draw_gaussian(stream: RngStream) -> tuple[float, RngStream]:
    """Standard normal via Box-Muller; consumes two uniform draws."""
    u1, s = draw_float(stream, 0.0, 1.0)
    u2, s = draw_float(s, 0.0, 1.0)
    # u1 == 0 would make log blow up; the lattice of 53-bit draws makes the
    # shifted value strictly positive.
    r = math.sqrt(-2.0 * math.log(1.0 - u1))
    return r * math.cos(2.0 * math.pi * u2), s
