"""Exact Lebesgue Delta-measure of points, intervals and resolved sets.

On a scale with sup T = infinity the closed formulas are

    mu({a})        = sigma(a) - a
    mu([a, b)_T)   = b - a
    mu((a, b)_T)   = b - sigma(a)
    mu((a, b]_T)   = sigma(b) - sigma(a)
    mu([a, b]_T)   = sigma(b) - a

and a resolved set component denoting T ∩ [lo, hi] carries sigma(hi) - lo
(a point carries its own jump). Sums over disjoint components are exact
rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInterval
from .timescale import Component, TimeScale, as_fraction

INTERVAL_KINDS = ("open", "half_open_lr", "half_open_rl", "closed")


@dataclass(frozen=True)
class MeasureValue:
    """A nonnegative measure; exact means every input was exact-rational."""

    value: Fraction
    exact: bool = True

    def __float__(self):
        return float(self.value)

    def __add__(self, other):
        return MeasureValue(self.value + other.value, self.exact and other.exact)

    def __repr__(self):
        tag = "" if self.exact else "~"
        return f"MeasureValue({tag}{self.value})"


def measure_point(scale: TimeScale, a) -> MeasureValue:
    """Mass of the single point {a}: sigma(a) - a."""
    a = as_fraction(a)
    return MeasureValue(scale.sigma(a) - a)


def measure_interval(scale: TimeScale, kind: str, a, b) -> MeasureValue:
    """Measure of a time-scale interval between a and b, both in T, a <= b."""
    if kind not in INTERVAL_KINDS:
        raise ValueError(f"unknown interval kind {kind!r}; expected one of {INTERVAL_KINDS}")
    a, b = as_fraction(a), as_fraction(b)
    if a > b:
        raise InvalidInterval(f"interval endpoints out of order: {a} > {b}")
    sa = scale.sigma(a)
    sb = sa if a == b else scale.sigma(b)
    if kind == "closed":
        value = sb - a
    elif kind == "half_open_lr":
        value = b - a
    elif kind == "half_open_rl":
        value = sb - sa
    else:  # open; (a, a)_T is empty, where the raw formula could go negative
        value = b - sa if a < b else Fraction(0)
    return MeasureValue(value)


def component_mass(scale: TimeScale, comp: Component) -> Fraction:
    """Mass of the set T ∩ [lo, hi]: sigma(hi) - lo."""
    if comp.is_point:
        return scale.sigma(comp.lo) - comp.lo
    return scale.sigma(comp.hi) - comp.lo


def components_measure(scale: TimeScale, comps) -> Fraction:
    return sum((component_mass(scale, c) for c in comps), Fraction(0))


def measure_set_window(scale: TimeScale, tsset, t) -> MeasureValue:
    """Measure of S ∩ [t0, t] for a representable set S."""
    if tsset.scale != scale:
        raise ValueError("set was built against a different time scale")
    return tsset.measure_window(t)
