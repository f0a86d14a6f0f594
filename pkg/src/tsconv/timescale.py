"""Time scales: closed unbounded subsets of the reals with exact primitives.

A time scale here is one of five generator families (continuous ray, uniform
grid, geometric grid, periodic block pattern, hybrid union). Every family
decides membership exactly, computes the forward jump sigma(t) = inf{s in T :
s > t} and the graininess sigma(t) - t, and decomposes T against a window
[a, b] into maximal connected components. All parameters are held as exact
rationals; geometric grids use integer exponent search rather than floating
logs so boundary membership never misclassifies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import InvalidWindow, NotInTimeScale, ResolutionFailure

# hard guard against runaway window decompositions
_MAX_COMPONENTS = 2_000_000


def as_fraction(x) -> Fraction:
    """Exact rational view of an int, float, Fraction or 'p/q' string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x!r}")
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact number")


@dataclass(frozen=True)
class Component:
    """A maximal piece of a set within a window: denotes T ∩ [lo, hi].

    lo == hi is a single point. Endpoints always belong to the scale the
    component was resolved against.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"component endpoints out of order: {self.lo} > {self.hi}")

    @classmethod
    def point(cls, p) -> "Component":
        p = as_fraction(p)
        return cls(p, p)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __repr__(self):
        if self.is_point:
            return f"Pt({_fmt(self.lo)})"
        return f"Iv({_fmt(self.lo)},{_fmt(self.hi)})"


def _fmt(x: Fraction) -> str:
    return str(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class TimeScale:
    """Base class; subclasses are immutable value objects."""

    t0: Fraction

    # -- membership and jumps -------------------------------------------------

    def contains(self, x) -> bool:
        raise NotImplementedError

    def sigma(self, t) -> Fraction:
        """Forward jump inf{s in T : s > t}; equals t at right-dense points."""
        raise NotImplementedError

    def graininess(self, t) -> Fraction:
        return self.sigma(t) - self._element(t)

    def _element(self, t) -> Fraction:
        t = as_fraction(t)
        if not self.contains(t):
            raise NotInTimeScale(self, t)
        return t

    # -- windows ---------------------------------------------------------------

    def decompose_window(self, a, b, *, max_components: int | None = None) -> tuple[Component, ...]:
        """Maximal connected components of T ∩ [a, b], ordered and disjoint."""
        raise NotImplementedError

    def window_measure(self, t) -> Fraction:
        """Delta-measure of [t0, t]_T, i.e. sigma(t) - t0."""
        return self.sigma(t) - self.t0

    # -- navigation ------------------------------------------------------------

    def snap_down(self, x) -> Fraction | None:
        """Largest element of T that is <= x, or None if x < t0."""
        raise NotImplementedError

    def first_geq(self, x) -> Fraction:
        """Smallest element of T that is >= x (exists since sup T = inf)."""
        raise NotImplementedError

    def left_limit(self, t):
        """How t is approached from below within T.

        Returns ("dense", None) when elements of T accumulate at t from below,
        ("scattered", prev) when a largest element prev < t exists, and
        ("min", None) when t == t0.
        """
        raise NotImplementedError

    # -- bulk helpers ------------------------------------------------------------

    def uniform_params(self):
        """(t0, h) when the scale is a pure uniform grid, else None."""
        return None

    def is_discrete(self) -> bool:
        """True when every point of the scale is isolated."""
        return False

    def _guard(self, count, max_components):
        limit = max_components if max_components is not None else _MAX_COMPONENTS
        if count > limit:
            raise ResolutionFailure(
                f"window decomposition needs {count} components (limit {limit})",
                detail={"components": count, "limit": limit},
            )

    @staticmethod
    def _window(a, b):
        a, b = as_fraction(a), as_fraction(b)
        if a > b:
            raise InvalidWindow(f"window endpoints out of order: {a} > {b}")
        return a, b


class ContinuousRay(TimeScale):
    """T = [t0, infinity)."""

    def __init__(self, t0):
        self.t0 = as_fraction(t0)
        if self.t0 <= 0:
            raise ValueError("time scales start at t0 > 0")

    def contains(self, x):
        try:
            return as_fraction(x) >= self.t0
        except (TypeError, ValueError):
            return False

    def sigma(self, t):
        return self._element(t)

    def decompose_window(self, a, b, *, max_components=None):
        a, b = self._window(a, b)
        lo = max(a, self.t0)
        if lo > b:
            return ()
        return (Component(lo, b),)

    def snap_down(self, x):
        x = as_fraction(x)
        return x if x >= self.t0 else None

    def first_geq(self, x):
        return max(as_fraction(x), self.t0)

    def left_limit(self, t):
        t = self._element(t)
        return ("min", None) if t == self.t0 else ("dense", None)

    def __repr__(self):
        return f"ContinuousRay(t0={_fmt(self.t0)})"

    def __eq__(self, other):
        return isinstance(other, ContinuousRay) and self.t0 == other.t0

    def __hash__(self):
        return hash(("ray", self.t0))


class UniformGrid(TimeScale):
    """T = {t0 + k h : k = 0, 1, 2, ...} with step h > 0."""

    def __init__(self, t0, h):
        self.t0 = as_fraction(t0)
        self.h = as_fraction(h)
        if self.t0 <= 0:
            raise ValueError("time scales start at t0 > 0")
        if self.h <= 0:
            raise ValueError("grid step must be positive")

    def index_of(self, x) -> int | None:
        """Grid index k of x, or None when x is off the grid."""
        q = (as_fraction(x) - self.t0) / self.h
        if q < 0 or q.denominator != 1:
            return None
        return int(q)

    def value_at(self, k: int) -> Fraction:
        return self.t0 + k * self.h

    def count_leq(self, w) -> int:
        """Number of grid points in [t0, w]."""
        w = as_fraction(w)
        if w < self.t0:
            return 0
        return int((w - self.t0) / self.h) + 1

    def contains(self, x):
        try:
            return self.index_of(x) is not None
        except (TypeError, ValueError):
            return False

    def sigma(self, t):
        return self._element(t) + self.h

    def decompose_window(self, a, b, *, max_components=None):
        a, b = self._window(a, b)
        lo = max(a, self.t0)
        if lo > b:
            return ()
        k0 = int(math.ceil((lo - self.t0) / self.h))
        k1 = int(math.floor((b - self.t0) / self.h))
        if k0 > k1:
            return ()
        self._guard(k1 - k0 + 1, max_components)
        return tuple(Component.point(self.value_at(k)) for k in range(k0, k1 + 1))

    def snap_down(self, x):
        x = as_fraction(x)
        if x < self.t0:
            return None
        return self.value_at(int((x - self.t0) / self.h))

    def first_geq(self, x):
        x = as_fraction(x)
        if x <= self.t0:
            return self.t0
        return self.value_at(int(math.ceil((x - self.t0) / self.h)))

    def left_limit(self, t):
        t = self._element(t)
        return ("min", None) if t == self.t0 else ("scattered", t - self.h)

    def uniform_params(self):
        return (self.t0, self.h)

    def is_discrete(self):
        return True

    def index_arrays(self, k0: int, k1: int):
        """(indices, values) numpy arrays for grid positions k0..k1 inclusive."""
        idx = np.arange(k0, k1 + 1, dtype=np.int64)
        if self.t0.denominator == 1 and self.h.denominator == 1:
            values = int(self.t0) + idx * int(self.h)
        else:
            values = float(self.t0) + idx.astype(np.float64) * float(self.h)
        return idx, values

    def __repr__(self):
        return f"UniformGrid(t0={_fmt(self.t0)}, h={_fmt(self.h)})"

    def __eq__(self, other):
        return isinstance(other, UniformGrid) and (self.t0, self.h) == (other.t0, other.h)

    def __hash__(self):
        return hash(("grid", self.t0, self.h))


class GeometricGrid(TimeScale):
    """T = {t0 q^n : n = 0, 1, 2, ...} with ratio q > 1."""

    def __init__(self, t0, q):
        self.t0 = as_fraction(t0)
        self.q = as_fraction(q)
        if self.t0 <= 0:
            raise ValueError("time scales start at t0 > 0")
        if self.q <= 1:
            raise ValueError("geometric ratio must exceed 1")

    def exponent_of(self, x) -> int | None:
        """Integer n with x == t0 q^n, found by exponent search, else None."""
        x = as_fraction(x)
        if x < self.t0:
            return None
        p, n = self.t0, 0
        while p < x:
            p *= self.q
            n += 1
        return n if p == x else None

    def contains(self, x):
        try:
            return self.exponent_of(x) is not None
        except (TypeError, ValueError):
            return False

    def sigma(self, t):
        return self._element(t) * self.q

    def points_between(self, a: Fraction, b: Fraction) -> list[Fraction]:
        out = []
        p = self.t0
        while p <= b:
            if p >= a:
                out.append(p)
            p *= self.q
        return out

    def decompose_window(self, a, b, *, max_components=None):
        a, b = self._window(a, b)
        pts = self.points_between(max(a, self.t0), b)
        self._guard(len(pts), max_components)
        return tuple(Component.point(p) for p in pts)

    def snap_down(self, x):
        x = as_fraction(x)
        if x < self.t0:
            return None
        p = self.t0
        while p * self.q <= x:
            p *= self.q
        return p

    def first_geq(self, x):
        x = as_fraction(x)
        p = self.t0
        while p < x:
            p *= self.q
        return p

    def left_limit(self, t):
        t = self._element(t)
        return ("min", None) if t == self.t0 else ("scattered", t / self.q)

    def is_discrete(self):
        return True

    def __repr__(self):
        return f"GeometricGrid(t0={_fmt(self.t0)}, q={_fmt(self.q)})"

    def __eq__(self, other):
        return isinstance(other, GeometricGrid) and (self.t0, self.q) == (other.t0, other.q)

    def __hash__(self):
        return hash(("geom", self.t0, self.q))


class PeriodicPattern(TimeScale):
    """Blocks [t0 + k p, t0 + k p + on] for k >= 0, with period p = on + gap.

    A zero gap degenerates to a continuous ray and is normalized away at
    construction.
    """

    def __new__(cls, t0, on, gap):
        if as_fraction(gap) == 0:
            return ContinuousRay(t0)
        return super().__new__(cls)

    def __init__(self, t0, on, gap):
        self.t0 = as_fraction(t0)
        self.on = as_fraction(on)
        self.gap = as_fraction(gap)
        if self.t0 <= 0:
            raise ValueError("time scales start at t0 > 0")
        if self.on <= 0:
            raise ValueError("block length must be positive")
        if self.gap < 0:
            raise ValueError("gap length must be nonnegative")
        self.period = self.on + self.gap

    def _offset(self, x: Fraction) -> tuple[int, Fraction]:
        k = int((x - self.t0) / self.period)
        off = x - self.t0 - k * self.period
        return k, off

    def contains(self, x):
        try:
            x = as_fraction(x)
        except (TypeError, ValueError):
            return False
        if x < self.t0:
            return False
        _, off = self._offset(x)
        return off <= self.on

    def sigma(self, t):
        t = self._element(t)
        _, off = self._offset(t)
        return t + self.gap if off == self.on else t

    def block_start(self, k: int) -> Fraction:
        return self.t0 + k * self.period

    def decompose_window(self, a, b, *, max_components=None):
        a, b = self._window(a, b)
        lo = max(a, self.t0)
        if lo > b:
            return ()
        k0, off = self._offset(lo)
        if off > self.on:
            k0 += 1
        k1 = self._offset(b)[0]
        if k1 >= k0:
            self._guard(k1 - k0 + 1, max_components)
        out = []
        for k in range(k0, k1 + 1):
            s = self.block_start(k)
            c_lo, c_hi = max(s, lo), min(s + self.on, b)
            if c_lo <= c_hi:
                out.append(Component(c_lo, c_hi))
        return tuple(out)

    def snap_down(self, x):
        x = as_fraction(x)
        if x < self.t0:
            return None
        k, off = self._offset(x)
        return x if off <= self.on else self.block_start(k) + self.on

    def first_geq(self, x):
        x = as_fraction(x)
        if x <= self.t0:
            return self.t0
        k, off = self._offset(x)
        return x if off <= self.on else self.block_start(k + 1)

    def left_limit(self, t):
        t = self._element(t)
        if t == self.t0:
            return ("min", None)
        _, off = self._offset(t)
        if off == 0:
            return ("scattered", t - self.gap)
        return ("dense", None)

    def __repr__(self):
        return f"PeriodicPattern(t0={_fmt(self.t0)}, on={_fmt(self.on)}, gap={_fmt(self.gap)})"

    def __eq__(self, other):
        return isinstance(other, PeriodicPattern) and (
            (self.t0, self.on, self.gap) == (other.t0, other.on, other.gap)
        )

    def __hash__(self):
        return hash(("pattern", self.t0, self.on, self.gap))


class HybridUnion(TimeScale):
    """Finitely many bounded pieces followed by one unbounded tail scale.

    Pieces are points or closed real intervals, strictly ordered with gaps
    between them; the tail is any other scale kind starting above the last
    piece. An empty piece list normalizes to the tail itself.
    """

    def __new__(cls, pieces, tail):
        if not pieces:
            return tail
        return super().__new__(cls)

    def __init__(self, pieces, tail):
        self.pieces = tuple(
            p if isinstance(p, Component) else Component(*p) for p in pieces
        )
        if isinstance(tail, HybridUnion):
            raise ValueError("tail must be a non-hybrid scale")
        self.tail = tail
        prev_hi = None
        for p in self.pieces:
            if prev_hi is not None and p.lo <= prev_hi:
                raise ValueError("pieces must be strictly ordered and disjoint")
            prev_hi = p.hi
        if tail.t0 <= prev_hi:
            raise ValueError("tail must start above the last piece")
        self.t0 = self.pieces[0].lo
        if self.t0 <= 0:
            raise ValueError("time scales start at t0 > 0")

    def _piece_index(self, x: Fraction) -> int | None:
        for i, p in enumerate(self.pieces):
            if p.lo <= x <= p.hi:
                return i
        return None

    def contains(self, x):
        try:
            x = as_fraction(x)
        except (TypeError, ValueError):
            return False
        return self._piece_index(x) is not None or self.tail.contains(x)

    def _next_min(self, i: int) -> Fraction:
        return self.pieces[i + 1].lo if i + 1 < len(self.pieces) else self.tail.t0

    def sigma(self, t):
        t = self._element(t)
        i = self._piece_index(t)
        if i is None:
            return self.tail.sigma(t)
        return t if t < self.pieces[i].hi else self._next_min(i)

    def decompose_window(self, a, b, *, max_components=None):
        a, b = self._window(a, b)
        out = []
        for p in self.pieces:
            lo, hi = max(p.lo, a), min(p.hi, b)
            if lo <= hi:
                out.append(Component(lo, hi))
        out.extend(self.tail.decompose_window(max(a, self.tail.t0), b, max_components=max_components)
                   if b >= self.tail.t0 else ())
        self._guard(len(out), max_components)
        return tuple(out)

    def snap_down(self, x):
        x = as_fraction(x)
        if x >= self.tail.t0:
            return self.tail.snap_down(x)
        best = None
        for p in self.pieces:
            if p.lo > x:
                break
            best = min(p.hi, x)
        return best

    def first_geq(self, x):
        x = as_fraction(x)
        for p in self.pieces:
            if x <= p.hi:
                return max(x, p.lo)
        return self.tail.first_geq(x)

    def left_limit(self, t):
        t = self._element(t)
        if t == self.t0:
            return ("min", None)
        i = self._piece_index(t)
        if i is not None:
            p = self.pieces[i]
            if t > p.lo:
                return ("dense", None)
            return ("scattered", self.pieces[i - 1].hi) if i > 0 else ("min", None)
        kind, prev = self.tail.left_limit(t)
        if kind == "min":
            return ("scattered", self.pieces[-1].hi)
        return (kind, prev)

    def is_discrete(self):
        return all(p.is_point for p in self.pieces) and self.tail.is_discrete()

    def __repr__(self):
        return f"HybridUnion({list(self.pieces)!r}, tail={self.tail!r})"

    def __eq__(self, other):
        return isinstance(other, HybridUnion) and (
            self.pieces == other.pieces and self.tail == other.tail
        )

    def __hash__(self):
        return hash(("hybrid", self.pieces, self.tail))


_KINDS = {
    "continuous_ray": ("t0",),
    "uniform_grid": ("t0", "h"),
    "geometric_grid": ("t0", "q"),
    "periodic_pattern": ("t0", "on", "gap"),
}


def from_descriptor(desc: dict) -> TimeScale:
    """Build a scale from a tagged record {kind, t0, ...} as used by the CLI."""
    kind = desc.get("kind")
    if kind == "hybrid_union":
        pieces = []
        for raw in desc.get("pieces", []):
            if "point" in raw:
                pieces.append(Component.point(as_fraction(raw["point"])))
            elif "interval" in raw:
                lo, hi = raw["interval"]
                pieces.append(Component(as_fraction(lo), as_fraction(hi)))
            else:
                raise ValueError(f"piece needs 'point' or 'interval': {raw!r}")
        return HybridUnion(pieces, from_descriptor(desc["tail"]))
    if kind not in _KINDS:
        raise ValueError(f"unknown time scale kind {kind!r}")
    args = [as_fraction(desc[field]) for field in _KINDS[kind]]
    cls = {
        "continuous_ray": ContinuousRay,
        "uniform_grid": UniformGrid,
        "geometric_grid": GeometricGrid,
        "periodic_pattern": PeriodicPattern,
    }[kind]
    return cls(*args)
