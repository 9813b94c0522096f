"""Time-scale representation: jump operators, graininess, point enumeration.

A time scale is a nonempty closed subset of the reals.  Four families are
supported: real intervals, uniform lattices (h-spaced), q-power lattices and
explicit finite point sets.  Values are immutable; every operation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DenseUnsupported, NotAMember

SNAP_REL = 1e-12


def _snap_tol(t: float) -> float:
    return SNAP_REL * max(1.0, abs(t))


@dataclass(frozen=True)
class PointClass:
    right: str  # "dense" | "scattered" | "maximum"
    left: str   # "dense" | "scattered" | "minimum"


@dataclass(frozen=True)
class Jump:
    sigma: float
    rho: float
    mu: float
    point_class: PointClass


@dataclass(frozen=True)
class RealInterval:
    lo: float
    hi: float  # may be math.inf

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"RealInterval needs lo < hi, got [{self.lo}, {self.hi}]")

    def member(self, t: float) -> float:
        if self.lo - _snap_tol(t) <= t <= self.hi + _snap_tol(t):
            return min(max(t, self.lo), self.hi)
        raise NotAMember(f"{t} is not in [{self.lo}, {self.hi}]")

    def jump(self, t: float) -> Jump:
        t = self.member(t)
        right = "maximum" if (math.isfinite(self.hi) and t == self.hi) else "dense"
        left = "minimum" if t == self.lo else "dense"
        return Jump(sigma=t, rho=t, mu=0.0, point_class=PointClass(right, left))

    def points_in(self, a: float, b: float) -> np.ndarray:
        raise DenseUnsupported("a real interval has no scattered enumeration; use quadrature")

    def describe(self) -> str:
        hi = "inf" if math.isinf(self.hi) else repr(self.hi)
        return f"R[{self.lo!r},{hi}]"


@dataclass(frozen=True)
class UniformLattice:
    """Points origin + k*h for integer k.  h=1, origin=0 is the integer lattice."""

    h: float
    origin: float = 0.0

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError("lattice step h must be positive")

    def _index(self, t: float) -> int:
        k = round((t - self.origin) / self.h)
        if abs(self.origin + k * self.h - t) > _snap_tol(t):
            raise NotAMember(f"{t} is not on the lattice (h={self.h}, origin={self.origin})")
        return int(k)

    def member(self, t: float) -> float:
        return self.origin + self._index(t) * self.h

    def jump(self, t: float) -> Jump:
        t = self.member(t)
        sigma = t + self.h
        rho = t - self.h
        return Jump(sigma=sigma, rho=rho, mu=sigma - t,
                    point_class=PointClass("scattered", "scattered"))

    def points_in(self, a: float, b: float) -> np.ndarray:
        ka, kb = self._index(a), self._index(b)
        return self.origin + np.arange(ka, kb) * self.h

    def describe(self) -> str:
        if self.h == 1.0 and self.origin == 0.0:
            return "Z"
        return f"hZ({self.h!r})" if self.origin == 0.0 else f"hZ({self.h!r};{self.origin!r})"


@dataclass(frozen=True)
class QLattice:
    """Points q^k for integer k (positive reals only), q > 1."""

    q: float

    def __post_init__(self):
        if not self.q > 1:
            raise ValueError("q-lattice base must exceed 1")

    def _index(self, t: float) -> int:
        if t <= 0:
            raise NotAMember(f"{t} is not positive, so not a q-lattice point")
        k = round(math.log(t, self.q))
        # recheck against the snapping tolerance to avoid log drift for large |k|
        if abs(self.q ** k - t) > _snap_tol(t):
            raise NotAMember(f"{t} is not a power of q={self.q}")
        return int(k)

    def member(self, t: float) -> float:
        return self.q ** self._index(t)

    def jump(self, t: float) -> Jump:
        t = self.member(t)
        return Jump(sigma=self.q * t, rho=t / self.q, mu=(self.q - 1.0) * t,
                    point_class=PointClass("scattered", "scattered"))

    def points_in(self, a: float, b: float) -> np.ndarray:
        ka, kb = self._index(a), self._index(b)
        return np.array([self.q ** k for k in range(ka, kb)], dtype=float)

    def describe(self) -> str:
        return f"qZ({self.q!r})"


@dataclass(frozen=True)
class FiniteSet:
    """Explicit strictly increasing finite set of points (at least two)."""

    points: tuple[float, ...]
    _arr: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        arr = np.asarray(self.points, dtype=float)
        if arr.size < 2:
            raise ValueError("a finite scale needs at least two points")
        if not np.all(np.diff(arr) > 0):
            raise ValueError("finite-scale points must be strictly increasing")
        object.__setattr__(self, "points", tuple(float(p) for p in arr))
        object.__setattr__(self, "_arr", arr)

    def _index(self, t: float) -> int:
        i = int(np.searchsorted(self._arr, t))
        for j in (i - 1, i, i + 1):
            if 0 <= j < self._arr.size and abs(self._arr[j] - t) <= _snap_tol(t):
                return j
        raise NotAMember(f"{t} is not one of the listed points")

    def member(self, t: float) -> float:
        return float(self._arr[self._index(t)])

    def jump(self, t: float) -> Jump:
        i = self._index(t)
        n = self._arr.size
        t = float(self._arr[i])
        sigma = float(self._arr[min(i + 1, n - 1)])
        rho = float(self._arr[max(i - 1, 0)])
        right = "maximum" if i == n - 1 else "scattered"
        left = "minimum" if i == 0 else "scattered"
        return Jump(sigma=sigma, rho=rho, mu=sigma - t, point_class=PointClass(right, left))

    def points_in(self, a: float, b: float) -> np.ndarray:
        ia, ib = self._index(a), self._index(b)
        return self._arr[ia:ib].copy()

    def describe(self) -> str:
        return "set[" + ",".join(repr(p) for p in self.points) + "]"


TimeScale = RealInterval | UniformLattice | QLattice | FiniteSet

INTEGERS = UniformLattice(h=1.0, origin=0.0)


def is_dense(ts: TimeScale) -> bool:
    return isinstance(ts, RealInterval)


def member(ts: TimeScale, t: float) -> float:
    """Snap t onto the scale, raising NotAMember beyond the tolerance."""
    return ts.member(t)


def jump(ts: TimeScale, t: float) -> Jump:
    """Forward/backward jump, graininess and dense/scattered classification at t."""
    return ts.jump(t)


def points_in(ts: TimeScale, a: float, b: float) -> np.ndarray:
    """Scale points in the half-open window [a, b), in increasing order.

    These are the left endpoints whose mu-weighted sum realizes the delta
    integral from a to b.  Dense scales raise DenseUnsupported.
    """
    a, b = ts.member(a), ts.member(b)
    if not a < b:
        raise ValueError(f"window needs a < b, got [{a}, {b})")
    return ts.points_in(a, b)


def nearest_member_at_or_above(ts: TimeScale, x: float) -> float:
    """Smallest scale member >= x (used to realize doubled horizons)."""
    if isinstance(ts, RealInterval):
        return min(max(x, ts.lo), ts.hi)
    if isinstance(ts, UniformLattice):
        k = math.ceil((x - ts.origin) / ts.h - SNAP_REL)
        return ts.origin + k * ts.h
    if isinstance(ts, QLattice):
        if x <= 0:
            raise NotAMember("q-lattice has positive members only")
        k = math.ceil(math.log(x, ts.q) - SNAP_REL)
        return ts.q ** k
    arr = ts._arr
    i = int(np.searchsorted(arr, x - _snap_tol(x)))
    return float(arr[min(i, arr.size - 1)])


def parse_scale(text: str) -> TimeScale:
    """Parse a scale literal: R[lo,hi], Z, hZ(h), qZ(q), set[p1,p2,...]."""
    s = text.strip()
    if s == "Z":
        return INTEGERS
    if s.startswith("R[") and s.endswith("]"):
        lo_s, hi_s = s[2:-1].split(",")
        hi = math.inf if hi_s.strip() in ("inf", "+inf") else float(hi_s)
        return RealInterval(lo=float(lo_s), hi=hi)
    if s.startswith("hZ(") and s.endswith(")"):
        inner = s[3:-1].split(";")
        origin = float(inner[1]) if len(inner) > 1 else 0.0
        return UniformLattice(h=float(inner[0]), origin=origin)
    if s.startswith("qZ(") and s.endswith(")"):
        return QLattice(q=float(s[3:-1]))
    if s.startswith("set[") and s.endswith("]"):
        pts = tuple(float(p) for p in s[4:-1].split(","))
        return FiniteSet(points=pts)
    raise ValueError(f"unrecognized scale literal: {text!r}")
