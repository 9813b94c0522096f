"""Adaptive composite Gauss-Legendre quadrature for the dense-scale paths.

The integrator bisects the worst panel until the summed error estimate drops
below a relative tolerance.  Panels spanning many decades on the positive
axis split at the geometric mean instead of the midpoint, so power-law tails
over windows like [1, 1e300] resolve in O(decades) panels rather than
O(width).  The panel layout of a converged run can be replayed on a second
integrand, which pins two algebraically-identical formulas to the exact same
nodes (used by the reduction checker).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .errors import QuadratureNonConvergence

_NODES_15, _WEIGHTS_15 = np.polynomial.legendre.leggauss(15)
_NODES_7, _WEIGHTS_7 = np.polynomial.legendre.leggauss(7)

MAX_PANELS = 1 << 20
DEFAULT_RTOL = 1e-9


def gauss15(f, lo: float, hi: float) -> float:
    """15-node Gauss-Legendre estimate on one panel."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    return half * float(np.dot(_WEIGHTS_15, f(mid + half * _NODES_15)))


def _gauss7(f, lo: float, hi: float) -> float:
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    return half * float(np.dot(_WEIGHTS_7, f(mid + half * _NODES_7)))


def _split_point(lo: float, hi: float) -> float:
    if lo > 0 and hi / lo > 64.0:
        return float(np.sqrt(lo) * np.sqrt(hi))
    return 0.5 * (lo + hi)


def _initial_edges(a: float, b: float) -> list[tuple[float, float]]:
    """Geometric pre-split of [a, b]: at most two decades per starting panel."""
    if a < 0.0 or b <= 0.0:
        return [(a, b)]
    edges = [a]
    lo = a if a > 0.0 else min(1.0, b)
    if a == 0.0 and lo < b:
        edges.append(lo)
    while lo * 100.0 < b:
        lo *= 100.0
        edges.append(lo)
    edges.append(b)
    return [(edges[i], edges[i + 1]) for i in range(len(edges) - 1)]


@dataclass
class IntegralValue:
    value: float
    abs_error_estimate: float


def integrate(f, a: float, b: float, rtol: float = DEFAULT_RTOL,
              max_panels: int = MAX_PANELS) -> tuple[IntegralValue, list[tuple[float, float]]]:
    """Integrate f over [a, b]; returns the value with an error estimate plus
    the converged panel layout.

    The per-panel error is |GL15 - GL7|; refinement stops once the total
    estimate is below rtol * |integral| (or an absolute floor for integrals
    near zero).  Raises QuadratureNonConvergence past the panel budget, with
    the best estimate attached.
    """
    if a == b:
        return IntegralValue(0.0, 0.0), []
    if a > b:
        raise ValueError("integrate needs a <= b")

    def panel(lo, hi):
        v15 = gauss15(f, lo, hi)
        err = abs(v15 - _gauss7(f, lo, hi))
        return (-err, lo, hi, v15)

    # Wide windows start from a geometric decomposition: a lone panel over
    # many decades samples no nodes near the left end, so its error estimate
    # is blind to mass concentrated there.
    heap = [panel(lo, hi) for lo, hi in _initial_edges(a, b)]
    heapq.heapify(heap)
    total = float(np.sum(np.sort(np.array([p[3] for p in heap]))))
    total_err = float(sum(-p[0] for p in heap))
    n_panels = len(heap)
    while True:
        if not np.isfinite(total):
            raise QuadratureNonConvergence(
                "integrand is not finite on the window", total, total_err)
        if total_err <= rtol * max(abs(total), 1e-300) or total_err <= 1e-305:
            value = float(np.sum(np.sort(np.array([p[3] for p in heap]))))
            panels = sorted((p[1], p[2]) for p in heap)
            return IntegralValue(value, total_err), panels
        if n_panels >= max_panels:
            raise QuadratureNonConvergence(
                f"panel budget {max_panels} exhausted (error {total_err:.3e})",
                total, total_err)
        neg_err, lo, hi, val = heapq.heappop(heap)
        mid = _split_point(lo, hi)
        if mid <= lo or mid >= hi:
            # panel is at float resolution; keep its value, stop counting its error
            heapq.heappush(heap, (-0.0, lo, hi, val))
            total_err -= -neg_err
            continue
        left, right = panel(lo, mid), panel(mid, hi)
        heapq.heappush(heap, left)
        heapq.heappush(heap, right)
        total += left[3] + right[3] - val
        total_err += (-left[0]) + (-right[0]) - (-neg_err)
        n_panels += 1


def integrate_on_panels(f, panels: list[tuple[float, float]]) -> float:
    """Replay a converged panel layout on another integrand (same nodes)."""
    return float(np.sum(np.sort(np.array([gauss15(f, lo, hi) for lo, hi in panels]))))


class DensePrefix:
    """Prefix integral table: F(x) = integral of f over [a, x], a <= x <= b.

    Construction integrates once over the whole window and stores cumulative
    values at the converged panel edges; queries add a single Gauss panel for
    the remainder past the nearest edge.  Queries accept numpy arrays.
    """

    def __init__(self, f, a: float, b: float, rtol: float = DEFAULT_RTOL):
        self.f = f
        self.a = a
        self.b = b
        if a == b:
            self.edges = np.array([a, b])
            self.prefix = np.array([0.0, 0.0])
            self.total = 0.0
            return
        result, panels = integrate(f, a, b, rtol=rtol)
        edges = [panels[0][0]] + [hi for _, hi in panels]
        vals = np.array([gauss15(f, lo, hi) for lo, hi in panels])
        self.edges = np.asarray(edges)
        self.prefix = np.concatenate([[0.0], np.cumsum(vals)])
        self.total = float(self.prefix[-1])

    def __call__(self, x):
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        idx = np.clip(np.searchsorted(self.edges, xs, side="right") - 1, 0,
                      self.edges.size - 2)
        lo = self.edges[idx]
        base = self.prefix[idx]
        half = 0.5 * (xs - lo)
        mid = 0.5 * (xs + lo)
        nodes = mid[:, None] + half[:, None] * _NODES_15[None, :]
        vals = self.f(nodes.ravel()).reshape(nodes.shape)
        rem = half * (vals @ _WEIGHTS_15)
        out = base + rem
        return float(out[0]) if np.isscalar(x) or np.asarray(x).ndim == 0 else out

    def suffix(self, x):
        """Integral of f over [x, b] (complement of the prefix)."""
        return self.total - self(x)
