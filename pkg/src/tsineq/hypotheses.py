"""Hypothesis checking for catalogue entries.

Ratio conditions are verified in cross-multiplied form (no divisions), at
every scattered point of the window and at 256 interior samples per dense
segment.  Each condition reports its worst signed margin, normalized per
point by max(1, |lhs|, |rhs|); a condition passes when the worst margin is
no smaller than -1e-7 (room for finite-difference noise at equality-tight
cases).  Strict parameter inequalities carry a 1e-9 margin so the constants
stay bounded.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import scales as sc
from .context import DenseContext, HypothesisSet, scattered_context
from .errors import TsineqError
from .numutil import alpha_weight

STRICT_MARGIN = 1e-9
POINTWISE_TOL = 1e-7
DENSE_SAMPLES = 256


@dataclass
class ConditionReport:
    condition: str
    margin: float
    passed: bool
    detail: str = ""


def _report(cond: str, margin: float, detail: str = "",
            tol: float = POINTWISE_TOL) -> ConditionReport:
    return ConditionReport(cond, float(margin), bool(margin >= -tol), detail)


def _worst(lhs: np.ndarray, rhs: np.ndarray, sense: str) -> float:
    """Worst normalized margin of lhs <= rhs (sense 'le') or lhs >= rhs ('ge')."""
    lhs = np.atleast_1d(np.asarray(lhs, dtype=float))
    rhs = np.atleast_1d(np.asarray(rhs, dtype=float))
    norm = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
    slack = (rhs - lhs) if sense == "le" else (lhs - rhs)
    if np.any(np.isnan(slack)):
        return -np.inf
    return float(np.min(slack / norm))


class _Grid:
    """Role values, conformable derivatives and cumulatives on a check grid."""

    def __init__(self, case: HypothesisSet, horizon: float):
        self.case = case
        if sc.is_dense(case.scale):
            ctx = DenseContext(case, horizon)
            t = np.linspace(case.a, horizon, DENSE_SAMPLES + 2)[1:-1]
            self.env = ctx(t)
            self.t = t
            self._dense = True
        else:
            ctx = scattered_context(case, horizon)
            self.env = ctx.env
            self.t = ctx.pts
            self._ctx = ctx
            self._dense = False
        self._deriv_cache: dict[str, np.ndarray] = {}

    def _dense_deriv(self, name: str, t: np.ndarray) -> np.ndarray:
        fn = self.case.role(name)
        d = fn.derivative_expression()
        if d is not None:
            return np.asarray(d(t), dtype=float)
        h = np.cbrt(np.finfo(float).eps) * np.maximum(1.0, np.abs(t))
        return (fn(t + h) - fn(t - h)) / (2.0 * h)

    def conf_deriv(self, name: str) -> np.ndarray:
        """T_alpha^Delta of a role on the grid."""
        if name in self._deriv_cache:
            return self._deriv_cache[name]
        if self._dense:
            out = self._dense_deriv(name, self.t) * alpha_weight(self.t,
                                                                 2.0 - self.case.alpha)
        else:
            ctx = self._ctx
            vals = self.case.role(name)(ctx.grid)
            out = (vals[1:] - vals[:-1]) / ctx.mu * ctx.dmeas
        self._deriv_cache[name] = out
        return out


def _check_condition(cond: str, case: HypothesisSet, grid: _Grid | None,
                     spec) -> ConditionReport:
    p, al, ga, th, be = case.p, case.alpha, case.gamma, case.theta, case.beta
    if cond == "S1-basic":
        margin = min(p - 1.0, case.a, al - 0.0, 1.0 - al)
        return _report(cond, margin, "p >= 1, a >= 0, alpha in (0, 1]", tol=1e-12)
    if cond == "S3-nonneg-params":
        return _report(cond, min(th, be), "theta, beta >= 0", tol=1e-12)
    if cond == "S4-gamma":
        return _report(cond, ga - th - 1.0 - STRICT_MARGIN, "gamma > theta + 1", tol=0.0)
    if cond == "S5-gamma":
        return _report(cond, min(ga, al - ga - STRICT_MARGIN), "0 <= gamma < alpha", tol=0.0)
    if cond == "denom-S4":
        return _report(cond, ga - th - al - STRICT_MARGIN, "gamma - theta - alpha > 0",
                       tol=0.0)
    if cond == "denom-S5":
        return _report(cond, al - ga + th - STRICT_MARGIN, "alpha - gamma + theta > 0",
                       tol=0.0)
    if cond == "fixed-alpha-1":
        return _report(cond, -abs(al - 1.0), "entry is stated at alpha = 1", tol=0.0)
    if cond == "p-gt-1":
        return _report(cond, p - 1.0 - STRICT_MARGIN, "p > 1", tol=0.0)
    if cond == "p-ge-1":
        return _report(cond, p - 1.0, "p >= 1", tol=1e-12)
    if cond == "gamma-gt-1":
        return _report(cond, ga - 1.0 - STRICT_MARGIN, "gamma > 1", tol=0.0)
    if cond == "gamma-lt-1":
        return _report(cond, min(ga, 1.0 - ga - STRICT_MARGIN), "0 <= gamma < 1", tol=0.0)
    if cond == "gamma-pos-lt-1":
        return _report(cond, min(ga - STRICT_MARGIN, 1.0 - ga - STRICT_MARGIN),
                       "0 < gamma < 1", tol=0.0)
    if cond == "gamma-le-p":
        return _report(cond, p - ga, "gamma <= p", tol=1e-12)
    if cond == "a-positive":
        return _report(cond, case.a - STRICT_MARGIN, "a > 0", tol=0.0)
    if cond.startswith("scale-"):
        fam = cond.split("-", 1)[1]
        ok = {
            "R": isinstance(case.scale, sc.RealInterval),
            "Z": isinstance(case.scale, sc.UniformLattice) and case.scale.h == 1.0,
            "hZ": isinstance(case.scale, sc.UniformLattice),
            "qZ": isinstance(case.scale, sc.QLattice),
        }[fam]
        return _report(cond, 0.0 if ok else -1.0,
                       f"scale family must be {fam}, got {case.scale_name()}")

    # grid-based conditions from here on
    env = grid.env
    if cond == "S2-nonneg":
        present = [n for n in ("f", "g", "k", "r", "w", "v") if n in case.roles]
        if not present:
            return _report(cond, 0.0, "no explicit roles")
        mins = [float(np.min(getattr(env, n))) for n in present]
        mins += [float(np.min(getattr(env, n + "sig"))) for n in present
                 if hasattr(env, n + "sig")]
        return _report(cond, min(mins) / 1.0, "roles nonnegative on the window",
                       tol=1e-12)
    if cond == "S2-k-monotone":
        if "k" not in case.roles:
            return _report(cond, 0.0, "k defaults to 1")
        return _report(cond, _worst(0.0 * env.t, grid.conf_deriv("k"), "le"),
                       "T_alpha k >= 0")
    if cond == "f-nonincreasing":
        return _report(cond, _worst(env.fsig, env.f, "le"), "f(sigma(t)) <= f(t)")
    if cond == "S16-unit-roles":
        dev = 0.0
        for n in ("k", "v", "w"):
            if n in case.roles:
                dev = max(dev, float(np.max(np.abs(getattr(env, n) - 1.0))))
        return _report(cond, -dev, "k = v = w = 1", tol=1e-12)
    if cond == "S17-r-equals-g":
        dev = float(np.max(np.abs(env.r - env.g))) if ("r" in case.roles or
                                                       "g" in case.roles) else 0.0
        return _report(cond, -dev, "r = g", tol=1e-12)
    if cond == "S19-zero-theta-beta":
        return _report(cond, -max(abs(th), abs(be)), "theta = beta = 0", tol=1e-12)

    dW = grid.conf_deriv("w") if "w" in case.roles else np.zeros_like(env.t)
    dV = grid.conf_deriv("v") if "v" in case.roles else np.zeros_like(env.t)
    rf = env.r * env.f
    if cond == "S10":
        return _report(cond, _worst(dW * env.Gsig, th * env.g * env.w, "le"),
                       "growth of w against G")
    if cond == "S11":
        return _report(cond, _worst(dW * env.Hsig, -th * env.g * env.w, "le"),
                       "decay of w against H")
    if cond == "S12":
        return _report(cond, _worst(dW * env.G, th * env.g * env.wsig, "ge"),
                       "growth of w against G (reversed)")
    if cond == "S13":
        return _report(cond, _worst(dW * env.H, -th * env.g * env.wsig, "ge"),
                       "decay of w against H (reversed)")
    if cond == "S14":
        return _report(cond, _worst(dV * env.K, be * rf * env.vsig, "le"),
                       "growth of v against K")
    if cond == "S15":
        return _report(cond, _worst(dV * env.Fsig, -be * rf * env.v, "ge"),
                       "decay of v against F (reversed)")
    raise TsineqError(f"unknown hypothesis condition {cond!r}")


def check_hypotheses(case: HypothesisSet, spec) -> list[ConditionReport]:
    """Evaluate every hypothesis condition of a catalogue entry on the case."""
    grid = None
    reports = []
    needs_grid = any(c in ("S2-nonneg", "S2-k-monotone", "f-nonincreasing",
                           "S10", "S11", "S12", "S13", "S14", "S15",
                           "S16-unit-roles", "S17-r-equals-g")
                     for c in spec.conditions)
    if needs_grid:
        try:
            grid = _Grid(case, case.horizon)
        except TsineqError as exc:
            return [ConditionReport("grid", -np.inf, False, f"window error: {exc}")]
    for cond in spec.conditions:
        reports.append(_check_condition(cond, case, grid, spec))
    return reports


def all_passed(reports: list[ConditionReport]) -> bool:
    return all(r.passed for r in reports)
