"""Empirical tightness probes: maximize the LHS/RHS ratio over a family.

The probe reports the fraction of the theoretical constant a family attains;
it never asserts sharpness.  For slowly-decaying families on a real interval
the two sides converge like a small power of the horizon, so the ratio is
re-evaluated on a geometrically escalated horizon until it stabilizes (the
escalation trace is part of the result, nothing is silently extrapolated).
Scattered scales evaluate at the case horizon as-is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import scales as sc
from .catalogue import TheoremSpec, get
from .context import HypothesisSet
from .errors import AllDegenerate, TsineqError, ZeroDenominator
from .evaluate import evaluate
from .expressions import evaluate as eval_expr
from .expressions import parse_expression
from .functions import ScaleFunction

HORIZON_CAP = 1e150
STABLE_RTOL = 1e-4
PROBE_RTOL = 1e-6
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ParamFamily:
    """One-parameter expression family; the template mentions t and lam."""

    template: str
    lam_lo: float
    lam_hi: float
    description: str = ""

    def bind(self, lam: float) -> ScaleFunction:
        ast = parse_expression(self.template)
        return ScaleFunction.from_callable(
            lambda x, _l=float(lam): np.asarray(eval_expr(ast, x, _l), dtype=float),
            name=f"{self.template} @ lam={lam:g}")


@dataclass
class RatioResult:
    value: float
    lhs: float
    rhs: float
    horizon: float
    escalations: int


@dataclass
class ProbeTrace:
    rows: list[tuple[float, float, float, float]] = field(default_factory=list)

    def add(self, lam: float, res: RatioResult):
        self.rows.append((lam, res.lhs, res.rhs, res.value))

    def to_csv(self) -> str:
        lines = ["lambda,lhs,rhs,ratio"]
        for lam, lhs, rhs, r in self.rows:
            lines.append(f"{lam!r},{lhs!r},{rhs!r},{r!r}")
        return "\n".join(lines) + "\n"


def _one_ratio(spec: TheoremSpec, case: HypothesisSet, horizon: float) -> tuple[float, float]:
    rep = evaluate(spec, replace(case, horizon=horizon), check=False,
                   with_sensitivity=False, rtol=PROBE_RTOL)
    if math.isnan(rep.lhs) or math.isnan(rep.rhs):
        raise TsineqError(f"probe case did not evaluate: {rep.footnotes}")
    if rep.rhs == 0.0:
        raise ZeroDenominator("probe ratio undefined: rhs = 0")
    return rep.lhs, rep.rhs


def ratio(spec_or_id, case: HypothesisSet, continue_horizon: bool = True) -> RatioResult:
    """LHS/RHS of a bound for one case; on dense scales the horizon escalates
    geometrically until the ratio stabilizes or the float range is exhausted."""
    spec = get(spec_or_id) if isinstance(spec_or_id, str) else spec_or_id
    horizon = case.horizon
    lhs, rhs = _one_ratio(spec, case, horizon)
    value = lhs / rhs
    escal = 0
    if continue_horizon and sc.is_dense(case.scale) and not math.isfinite(case.scale.hi):
        while horizon < HORIZON_CAP:
            log_next = 5.0 * math.log10(horizon) if horizon > 1.5 else math.log10(horizon) + 6.0
            nxt = min(HORIZON_CAP, 10.0 ** min(log_next, math.log10(HORIZON_CAP)))
            lhs2, rhs2 = _one_ratio(spec, case, nxt)
            value2 = lhs2 / rhs2
            escal += 1
            stable = abs(value2 - value) <= STABLE_RTOL * max(1.0, abs(value2))
            horizon, lhs, rhs, value = nxt, lhs2, rhs2, value2
            if stable:
                break
    return RatioResult(value=value, lhs=lhs, rhs=rhs, horizon=horizon,
                       escalations=escal)


def maximize(spec_or_id, family: ParamFamily, case_template: HypothesisSet,
             role: str = "f", grid_points: int = 33,
             rel_tol: float = 1e-4) -> tuple[float, float, ProbeTrace]:
    """Coarse grid then golden-section refinement of the ratio over lambda.

    Returns (best lambda, best ratio, trace of every evaluated pair).  The
    grid guards against multimodality; golden-section assumes the objective
    is unimodal around the best grid point.  Raises AllDegenerate when no
    grid point evaluates.
    """
    spec = get(spec_or_id) if isinstance(spec_or_id, str) else spec_or_id
    trace = ProbeTrace()
    cache: dict[float, float] = {}

    def probe(lam: float) -> float:
        lam = float(lam)
        if lam in cache:
            return cache[lam]
        try:
            case = replace(case_template,
                           roles={**case_template.roles, role: family.bind(lam)})
            res = ratio(spec, case)
            trace.add(lam, res)
            cache[lam] = res.value
        except TsineqError:
            cache[lam] = -math.inf
        return cache[lam]

    grid = np.linspace(family.lam_lo, family.lam_hi, grid_points)
    values = [probe(l) for l in grid]
    if all(v == -math.inf for v in values):
        raise AllDegenerate("every lambda grid point failed to evaluate")
    best = int(np.argmax(values))
    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, grid_points - 1)]

    width_goal = rel_tol * (family.lam_hi - family.lam_lo)
    a, b = float(lo), float(hi)
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = probe(c), probe(d)
    while (b - a) > width_goal:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = probe(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = probe(d)
    candidates = [(v, l) for l, v in cache.items() if v > -math.inf]
    best_value, best_lam = max(candidates)
    return best_lam, best_value, trace
