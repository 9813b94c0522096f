"""Evaluation engine: turn a catalogue entry plus a case into a report.

Both sides are computed over the window [a, horizon) from shared cumulative
tables.  Unless the case is intrinsically finite (explicit point set or
sampled-table roles), the truncation sensitivity |value(2*horizon) -
value(horizon)| is recomputed for each side and reported; a `violated`
verdict additionally requires both sensitivities below 1% of their sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import catalogue
from . import scales as sc
from .context import DenseContext, HypothesisSet, scattered_context
from .errors import TsineqError
from .functions import EvaluationError
from .hypotheses import ConditionReport, all_passed, check_hypotheses
from .numutil import alpha_weight
from .quadrature import integrate, integrate_on_panels

REL_TOL = 1e-9
SENSITIVITY_FRACTION = 0.01

VERIFIED = "verified"
VIOLATED = "violated"
HYP_UNMET = "hypotheses-unmet"
INCONCLUSIVE = "numerically-inconclusive"


@dataclass
class VerificationReport:
    case_id: str
    theorem_id: str
    lhs: float = math.nan
    rhs: float = math.nan
    ratio: float = math.nan
    constant_value: float = math.nan
    hypothesis_reports: list[ConditionReport] = field(default_factory=list)
    hypotheses_ok: bool = False
    lhs_sensitivity: float = math.nan
    rhs_sensitivity: float = math.nan
    verdict: str = INCONCLUSIVE
    footnotes: list[str] = field(default_factory=list)
    panel_plan: dict | None = None

    def summary(self) -> str:
        return (f"{self.case_id or self.theorem_id}: lhs={self.lhs:.6g} "
                f"rhs={self.rhs:.6g} ratio={self.ratio:.6g} verdict={self.verdict}")


def _resolve(spec_or_id) -> catalogue.TheoremSpec:
    if isinstance(spec_or_id, catalogue.TheoremSpec):
        return spec_or_id
    return catalogue.get(spec_or_id)


def _prepare(spec: catalogue.TheoremSpec, case: HypothesisSet) -> HypothesisSet:
    for name in spec.required_roles:
        if name not in case.roles:
            raise EvaluationError(f"{spec.id} needs role {name!r}")
    if spec.r_defaults_to_g and "r" not in case.roles and "g" in case.roles:
        case = replace(case, roles={**case.roles, "r": case.roles["g"]})
    return case


def compute_sides(spec: catalogue.TheoremSpec, case: HypothesisSet, horizon: float,
                  rtol: float = REL_TOL, panel_plan: dict | None = None):
    """LHS and constant-weighted RHS of the entry on [a, horizon)."""
    constant = spec.constant(case)
    if sc.is_dense(case.scale):
        dctx = DenseContext(case, horizon, rtol=max(rtol * 1e-2, 1e-13))
        al = case.alpha

        def lhs_f(x):
            return spec.terms(dctx(x), case)[0] * alpha_weight(x, al)

        def rhs_f(x):
            return spec.terms(dctx(x), case)[1] * alpha_weight(x, al)

        if panel_plan is not None:
            lhs = integrate_on_panels(lhs_f, panel_plan["lhs"])
            rhs_int = integrate_on_panels(rhs_f, panel_plan["rhs"])
            plan = panel_plan
        else:
            lv, lpan = integrate(lhs_f, case.a, horizon, rtol=rtol)
            rv, rpan = integrate(rhs_f, case.a, horizon, rtol=rtol)
            lhs, rhs_int = lv.value, rv.value
            plan = {"lhs": lpan, "rhs": rpan}
        return lhs, constant * rhs_int, plan
    ctx = scattered_context(case, horizon)
    L, R = spec.terms(ctx.env, case)
    with np.errstate(invalid="ignore"):
        lhs = float(np.sum(L * ctx.wts))
        rhs = constant * float(np.sum(R * ctx.wts))
    return lhs, rhs, None


def _ratio(lhs: float, rhs: float) -> float:
    if math.isnan(lhs) or math.isnan(rhs):
        return math.nan
    if rhs == 0.0:
        return 0.0 if lhs == 0.0 else math.inf
    if math.isinf(rhs):
        return 0.0 if math.isfinite(lhs) else math.nan
    return lhs / rhs

def _holds(direction: str, lhs: float, rhs: float) -> bool:
    if math.isnan(lhs) or math.isnan(rhs):
        return False
    if direction == catalogue.LE:
        return lhs <= rhs * (1.0 + REL_TOL) or math.isinf(rhs)
    return lhs >= rhs * (1.0 - REL_TOL)


def _sens_ok(side: float, sens: float) -> bool:
    if math.isnan(sens):
        return False
    return sens <= SENSITIVITY_FRACTION * abs(side) + 1e-300


def _growth_footnote(spec, case, horizon) -> list[str]:
    """The divergence assumption on the g-prefix is unverifiable under
    truncation; flag windows where the prefix has visibly saturated."""
    if spec.id not in ("thm1", "thm2", "cor1.1", "eldeeb-eqq1") or \
            sc.is_dense(case.scale) or case.is_finite_case():
        return []
    try:
        ctx = scattered_context(case, horizon)
        G = np.concatenate([[0.0], np.cumsum(ctx.env.g * ctx.wts)])
        half = sc.nearest_member_at_or_above(case.scale, case.a + 0.5 * (horizon - case.a))
        i = int(np.searchsorted(ctx.grid, half))
        if 0 < i < G.size and G[i] > 0 and G[-1] < 1.2 * G[i]:
            return ["g-prefix grew less than 20% over the second half of the window; "
                    "its divergence hypothesis cannot be checked under truncation"]
    except TsineqError:
        pass
    return []


def evaluate(spec_or_id, case: HypothesisSet, rtol: float = REL_TOL,
             check: bool = True, with_sensitivity: bool = True,
             panel_plan: dict | None = None) -> VerificationReport:
    """Check hypotheses, compute both sides (with truncation sensitivities)
    and classify the case as verified / violated / hypotheses-unmet /
    numerically-inconclusive."""
    spec = _resolve(spec_or_id)
    report = VerificationReport(case_id=case.case_id, theorem_id=spec.id)
    try:
        case = _prepare(spec, case)
    except EvaluationError as exc:
        report.footnotes.append(str(exc))
        return report

    if check:
        try:
            report.hypothesis_reports = check_hypotheses(case, spec)
        except TsineqError as exc:
            report.footnotes.append(f"hypothesis check failed: {exc}")
            return report
        report.hypotheses_ok = all_passed(report.hypothesis_reports)
    else:
        report.hypotheses_ok = True
    if not report.hypotheses_ok and not case.force:
        report.verdict = HYP_UNMET
        return report

    try:
        report.constant_value = spec.constant(case)
        lhs, rhs, plan = compute_sides(spec, case, case.horizon, rtol=rtol,
                                       panel_plan=panel_plan)
        report.lhs, report.rhs, report.panel_plan = lhs, rhs, plan
        report.ratio = _ratio(lhs, rhs)
        if math.isinf(rhs):
            report.footnotes.append("rhs diverges on this window (zero denominator "
                                    "at a window endpoint); the bound holds trivially")
    except TsineqError as exc:
        report.verdict = INCONCLUSIVE
        report.footnotes.append(f"evaluation error: {exc}")
        return report

    if with_sensitivity and not case.is_finite_case():
        try:
            h2 = sc.nearest_member_at_or_above(case.scale, 2.0 * case.horizon)
            if h2 > case.horizon:
                lhs2, rhs2, _ = compute_sides(spec, case, h2, rtol=rtol)
                report.lhs_sensitivity = _diff_or_zero(lhs2, report.lhs)
                report.rhs_sensitivity = _diff_or_zero(rhs2, report.rhs)
            else:
                report.lhs_sensitivity = report.rhs_sensitivity = 0.0
                report.footnotes.append("horizon already at the scale maximum")
        except TsineqError as exc:
            report.verdict = INCONCLUSIVE
            report.footnotes.append(f"sensitivity pass failed: {exc}")
            return report
    else:
        report.lhs_sensitivity = report.rhs_sensitivity = 0.0

    report.footnotes.extend(_growth_footnote(spec, case, case.horizon))
    report.footnotes.extend(spec.footnotes(case))

    holds = _holds(spec.direction, report.lhs, report.rhs)
    sens_ok = (_sens_ok(report.lhs, report.lhs_sensitivity)
               and _sens_ok(report.rhs, report.rhs_sensitivity))
    if math.isnan(report.lhs) or math.isnan(report.rhs):
        report.verdict = INCONCLUSIVE
    elif not report.hypotheses_ok:
        report.verdict = HYP_UNMET
    elif holds:
        # The registered LE statements hold verbatim under truncation, so a
        # satisfied instance is verified regardless of tail size; reversed
        # (GE) entries are only sound in the limit, so an unstable window
        # stays inconclusive.
        if spec.direction == catalogue.GE and not sens_ok:
            report.verdict = INCONCLUSIVE
        else:
            report.verdict = VERIFIED
    else:
        report.verdict = VIOLATED if sens_ok else INCONCLUSIVE
    return report


def _diff_or_zero(value2: float, value1: float) -> float:
    if math.isinf(value1) and math.isinf(value2):
        return 0.0
    return abs(value2 - value1)
