"""Registered alpha = 1 reductions of the conformable bounds.

Each pair states which classical/time-scale entry the general bound becomes
at alpha = 1, under which specialization switches (unit roles, r = g, zero
theta/beta, gamma = p) and on which scale families the printed target is the
*same formula*, not merely the same inequality.  reduction_check evaluates
the general entry and its target on identical inputs and returns the larger
of the two sides' relative discrepancies.  On real intervals the target is
integrated on the panel layout the general side converged to, so the check
isolates formula identity from quadrature placement.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from . import scales as sc
from .context import HypothesisSet
from .errors import TsineqError
from .evaluate import evaluate
from .functions import ScaleFunction
from .generators import _decay_expr, _fmt, _scale_window
from .numutil import rel_diff


@dataclass(frozen=True)
class ReductionPair:
    general_id: str
    target_id: str
    note: str
    families: tuple[str, ...]
    generate: Callable[[np.random.Generator, str], HypothesisSet]


def _base_window(rng, family):
    if family == "R":
        a = float(rng.choice([0.0, 1.0]))
        return sc.RealInterval(a, 1e9), a, a + float(rng.integers(20, 60))
    return _scale_window(rng, family)


def _pos_dense_expr(rng) -> str:
    kind = rng.choice(["rat", "geo", "poly"])
    if kind == "rat":
        return f"{_fmt(rng.uniform(0.3, 2.0))}/(1 + t^2)"
    if kind == "geo":
        return f"{_fmt(rng.uniform(0.5, 1.5))}*2^(-t)"
    return f"{_fmt(rng.uniform(0.2, 1.0))}*t/(1 + t^3)"


def _pos_weight_dense(rng) -> str:
    return str(rng.choice(["1", "1/(1 + t)", "0.1 + 2^(-t)"]))


def _gen_pair_case(rng, family, *, gamma_range, gamma_equals_p=False,
                   unit_roles=True, zero_at_anchor=False, general_id="",
                   case_id="red") -> HypothesisSet:
    scale, a, horizon = _base_window(rng, family)
    p = float(np.round(rng.uniform(1.2, 3.0), 4))
    gamma = p if gamma_equals_p else float(np.round(rng.uniform(*gamma_range), 4))
    dense = family == "R"
    fsrc = _pos_dense_expr(rng) if dense else _decay_expr(rng, a, zero_at_anchor)
    gsrc = _pos_weight_dense(rng) if dense else str(rng.choice(
        ["1", f"t^(-{_fmt(rng.uniform(0.2, 0.8))})", "1/(1 + t)"]))
    if dense and zero_at_anchor:
        fsrc = f"max(0, t - {a!r}) * ({fsrc})"
    g = ScaleFunction.from_expression(gsrc, name="g")
    roles = {"f": ScaleFunction.from_expression(fsrc, name="f"), "g": g, "r": g}
    theta = beta = 0.0
    if not unit_roles:
        # thm1 -> eqq1 is exact for arbitrary admissible roles; exercise a few
        roles["k"] = ScaleFunction.from_expression("1 - 2^(-t)")
        roles["v"] = ScaleFunction.from_expression(f"t^(-{_fmt(rng.uniform(0.1, 0.4))})")
        roles["w"] = ScaleFunction.from_expression(f"{_fmt(rng.uniform(0.5, 2.0))}")
    return HypothesisSet(scale=scale, a=a, horizon=horizon, alpha=1.0, p=p,
                         gamma=gamma, theta=theta, beta=beta, roles=roles,
                         case_id=case_id)


def _gen_thm1_eqq1(rng, case_id):
    fam = str(rng.choice(["Z", "hZ", "qZ", "finite"]))
    return _gen_pair_case(rng, fam, gamma_range=(2.2, 3.5), unit_roles=bool(rng.random() < 0.5),
                          zero_at_anchor=True, case_id=case_id)


def _gen_saker2(rng, case_id):
    fam = str(rng.choice(["Z", "hZ", "qZ"]))
    return _gen_pair_case(rng, fam, gamma_range=(0.0, 0.85), case_id=case_id)


def _gen_saker3(rng, case_id):
    fam = str(rng.choice(["Z", "hZ", "qZ"]))
    return _gen_pair_case(rng, fam, gamma_range=(0.0, 0.85), case_id=case_id)


def _gen_saker4(rng, case_id):
    return _gen_pair_case(rng, "R", gamma_range=(1.2, 2.0), gamma_equals_p=False,
                          case_id=case_id)


def _gen_saker1(rng, case_id):
    fam = str(rng.choice(["Z", "hZ", "qZ"]))
    return _gen_pair_case(rng, fam, gamma_range=(0, 0), gamma_equals_p=True,
                          zero_at_anchor=True, case_id=case_id)


def _gen_h21(rng, case_id):
    return _gen_pair_case(rng, "Z", gamma_range=(0.0, 0.85), case_id=case_id)


def _gen_h30(rng, case_id):
    return _gen_pair_case(rng, "Z", gamma_range=(0.0, 0.85), case_id=case_id)


def _gen_h24(rng, case_id):
    case = _gen_pair_case(rng, "R", gamma_range=(1.2, 2.0), case_id=case_id)
    return replace(case, a=0.0, scale=sc.RealInterval(0.0, 1e9),
                   gamma=min(case.gamma, case.p - 1e-3) if case.gamma > case.p
                   else case.gamma)


def _gen_a5(rng, case_id):
    case = _gen_pair_case(rng, "R", gamma_range=(1.2, 2.4), case_id=case_id)
    one = ScaleFunction.constant(1.0)
    return replace(case, a=0.0, scale=sc.RealInterval(0.0, 1e9),
                   roles={"f": case.roles["f"], "g": one, "r": one})


def _gen_a2(rng, case_id):
    case = _gen_a5(rng, case_id)
    return replace(case, gamma=case.p)


def _gen_h25(rng, case_id):
    case = _gen_pair_case(rng, "R", gamma_range=(0.05, 0.9), case_id=case_id)
    return replace(case, a=0.0, scale=sc.RealInterval(0.0, 1e9))


def _gen_a6(rng, case_id):
    case = _gen_h25(rng, case_id)
    one = ScaleFunction.constant(1.0)
    return replace(case, roles={"f": case.roles["f"], "g": one, "r": one})


PAIRS: tuple[ReductionPair, ...] = (
    ReductionPair("thm1", "eldeeb-eqq1",
                  "general roles, any scattered scale", ("Z", "hZ", "qZ", "finite"),
                  _gen_thm1_eqq1),
    ReductionPair("thm2", "saker2",
                  "unit k,v,w; r=g; zero theta,beta", ("Z", "hZ", "qZ"), _gen_saker2),
    ReductionPair("thm3", "saker3",
                  "unit k,v,w; r=g; zero theta,beta", ("Z", "hZ", "qZ"), _gen_saker3),
    ReductionPair("thm4", "saker4",
                  "unit k,v,w; r=g; zero theta,beta; dense scale (H = H-sigma "
                  "only there)", ("R",), _gen_saker4),
    ReductionPair("cor1.1", "saker1",
                  "gamma = p; the printed target regroups the prefix powers, "
                  "identical exactly at gamma = p", ("Z", "hZ", "qZ"), _gen_saker1),
    ReductionPair("thm2", "copson-h21",
                  "unit k,v,w; r=g; zero theta,beta; integer lattice", ("Z",), _gen_h21),
    ReductionPair("thm3", "leindler-h30",
                  "unit k,v,w; r=g; zero theta,beta; integer lattice", ("Z",), _gen_h30),
    ReductionPair("thm1", "copson-h24",
                  "unit k,v,w; r=g; zero theta,beta; dense scale from 0", ("R",),
                  _gen_h24),
    ReductionPair("thm1", "hl-a5",
                  "unit roles with r=g=1; dense scale from 0", ("R",), _gen_a5),
    ReductionPair("thm1", "hardy-continuous",
                  "unit roles, r=g=1, gamma=p; dense scale from 0", ("R",), _gen_a2),
    ReductionPair("thm2", "copson-h25",
                  "unit k,v,w; r=g; zero theta,beta; dense scale from 0", ("R",),
                  _gen_h25),
    ReductionPair("thm2", "hl-a6",
                  "unit roles with r=g=1; dense scale from 0", ("R",), _gen_a6),
)


def pairs_for(general_id: str) -> list[ReductionPair]:
    return [p for p in PAIRS if p.general_id == general_id]


def reduction_check(pair: ReductionPair, case: HypothesisSet) -> float:
    """Max relative discrepancy between the general bound and its alpha = 1
    target on one shared case."""
    if case.alpha != 1.0:
        raise TsineqError("reduction_check needs a case with alpha = 1 exactly")
    rep_g = evaluate(pair.general_id, case, check=False, with_sensitivity=False)
    rep_t = evaluate(pair.target_id, case, check=False, with_sensitivity=False,
                     panel_plan=rep_g.panel_plan)
    if any(np.isnan(x) for x in (rep_g.lhs, rep_g.rhs, rep_t.lhs, rep_t.rhs)):
        raise TsineqError(
            f"reduction pair {pair.general_id}->{pair.target_id} did not evaluate: "
            f"{rep_g.footnotes + rep_t.footnotes}")
    return max(rel_diff(rep_g.lhs, rep_t.lhs), rel_diff(rep_g.rhs, rep_t.rhs))
