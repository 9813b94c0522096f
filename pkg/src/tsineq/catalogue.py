"""Declarative registry of every verifiable inequality.

Each entry states its direction, hypothesis conditions, constant factor and
LHS/RHS integrand builders over the shared evaluation context.  The four
conformable Hardy-type bounds are the core; the scale-specialized variants
(corR.*, corH.*, corZ.*, corQ.*) are the same builders with the scale family
pinned, and the classical discrete/continuous entries serve as reduction
targets and standalone checks.

Two statement-vs-proof slips are resolved in favor of the proofs and kept
reachable through ``as_printed``: the second bound's LHS power of the
sigma-shifted prefix (printed with the sign of the exponent's last term
flipped) and the fourth bound's tail factor (printed with an extra 1/p on
the exponent).  ``as_printed`` evaluates the printed variants instead and
adds a footnote.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .context import Env, HypothesisSet
from .errors import UnknownTheorem
from .numutil import powz, ratio0

LE, GE = "LE", "GE"

_CORE = ("S1-basic", "S2-nonneg", "S2-k-monotone", "S3-nonneg-params")


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    direction: str
    description: str
    conditions: tuple[str, ...]
    required_roles: tuple[str, ...]
    constant: Callable[[HypothesisSet], float]
    terms: Callable[[Env, HypothesisSet], tuple[np.ndarray, np.ndarray]]
    oracle_base: str | None = None
    footnotes: Callable[[HypothesisSet], list[str]] = field(default=lambda case: [])
    # entries whose inner cumulative is built from the weight itself
    # (Copson/Saker style) read an omitted r role as r = g
    r_defaults_to_g: bool = False


_REGISTRY: dict[str, TheoremSpec] = {}


def register(spec: TheoremSpec) -> TheoremSpec:
    _REGISTRY[spec.id] = spec
    return spec


def get(theorem_id: str) -> TheoremSpec:
    try:
        return _REGISTRY[theorem_id]
    except KeyError:
        raise UnknownTheorem(f"no catalogue entry named {theorem_id!r}") from None


def all_ids() -> list[str]:
    return sorted(_REGISTRY)


# ---------------------------------------------------------------------------
# the four conformable bounds


def _thm1_terms(e: Env, case: HypothesisSet):
    al, p, ga = case.alpha, case.p, case.gamma
    lhs = ratio0(e.ksig * e.vsig * e.w * e.g * powz(e.Ksig, p - al + 1.0),
                 powz(e.Gsig, ga + 1.0 - al))
    rhs = ratio0(e.ksig * e.vsig * e.w * powz(e.r, p) * powz(e.f, p)
                 * powz(e.Gsig, (1.0 - al + ga) * (p - 1.0)) * powz(e.Ksig, 1.0 - al),
                 powz(e.g, p - 1.0) * powz(e.G, p * (ga - al)))
    return lhs, rhs


def _thm1_constant(case: HypothesisSet) -> float:
    return ((case.p + case.beta - case.alpha + 1.0)
            / (case.gamma - case.theta - case.alpha)) ** case.p


def _thm2_terms(e: Env, case: HypothesisSet):
    al, p, ga = case.alpha, case.p, case.gamma
    base = e.k * e.v * e.wsig
    if case.as_printed:
        lhs = base * e.g * powz(e.Gsig, al - ga + 1.0) * powz(e.F, p - al + 1.0)
    else:
        lhs = ratio0(base * e.g * powz(e.F, p - al + 1.0), powz(e.Gsig, ga + 1.0 - al))
    rhs = ratio0(base * powz(e.r, p) * powz(e.f, p)
                 * powz(e.Gsig, p - ga - al + 1.0) * powz(e.F, 1.0 - al),
                 powz(e.g, p - 1.0))
    return lhs, rhs


def _thm2_constant(case: HypothesisSet) -> float:
    return ((case.p + case.beta - case.alpha + 1.0)
            / (case.alpha - case.gamma + case.theta)) ** case.p


def _thm2_footnotes(case: HypothesisSet) -> list[str]:
    if case.as_printed:
        return ["as_printed: LHS uses the printed sigma-prefix exponent "
                "alpha-gamma+1; the proof derives alpha-gamma-1"]
    return []


def _thm3_terms(e: Env, case: HypothesisSet):
    al, p, ga = case.alpha, case.p, case.gamma
    base = e.ksig * e.vsig * e.w
    lhs = ratio0(base * e.g * powz(e.Ksig, p - al + 1.0), powz(e.H, ga + 1.0 - al))
    rhs = ratio0(base * powz(e.r, p) * powz(e.f, p)
                 * powz(e.H, p - ga + al - 1.0) * powz(e.Ksig, 1.0 - al),
                 powz(e.g, p - 1.0))
    return lhs, rhs


def _thm3_constant(case: HypothesisSet) -> float:
    return ((case.p - case.alpha + case.beta + 1.0)
            / (case.alpha - case.gamma + case.theta)) ** case.p


def _thm3_footnotes(case: HypothesisSet) -> list[str]:
    if case.as_printed:
        return ["as_printed: statement already matches the proof; one mid-proof "
                "display shows the tail exponent alpha-gamma+1, read as a typo"]
    return []


def _thm4_terms(e: Env, case: HypothesisSet):
    al, p, ga = case.alpha, case.p, case.gamma
    base = e.k * e.v * e.wsig
    lhs = ratio0(base * e.g * powz(e.F, p - al + 1.0), powz(e.H, ga + 1.0 - al))
    f_exp = (1.0 - al) / p if case.as_printed else 1.0 - al
    rhs = ratio0(base * powz(e.r, p) * powz(e.f, p)
                 * powz(e.H, (1.0 - al + ga) * (p - 1.0)) * powz(e.F, f_exp),
                 powz(e.g, p - 1.0) * powz(e.Hsig, p * (ga - al)))
    return lhs, rhs


def _thm4_constant(case: HypothesisSet) -> float:
    return ((case.p + case.beta - case.alpha + 1.0)
            / (case.gamma - case.theta - case.alpha)) ** case.p


def _thm4_footnotes(case: HypothesisSet) -> list[str]:
    if case.as_printed:
        return ["as_printed: RHS tail factor uses the printed exponent (1-alpha)/p; "
                "the proof's final display has 1-alpha"]
    return []


register(TheoremSpec(
    id="thm1", direction=LE,
    description="prefix-weight bound: sigma-composed K against the G prefix",
    conditions=_CORE + ("S4-gamma", "denom-S4", "S10", "S14"),
    required_roles=("f", "g"),
    constant=_thm1_constant, terms=_thm1_terms, oracle_base="thm1"))

register(TheoremSpec(
    id="thm2", direction=LE,
    description="tail bound: F against the G prefix",
    conditions=_CORE + ("S5-gamma", "denom-S5", "S12", "S15"),
    required_roles=("f", "g"),
    constant=_thm2_constant, terms=_thm2_terms, footnotes=_thm2_footnotes,
    oracle_base="thm2"))

register(TheoremSpec(
    id="thm3", direction=LE,
    description="prefix bound against the H tail",
    conditions=_CORE + ("S5-gamma", "denom-S5", "S11", "S14"),
    required_roles=("f", "g"),
    constant=_thm3_constant, terms=_thm3_terms, footnotes=_thm3_footnotes,
    oracle_base="thm3"))

register(TheoremSpec(
    id="thm4", direction=LE,
    description="tail bound against the H tail",
    conditions=_CORE + ("S4-gamma", "denom-S4", "S13", "S15"),
    required_roles=("f", "g"),
    constant=_thm4_constant, terms=_thm4_terms, footnotes=_thm4_footnotes,
    oracle_base="thm4"))


def _cor11_constant(case: HypothesisSet) -> float:
    return ((case.p - case.alpha + 1.0) / (case.gamma - case.alpha)) ** case.p


register(TheoremSpec(
    id="cor1.1", direction=LE, r_defaults_to_g=True,
    description="first bound specialized to unit k, v, w and r = g",
    conditions=_CORE + ("S4-gamma", "denom-S4", "S16-unit-roles", "S17-r-equals-g",
                        "S19-zero-theta-beta"),
    required_roles=("f", "g"),
    constant=_cor11_constant, terms=_thm1_terms, oracle_base="thm1"))


# scale-pinned variants: corR.n / corH.n / corZ.n / corQ.n
_BASES = {"1": ("thm1",), "2": ("thm2",), "3": ("thm3",), "4": ("thm4",)}
for _num, (_base_id,) in _BASES.items():
    for _letter, _fam in (("R", "R"), ("H", "hZ"), ("Z", "Z"), ("Q", "qZ")):
        _base = _REGISTRY[_base_id]
        register(TheoremSpec(
            id=f"cor{_letter}.{_num}", direction=_base.direction,
            description=f"{_base_id} on the {_fam} scale family",
            conditions=_base.conditions + (f"scale-{_fam}",),
            required_roles=_base.required_roles,
            constant=_base.constant, terms=_base.terms,
            footnotes=_base.footnotes, oracle_base=_base.oracle_base))


# ---------------------------------------------------------------------------
# alpha = 1 reduction targets and classical entries
#
# In the classical statements the weight exponent is a free parameter of its
# own; it is carried here in the case's gamma field.


def _const_hardy(case):
    return (case.p / (case.p - 1.0)) ** case.p


def _const_pow_gm1(case):
    return (case.p / (case.gamma - 1.0)) ** case.p


def _const_pow_1mg(case):
    return (case.p / (1.0 - case.gamma)) ** case.p


register(TheoremSpec(
    id="eldeeb-eqq1", direction=LE,
    description="general alpha = 1 predecessor of thm1",
    conditions=_CORE + ("fixed-alpha-1", "S4-gamma", "denom-S4", "S10", "S14"),
    required_roles=("f", "g"),
    constant=lambda case: ((case.p + case.beta)
                           / (case.gamma - case.theta - 1.0)) ** case.p,
    terms=lambda e, case: (
        ratio0(e.ksig * e.vsig * e.w * e.g * powz(e.Ksig, case.p),
               powz(e.Gsig, case.gamma)),
        ratio0(e.ksig * e.vsig * e.w * powz(e.r, case.p) * powz(e.f, case.p)
               * powz(e.Gsig, case.gamma * (case.p - 1.0)),
               powz(e.g, case.p - 1.0) * powz(e.G, case.p * (case.gamma - 1.0)))),
    oracle_base="thm1"))

register(TheoremSpec(
    id="saker1", direction=LE, r_defaults_to_g=True,
    description="Copson-type time-scale bound, prefix/prefix form",
    conditions=("S1-basic", "S2-nonneg", "fixed-alpha-1", "gamma-gt-1", "gamma-le-p"),
    required_roles=("f", "g"),
    constant=_const_pow_gm1,
    terms=lambda e, case: (
        ratio0(e.g * powz(e.Ksig, case.p), powz(e.Gsig, case.gamma)),
        ratio0(e.g * powz(e.f, case.p) * powz(e.Gsig, case.gamma * (case.p - 1.0)),
               powz(e.G, case.gamma * (case.p - 1.0))))))

register(TheoremSpec(
    id="saker2", direction=LE, r_defaults_to_g=True,
    description="Copson-type time-scale bound, tail/prefix form",
    conditions=("S1-basic", "S2-nonneg", "fixed-alpha-1", "p-gt-1", "gamma-lt-1"),
    required_roles=("f", "g"),
    constant=_const_pow_1mg,
    terms=lambda e, case: (
        ratio0(e.g * powz(e.F, case.p), powz(e.Gsig, case.gamma)),
        e.g * powz(e.f, case.p) * powz(e.Gsig, case.p - case.gamma))))

register(TheoremSpec(
    id="saker3", direction=LE, r_defaults_to_g=True,
    description="Copson-type time-scale bound, prefix/tail form",
    conditions=("S1-basic", "S2-nonneg", "fixed-alpha-1", "p-gt-1", "gamma-lt-1"),
    required_roles=("f", "g"),
    constant=_const_pow_1mg,
    terms=lambda e, case: (
        ratio0(e.g * powz(e.Ksig, case.p), powz(e.H, case.gamma)),
        e.g * powz(e.f, case.p) * powz(e.H, case.p - case.gamma))))

register(TheoremSpec(
    id="saker4", direction=LE, r_defaults_to_g=True,
    description="Copson-type time-scale bound, tail/tail form",
    conditions=("S1-basic", "S2-nonneg", "fixed-alpha-1", "gamma-gt-1", "gamma-le-p"),
    required_roles=("f", "g"),
    constant=_const_pow_gm1,
    terms=lambda e, case: (
        ratio0(e.g * powz(e.F, case.p), powz(e.H, case.gamma)),
        e.g * powz(e.f, case.p) * powz(e.H, case.p - case.gamma))))

register(TheoremSpec(
    id="hardy-discrete", direction=LE,
    description="classical discrete Hardy bound",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-Z", "p-gt-1", "a-positive"),
    required_roles=("f",),
    constant=_const_hardy,
    terms=lambda e, case: (
        ratio0(powz(e.Ksig, case.p), powz(e.t, case.p)),
        powz(e.f, case.p))))

register(TheoremSpec(
    id="hardy-continuous", direction=LE,
    description="classical continuous Hardy bound (sharp constant)",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-R", "p-gt-1"),
    required_roles=("f",),
    constant=_const_hardy,
    terms=lambda e, case: (
        ratio0(powz(e.K, case.p), powz(e.t, case.p)),
        powz(e.f, case.p))))

register(TheoremSpec(
    id="hl-a5", direction=LE,
    description="weighted continuous Hardy bound, prefix form",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-R", "p-gt-1", "gamma-gt-1"),
    required_roles=("f",),
    constant=_const_pow_gm1,
    terms=lambda e, case: (
        ratio0(powz(e.K, case.p), powz(e.t, case.gamma)),
        powz(e.f, case.p) * powz(e.t, case.p - case.gamma))))

register(TheoremSpec(
    id="hl-a6", direction=LE,
    description="weighted continuous Hardy bound, tail form",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-R", "p-gt-1", "gamma-lt-1"),
    required_roles=("f",),
    constant=_const_pow_1mg,
    terms=lambda e, case: (
        ratio0(powz(e.F, case.p), powz(e.t, case.gamma)),
        powz(e.f, case.p) * powz(e.t, case.p - case.gamma))))

register(TheoremSpec(
    id="hl-a11", direction=LE,
    description="tail bound with the p-th power weight on the right",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-R", "p-gt-1"),
    required_roles=("f",),
    constant=lambda case: case.p ** case.p,
    terms=lambda e, case: (
        powz(e.F, case.p),
        powz(e.t, case.p) * powz(e.f, case.p))))

register(TheoremSpec(
    id="copson-h20", direction=LE, r_defaults_to_g=True,
    description="discrete Copson bound, prefix/prefix",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-Z", "a-positive",
                "gamma-gt-1", "gamma-le-p"),
    required_roles=("f", "g"),
    constant=_const_pow_gm1,
    terms=lambda e, case: (
        ratio0(e.g * powz(e.Ksig, case.p), powz(e.Gsig, case.gamma)),
        e.g * powz(e.f, case.p) * powz(e.Gsig, case.p - case.gamma))))

register(TheoremSpec(
    id="copson-h21", direction=LE, r_defaults_to_g=True,
    description="discrete Copson bound, tail/prefix",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-Z", "a-positive",
                "p-gt-1", "gamma-lt-1"),
    required_roles=("f", "g"),
    constant=_const_pow_1mg,
    terms=lambda e, case: (
        ratio0(e.g * powz(e.F, case.p), powz(e.Gsig, case.gamma)),
        e.g * powz(e.f, case.p) * powz(e.Gsig, case.p - case.gamma))))

register(TheoremSpec(
    id="copson-h24", direction=LE, r_defaults_to_g=True,
    description="continuous Copson bound, prefix/prefix",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-R", "gamma-gt-1", "gamma-le-p"),
    required_roles=("f", "g"),
    constant=_const_pow_gm1,
    terms=lambda e, case: (
        ratio0(e.g * powz(e.K, case.p), powz(e.G, case.gamma)),
        e.g * powz(e.f, case.p) * powz(e.G, case.p - case.gamma))))

register(TheoremSpec(
    id="copson-h25", direction=LE, r_defaults_to_g=True,
    description="continuous Copson bound, tail/prefix",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-R", "p-gt-1", "gamma-pos-lt-1"),
    required_roles=("f", "g"),
    constant=_const_pow_1mg,
    terms=lambda e, case: (
        ratio0(e.g * powz(e.F, case.p), powz(e.G, case.gamma)),
        e.g * powz(e.f, case.p) * powz(e.G, case.p - case.gamma))))

register(TheoremSpec(
    id="leindler-h30", direction=LE, r_defaults_to_g=True,
    description="discrete bound with the tail weight, prefix numerator",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-Z", "a-positive",
                "p-gt-1", "gamma-lt-1"),
    required_roles=("f", "g"),
    constant=_const_pow_1mg,
    terms=lambda e, case: (
        ratio0(e.g * powz(e.Ksig, case.p), powz(e.H, case.gamma)),
        e.g * powz(e.f, case.p) * powz(e.H, case.p - case.gamma))))

register(TheoremSpec(
    id="bennett-h31", direction=LE, r_defaults_to_g=True,
    description="discrete bound with the tail weight, tail numerator",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-Z", "a-positive",
                "gamma-gt-1", "gamma-le-p"),
    required_roles=("f", "g"),
    constant=_const_pow_gm1,
    terms=lambda e, case: (
        ratio0(e.g * powz(e.F, case.p), powz(e.H, case.gamma)),
        e.g * powz(e.f, case.p) * powz(e.H, case.p - case.gamma))))

register(TheoremSpec(
    id="renaud-h7", direction=GE,
    description="reversed continuous Hardy bound for nonincreasing functions",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-R", "p-gt-1", "f-nonincreasing"),
    required_roles=("f",),
    constant=lambda case: case.p / (case.p - 1.0),
    terms=lambda e, case: (
        ratio0(powz(e.K, case.p), powz(e.t, case.p)),
        powz(e.f, case.p))))

register(TheoremSpec(
    id="renaud-h8", direction=GE,
    description="reversed discrete tail bound for nonincreasing sequences",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-Z", "a-positive",
                "p-gt-1", "f-nonincreasing"),
    required_roles=("f",),
    constant=lambda case: 1.0,
    terms=lambda e, case: (
        powz(e.F, case.p),
        powz(e.t, case.p) * powz(e.f, case.p))))

register(TheoremSpec(
    id="renaud-h9", direction=GE,
    description="reversed continuous tail bound for nonincreasing functions",
    conditions=("S2-nonneg", "fixed-alpha-1", "scale-R", "p-gt-1", "f-nonincreasing"),
    required_roles=("f",),
    constant=lambda case: 1.0,
    terms=lambda e, case: (
        powz(e.F, case.p),
        powz(e.t, case.p) * powz(e.f, case.p))))

register(TheoremSpec(
    id="agarwal-h11", direction=GE,
    description="reversed Hardy bound on an arbitrary scale",
    conditions=("S2-nonneg", "fixed-alpha-1", "p-gt-1", "f-nonincreasing"),
    required_roles=("f",),
    constant=lambda case: case.p / (case.p - 1.0),
    terms=lambda e, case: (
        ratio0(powz(e.K, case.p), powz(e.t, case.p)),
        powz(e.f, case.p))))

register(TheoremSpec(
    id="eldeeb-15", direction=GE, r_defaults_to_g=True,
    description="reversed weighted prefix bound on an arbitrary scale",
    conditions=("S2-nonneg", "fixed-alpha-1", "p-ge-1", "gamma-gt-1",
                "f-nonincreasing"),
    required_roles=("f", "g"),
    constant=lambda case: case.p / (case.gamma - 1.0),
    terms=lambda e, case: (
        ratio0(e.g * powz(e.K, case.p), powz(e.G, case.gamma)),
        e.g * powz(e.G, case.p - case.gamma) * powz(e.f, case.p))))
