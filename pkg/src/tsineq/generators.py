"""Deterministic random case generation for suites and acceptance runs.

All generators draw from a numpy Generator seeded by the caller, so a fixed
seed reproduces every case byte for byte.  Candidate cases are rejection
sampled against the full hypothesis checker; only explicitly admissible
cases are emitted.  Function roles come from small expression families
(powers, geometric decay, rationals) and clipped random tables.
"""

from __future__ import annotations

import numpy as np

from . import scales as sc
from .calculus import cumulative
from .catalogue import get
from .context import HypothesisSet, scattered_context
from .functions import ScaleFunction
from .hypotheses import all_passed, check_hypotheses

_S4_THEOREMS = ("thm1", "thm4")
_S5_THEOREMS = ("thm2", "thm3")


def _fmt(x: float) -> str:
    return repr(float(round(x, 6)))


def _scale_window(rng, family: str):
    """A (scale, a, horizon) triple with a few hundred points."""
    if family == "Z":
        a = int(rng.integers(1, 4))
        n = int(rng.integers(120, 400))
        return sc.INTEGERS, float(a), float(a + n)
    if family == "hZ":
        h = float(rng.choice([0.25, 0.5, 2.0]))
        a = h * int(rng.integers(1, 5))
        n = int(rng.integers(120, 400))
        return sc.UniformLattice(h=h), a, a + n * h
    if family == "qZ":
        k0 = int(rng.integers(0, 3))
        n = int(rng.integers(25, 60))
        return sc.QLattice(q=2.0), float(2.0 ** k0), float(2.0 ** (k0 + n))
    if family == "finite":
        n = int(rng.integers(40, 160))
        pts = np.unique(np.round(np.cumsum(rng.uniform(0.05, 1.0, size=n)) + 1.0, 9))
        return sc.FiniteSet(points=tuple(pts)), float(pts[0]), float(pts[-1])
    raise ValueError(family)


def _decay_expr(rng, anchor: float, zero_at_anchor: bool) -> str:
    """A nonnegative decaying expression, optionally vanishing at the anchor."""
    kind = rng.choice(["power", "geo", "rational"])
    if kind == "power":
        c = rng.uniform(1.3, 2.6)
        body = f"t^(-{_fmt(c)})"
    elif kind == "geo":
        b = rng.choice([1.5, 2.0, 3.0])
        body = f"{_fmt(b)}^(-t)"
    else:
        c = rng.uniform(0.5, 2.0)
        body = f"{_fmt(c)}/(1 + t^2)"
    if zero_at_anchor:
        # exact anchor literal plus a clamp so roundoff cannot go negative
        return f"max(0, t - {anchor!r}) * {body} / t"
    return body


def _weight_expr(rng, decay_beyond: float | None = None) -> str:
    """A strictly positive weight; optionally with a convergent tail."""
    if decay_beyond is not None:
        c = rng.uniform(decay_beyond + 0.3, decay_beyond + 1.2)
        return f"t^(-{_fmt(c)})"
    kind = rng.choice(["one", "power", "inv"])
    if kind == "one":
        return "1"
    if kind == "power":
        return f"t^(-{_fmt(rng.uniform(0.1, 0.7))})"
    return "1/(1 + t)"


def _table_roles(rng, scale, a, horizon, thm: str) -> dict[str, ScaleFunction]:
    """Clipped random tables over the window grid (finite-case semantics)."""
    pts = sc.points_in(scale, a, horizon)
    grid = np.append(pts, horizon)
    n = grid.size
    fvals = np.round(rng.uniform(0.0, 2.0, size=n), 6)
    gvals = np.round(rng.uniform(0.2, 2.0, size=n), 6)
    if thm == "thm1":
        fvals[0] = 0.0
    if thm == "thm4":
        fvals[-2:] = 0.0
    roles = {"f": ScaleFunction.from_table(grid, fvals, name="f-table"),
             "g": ScaleFunction.from_table(grid, gvals, name="g-table"),
             "r": ScaleFunction.from_table(grid, np.round(rng.uniform(0.2, 1.5, size=n), 6),
                                           name="r-table")}
    return roles


def _nontrivial_pairs(rng, thm: str, case: HypothesisSet):
    """Admissible (w, theta) / (v, beta) upgrades beyond the unit roles."""
    roles = dict(case.roles)
    theta, beta = case.theta, case.beta
    ctx = scattered_context(case, case.horizon)
    grid = ctx.grid
    choice = rng.integers(0, 3)
    if thm == "thm1" and choice == 1:
        # w = G^sigma with theta = 1 is equality-tight for flat g
        G = cumulative(roles["g"], case.scale, case.a, "lower", case.horizon, case.alpha)
        roles["w"] = ScaleFunction.from_table(
            grid, [G(sc.jump(case.scale, float(t)).sigma) if t < case.horizon else G(t)
                   for t in grid], name="G-sigma")
        theta = 1.0
    elif thm in ("thm1", "thm3") and choice == 2:
        K = cumulative(ScaleFunction.from_callable(
            lambda x, _r=roles.get("r"), _f=roles["f"]:
            (1.0 if _r is None else _r(x)) * _f(x)),
            case.scale, case.a, "lower", case.horizon, case.alpha)
        roles["v"] = ScaleFunction.from_table(grid, K(grid), name="K-prefix")
        beta = 1.0
    elif thm in ("thm2", "thm4") and choice == 1:
        F = cumulative(ScaleFunction.from_callable(
            lambda x, _r=roles.get("r"), _f=roles["f"]:
            (1.0 if _r is None else _r(x)) * _f(x)),
            case.scale, case.a, "upper", case.horizon, case.alpha)
        roles["v"] = ScaleFunction.from_table(grid, F(grid), name="F-tail")
        beta = 1.0
    elif thm in ("thm2", "thm4") and choice == 2:
        roles["w"] = ScaleFunction.from_expression("1 - 2^(-t)", name="w-increasing")
        theta = 0.0
    from dataclasses import replace
    return replace(case, roles=roles, theta=theta, beta=beta)


def gen_theorem_case(rng: np.random.Generator, thm: str, family: str,
                     alpha: float, case_id: str, tables: bool | None = None,
                     max_tries: int = 60) -> HypothesisSet:
    """One hypothesis-satisfying case for thm1..thm4 on the given scale family."""
    spec = get(thm)
    for _ in range(max_tries):
        scale, a, horizon = _scale_window(rng, family)
        p = float(np.round(rng.uniform(1.0, 3.0), 4))
        theta = beta = 0.0
        if thm in _S4_THEOREMS:
            gamma = float(np.round(alpha + theta + rng.uniform(max(0.5, 1.1 - alpha), 2.0), 4))
        else:
            gamma = float(np.round(rng.uniform(0.0, alpha - 0.1), 4))
        use_tables = rng.random() < 0.5 if tables is None else tables
        if use_tables:
            roles = _table_roles(rng, scale, a, horizon, thm)
        else:
            needs_tail = thm in ("thm3", "thm4")
            roles = {"f": ScaleFunction.from_expression(
                         _decay_expr(rng, a, zero_at_anchor=(thm == "thm1"))),
                     "g": ScaleFunction.from_expression(
                         _weight_expr(rng, decay_beyond=alpha if needs_tail else None))}
            if thm == "thm4":
                last = sc.points_in(scale, a, horizon)[-1]
                roles["f"] = ScaleFunction.from_expression(
                    f"max(0, {_fmt(last)} - t) * {_decay_expr(rng, a, False)}")
        case = HypothesisSet(scale=scale, a=a, horizon=horizon, alpha=alpha, p=p,
                             gamma=gamma, theta=theta, beta=beta, roles=roles,
                             case_id=case_id)
        if rng.random() < 0.4:
            case = _nontrivial_pairs(rng, thm, case)
        if all_passed(check_hypotheses(case, spec)):
            return case
    raise RuntimeError(f"could not generate an admissible case for {thm}/{family}")


def gen_oracle_case(rng: np.random.Generator, thm: str, case_id: str) -> HypothesisSet:
    """Finite scattered case (table roles, <= 1e3 points) for oracle agreement."""
    family = str(rng.choice(["Z", "hZ", "qZ", "finite"]))
    alpha = float(rng.choice([0.5, 0.8, 1.0]))
    return gen_theorem_case(rng, thm, family, alpha, case_id, tables=True)


def gen_hardy_sequence(rng: np.random.Generator, n: int, p: float,
                       case_id: str) -> HypothesisSet:
    """Random nonnegative sequence case for the classical discrete bound."""
    grid = np.arange(1.0, n + 2.0)
    vals = rng.uniform(0.0, 1.0, size=grid.size)
    vals[rng.random(grid.size) < 0.1] = 0.0
    return HypothesisSet(scale=sc.INTEGERS, a=1.0, horizon=float(n + 1), alpha=1.0,
                         p=p, roles={"f": ScaleFunction.from_table(grid, vals)},
                         case_id=case_id)


def gen_polynomial(rng: np.random.Generator, degree: int = 3,
                   nonneg: bool = False) -> ScaleFunction:
    coeffs = np.round(rng.uniform(0.0 if nonneg else -2.0, 2.0, size=degree + 1), 4)
    parts = [f"{_fmt(c)}*t^{k}" if k else _fmt(c) for k, c in enumerate(coeffs)]
    return ScaleFunction.from_expression(" + ".join(parts))
