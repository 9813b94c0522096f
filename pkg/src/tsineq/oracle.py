"""Independent brute-force evaluation of the four bounds on scattered scales.

This module shares no summation or caching code with the main evaluator: it
walks the window point by point with the scale's own jump rule, rebuilds the
running prefix/suffix accumulations in plain Python floats, and transcribes
each bound directly from its scale-specialized series form (integer, h-step
and q-power lattices, plus explicit point sets).  Agreement with the table
driven evaluator is the oracle contract.
"""

from __future__ import annotations

import math

from . import scales as sc
from .context import HypothesisSet
from .errors import TsineqError


def _pow(x: float, e: float) -> float:
    if x == 0.0:
        if e == 0.0:
            return 1.0
        return 0.0 if e > 0.0 else math.inf
    return x ** e


def _frac(num: float, den: float) -> float:
    if num == 0.0:
        return 0.0
    if den == 0.0:
        return math.inf
    return num / den


def _walk(case: HypothesisSet) -> tuple[list[float], list[float]]:
    """Window points and their successors, stepping with the scale's jump."""
    scale = case.scale
    if isinstance(scale, sc.RealInterval):
        raise TsineqError("the brute-force oracle needs a scattered scale")
    t = scale.member(case.a)
    horizon = scale.member(case.horizon)
    pts: list[float] = []
    sigs: list[float] = []
    guard = 0
    while t < horizon:
        if isinstance(scale, sc.UniformLattice):
            nxt = t + scale.h
        elif isinstance(scale, sc.QLattice):
            nxt = scale.q * t
        else:
            arr = scale.points
            i = arr.index(t) if t in arr else min(range(len(arr)),
                                                  key=lambda j: abs(arr[j] - t))
            nxt = arr[min(i + 1, len(arr) - 1)]
        pts.append(t)
        sigs.append(nxt)
        if nxt <= t:
            raise TsineqError("window walk is stuck (horizon beyond the maximum?)")
        t = nxt
        guard += 1
        if guard > 2_000_000:
            raise TsineqError("window walk exceeded the point budget")
    return pts, sigs


def brute_force_oracle(theorem_id: str, case: HypothesisSet) -> tuple[float, float]:
    """Both sides of a bound by direct nested accumulation (no shared code
    with evaluate); supports thm1..thm4 and their scale-pinned variants."""
    from .catalogue import get

    spec = get(theorem_id)
    base = spec.oracle_base
    if base is None:
        raise TsineqError(f"{theorem_id} has no brute-force form")

    al, p, ga, th, be = case.alpha, case.p, case.gamma, case.theta, case.beta
    f = case.roles["f"]
    g = case.roles["g"]
    r = case.roles.get("r", g if spec.r_defaults_to_g else None)
    k = case.roles.get("k")
    v = case.roles.get("v")
    w = case.roles.get("w")

    def role(fn, t):
        return 1.0 if fn is None else float(fn(t))

    pts, sigs = _walk(case)
    n = len(pts)
    wt = [(sigs[i] - pts[i]) * _pow(pts[i], al - 1.0) for i in range(n)]
    gv = [float(g(t)) for t in pts]
    fv = [float(f(t)) for t in pts]
    rv = [role(r, t) for t in pts]

    # prefix accumulations: G_pre[i] excludes point i, G_sig[i] includes it
    G_pre, G_sig, K_pre, K_sig = [], [], [], []
    acc_g = acc_k = 0.0
    for i in range(n):
        G_pre.append(acc_g)
        K_pre.append(acc_k)
        acc_g = acc_g + gv[i] * wt[i]
        acc_k = acc_k + rv[i] * fv[i] * wt[i]
        G_sig.append(acc_g)
        K_sig.append(acc_k)

    # suffix accumulations by a second, backward pass
    H_at, H_sig, F_at, F_sig = [0.0] * n, [0.0] * n, [0.0] * n, [0.0] * n
    acc_g = acc_k = 0.0
    for i in range(n - 1, -1, -1):
        H_sig[i] = acc_g
        F_sig[i] = acc_k
        acc_g = acc_g + gv[i] * wt[i]
        acc_k = acc_k + rv[i] * fv[i] * wt[i]
        H_at[i] = acc_g
        F_at[i] = acc_k

    lhs = rhs = 0.0
    if base == "thm1":
        if spec.id == "eldeeb-eqq1":
            const = _pow((p + be) / (ga - th - 1.0), p)
        elif spec.id == "cor1.1":
            const = _pow((p - al + 1.0) / (ga - al), p)
        else:
            const = _pow((p + be - al + 1.0) / (ga - th - al), p)
        for i in range(n):
            t, s = pts[i], sigs[i]
            ks, vs, wv = role(k, s), role(v, s), role(w, t)
            lhs += _frac(ks * vs * wv * gv[i] * _pow(K_sig[i], p - al + 1.0),
                         _pow(G_sig[i], ga + 1.0 - al)) * wt[i]
            num = (ks * vs * wv * _pow(rv[i], p) * _pow(fv[i], p)
                   * _pow(G_sig[i], (1.0 - al + ga) * (p - 1.0))
                   * _pow(K_sig[i], 1.0 - al))
            den = _pow(gv[i], p - 1.0) * _pow(G_pre[i], p * (ga - al))
            rhs += _frac(num, den) * wt[i]
        return lhs, const * rhs
    if base == "thm2":
        const = _pow((p + be - al + 1.0) / (al - ga + th), p)
        for i in range(n):
            t, s = pts[i], sigs[i]
            kv, vv, ws = role(k, t), role(v, t), role(w, s)
            if case.as_printed:
                lhs += (kv * vv * ws * gv[i] * _pow(G_sig[i], al - ga + 1.0)
                        * _pow(F_at[i], p - al + 1.0)) * wt[i]
            else:
                lhs += _frac(kv * vv * ws * gv[i] * _pow(F_at[i], p - al + 1.0),
                             _pow(G_sig[i], ga + 1.0 - al)) * wt[i]
            num = (kv * vv * ws * _pow(rv[i], p) * _pow(fv[i], p)
                   * _pow(G_sig[i], p - ga - al + 1.0) * _pow(F_at[i], 1.0 - al))
            rhs += _frac(num, _pow(gv[i], p - 1.0)) * wt[i]
        return lhs, const * rhs
    if base == "thm3":
        const = _pow((p - al + be + 1.0) / (al - ga + th), p)
        for i in range(n):
            t, s = pts[i], sigs[i]
            ks, vs, wv = role(k, s), role(v, s), role(w, t)
            lhs += _frac(ks * vs * wv * gv[i] * _pow(K_sig[i], p - al + 1.0),
                         _pow(H_at[i], ga + 1.0 - al)) * wt[i]
            num = (ks * vs * wv * _pow(rv[i], p) * _pow(fv[i], p)
                   * _pow(H_at[i], p - ga + al - 1.0) * _pow(K_sig[i], 1.0 - al))
            rhs += _frac(num, _pow(gv[i], p - 1.0)) * wt[i]
        return lhs, const * rhs
    if base == "thm4":
        const = _pow((p + be - al + 1.0) / (ga - th - al), p)
        fexp = (1.0 - al) / p if case.as_printed else 1.0 - al
        for i in range(n):
            t, s = pts[i], sigs[i]
            kv, vv, ws = role(k, t), role(v, t), role(w, s)
            lhs += _frac(kv * vv * ws * gv[i] * _pow(F_at[i], p - al + 1.0),
                         _pow(H_at[i], ga + 1.0 - al)) * wt[i]
            num = (kv * vv * ws * _pow(rv[i], p) * _pow(fv[i], p)
                   * _pow(H_at[i], (1.0 - al + ga) * (p - 1.0)) * _pow(F_at[i], fexp))
            den = _pow(gv[i], p - 1.0) * _pow(H_sig[i], p * (ga - al))
            rhs += _frac(num, den) * wt[i]
        return lhs, const * rhs
    raise TsineqError(f"unsupported oracle base {base!r}")
