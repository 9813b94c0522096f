"""Shared evaluation context for inequality sides and hypothesis checks.

A case is evaluated over the window [a, horizon).  On scattered scales the
context holds role values and cumulative tables as aligned numpy arrays over
the enumerated points; the same prefix/suffix tables feed both sides of an
inequality so identical values enter the LHS and RHS.  On real intervals the
context exposes vectorized callables backed by panel-table prefixes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import scales as sc
from .errors import SingularWeight
from .functions import ONE, ScaleFunction
from .numutil import alpha_weight
from .quadrature import DensePrefix

ROLE_NAMES = ("f", "g", "k", "r", "w", "v")


@dataclass
class HypothesisSet:
    """One verification case: scale window, exponents and the function roles."""

    scale: sc.TimeScale
    a: float
    horizon: float
    alpha: float = 1.0
    p: float = 2.0
    gamma: float = 0.0
    theta: float = 0.0
    beta: float = 0.0
    roles: dict[str, ScaleFunction] = field(default_factory=dict)
    as_printed: bool = False
    force: bool = False
    case_id: str = ""

    def role(self, name: str) -> ScaleFunction:
        return self.roles.get(name, ONE)

    def is_finite_case(self) -> bool:
        """Finite cases (explicit point sets or sampled tables) have no
        truncation error, so their sensitivity is zero by definition."""
        if isinstance(self.scale, sc.FiniteSet):
            return True
        return any(fn.kind == "table" for fn in self.roles.values())

    def scale_name(self) -> str:
        return self.scale.describe()


@dataclass
class Env:
    """Aligned values over evaluation points (arrays) for building integrands."""

    t: np.ndarray
    f: np.ndarray
    g: np.ndarray
    k: np.ndarray
    r: np.ndarray
    w: np.ndarray
    v: np.ndarray
    ksig: np.ndarray
    vsig: np.ndarray
    wsig: np.ndarray
    fsig: np.ndarray
    gsig: np.ndarray
    rsig: np.ndarray
    G: np.ndarray
    Gsig: np.ndarray
    K: np.ndarray
    Ksig: np.ndarray
    H: np.ndarray
    Hsig: np.ndarray
    F: np.ndarray
    Fsig: np.ndarray


@dataclass
class ScatteredContext:
    pts: np.ndarray          # evaluation points in [a, horizon)
    grid: np.ndarray         # pts plus the horizon (sigma-extended)
    mu: np.ndarray
    wts: np.ndarray          # Delta_alpha measure weights mu * t^(alpha-1)
    env: Env
    dmeas: np.ndarray        # 1/t^(alpha-1), turning value jumps into T_alpha derivatives


def scattered_context(case: HypothesisSet, horizon: float) -> ScatteredContext:
    pts = sc.points_in(case.scale, case.a, horizon)
    if case.alpha < 1.0 and pts[0] <= 0.0:
        raise SingularWeight(
            f"window [{case.a}, {horizon}) touches t <= 0 with alpha={case.alpha}")
    grid = np.append(pts, horizon)
    mu = np.diff(grid)
    s = alpha_weight(pts, case.alpha)
    wts = mu * s

    vals = {name: case.role(name)(grid) for name in ROLE_NAMES}
    gterms = vals["g"][:-1] * wts
    kterms = vals["r"][:-1] * vals["f"][:-1] * wts
    G = np.concatenate([[0.0], np.cumsum(gterms)])
    K = np.concatenate([[0.0], np.cumsum(kterms)])
    H = np.concatenate([np.cumsum(gterms[::-1])[::-1], [0.0]])
    F = np.concatenate([np.cumsum(kterms[::-1])[::-1], [0.0]])

    env = Env(
        t=pts,
        f=vals["f"][:-1], g=vals["g"][:-1], k=vals["k"][:-1],
        r=vals["r"][:-1], w=vals["w"][:-1], v=vals["v"][:-1],
        ksig=vals["k"][1:], vsig=vals["v"][1:], wsig=vals["w"][1:],
        fsig=vals["f"][1:], gsig=vals["g"][1:], rsig=vals["r"][1:],
        G=G[:-1], Gsig=G[1:], K=K[:-1], Ksig=K[1:],
        H=H[:-1], Hsig=H[1:], F=F[:-1], Fsig=F[1:],
    )
    with np.errstate(divide="ignore"):
        dmeas = 1.0 / s
    return ScatteredContext(pts=pts, grid=grid, mu=mu, wts=wts, env=env, dmeas=dmeas)


class DenseContext:
    """Callable context on a real interval: env(x_nodes) -> Env.

    Prefix tables are built once per (case, horizon); sigma is the identity,
    so the sigma-composed entries alias the plain ones.
    """

    def __init__(self, case: HypothesisSet, horizon: float, rtol: float = 1e-11):
        if case.alpha < 1.0 and case.a <= 0.0:
            raise SingularWeight(
                f"dense window starting at {case.a} with alpha={case.alpha} is singular")
        self.case = case
        self.horizon = horizon
        alpha = case.alpha
        g = case.role("g")
        r = case.role("r")
        f = case.role("f")
        self._gpre = DensePrefix(lambda x: g(x) * alpha_weight(x, alpha),
                                 case.a, horizon, rtol=rtol)
        self._kpre = DensePrefix(lambda x: r(x) * f(x) * alpha_weight(x, alpha),
                                 case.a, horizon, rtol=rtol)

    def __call__(self, x: np.ndarray) -> Env:
        case = self.case
        xs = np.asarray(x, dtype=float)
        vals = {name: np.broadcast_to(np.asarray(case.role(name)(xs), dtype=float),
                                      xs.shape).copy()
                for name in ROLE_NAMES}
        G = np.asarray(self._gpre(xs), dtype=float)
        K = np.asarray(self._kpre(xs), dtype=float)
        H = self._gpre.total - G
        F = self._kpre.total - K
        return Env(
            t=xs,
            f=vals["f"], g=vals["g"], k=vals["k"], r=vals["r"],
            w=vals["w"], v=vals["v"],
            ksig=vals["k"], vsig=vals["v"], wsig=vals["w"],
            fsig=vals["f"], gsig=vals["g"], rsig=vals["r"],
            G=G, Gsig=G, K=K, Ksig=K, H=H, Hsig=H, F=F, Fsig=F,
        )
