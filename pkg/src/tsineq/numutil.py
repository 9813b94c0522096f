"""Small numeric helpers shared by the calculus and catalogue layers."""

from __future__ import annotations

import numpy as np


def powz(x, e: float):
    """Power with the conventions the inequality builders rely on.

    0^0 = 1, 0^positive = 0, 0^negative = +inf.  Bases are nonnegative in
    every use; negative bases propagate nan so the caller can flag the case
    as numerically inconclusive rather than crash.
    """
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        return np.power(x, e)


def ratio0(num, den):
    """num/den with the zero-numerator convention: a term whose numerator is
    exactly 0 is 0 even when the denominator is 0.

    The inequality proofs only ever produce 0/0 at window endpoints where the
    true term (traced through the pre-Hoelder bound) is 0; a positive
    numerator over a zero denominator is a genuine divergence and becomes
    +inf.
    """
    num = np.asarray(num, dtype=float)
    den = np.asarray(den, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(num == 0.0, 0.0, num / den)
    return out


def alpha_weight(t, alpha: float):
    """t^(alpha-1); at alpha=1 this is exactly 1 for every t including 0."""
    if alpha == 1.0:
        return np.ones_like(np.asarray(t, dtype=float))
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        return np.power(np.asarray(t, dtype=float), alpha - 1.0)


def rel_diff(a: float, b: float) -> float:
    """Relative discrepancy; 0 for an exact match including inf == inf."""
    if a == b:
        return 0.0
    if not (np.isfinite(a) and np.isfinite(b)):
        return np.inf
    return abs(a - b) / max(abs(a), abs(b), 1e-300)
