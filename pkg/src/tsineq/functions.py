"""Evaluatable real-valued functions on a time scale.

A ScaleFunction wraps one of three sources: a parsed expression in t, a
sampled table over explicit points, or a plain python callable (used for
cumulative integrals and generated roles).  Values are immutable after
construction and evaluation accepts scalars or numpy arrays.
"""

from __future__ import annotations

import numpy as np

from . import expressions as ex
from .errors import TsineqError


class EvaluationError(TsineqError):
    pass


class ScaleFunction:
    __slots__ = ("kind", "ast", "table_pts", "table_vals", "fn", "name")

    def __init__(self, kind, ast=None, table_pts=None, table_vals=None, fn=None, name=""):
        self.kind = kind
        self.ast = ast
        self.table_pts = table_pts
        self.table_vals = table_vals
        self.fn = fn
        self.name = name

    @classmethod
    def from_expression(cls, source, name: str = "") -> "ScaleFunction":
        ast = ex.parse_expression(source) if isinstance(source, str) else source
        return cls("expression", ast=ast, name=name)

    @classmethod
    def from_table(cls, points, values, name: str = "") -> "ScaleFunction":
        pts = np.asarray(points, dtype=float)
        vals = np.asarray(values, dtype=float)
        if pts.shape != vals.shape:
            raise ValueError("table points and values must have equal length")
        order = np.argsort(pts)
        return cls("table", table_pts=pts[order], table_vals=vals[order], name=name)

    @classmethod
    def from_callable(cls, fn, name: str = "") -> "ScaleFunction":
        return cls("callable", fn=fn, name=name)

    @classmethod
    def constant(cls, c: float, name: str = "") -> "ScaleFunction":
        return cls("expression", ast=ex.Num(float(c)), name=name or repr(float(c)))

    def _eval_table(self, x):
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        idx = np.clip(np.searchsorted(self.table_pts, xs), 0, self.table_pts.size - 1)
        idx_lo = np.clip(idx - 1, 0, self.table_pts.size - 1)
        near = np.where(np.abs(self.table_pts[idx] - xs) <= np.abs(self.table_pts[idx_lo] - xs),
                        idx, idx_lo)
        tol = 1e-12 * np.maximum(1.0, np.abs(xs))
        if np.any(np.abs(self.table_pts[near] - xs) > tol):
            bad = xs[np.abs(self.table_pts[near] - xs) > tol][0]
            raise EvaluationError(f"table function {self.name or ''!r} has no sample at {bad}")
        out = self.table_vals[near]
        return out

    def __call__(self, x):
        scalar = np.isscalar(x) or np.asarray(x).ndim == 0
        if self.kind == "expression":
            out = ex.evaluate(self.ast, np.asarray(x, dtype=float))
        elif self.kind == "table":
            out = self._eval_table(x)
        else:
            out = self.fn(np.asarray(x, dtype=float))
        out = np.asarray(out, dtype=float)
        if out.ndim == 0 and not scalar:
            out = np.full(np.asarray(x).shape, float(out))
        return float(out) if scalar else out

    def min_on(self, points) -> float:
        """Smallest value over the given sample points (nonnegativity checks)."""
        vals = self(np.asarray(points, dtype=float))
        return float(np.min(vals)) if np.size(vals) else 0.0

    def derivative_expression(self):
        """Symbolic d/dt when the source is a smooth expression, else None."""
        if self.kind != "expression":
            return None
        d = ex.differentiate(self.ast)
        return None if d is None else ScaleFunction("expression", ast=d,
                                                    name=f"d/dt {self.name}")

    def describe(self) -> str:
        if self.kind == "expression":
            return ex.to_string(self.ast)
        if self.kind == "table":
            return f"table[{self.table_pts.size} pts]"
        return self.name or "<callable>"

    def __repr__(self):
        return f"ScaleFunction({self.describe()})"


ONE = ScaleFunction.constant(1.0, name="1")
ZERO = ScaleFunction.constant(0.0, name="0")
