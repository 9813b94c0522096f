"""Case files: flat key = value text, one section per case.

Example::

    [eq1-demo]
    theorem = thm1
    scale = Z
    a = 1
    horizon = 501
    alpha = 0.5
    p = 2
    gamma = 2
    f = max(0, t - 1) * 2^(-t)
    g = 1

Role values are expressions in t, or ``table:relative/path.csv`` pointing at
a two-column ``t,value`` file whose points must snap onto the scale.  The
HORIZON_SCALE environment variable (default 1) multiplies every horizon, for
convergence studies; the scaled horizon snaps to the nearest scale member at
or above.
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

from . import scales as sc
from .context import ROLE_NAMES, HypothesisSet
from .errors import CaseFileError, ParseError, TsineqError
from .functions import ScaleFunction

_NUMERIC_KEYS = ("a", "horizon", "alpha", "p", "gamma", "theta", "beta")
_BOOL_KEYS = ("as_printed", "force")
_OTHER_KEYS = ("id", "theorem", "scale")
_KNOWN = set(_NUMERIC_KEYS) | set(_BOOL_KEYS) | set(_OTHER_KEYS) | set(ROLE_NAMES)


@dataclass
class CaseFile:
    case_id: str
    theorem: str
    raw: dict[str, str] = field(default_factory=dict)
    base_dir: Path = Path(".")


def parse_case_text(text: str, base_dir: Path = Path("."),
                    name_hint: str = "case") -> list[CaseFile]:
    """Parse one or more [section] blocks of key = value lines."""
    cases: list[CaseFile] = []
    current: dict[str, str] | None = None
    current_id = None

    def flush():
        nonlocal current, current_id
        if current is None:
            return
        cid = current.pop("id", current_id or name_hint)
        theorem = current.get("theorem")
        if not theorem:
            raise CaseFileError(f"case {cid!r} is missing the 'theorem' key")
        cases.append(CaseFile(case_id=cid, theorem=theorem, raw=current,
                              base_dir=base_dir))
        current, current_id = None, None

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("[") and stripped.endswith("]"):
            flush()
            current = {}
            current_id = stripped[1:-1].strip()
            continue
        if "=" not in stripped:
            raise CaseFileError(f"line {lineno}: expected key = value, got {line!r}")
        key, _, value = stripped.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _KNOWN:
            raise CaseFileError(f"line {lineno}: unknown key {key!r}")
        if current is None:
            current = {}
        if key in current:
            raise CaseFileError(f"line {lineno}: duplicate key {key!r}")
        current[key] = value
    flush()
    if not cases:
        raise CaseFileError("no cases found in file")
    return cases


def parse_case_file(path: str | Path) -> list[CaseFile]:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise CaseFileError(f"cannot read case file {path}: {exc}") from exc
    return parse_case_text(text, base_dir=p.parent, name_hint=p.stem)


def _load_table(path: Path) -> ScaleFunction:
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or [h.strip() for h in header[:2]] != ["t", "value"]:
                raise CaseFileError(f"{path}: table needs a 't,value' header")
            pts, vals = [], []
            for row in reader:
                if not row:
                    continue
                pts.append(float(row[0]))
                vals.append(float(row[1]))
    except OSError as exc:
        raise CaseFileError(f"cannot read table {path}: {exc}") from exc
    except ValueError as exc:
        raise CaseFileError(f"{path}: {exc}") from exc
    if not pts:
        raise CaseFileError(f"{path}: table is empty")
    return ScaleFunction.from_table(pts, vals, name=str(path))


def horizon_scale() -> float:
    raw = os.environ.get("HORIZON_SCALE", "1")
    try:
        value = float(raw)
    except ValueError:
        raise CaseFileError(f"HORIZON_SCALE must be a number, got {raw!r}")
    if not value > 0:
        raise CaseFileError("HORIZON_SCALE must be positive")
    return value


def build_case(cf: CaseFile) -> tuple[str, HypothesisSet]:
    """Turn a parsed case file into (theorem id, HypothesisSet)."""
    raw = dict(cf.raw)
    raw.pop("theorem", None)
    try:
        scale = sc.parse_scale(raw.pop("scale"))
    except KeyError:
        raise CaseFileError(f"case {cf.case_id!r} is missing the 'scale' key")
    except (ValueError, TsineqError) as exc:
        raise CaseFileError(f"case {cf.case_id!r}: bad scale literal: {exc}") from exc

    nums = {"alpha": 1.0, "p": 2.0, "gamma": 0.0, "theta": 0.0, "beta": 0.0}
    for key in _NUMERIC_KEYS:
        if key in raw:
            try:
                nums[key] = float(raw.pop(key))
            except ValueError as exc:
                raise CaseFileError(f"case {cf.case_id!r}: {key} is not a number") from exc
    for key in ("a", "horizon"):
        if key not in nums:
            raise CaseFileError(f"case {cf.case_id!r} is missing {key!r}")
    if any(not math.isfinite(v) for v in nums.values()):
        raise CaseFileError(f"case {cf.case_id!r}: numeric fields must be finite")

    bools = {}
    for key in _BOOL_KEYS:
        value = raw.pop(key, "false").lower()
        if value not in ("true", "false", "1", "0"):
            raise CaseFileError(f"case {cf.case_id!r}: {key} must be true/false")
        bools[key] = value in ("true", "1")

    roles = {}
    for name in ROLE_NAMES:
        if name not in raw:
            continue
        value = raw.pop(name)
        if value.startswith("table:"):
            roles[name] = _load_table(cf.base_dir / value[len("table:"):].strip())
        else:
            try:
                roles[name] = ScaleFunction.from_expression(value, name=name)
            except ParseError as exc:
                raise CaseFileError(f"case {cf.case_id!r}, role {name}: {exc}") from exc

    horizon = nums["horizon"] * horizon_scale()
    try:
        a = sc.member(scale, nums["a"])
        horizon = sc.nearest_member_at_or_above(scale, horizon)
    except TsineqError as exc:
        raise CaseFileError(f"case {cf.case_id!r}: {exc}") from exc
    case = HypothesisSet(scale=scale, a=a, horizon=horizon, alpha=nums["alpha"],
                         p=nums["p"], gamma=nums["gamma"], theta=nums["theta"],
                         beta=nums["beta"], roles=roles,
                         as_printed=bools["as_printed"], force=bools["force"],
                         case_id=cf.case_id)
    return cf.theorem, case
