"""
File Formats
============
Readers and writers for the artifacts exchanged on the command line:

- curves: CSV of x,y rows with an optional '# base=<k>' first line, or
  JSON {"points": [[x, y], ...], "base_index": k}
- maps: CSV 't,u' under a '# L_m=...,L_n=...,mode=...' header, values
  with 17 significant digits so a write/read cycle is lossless
- tensor fixtures: JSON {"dim", "g", "b", optional "pullback"}

JSON reports are rounded to 12 significant digits.
"""

import json
import math
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Optional, Union

import numpy as np

from ..functional import BoundaryMode, Reparametrization
from ..geometry import Curve
from ..tensor import Metric, SymTensor
from ..utils.errors import DimensionMismatchError, DistminError, GridError, MalformedFileError
from ..utils.logger import logger

PathLike = Union[str, Path]

JSON_DIGITS = 12
GRID_RTOL = 1e-9

_BASE_RE = re.compile(r"^#\s*base\s*=\s*(\d+)\s*$")
_MAP_HEADER_RE = re.compile(
    r"^#\s*L_m\s*=\s*(?P<lm>[^,]+),\s*L_n\s*=\s*(?P<ln>[^,]+),\s*mode\s*=\s*(?P<mode>\w+)\s*$"
)


# --- JSON ---

def round_floats(obj: Any, digits: int = JSON_DIGITS) -> Any:
    """Recursively round floats to `digits` significant digits; NaN/inf become None."""
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return None
        return float(format(x, f".{digits}g"))
    if isinstance(obj, dict):
        return {k: round_floats(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v, digits) for v in obj]
    if isinstance(obj, np.ndarray):
        return round_floats(obj.tolist(), digits)
    return obj


def dump_json(payload: dict) -> str:
    return json.dumps(round_floats(payload), indent=2)


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedFileError(f"Cannot read {path}: {e}") from e


def _parse_rows(lines: Iterable[str], path: PathLike, columns: int) -> np.ndarray:
    rows = []
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([float(v) for v in line.split(",")])
        except ValueError:
            # A single non-numeric line is allowed as a column header
            if not rows and number <= 2:
                continue
            raise MalformedFileError(f"{path}: line {number} is not numeric: {line!r}")
        if len(rows[-1]) != columns:
            raise MalformedFileError(f"{path}: line {number} has {len(rows[-1])} fields, expected {columns}")
    if not rows:
        raise MalformedFileError(f"{path}: no data rows")
    return np.array(rows, dtype=float)


# --- Curves ---

def read_curve(path: PathLike, strict: bool = False) -> Curve:
    """
    Load a curve from CSV or JSON (chosen by suffix).

    Args:
        path: file path
        strict: also run the O(n^2) self-intersection test

    Returns:
        Curve
    """
    text = _read_text(path)
    if Path(path).suffix.lower() == ".json":
        try:
            data = json.loads(text)
            points = np.array(data["points"], dtype=float)
            base = int(data.get("base_index", 0))
        except (ValueError, KeyError, TypeError) as e:
            raise MalformedFileError(f"{path}: invalid curve JSON ({e})") from e
    else:
        lines = text.splitlines()
        base = 0
        if lines:
            match = _BASE_RE.match(lines[0].strip())
            if match:
                base = int(match.group(1))
        points = _parse_rows(lines, path, columns=2)

    curve = Curve(points, base)
    if strict:
        curve.check_simple()
    logger.debug(f"Read curve {path}: {curve.size} points, base {curve.base_index}")
    return curve


def write_curve(path: PathLike, curve: Curve) -> None:
    np.savetxt(
        path, curve.points, fmt="%.17g", delimiter=",",
        header=f"# base={curve.base_index}", comments="",
    )


# --- Maps ---

def write_map(path: PathLike, u: Reparametrization) -> None:
    """Write u as 't,u' rows under the lengths/mode header."""
    header = f"# L_m={u.source_length!r},L_n={u.target_length!r},mode={u.mode.value}\nt,u"
    np.savetxt(
        path, np.column_stack([u.grid, u.values]), fmt="%.17g", delimiter=",",
        header=header, comments="",
    )
    logger.debug(f"Wrote map {path}: m={u.grid_size}, mode={u.mode.value}")


def read_map(path: PathLike) -> Reparametrization:
    """
    Load a map written by write_map.

    Raises:
        MalformedFileError: missing header or bad rows
        GridError: abscissae are not the uniform grid on [0, L_m]
    """
    lines = _read_text(path).splitlines()
    match = _MAP_HEADER_RE.match(lines[0].strip()) if lines else None
    if not match:
        raise MalformedFileError(f"{path}: first line must be '# L_m=...,L_n=...,mode=...'")
    try:
        l_m, l_n = float(match.group("lm")), float(match.group("ln"))
        mode = BoundaryMode(match.group("mode"))
    except ValueError as e:
        raise MalformedFileError(f"{path}: bad header ({e})") from e

    data = _parse_rows(lines[1:], path, columns=2)
    t, values = data[:, 0], data[:, 1]
    m = t.size - 1
    expected = np.linspace(0.0, l_m, m + 1) if m > 0 else t
    if m < 1 or np.max(np.abs(t - expected)) > GRID_RTOL * l_m:
        raise GridError(f"{path}: abscissae are not a uniform grid on [0, {l_m:.6g}]")
    return Reparametrization(l_m, l_n, values, mode)


# --- Tensor fixtures ---

@dataclass
class TensorFixture:
    """A metric g and a tensor b at one point, optionally with a pullback metric."""
    dim: int
    g: Metric
    b: SymTensor
    pullback: Optional[SymTensor] = None


def read_tensor_fixture(path: PathLike) -> TensorFixture:
    text = _read_text(path)
    try:
        data = json.loads(text)
        dim = int(data["dim"])
        g = Metric(data["g"])
        b = SymTensor(data["b"])
        pullback = SymTensor(data["pullback"]) if data.get("pullback") is not None else None
    except DistminError:
        raise
    except (ValueError, KeyError, TypeError) as e:
        raise MalformedFileError(f"{path}: invalid tensor fixture ({e})") from e

    for name, obj in (("g", g), ("b", b), ("pullback", pullback)):
        if obj is not None and obj.dim != dim:
            raise DimensionMismatchError(f"{path}: {name} is {obj.dim}x{obj.dim}, expected dim={dim}")
    return TensorFixture(dim=dim, g=g, b=b, pullback=pullback)
