"""
Reparametrizations
==================
Grid form of u = xi^-1 o h o gamma: a strictly monotone map
[0, L_m] -> [0, L_n] with the boundary values of the admissible set B
(orientation preserving) or C (orientation reversing).
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .grid import MIN_GRID, uniform_grid
from ..utils.errors import GridError, InputError


class BoundaryMode(str, Enum):
    """Which admissible set the map belongs to."""
    PRESERVE = "preserve"  # u(0) = 0, u(L_m) = L_n
    REVERSE = "reverse"    # u(0) = L_n, u(L_m) = 0


@dataclass(frozen=True, eq=False)
class Reparametrization:
    """
    Grid values u_k = u(t_k) on t_k = k L_m / m, k = 0..m.

    Attributes:
        source_length: L_m
        target_length: L_n
        values: (m + 1,) array
        mode: boundary mode
    """
    source_length: float
    target_length: float
    values: np.ndarray
    mode: BoundaryMode = BoundaryMode.PRESERVE

    def __post_init__(self):
        mode = BoundaryMode(self.mode)
        values = np.array(self.values, dtype=float)
        l_m, l_n = float(self.source_length), float(self.target_length)

        if not (l_m > 0 and l_n > 0):
            raise InputError(f"Lengths must be positive, got L_m={l_m}, L_n={l_n}")
        if values.ndim != 1:
            raise GridError("Reparametrization values must be 1-D")
        if values.size - 1 < MIN_GRID:
            raise GridError(f"Grid too coarse: m={values.size - 1} < {MIN_GRID}")
        if not np.all(np.isfinite(values)):
            raise InputError("Reparametrization values must be finite")

        start, end = (0.0, l_n) if mode is BoundaryMode.PRESERVE else (l_n, 0.0)
        if values[0] != start or values[-1] != end:
            raise InputError(
                f"Boundary values ({values[0]!r}, {values[-1]!r}) do not match "
                f"{mode.value} mode ({start!r}, {end!r})"
            )

        steps = np.diff(values)
        monotone = np.all(steps > 0) if mode is BoundaryMode.PRESERVE else np.all(steps < 0)
        if not monotone:
            raise InputError(f"Values are not strictly monotone for {mode.value} mode")
        if values.min() < 0.0 or values.max() > l_n:
            raise InputError("Values leave [0, L_n]")

        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "source_length", l_m)
        object.__setattr__(self, "target_length", l_n)

    @property
    def grid_size(self) -> int:
        """Number of intervals m."""
        return self.values.size - 1

    @property
    def spacing(self) -> float:
        return self.source_length / self.grid_size

    @property
    def grid(self) -> np.ndarray:
        return uniform_grid(self.source_length, self.grid_size)

    @property
    def ratio(self) -> float:
        return self.target_length / self.source_length

    def increments(self) -> np.ndarray:
        """Positive increments d_k, summing to L_n in either mode."""
        steps = np.diff(self.values)
        return steps if self.mode is BoundaryMode.PRESERVE else -steps

    def reversed(self) -> "Reparametrization":
        """t -> L_n - u(t), the same map in the other boundary mode."""
        other = BoundaryMode.REVERSE if self.mode is BoundaryMode.PRESERVE else BoundaryMode.PRESERVE
        values = self.target_length - self.values
        # Keep endpoints exact
        values[0], values[-1] = (0.0, self.target_length) if other is BoundaryMode.PRESERVE else (self.target_length, 0.0)
        return Reparametrization(self.source_length, self.target_length, values, other)

    @classmethod
    def from_increments(
        cls,
        source_length: float,
        target_length: float,
        increments: np.ndarray,
        mode: BoundaryMode = BoundaryMode.PRESERVE,
    ) -> "Reparametrization":
        """Accumulate positive increments into grid values, endpoints pinned."""
        cumulative = np.concatenate([[0.0], np.cumsum(increments)])
        cumulative[-1] = target_length
        if BoundaryMode(mode) is BoundaryMode.PRESERVE:
            values = cumulative
        else:
            values = target_length - cumulative
            values[0], values[-1] = target_length, 0.0
        return cls(source_length, target_length, values, mode)

    @classmethod
    def linear(cls, source_length: float, target_length: float, m: int,
               mode: BoundaryMode = BoundaryMode.PRESERVE) -> "Reparametrization":
        """v(t) = (L_n/L_m) t or w(t) = -(L_n/L_m) t + L_n."""
        t = uniform_grid(source_length, m)
        ratio = target_length / source_length
        if BoundaryMode(mode) is BoundaryMode.PRESERVE:
            values = ratio * t
            values[-1] = target_length
        else:
            values = -ratio * t + target_length
            values[-1] = 0.0
        return cls(source_length, target_length, values, mode)
