"""
Lie Derivatives
===============
Component formula for the Lie derivative of a covariant 2-tensor field

    [L_X beta]_ij = X^k d_k beta_ij + beta_kj d_i X^k + beta_ik d_j X^k

in any dimension, plus the one-dimensional specialization along a
reparametrization u:

    [L_Y h*g_N]_11 = 2 u' (u'' y + u' y').
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..utils.errors import DimensionMismatchError, GridError

PERIODIC_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class VectorFieldJet1D:
    """
    A vector field Y = y d/dt on [0, L] with its first two derivatives.

    All arrays live on the uniform grid t_k = k L / m, k = 0..m.
    """
    y: np.ndarray
    y_dot: np.ndarray
    y_ddot: np.ndarray
    length: float
    periodic: bool = True

    def __post_init__(self):
        arrays = [np.array(a, dtype=float) for a in (self.y, self.y_dot, self.y_ddot)]
        sizes = {a.shape for a in arrays}
        if len(sizes) != 1 or arrays[0].ndim != 1:
            raise GridError(f"Jet arrays must be 1-D of equal size, got {sorted(sizes)}")
        if arrays[0].size < 3:
            raise GridError("Jet needs at least 3 grid points")
        if not self.length > 0:
            raise GridError("Jet interval length must be positive")

        if self.periodic:
            for name, a in zip(("y", "y_dot", "y_ddot"), arrays):
                if abs(a[0] - a[-1]) > PERIODIC_TOL:
                    raise GridError(f"{name} is not periodic: {a[0]!r} != {a[-1]!r}")

        for name, a in zip(("y", "y_dot", "y_ddot"), arrays):
            a.setflags(write=False)
            object.__setattr__(self, name, a)

    @property
    def size(self) -> int:
        return self.y.size

    @property
    def spacing(self) -> float:
        return self.length / (self.size - 1)

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(0.0, self.length, self.size)

    @classmethod
    def from_values(cls, y, length: float, periodic: bool = True) -> "VectorFieldJet1D":
        """Build a jet from samples of y alone, derivatives by central differences."""
        y = np.asarray(y, dtype=float)
        h = length / (y.size - 1)
        if periodic:
            # y[-1] duplicates y[0]; difference on the circle and close up again
            core = y[:-1]
            d1 = (np.roll(core, -1) - np.roll(core, 1)) / (2.0 * h)
            d2 = (np.roll(core, -1) - 2.0 * core + np.roll(core, 1)) / h ** 2
            y_dot = np.append(d1, d1[0])
            y_ddot = np.append(d2, d2[0])
        else:
            y_dot = np.gradient(y, h, edge_order=2)
            y_ddot = np.gradient(y_dot, h, edge_order=2)
        return cls(y, y_dot, y_ddot, length, periodic)

    @classmethod
    def zero(cls, size: int, length: float) -> "VectorFieldJet1D":
        z = np.zeros(size)
        return cls(z, z, z, length)


def lie_derivative_1d(u_dot: np.ndarray, u_ddot: np.ndarray, field: VectorFieldJet1D) -> np.ndarray:
    """
    [L_Y h*g_N]_11 = 2 u' (u'' y + u' y') pointwise.

    Args:
        u_dot, u_ddot: first and second derivatives of u on the jet's grid
        field: the vector field jet

    Returns:
        Grid function of the same size
    """
    u_dot = np.asarray(u_dot, dtype=float)
    u_ddot = np.asarray(u_ddot, dtype=float)
    if u_dot.shape != field.y.shape or u_ddot.shape != field.y.shape:
        raise GridError(
            f"Grid mismatch: u has {u_dot.shape}/{u_ddot.shape}, field has {field.y.shape}"
        )
    return 2.0 * u_dot * (u_ddot * field.y + u_dot * field.y_dot)


def lie_derivative_1d_second(u_dot, u_ddot, u_dddot, field: VectorFieldJet1D) -> np.ndarray:
    """
    [L_Y L_Y h*g_N]_11 = 2 (u''^2 y^2 + u' u''' y^2 + 5 u' u'' y' y + u'^2 y'' y + 2 u'^2 y'^2).
    """
    u_dot, u_ddot, u_dddot = (np.asarray(a, dtype=float) for a in (u_dot, u_ddot, u_dddot))
    for a in (u_dot, u_ddot, u_dddot):
        if a.shape != field.y.shape:
            raise GridError(f"Grid mismatch: {a.shape} vs {field.y.shape}")
    y, yd, ydd = field.y, field.y_dot, field.y_ddot
    return 2.0 * (
        u_ddot ** 2 * y ** 2
        + u_dot * u_dddot * y ** 2
        + 5.0 * u_dot * u_ddot * yd * y
        + u_dot ** 2 * ydd * y
        + 2.0 * u_dot ** 2 * yd ** 2
    )


def periodic_gradient(field: np.ndarray, spacing: Sequence[float], n: int) -> np.ndarray:
    """
    Second-order central differences with periodic wraparound.

    Args:
        field: array of shape grid + extra, grid having n axes
        spacing: grid step along each of the n axes

    Returns:
        Array of shape grid + extra + (n,), last axis indexing d/dx^k
    """
    if len(spacing) != n:
        raise DimensionMismatchError(f"Need {n} grid spacings, got {len(spacing)}")
    parts = [
        (np.roll(field, -1, axis=k) - np.roll(field, 1, axis=k)) / (2.0 * spacing[k])
        for k in range(n)
    ]
    return np.stack(parts, axis=-1)


def lie_derivative_general(
    beta: np.ndarray,
    x_field: np.ndarray,
    spacing: Optional[Sequence[float]] = None,
    d_beta: Optional[np.ndarray] = None,
    d_x: Optional[np.ndarray] = None,
) -> np.ndarray:
    """
    Componentwise Lie derivative of a covariant 2-tensor field.

    Args:
        beta: components, shape grid + (n, n)
        x_field: vector field components X^k, shape grid + (n,)
        spacing: grid steps of an n-axis periodic grid (needed when
            derivatives are not supplied)
        d_beta: optional d beta_ij / dx^k, shape grid + (n, n, n), k last
        d_x: optional d X^k / dx^i, shape grid + (n, n), indexed [..., k, i]

    Returns:
        [L_X beta]_ij, shape grid + (n, n)
    """
    beta = np.asarray(beta, dtype=float)
    x_field = np.asarray(x_field, dtype=float)
    if beta.ndim < 2 or beta.shape[-1] != beta.shape[-2]:
        raise DimensionMismatchError(f"beta must end in (n, n), got {beta.shape}")
    n = beta.shape[-1]
    grid_shape = beta.shape[:-2]
    if x_field.shape != grid_shape + (n,):
        raise DimensionMismatchError(
            f"X has shape {x_field.shape}, expected {grid_shape + (n,)}"
        )

    if d_beta is None or d_x is None:
        if spacing is None:
            raise GridError("Grid spacing is required when derivatives are not supplied")
        if len(grid_shape) != n:
            raise GridError(
                f"Finite differences need an {n}-axis grid, got grid shape {grid_shape}"
            )
    if d_beta is None:
        d_beta = periodic_gradient(beta, spacing, n)
    if d_x is None:
        # periodic_gradient gives [..., k, i] = d X^k / dx^i
        d_x = periodic_gradient(x_field, spacing, n)

    d_beta = np.asarray(d_beta, dtype=float)
    d_x = np.asarray(d_x, dtype=float)
    if d_beta.shape != grid_shape + (n, n, n):
        raise DimensionMismatchError(f"d_beta has shape {d_beta.shape}")
    if d_x.shape != grid_shape + (n, n):
        raise DimensionMismatchError(f"d_x has shape {d_x.shape}")

    transport = np.einsum("...k,...ijk->...ij", x_field, d_beta)
    left = np.einsum("...kj,...ki->...ij", beta, d_x)
    right = np.einsum("...ik,...kj->...ij", beta, d_x)
    return transport + left + right
