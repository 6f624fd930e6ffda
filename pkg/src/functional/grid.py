"""
Uniform Grids
=============
Grid t_k = k L / m (k = 0..m) and the finite-difference stencils shared by
the energy, the residuals and the second variation.
"""

from typing import Tuple

import numpy as np

from ..utils.errors import GridError

MIN_GRID = 16


def uniform_grid(length: float, m: int) -> np.ndarray:
    """m + 1 equally spaced abscissae on [0, length], endpoints exact."""
    if m < MIN_GRID:
        raise GridError(f"Grid too coarse: m={m} < {MIN_GRID}")
    return np.linspace(0.0, length, m + 1)


def cell_slopes(values: np.ndarray, h: float) -> np.ndarray:
    """Central difference about each cell midpoint: (u_{k+1} - u_k) / h."""
    return np.diff(values) / h


def nodal_derivatives(values: np.ndarray, h: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    First, second and third derivatives at the nodes.

    Central differences in the interior, second-order one-sided stencils at
    the two ends; the third derivative is the central difference of the second.
    """
    u = np.asarray(values, dtype=float)
    if u.size < 5:
        raise GridError("Need at least 5 grid values for nodal derivatives")

    u_dot = np.gradient(u, h, edge_order=2)

    u_ddot = np.empty_like(u)
    u_ddot[1:-1] = (u[2:] - 2.0 * u[1:-1] + u[:-2]) / h ** 2
    u_ddot[0] = (2.0 * u[0] - 5.0 * u[1] + 4.0 * u[2] - u[3]) / h ** 2
    u_ddot[-1] = (2.0 * u[-1] - 5.0 * u[-2] + 4.0 * u[-3] - u[-4]) / h ** 2

    u_dddot = np.gradient(u_ddot, h, edge_order=2)
    return u_dot, u_ddot, u_dddot
