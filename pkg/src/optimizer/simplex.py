""" Euclidean projections onto (shifted) simplices

A positive simplex is the set { x | sum_i x_i = s, x_i >= 0 }. Increments
of a monotone grid map live on the shifted simplex
{ d | sum_i d_i = total, d_i >= floor }, which is the positive simplex of
radius total - n * floor translated by floor.
"""

import numpy as np

from ..utils.errors import PreconditionError


def euclidean_proj_simplex(v: np.ndarray, s: float = 1.0) -> np.ndarray:
    """ Compute the Euclidean projection on a positive simplex

    Solves  min_w 0.5 * || w - v ||_2^2  s.t.  sum_i w_i = s, w_i >= 0
    by sorting v and thresholding (O(n log n)).

    Parameters
    ----------
    v: (n,) numpy array
    s: radius of the simplex, strictly positive

    Returns
    -------
    w: (n,) numpy array, projection of v
    """
    if not s > 0:
        raise PreconditionError(f"Radius s must be strictly positive, got {s}")
    v = np.asarray(v, dtype=float)
    n, = v.shape
    # get the array of cumulative sums of a sorted (decreasing) copy of v
    u = np.sort(v)[::-1]
    cssv = np.cumsum(u)
    # number of > 0 components of the optimal solution
    rho = np.nonzero(u * np.arange(1, n + 1) > (cssv - s))[0][-1]
    # Lagrange multiplier of the sum constraint
    theta = (cssv[rho] - s) / (rho + 1.0)
    return (v - theta).clip(min=0)


def project_shifted_simplex(v: np.ndarray, total: float, floor: float) -> np.ndarray:
    """
    Project onto { d | sum d = total, d >= floor }.

    Args:
        v: point to project
        total: required sum
        floor: lower bound for every component

    Returns:
        Projected point; components equal to `floor` are the active bounds
    """
    v = np.asarray(v, dtype=float)
    radius = total - v.size * floor
    if not radius > 0:
        raise PreconditionError(
            f"Floor {floor:.3e} too large for {v.size} increments summing to {total:.6g}"
        )
    return euclidean_proj_simplex(v - floor, radius) + floor
