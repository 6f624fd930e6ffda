"""
Second Variation
================
Half the second derivative of Psi along the flow phi_t of a vector field y
on [0, L_m]:

    1/2 d^2/dt^2 Psi(u o phi_t) |_{t=0}
        = int A^2 + (u'^2 - 1) B dt,

where A = [L_Y h*g_N]_11 and B = [L_Y L_Y h*g_N]_11. A minimizer must
satisfy u'^2 >= 1/3 everywhere; probe fields drive the value negative
wherever that fails.

`flow_second_difference` is an independent finite-difference check that
integrates the flow numerically.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.integrate import solve_ivp, trapezoid
from scipy.interpolate import CubicSpline

from ..functional import (
    UDOT_SQ_THRESHOLD,
    Reparametrization,
    min_udot_sq,
    nodal_derivatives,
    reduced_energy,
)
from ..tensor import VectorFieldJet1D, lie_derivative_1d, lie_derivative_1d_second
from ..utils.errors import GridError, InputError
from ..utils.logger import logger

MIN_SECOND_VARIATION_GRID = 64
FLOW_RTOL = 1e-12
FLOW_ATOL = 1e-14


def _check_grid(u: Reparametrization, y: VectorFieldJet1D) -> None:
    if u.grid_size < MIN_SECOND_VARIATION_GRID:
        raise GridError(f"Need m >= {MIN_SECOND_VARIATION_GRID} for third derivatives, got {u.grid_size}")
    if y.size != u.grid_size + 1 or abs(y.length - u.source_length) > 1e-12 * u.source_length:
        raise GridError(
            f"Field grid ({y.size} points on [0, {y.length:.6g}]) does not match "
            f"map grid ({u.grid_size + 1} points on [0, {u.source_length:.6g}])"
        )


def second_variation_1d(u: Reparametrization, y: VectorFieldJet1D) -> float:
    """
    int [L_Y h*g_N]_11^2 + (u'^2 - 1) [L_Y L_Y h*g_N]_11 dt by the trapezoid rule.

    Args:
        u: reparametrization, m >= 64
        y: vector field jet on the same grid

    Returns:
        1/2 d^2/dt^2 Psi(u o phi_t) at t = 0
    """
    _check_grid(u, y)
    u_dot, u_ddot, u_dddot = nodal_derivatives(u.values, u.spacing)
    first = lie_derivative_1d(u_dot, u_ddot, y)
    second = lie_derivative_1d_second(u_dot, u_ddot, u_dddot, y)
    integrand = first ** 2 + (u_dot ** 2 - 1.0) * second
    return float(trapezoid(integrand, dx=u.spacing))


def second_variation_density(s) -> np.ndarray:
    """4 s^4 + 2 s^2 (s^2 - 1) = 2 s^2 (3 s^2 - 1): weight of y'^2 after integrating by parts."""
    s = np.asarray(s, dtype=float)
    return 2.0 * s ** 2 * (3.0 * s ** 2 - 1.0)


def truncated_second_variation(u: Reparametrization, y: VectorFieldJet1D) -> float:
    """
    The y'^2 part of the second variation, int 2 u'^2 (3 u'^2 - 1) y'^2 dt.

    The dropped terms all carry a factor y, so for probe fields this is the
    eps -> 0 limit of second_variation_1d.
    """
    _check_grid(u, y)
    u_dot, _, _ = nodal_derivatives(u.values, u.spacing)
    return float(trapezoid(second_variation_density(u_dot) * y.y_dot ** 2, dx=u.spacing))


@dataclass
class NecessaryCondition:
    """Outcome of the pointwise test u'^2 >= 1/3."""
    passed: bool
    min_udot_sq: float
    location: float
    threshold: float = UDOT_SQ_THRESHOLD

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "min_udot_sq": self.min_udot_sq,
            "location": self.location,
            "threshold": self.threshold,
        }


def necessary_condition_check(u: Reparametrization, tol: float = 1e-9) -> NecessaryCondition:
    """Pass iff u'^2 >= 1/3 - tol at every interior node."""
    lowest, where = min_udot_sq(u)
    passed = bool(lowest >= UDOT_SQ_THRESHOLD - tol)
    if not passed:
        logger.info(f"Necessary condition fails: u'^2={lowest:.6g} < 1/3 at t={where:.6g}")
    return NecessaryCondition(passed=passed, min_udot_sq=lowest, location=where)


def flow(field: Callable[[np.ndarray], np.ndarray], points: np.ndarray, tau: float) -> np.ndarray:
    """
    Time-tau flow of dx/dt = field(x) applied to each point.

    Integrated with DOP853 at tight tolerances.
    """
    points = np.asarray(points, dtype=float)
    if tau == 0.0:
        return points.copy()
    sol = solve_ivp(
        lambda _, x: field(x),
        (0.0, tau),
        points,
        method="DOP853",
        rtol=FLOW_RTOL,
        atol=FLOW_ATOL,
    )
    if not sol.success:
        raise InputError(f"Flow integration failed: {sol.message}")
    return sol.y[:, -1]


def flow_second_difference(
    u: Reparametrization,
    y: VectorFieldJet1D,
    delta: float = 1e-3,
    u_func: Optional[Callable[[np.ndarray], np.ndarray]] = None,
    y_func: Optional[Callable[[np.ndarray], np.ndarray]] = None,
) -> float:
    """
    1/2 (Psi(u o phi_delta) - 2 Psi(u) + Psi(u o phi_-delta)) / delta^2.

    Args:
        u: reparametrization
        y: vector field; must vanish at both ends so the flow fixes them
        delta: flow time
        u_func: exact u off the grid (cubic spline of u.values otherwise)
        y_func: exact y off the grid (cubic spline of y.y otherwise)

    Returns:
        Finite-difference estimate of second_variation_1d(u, y)
    """
    _check_grid(u, y)
    if max(abs(y.y[0]), abs(y.y[-1])) > 1e-12:
        raise InputError("Flow must fix the endpoints: y(0) and y(L_m) must vanish")

    t = u.grid
    if u_func is None:
        u_func = CubicSpline(t, u.values)
    if y_func is None:
        y_func = CubicSpline(t, y.y)

    def energy_after(tau: float) -> float:
        phi = flow(y_func, t, tau)
        phi[0], phi[-1] = 0.0, u.source_length
        return reduced_energy(u_func(phi), u.spacing)

    plus, center, minus = energy_after(delta), energy_after(0.0), energy_after(-delta)
    value = 0.5 * (plus - 2.0 * center + minus) / delta ** 2
    logger.debug(f"Flow second difference at delta={delta:g}: {value:.12g}")
    return float(value)
