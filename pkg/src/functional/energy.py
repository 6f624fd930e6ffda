"""
Deformation Energy
==================
Reduced functional Psi(u) = int_0^L_m (u'^2 - 1)^2 dt, the full curve
energy Phi(h) for h = xi o u o gamma^-1, their discrete gradients and the
Euler-Lagrange residual u' u'' (3 u'^2 - 1).

Discretization: u' is the central difference about each cell midpoint and
the integral is the composite midpoint rule, i.e. Psi is integrated exactly
over the piecewise-linear interpolant of the grid values. Linear maps are
exact discrete stationary points.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .grid import MIN_GRID, cell_slopes, nodal_derivatives
from .reparametrization import BoundaryMode, Reparametrization
from ..geometry.parametrization import ArcLengthParam
from ..utils.errors import GridError, LengthMismatchError

# Second-variation necessary condition: u'^2 >= 1/3
UDOT_SQ_THRESHOLD = 1.0 / 3.0
LENGTH_RTOL = 1e-6


def _quartic_sum(speed_sq: np.ndarray, h: float) -> float:
    """h * sum (speed^2 - 1)^2, exactly rounded so results do not depend on summation order."""
    return h * math.fsum(((speed_sq - 1.0) ** 2).tolist())


def reduced_energy(values: np.ndarray, h: float) -> float:
    """
    Psi of an arbitrary grid function (monotone or not).

    Args:
        values: u_0..u_m
        h: grid spacing L_m / m

    Returns:
        Nonnegative energy
    """
    values = np.asarray(values, dtype=float)
    if values.size - 1 < MIN_GRID:
        raise GridError(f"Grid too coarse: m={values.size - 1} < {MIN_GRID}")
    s = cell_slopes(values, h)
    return _quartic_sum(s * s, h)


def psi(u: Reparametrization) -> float:
    """Reduced deformation energy of a reparametrization."""
    return reduced_energy(u.values, u.spacing)


def increment_energy(increments: np.ndarray, h: float) -> float:
    """Psi written in terms of the increments d_k = u_{k+1} - u_k."""
    s = np.asarray(increments, dtype=float) / h
    return _quartic_sum(s * s, h)


def increment_gradient(increments: np.ndarray, h: float) -> np.ndarray:
    """d Psi / d d_k = 4 s_k (s_k^2 - 1) with s_k = d_k / h."""
    s = np.asarray(increments, dtype=float) / h
    return 4.0 * s * (s * s - 1.0)


def energy_change(s_old: np.ndarray, s_new: np.ndarray, h: float) -> float:
    """
    Psi(new) - Psi(old) from cell slopes, term by term.

    Each term is factored as (a - b)(a + b)(a^2 + b^2 - 2) so small steps
    do not cancel against the full energy.
    """
    diff = (s_new - s_old) * (s_new + s_old) * (s_new * s_new + s_old * s_old - 2.0)
    return h * math.fsum(diff.tolist())


def psi_gradient(u: Reparametrization) -> np.ndarray:
    """
    Exact gradient of the discrete Psi with respect to u_1..u_{m-1}.

    The endpoints are fixed by the boundary mode and excluded.

    Returns:
        Array of length m - 1
    """
    r = increment_gradient(np.diff(u.values), u.spacing)
    return r[:-1] - r[1:]


def euler_lagrange_operator(u: Reparametrization) -> np.ndarray:
    """Continuum Euler-Lagrange expression 4 u'' (3 u'^2 - 1) at interior nodes."""
    u_dot, u_ddot, _ = nodal_derivatives(u.values, u.spacing)
    return 4.0 * u_ddot[1:-1] * (3.0 * u_dot[1:-1] ** 2 - 1.0)


def el_residual(u: Reparametrization) -> np.ndarray:
    """
    Pointwise u' u'' (3 u'^2 - 1) at the interior nodes.

    Same zero set on the admissible sets as the Euler-Lagrange operator.
    """
    h = u.spacing
    v = u.values
    u_dot = (v[2:] - v[:-2]) / (2.0 * h)
    u_ddot = (v[2:] - 2.0 * v[1:-1] + v[:-2]) / h ** 2
    return u_dot * u_ddot * (3.0 * u_dot ** 2 - 1.0)


def check_lengths(m_curve: ArcLengthParam, n_curve: ArcLengthParam, u: Reparametrization) -> None:
    """Raise LengthMismatchError unless u maps [0, L(M)] onto [0, L(N)] for these curves."""
    for label, expected, actual in (
        ("source", m_curve.length, u.source_length),
        ("target", n_curve.length, u.target_length),
    ):
        if abs(expected - actual) > LENGTH_RTOL * expected:
            raise LengthMismatchError(
                f"{label} length {actual:.12g} of the map does not match curve length {expected:.12g}"
            )


def map_points(m_curve: ArcLengthParam, n_curve: ArcLengthParam,
               u: Reparametrization) -> Tuple[np.ndarray, np.ndarray]:
    """
    The point map p -> xi(u(gamma^-1(p))) on the grid of u.

    Returns:
        (sources, images): gamma(t_k) and xi(u_k), each of shape (m + 1, 2)
    """
    check_lengths(m_curve, n_curve, u)
    # Scale the grid to the curve's own length to absorb the tolerance above
    t = u.grid * (m_curve.length / u.source_length)
    s = u.values * (n_curve.length / u.target_length)
    return m_curve.point_at(t), n_curve.point_at(s)


def phi_curves(m_curve: ArcLengthParam, n_curve: ArcLengthParam, u: Reparametrization) -> float:
    """
    Full energy Phi(h) for h = xi o u o gamma^-1.

    The deformed tangent |Dh gamma'| is the difference quotient of the
    composed point map over each cell; with |xi'| = 1 this reproduces Psi(u)
    up to chord-versus-arc error on N.
    """
    _, images = map_points(m_curve, n_curve, u)
    h = u.spacing
    chords = np.diff(images, axis=0)
    speed_sq = np.einsum("ij,ij->i", chords, chords) / h ** 2
    return _quartic_sum(speed_sq, h)


@dataclass
class EnergyReport:
    """Energy value together with first- and second-order diagnostics."""
    psi: float
    el_residual_sup: float
    min_udot_sq: float
    second_variation_ok: bool
    orientation: BoundaryMode
    functional: str = "psi"

    def __post_init__(self):
        if self.psi < 0:
            raise ValueError(f"Energy must be nonnegative, got {self.psi}")

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            "functional": self.functional,
            "psi": self.psi,
            "el_residual_sup": self.el_residual_sup,
            "min_udot_sq": self.min_udot_sq,
            "second_variation_ok": self.second_variation_ok,
            "orientation": self.orientation.value,
        }


def min_udot_sq(u: Reparametrization) -> Tuple[float, float]:
    """Minimum of u'^2 over the interior nodes and the abscissa where it occurs."""
    u_dot, _, _ = nodal_derivatives(u.values, u.spacing)
    interior = u_dot[1:-1] ** 2
    k = int(np.argmin(interior))
    return float(interior[k]), float(u.grid[k + 1])


def energy_report(u: Reparametrization, value: Optional[float] = None,
                  functional: str = "psi", tol: float = 1e-9) -> EnergyReport:
    """
    Build an EnergyReport for u.

    Args:
        u: the reparametrization
        value: energy to report (defaults to psi(u)); pass Phi for curve runs
        functional: label for the value, "psi" or "phi"
        tol: slack on the u'^2 >= 1/3 check
    """
    energy = psi(u) if value is None else value
    lowest, _ = min_udot_sq(u)
    return EnergyReport(
        psi=energy,
        el_residual_sup=float(np.max(np.abs(el_residual(u)))),
        min_udot_sq=lowest,
        second_variation_ok=bool(lowest >= UDOT_SQ_THRESHOLD - tol),
        orientation=u.mode,
        functional=functional,
    )
