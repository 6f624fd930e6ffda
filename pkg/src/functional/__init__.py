# Functional package
from .grid import MIN_GRID, uniform_grid, cell_slopes, nodal_derivatives
from .reparametrization import BoundaryMode, Reparametrization
from .energy import (
    UDOT_SQ_THRESHOLD,
    EnergyReport,
    reduced_energy,
    psi,
    psi_gradient,
    increment_energy,
    increment_gradient,
    energy_change,
    euler_lagrange_operator,
    el_residual,
    check_lengths,
    map_points,
    phi_curves,
    min_udot_sq,
    energy_report,
)

__all__ = [
    "MIN_GRID",
    "uniform_grid",
    "cell_slopes",
    "nodal_derivatives",
    "BoundaryMode",
    "Reparametrization",
    "UDOT_SQ_THRESHOLD",
    "EnergyReport",
    "reduced_energy",
    "psi",
    "psi_gradient",
    "increment_energy",
    "increment_gradient",
    "energy_change",
    "euler_lagrange_operator",
    "el_residual",
    "check_lengths",
    "map_points",
    "phi_curves",
    "min_udot_sq",
    "energy_report",
]
