# Tensor package
from .algebra import SymTensor, Metric, strain, g_contract, strain_energy_density
from .lie import (
    VectorFieldJet1D,
    lie_derivative_1d,
    lie_derivative_1d_second,
    lie_derivative_general,
    periodic_gradient,
)

__all__ = [
    "SymTensor",
    "Metric",
    "strain",
    "g_contract",
    "strain_energy_density",
    "VectorFieldJet1D",
    "lie_derivative_1d",
    "lie_derivative_1d_second",
    "lie_derivative_general",
    "periodic_gradient",
]
