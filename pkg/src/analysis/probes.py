"""
Probe Fields
============
Vector fields y = eps * rho(t / eps) * zeta(t) built from a period-1
sawtooth rho and a smooth bump zeta with compact support in (0, L_m).
As eps -> 0, y' ^2 approaches zeta^2 while y itself vanishes, which
isolates the y'^2 terms of the second variation.
"""

from dataclasses import dataclass

import numpy as np

from ..functional import uniform_grid
from ..tensor import VectorFieldJet1D
from ..utils.errors import InputError


def sawtooth(s) -> np.ndarray:
    """rho(s) = s on [0, 1/2), 1 - s on [1/2, 1), extended with period 1."""
    frac = np.mod(np.asarray(s, dtype=float), 1.0)
    return np.where(frac < 0.5, frac, 1.0 - frac)


def sawtooth_slope(s) -> np.ndarray:
    """rho' = +1 on the rising half-period and -1 on the falling one."""
    frac = np.mod(np.asarray(s, dtype=float), 1.0)
    return np.where(frac < 0.5, 1.0, -1.0)


def bump(t, center: float, radius: float) -> np.ndarray:
    """Standard bump exp(1 - 1/(1 - x^2)), x = (t - center)/radius; peak 1 at the center."""
    x = (np.asarray(t, dtype=float) - center) / radius
    inside = np.abs(x) < 1.0
    out = np.zeros_like(x)
    xi = x[inside]
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - xi * xi))
    return out


def bump_slope(t, center: float, radius: float) -> np.ndarray:
    """Derivative of bump() with respect to t."""
    x = (np.asarray(t, dtype=float) - center) / radius
    inside = np.abs(x) < 1.0
    out = np.zeros_like(x)
    xi = x[inside]
    q = 1.0 - xi * xi
    out[inside] = np.exp(1.0 - 1.0 / q) * (-2.0 * xi / q ** 2) / radius
    return out


@dataclass(frozen=True)
class BumpSpec:
    """zeta = amplitude * bump(t, center, radius)."""
    center: float
    radius: float
    amplitude: float = 1.0

    def __post_init__(self):
        if not self.radius > 0:
            raise InputError(f"Bump radius must be positive, got {self.radius}")

    def check_support(self, length: float) -> None:
        if self.center - self.radius <= 0.0 or self.center + self.radius >= length:
            raise InputError(
                f"Bump support [{self.center - self.radius:.6g}, {self.center + self.radius:.6g}] "
                f"is not inside (0, {length:.6g})"
            )

    def values(self, t) -> np.ndarray:
        return self.amplitude * bump(t, self.center, self.radius)

    def slopes(self, t) -> np.ndarray:
        return self.amplitude * bump_slope(t, self.center, self.radius)


@dataclass(frozen=True, eq=False)
class ProbeField:
    """y = eps rho(t/eps) zeta(t) on a uniform grid, with its jet."""
    epsilon: float
    spec: BumpSpec
    zeta: np.ndarray
    jet: VectorFieldJet1D

    @property
    def y(self) -> np.ndarray:
        return self.jet.y

    @property
    def grid(self) -> np.ndarray:
        return self.jet.grid


def probe_field(epsilon: float, spec: BumpSpec, m: int, length: float = 1.0) -> ProbeField:
    """
    Assemble the probe field on the m-interval grid of [0, length].

    y and y' are evaluated in closed form (rho' = +-1 almost everywhere);
    y'' is the central difference of y', so each corner of the sawtooth
    contributes a discrete delta mass. Resolve eps with many grid steps.

    Args:
        epsilon: sawtooth period, > 0
        spec: bump zeta, supported inside (0, length)
        m: grid intervals
        length: L_m

    Returns:
        ProbeField
    """
    if not epsilon > 0:
        raise InputError(f"epsilon must be positive, got {epsilon}")
    spec.check_support(length)

    t = uniform_grid(length, m)
    h = length / m
    zeta = spec.values(t)
    rho = sawtooth(t / epsilon)

    y = epsilon * rho * zeta
    y_dot = sawtooth_slope(t / epsilon) * zeta + epsilon * rho * spec.slopes(t)
    y_ddot = np.gradient(y_dot, h)
    return ProbeField(
        epsilon=epsilon,
        spec=spec,
        zeta=zeta,
        jet=VectorFieldJet1D(y, y_dot, y_ddot, length),
    )


def random_periodic_field(
    length: float,
    m: int,
    rng: np.random.Generator,
    modes: int = 4,
    amplitude: float = 0.05,
) -> VectorFieldJet1D:
    """
    Random trigonometric polynomial of the given number of modes, period `length`.

    Derivatives are exact, so the jet satisfies the periodic
    integration-by-parts identities to rounding.
    """
    t = uniform_grid(length, m)
    y = np.zeros_like(t)
    y_dot = np.zeros_like(t)
    y_ddot = np.zeros_like(t)
    for j in range(1, modes + 1):
        omega = 2.0 * np.pi * j / length
        a, b = amplitude * rng.standard_normal(2) / j
        sin, cos = np.sin(omega * t), np.cos(omega * t)
        y += a * sin + b * cos
        y_dot += omega * (a * cos - b * sin)
        y_ddot -= omega ** 2 * (a * sin + b * cos)
    # Closing node duplicates the first; remove rounding drift
    y[-1], y_dot[-1], y_ddot[-1] = y[0], y_dot[0], y_ddot[0]
    return VectorFieldJet1D(y, y_dot, y_ddot, length)
