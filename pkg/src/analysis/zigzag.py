"""
Zig-Zag Minimizing Sequence
===========================
When L_n < L_m the infimum of Psi over B is 0 and is not attained. A
piecewise-linear profile phi with slopes +-1 has Psi(phi) = 0 and meets
the boundary conditions; mollifying its corners at width
delta_k = L_m / (16 k) gives smooth maps phi_k with Psi(phi_k) = O(1/k).
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from ..functional import reduced_energy, uniform_grid
from ..utils.config import settings
from ..utils.errors import GridError, InputError, RegimeError
from ..utils.logger import logger

# Mollifier half-width delta_k = L_m / (WIDTH_DIVISOR * k)
WIDTH_DIVISOR = 16
MIN_KERNEL_NODES = 4


@dataclass(frozen=True)
class ZigZagProfile:
    """
    Teeth of an ascending run (L_m + L_n) / (2 T) followed by a descending
    run (L_m - L_n) / (2 T), all slopes exactly +-1.
    """
    source_length: float
    target_length: float
    teeth: int = 1

    def __post_init__(self):
        if not (self.source_length > 0 and self.target_length > 0):
            raise InputError("Lengths must be positive")
        if self.target_length >= self.source_length:
            raise RegimeError(
                "A zig-zag with slopes +-1 needs L_n < L_m; use analytic_minimizers() instead"
            )
        if self.teeth < 1:
            raise InputError(f"Need at least one tooth, got {self.teeth}")

    @property
    def knots(self) -> np.ndarray:
        """Abscissae of the segment ends, 0 .. L_m."""
        up = (self.source_length + self.target_length) / (2 * self.teeth)
        period = self.source_length / self.teeth
        starts = np.arange(self.teeth) * period
        inner = np.column_stack([starts, starts + up]).ravel()
        out = np.append(inner, self.source_length)
        return out

    @property
    def knot_values(self) -> np.ndarray:
        up = (self.source_length + self.target_length) / (2 * self.teeth)
        rise = self.target_length / self.teeth
        bases = np.arange(self.teeth) * rise
        inner = np.column_stack([bases, bases + up]).ravel()
        return np.append(inner, self.target_length)

    @property
    def slopes(self) -> np.ndarray:
        return np.diff(self.knot_values) / np.diff(self.knots)

    def __call__(self, t) -> np.ndarray:
        """Profile values, extended linearly past both ends."""
        t = np.asarray(t, dtype=float)
        knots, values, slopes = self.knots, self.knot_values, self.slopes
        out = np.interp(t, knots, values)
        out = np.where(t < 0.0, slopes[0] * t, out)
        out = np.where(t > self.source_length, values[-1] + slopes[-1] * (t - self.source_length), out)
        return out


def profile_energy(profile: ZigZagProfile) -> float:
    """Psi of the unmollified profile, integrated exactly segment by segment."""
    lengths = np.diff(profile.knots)
    s = profile.slopes
    return math.fsum((lengths * (s * s - 1.0) ** 2).tolist())


def bump_kernel(delta: float, h: float) -> np.ndarray:
    """Normalized samples of exp(1/(s^2 - 1)), s = x / delta, at spacing h."""
    half = int(math.ceil(delta / h))
    s = np.arange(-half, half + 1) * h / delta
    inside = np.abs(s) < 1.0
    kernel = np.zeros_like(s)
    kernel[inside] = np.exp(1.0 / (s[inside] ** 2 - 1.0))
    return kernel / kernel.sum()


def mollify(profile: ZigZagProfile, delta: float, m: int) -> np.ndarray:
    """
    Convolve the profile with the bump kernel of half-width delta.

    Returns:
        Grid values on t_k = k L_m / m with phi_k(0) = 0 and phi_k(L_m) = L_n exactly
    """
    h = profile.source_length / m
    if delta < MIN_KERNEL_NODES * h:
        raise GridError(
            f"Mollifier width {delta:.3e} resolved by fewer than {MIN_KERNEL_NODES} grid steps (h={h:.3e})"
        )
    kernel = bump_kernel(delta, h)
    pad = kernel.size // 2
    t_ext = np.arange(-pad, m + pad + 1) * h
    smoothed = np.convolve(profile(t_ext), kernel, mode="valid")
    smoothed[0], smoothed[-1] = 0.0, profile.target_length
    return smoothed


@dataclass
class ZigZagSequence:
    """Member k of the minimizing sequence."""
    k: int
    delta: float
    phi_profile: ZigZagProfile
    smoothed: np.ndarray = field(repr=False)
    energy: float

    @property
    def grid(self) -> np.ndarray:
        return uniform_grid(self.phi_profile.source_length, self.smoothed.size - 1)

    def to_dict(self) -> dict:
        return {"k": self.k, "delta": self.delta, "energy": self.energy}


def zigzag_sequence(
    source_length: float,
    target_length: float,
    k_max: int,
    m: Optional[int] = None,
    teeth: int = 1,
) -> List[ZigZagSequence]:
    """
    Build phi_1 .. phi_{k_max} for L_n < L_m.

    Args:
        source_length: L_m
        target_length: L_n < L_m
        k_max: last index
        m: grid intervals (DISTMIN_SEQUENCE_GRID by default)
        teeth: teeth of the underlying profile

    Returns:
        One entry per k with Psi(phi_k)
    """
    if k_max < 1:
        raise InputError(f"k_max must be at least 1, got {k_max}")
    profile = ZigZagProfile(source_length, target_length, teeth)
    m = m or settings.sequence_grid
    h = source_length / m

    logger.info(f"Zig-zag sequence: L_m={source_length:.6g}, L_n={target_length:.6g}, k<= {k_max}, m={m}")
    sequence = []
    for k in range(1, k_max + 1):
        delta = source_length / (WIDTH_DIVISOR * k)
        values = mollify(profile, delta, m)
        energy = reduced_energy(values, h)
        logger.debug(f"   k={k}: delta={delta:.4e}, psi={energy:.6e}")
        sequence.append(ZigZagSequence(k=k, delta=delta, phi_profile=profile, smoothed=values, energy=energy))
    return sequence


def decay_rate(sequence: List[ZigZagSequence], k_min: int = 2) -> float:
    """Least-squares slope of log Psi(phi_k) against log k over k >= k_min."""
    picked = [s for s in sequence if s.k >= k_min]
    if len(picked) < 2:
        raise InputError("Need at least two sequence members to fit a decay rate")
    k = np.log([s.k for s in picked])
    e = np.log([s.energy for s in picked])
    slope, _ = np.polyfit(k, e, 1)
    return float(slope)
