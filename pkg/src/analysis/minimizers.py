"""
Closed-Form Minimizers
======================
For L_n >= L_m the reduced energy has exactly two minimizers, the linear
maps v (orientation preserving) and w (orientation reversing), and the
minimal value of the curve energy is

    Phi_min = (L_n^2 - L_m^2)^2 / L_m^3.

Below that ratio the regime is classified: no minimum exists when
L_n / L_m < 1/sqrt(3); the band [1/sqrt(3), 1) is left open.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from .second_variation import NecessaryCondition, necessary_condition_check
from ..functional import (
    UDOT_SQ_THRESHOLD,
    BoundaryMode,
    EnergyReport,
    Reparametrization,
    energy_report,
)
from ..geometry import ArcLengthParam
from ..utils.errors import InputError, RegimeError
from ..utils.logger import logger

RATIO_BOUND = 1.0 / math.sqrt(3.0)
REGIME_TOL = 1e-12


class Regime(str, Enum):
    MINIMIZERS_EXIST = "minimizers-exist"
    NO_MINIMUM_PROVEN = "no-minimum-proven"
    OPEN_BAND = "open-band"


class Minimizer(str, Enum):
    H1 = "h1"  # xi o v o gamma^-1
    H2 = "h2"  # xi o w o gamma^-1


def phi_min(source_length: float, target_length: float) -> float:
    """(L_n^2 - L_m^2)^2 / L_m^3."""
    return (target_length ** 2 - source_length ** 2) ** 2 / source_length ** 3


def _check_positive(source_length: float, target_length: float) -> None:
    if not (source_length > 0 and target_length > 0):
        raise InputError(f"Lengths must be positive, got L_m={source_length}, L_n={target_length}")


def _require_minimizers(source_length: float, target_length: float) -> None:
    _check_positive(source_length, target_length)
    if target_length < source_length:
        raise RegimeError(
            f"No minimizer for L_n/L_m={target_length / source_length:.6g} < 1; "
            f"use diagnose() to classify this regime"
        )


def analytic_minimizers(
    source_length: float, target_length: float, m: int = 1024
) -> Tuple[Reparametrization, Reparametrization, float]:
    """
    The two minimizers on an m-interval grid and the minimal energy.

    Returns:
        (v, w, phi_min)

    Raises:
        RegimeError: when L_n < L_m
    """
    _require_minimizers(source_length, target_length)
    v = Reparametrization.linear(source_length, target_length, m, BoundaryMode.PRESERVE)
    w = Reparametrization.linear(source_length, target_length, m, BoundaryMode.REVERSE)
    return v, w, phi_min(source_length, target_length)


@dataclass
class PointMap:
    """A diffeomorphism sampled at the arc-length nodes of the source curve."""
    sources: np.ndarray
    images: np.ndarray
    which: Minimizer

    def __len__(self) -> int:
        return len(self.sources)

    def to_dict(self) -> dict:
        return {
            "which": self.which.value,
            "sources": self.sources.tolist(),
            "images": self.images.tolist(),
        }


def compose_minimizer(
    m_curve: ArcLengthParam, n_curve: ArcLengthParam, which: Minimizer = Minimizer.H1
) -> PointMap:
    """
    Sample h1 = xi o v o gamma^-1 or h2 = xi o w o gamma^-1.

    Sources are the samples of m_curve; each image is the point of n_curve
    at arc length v(t_k) (or w(t_k)). The base point maps to the base point.
    """
    which = Minimizer(which)
    l_m, l_n = m_curve.length, n_curve.length
    _require_minimizers(l_m, l_n)

    mode = BoundaryMode.PRESERVE if which is Minimizer.H1 else BoundaryMode.REVERSE
    u = Reparametrization.linear(l_m, l_n, m_curve.size, mode)
    images = n_curve.point_at(u.values[:-1])
    return PointMap(sources=m_curve.samples.copy(), images=images, which=which)


@dataclass
class Diagnosis:
    """Regime verdict for a pair of curve lengths."""
    source_length: float
    target_length: float
    ratio: float
    regime: Regime
    phi_min: Optional[float] = None
    ratio_bound: float = RATIO_BOUND
    second_variation_threshold: float = UDOT_SQ_THRESHOLD

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            "source_length": self.source_length,
            "target_length": self.target_length,
            "ratio": self.ratio,
            "regime": self.regime.value,
            "phi_min": self.phi_min,
            "ratio_bound": self.ratio_bound,
            "second_variation_threshold": self.second_variation_threshold,
        }


def classify(ratio: float) -> Regime:
    if ratio >= 1.0:
        return Regime.MINIMIZERS_EXIST
    if ratio < RATIO_BOUND - REGIME_TOL:
        return Regime.NO_MINIMUM_PROVEN
    return Regime.OPEN_BAND


def diagnose(source_length: float, target_length: float) -> Diagnosis:
    """
    Classify L_n / L_m into one of the three regimes.

    Args:
        source_length: L_m > 0
        target_length: L_n > 0

    Returns:
        Diagnosis, with phi_min set only when minimizers exist
    """
    _check_positive(source_length, target_length)
    ratio = target_length / source_length
    regime = classify(ratio)
    logger.info(f"Ratio L_n/L_m={ratio:.12g}: {regime.value}")
    return Diagnosis(
        source_length=float(source_length),
        target_length=float(target_length),
        ratio=ratio,
        regime=regime,
        phi_min=phi_min(source_length, target_length) if regime is Regime.MINIMIZERS_EXIST else None,
    )


@dataclass
class MapDiagnosis:
    """Regime of a map's lengths plus first- and second-order checks on the map itself."""
    diagnosis: Diagnosis
    report: EnergyReport
    necessary_condition: NecessaryCondition

    def to_dict(self) -> dict:
        out = self.diagnosis.to_dict()
        out["report"] = self.report.to_dict()
        out["necessary_condition"] = self.necessary_condition.to_dict()
        return out


def diagnose_map(u: Reparametrization, tol: float = 1e-9) -> MapDiagnosis:
    """Diagnose the regime of u's lengths and check u against u'^2 >= 1/3."""
    return MapDiagnosis(
        diagnosis=diagnose(u.source_length, u.target_length),
        report=energy_report(u, tol=tol),
        necessary_condition=necessary_condition_check(u, tol),
    )
