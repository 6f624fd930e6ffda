"""
Arc-Length Parametrization
==========================
Uniform arc-length resampling of a closed polyline, started at the base
point and traversed in positive orientation.
"""

from dataclasses import dataclass

import numpy as np

from .curve import Curve, Orientation, arc_length, orientation
from ..utils.errors import GridError
from ..utils.logger import logger

MIN_SAMPLES = 16


@dataclass(frozen=True, eq=False)
class ArcLengthParam:
    """
    Sampled unit-speed parametrization gamma: [0, L) -> M.

    Attributes:
        samples: (m, 2) points at abscissae t_k = k L / m, samples[0] = base point
        tangents: (m, 2) unit tangents (periodic central differences)
        length: total arc length L
        source_orientation: orientation of the input point order
        vertices: (n + 1, 2) oriented source polyline from the base point, closed
        cumulative: (n + 1,) arc length at each vertex, cumulative[-1] = L
    """
    samples: np.ndarray
    tangents: np.ndarray
    length: float
    source_orientation: Orientation
    vertices: np.ndarray
    cumulative: np.ndarray

    @property
    def size(self) -> int:
        return self.samples.shape[0]

    @property
    def spacing(self) -> float:
        return self.length / self.size

    @property
    def abscissae(self) -> np.ndarray:
        return np.arange(self.size) * self.spacing

    @property
    def base_point(self) -> np.ndarray:
        return self.samples[0]

    def point_at(self, s) -> np.ndarray:
        """
        Evaluate the parametrization at arc length s (wrapped modulo L).

        Args:
            s: scalar or array of abscissae

        Returns:
            Points of shape s.shape + (2,)
        """
        s = np.mod(np.asarray(s, dtype=float), self.length)
        x = np.interp(s, self.cumulative, self.vertices[:, 0])
        y = np.interp(s, self.cumulative, self.vertices[:, 1])
        return np.stack([x, y], axis=-1)


def _oriented_vertices(c: Curve, positive: bool) -> np.ndarray:
    """Vertices starting at the base point, in positive traversal order, closed."""
    n = c.size
    step = 1 if positive else -1
    order = (c.base_index + step * np.arange(n)) % n
    pts = c.points[order]
    return np.vstack([pts, pts[:1]])


def parametrize(c: Curve, m: int) -> ArcLengthParam:
    """
    Resample a curve at m uniformly spaced arc-length abscissae.

    Negative input orientation is reversed so the samples always run
    counterclockwise from the base point.

    Args:
        c: the curve
        m: number of samples (>= 16)

    Returns:
        ArcLengthParam with samples[0] equal to the base point
    """
    if m < MIN_SAMPLES:
        raise GridError(f"Need at least {MIN_SAMPLES} samples, got {m}")

    length = arc_length(c)
    source = orientation(c)
    vertices = _oriented_vertices(c, source is Orientation.POSITIVE)

    cumulative = np.concatenate([[0.0], np.cumsum(np.linalg.norm(np.diff(vertices, axis=0), axis=1))])
    # Pin the closing abscissa so s = L maps exactly onto the base point again
    cumulative[-1] = length

    t = np.arange(m) * (length / m)
    samples = np.column_stack([
        np.interp(t, cumulative, vertices[:, 0]),
        np.interp(t, cumulative, vertices[:, 1]),
    ])

    chords = np.roll(samples, -1, axis=0) - np.roll(samples, 1, axis=0)
    tangents = chords / np.linalg.norm(chords, axis=1, keepdims=True)

    for arr in (samples, tangents, vertices, cumulative):
        arr.setflags(write=False)

    logger.debug(f"Parametrized {c.size}-point curve: L={length:.6g}, m={m}, input {source.value}")
    return ArcLengthParam(
        samples=samples,
        tangents=tangents,
        length=length,
        source_orientation=source,
        vertices=vertices,
        cumulative=cumulative,
    )
