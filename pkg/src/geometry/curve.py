"""
Closed Planar Curves
====================
Smooth simple closed curves represented as sampled polylines.
The closing edge (last point back to first) is implicit.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..utils.errors import DegenerateCurveError, SelfIntersectionError
from ..utils.logger import logger

# Relative threshold below which the signed area counts as zero
AREA_TOL = 1e-12


class Orientation(str, Enum):
    """Traversal direction of a closed curve."""
    POSITIVE = "positive"  # counterclockwise
    NEGATIVE = "negative"


@dataclass(frozen=True, eq=False)
class Curve:
    """
    A closed polyline with a distinguished base point.

    Attributes:
        points: (n, 2) array of vertices in traversal order
        base_index: index of the base point p (resp. q)
    """
    points: np.ndarray
    base_index: int = 0

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise DegenerateCurveError(f"Curve points must have shape (n, 2), got {pts.shape}")
        if pts.shape[0] < 3:
            raise DegenerateCurveError(f"Curve needs at least 3 points, got {pts.shape[0]}")
        if not np.all(np.isfinite(pts)):
            raise DegenerateCurveError("Curve points must be finite")

        edges = np.linalg.norm(np.roll(pts, -1, axis=0) - pts, axis=1)
        repeated = np.flatnonzero(edges == 0.0)
        if repeated.size:
            raise DegenerateCurveError(
                f"Repeated consecutive points at index {int(repeated[0])} "
                "(closure is implicit, do not repeat the first point)"
            )
        if not 0 <= int(self.base_index) < pts.shape[0]:
            raise DegenerateCurveError(
                f"base_index {self.base_index} out of range for {pts.shape[0]} points"
            )

        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "base_index", int(self.base_index))

    @property
    def size(self) -> int:
        return self.points.shape[0]

    @property
    def base_point(self) -> np.ndarray:
        return self.points[self.base_index]

    def edge_lengths(self) -> np.ndarray:
        """Lengths of all n edges, closing edge last."""
        return np.linalg.norm(np.roll(self.points, -1, axis=0) - self.points, axis=1)

    def signed_area(self) -> float:
        """Shoelace sum; positive for counterclockwise traversal."""
        x, y = self.points[:, 0], self.points[:, 1]
        return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))

    def reversed(self) -> "Curve":
        """Same curve traversed the other way, base point kept."""
        pts = self.points[::-1]
        return Curve(pts, self.size - 1 - self.base_index)

    def transformed(self, rotation: np.ndarray, translation=(0.0, 0.0)) -> "Curve":
        """Apply x -> R x + b to every vertex."""
        pts = self.points @ np.asarray(rotation, dtype=float).T + np.asarray(translation, dtype=float)
        return Curve(pts, self.base_index)

    def check_simple(self) -> None:
        """
        Raise SelfIntersectionError if two non-adjacent edges meet.

        O(n^2): each edge is tested against all later non-adjacent edges.
        """
        a = self.points
        b = np.roll(a, -1, axis=0)
        n = self.size

        for i in range(n - 2):
            # Edge n-1 shares a vertex with edge 0
            j = np.arange(i + 2, n if i > 0 else n - 1)
            if j.size == 0:
                continue
            hits = _segments_intersect(a[i], b[i], a[j], b[j])
            if np.any(hits):
                raise SelfIntersectionError(f"Edges {i} and {int(j[hits][0])} intersect")

        logger.debug(f"Simplicity check passed for {n}-point curve")


def _cross(o, p, q):
    """z-component of (p - o) x (q - o), broadcasting over rows."""
    return (p[..., 0] - o[..., 0]) * (q[..., 1] - o[..., 1]) - (p[..., 1] - o[..., 1]) * (q[..., 0] - o[..., 0])


def _segments_intersect(p1, p2, q1, q2) -> np.ndarray:
    """Closed-segment intersection test of [p1, p2] against each row of [q1, q2]."""
    d1 = _cross(q1, q2, p1)
    d2 = _cross(q1, q2, p2)
    d3 = _cross(p1, p2, q1)
    d4 = _cross(p1, p2, q2)
    proper = (d1 * d2 <= 0) & (d3 * d4 <= 0)

    # Collinear pairs only meet if their bounding boxes overlap
    collinear = (d1 == 0) & (d2 == 0)
    lo_p, hi_p = np.minimum(p1, p2), np.maximum(p1, p2)
    lo_q, hi_q = np.minimum(q1, q2), np.maximum(q1, q2)
    overlap = np.all((lo_q <= hi_p) & (lo_p <= hi_q), axis=-1)
    return np.where(collinear, overlap, proper)


def arc_length(c: Curve) -> float:
    """Total length of the closed polyline, closing edge included."""
    length = float(np.sum(c.edge_lengths()))
    if not length > 0.0:
        raise DegenerateCurveError("Curve has zero length")
    return length


def orientation(c: Curve) -> Orientation:
    """
    Orientation from the sign of the shoelace sum.

    Raises:
        DegenerateCurveError: signed area is zero (figure-eight or flat input)
    """
    area = c.signed_area()
    scale = arc_length(c) ** 2
    if abs(area) <= AREA_TOL * scale:
        raise DegenerateCurveError(
            f"Signed area {area:.3e} is zero; curve is degenerate or self-intersecting"
        )
    return Orientation.POSITIVE if area > 0 else Orientation.NEGATIVE


def regular_polygon(n: int, radius: float = 1.0, center=(0.0, 0.0), phase: float = 0.0) -> Curve:
    """Counterclockwise regular n-gon inscribed in a circle, base at angle `phase`."""
    theta = phase + 2.0 * np.pi * np.arange(n) / n
    pts = np.column_stack([np.cos(theta), np.sin(theta)]) * radius + np.asarray(center, dtype=float)
    return Curve(pts, 0)


def radial_map(points: np.ndarray, factor: float) -> np.ndarray:
    """The radial map z -> R z applied to an array of points."""
    return np.asarray(points, dtype=float) * factor
