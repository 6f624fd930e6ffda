# Geometry package
from .curve import Curve, Orientation, arc_length, orientation, regular_polygon, radial_map
from .parametrization import ArcLengthParam, parametrize, MIN_SAMPLES

__all__ = [
    "Curve",
    "Orientation",
    "arc_length",
    "orientation",
    "regular_polygon",
    "radial_map",
    "ArcLengthParam",
    "parametrize",
    "MIN_SAMPLES",
]
