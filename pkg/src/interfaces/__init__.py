# Interfaces package
from .file_io import (
    TensorFixture,
    round_floats,
    dump_json,
    read_curve,
    write_curve,
    read_map,
    write_map,
    read_tensor_fixture,
)
from .plots import plot_map_overlay, plot_sequence
from .cli import build_parser, run

__all__ = [
    "TensorFixture",
    "round_floats",
    "dump_json",
    "read_curve",
    "write_curve",
    "read_map",
    "write_map",
    "read_tensor_fixture",
    "plot_map_overlay",
    "plot_sequence",
    "build_parser",
    "run",
]
