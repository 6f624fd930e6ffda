"""Shared fixtures: sample curves, seeded generators and small file helpers."""

import numpy as np
import pytest

from src.geometry import Curve, regular_polygon


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def unit_square():
    return Curve(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))


@pytest.fixture
def unit_circle():
    """Dense regular polygon standing in for the unit circle, base at (1, 0)."""
    return regular_polygon(4096, radius=1.0)


@pytest.fixture
def circle_r2():
    return regular_polygon(4096, radius=2.0)


@pytest.fixture
def write_text(tmp_path):
    """Write a text file under tmp_path and return its path."""
    def _write(name: str, content: str):
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path
    return _write
