"""
SVG Plots
=========
Reproducible SVG figures: the Agg backend, a fixed hash salt and no date
metadata, so identical inputs give byte-identical files.
"""

from pathlib import Path
from typing import List, Optional, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from ..analysis import ZigZagSequence  # noqa: E402
from ..functional import Reparametrization  # noqa: E402
from ..utils.logger import logger  # noqa: E402

matplotlib.rcParams["svg.hashsalt"] = "distmin"

PathLike = Union[str, Path]


def _save(fig, path: PathLike) -> None:
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.info(f"Wrote plot {path}")


def plot_map_overlay(path: PathLike, u: Reparametrization,
                     reference: Optional[Reparametrization] = None) -> None:
    """u(t) against the linear map with the same boundary values."""
    reference = reference or Reparametrization.linear(
        u.source_length, u.target_length, u.grid_size, u.mode
    )
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(reference.grid, reference.values, color="0.6", linestyle="--", label="linear")
    ax.plot(u.grid, u.values, color="tab:blue", label="u")
    ax.set_xlabel("t")
    ax.set_ylabel("u(t)")
    ax.set_xlim(0.0, u.source_length)
    ax.grid(True)
    ax.legend()
    _save(fig, path)


def plot_sequence(path: PathLike, sequence: List[ZigZagSequence]) -> None:
    """Log-log plot of Psi(phi_k) against k."""
    ks = [s.k for s in sequence]
    energies = [s.energy for s in sequence]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(ks, energies, marker="o", color="tab:red")
    ax.set_xlabel("k")
    ax.set_ylabel("Psi(phi_k)")
    ax.grid(True, which="both")
    _save(fig, path)
