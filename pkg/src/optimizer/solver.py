"""
Psi Minimizer
=============
Projected gradient descent for the reduced energy Psi over the discrete
admissible sets B (orientation preserving) and C (orientation reversing).

Iterates are the increments d_k = u_{k+1} - u_k, constrained to the shifted
simplex {d_k >= floor, sum d_k = L_n}. Every iterate is therefore strictly
monotone with exact boundary values. Steps are accepted by Armijo
backtracking along the projection arc.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .simplex import project_shifted_simplex
from ..functional import (
    MIN_GRID,
    BoundaryMode,
    EnergyReport,
    Reparametrization,
    energy_change,
    energy_report,
    increment_energy,
    increment_gradient,
)
from ..utils.config import settings
from ..utils.errors import InputError, LengthMismatchError, PreconditionError
from ..utils.logger import logger

INFIMUM_NOT_ATTAINED = "infimum not attained (L(N) < L(M) regime)"
FLOOR_RTOL = 1e-6
# Multiple of eps * (|d| + |g|) below which |pg| is pure rounding
ROUNDING_FACTOR = 1e3


class InitKind(str, Enum):
    LINEAR = "linear"
    RANDOM = "random-monotone"


class SolverConfig(BaseModel):
    """Solver knobs. Immutable; build variants with model_copy(update=...)."""

    model_config = ConfigDict(frozen=True)

    grid_size: int = Field(default=1024, ge=MIN_GRID, description="Grid intervals m")
    max_iters: int = Field(default=100_000, ge=1)
    grad_tol: float = Field(default=1e-8, gt=0.0, description="Sup-norm bound on the projected gradient")
    increment_floor: float = Field(
        default=1e-9, gt=0.0, lt=1.0,
        description="Lower bound on every increment, as a fraction of L_n"
    )
    shrink: float = Field(default=0.5, gt=0.0, lt=1.0)
    sufficient_decrease: float = Field(default=1e-4, gt=0.0, lt=1.0)
    min_step: float = Field(default=1e-30, gt=0.0)
    seed: int = Field(default=0, ge=0)
    log_every: int = Field(default=5000, ge=1)

    @classmethod
    def from_settings(cls, **overrides) -> "SolverConfig":
        """Defaults from DISTMIN_* settings, with explicit overrides on top."""
        values = {
            "grid_size": settings.grid_size,
            "max_iters": settings.max_iters,
            "grad_tol": settings.grad_tol,
            "seed": settings.seed,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass
class SolveResult:
    """Outcome of one minimization run."""
    u: Reparametrization
    report: EnergyReport
    iterations: int
    converged: bool
    projected_gradient_sup: float
    floor_active: int = 0
    diagnostic: Optional[str] = None
    seed: Optional[int] = None
    history: List[float] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization (u goes to CSV separately)."""
        return {
            "converged": self.converged,
            "iterations": self.iterations,
            "projected_gradient_sup": self.projected_gradient_sup,
            "floor_active": self.floor_active,
            "diagnostic": self.diagnostic,
            "seed": self.seed,
            "grid_size": self.u.grid_size,
            "source_length": self.u.source_length,
            "target_length": self.u.target_length,
            "report": self.report.to_dict(),
        }


def initialize(
    source_length: float,
    target_length: float,
    mode: BoundaryMode = BoundaryMode.PRESERVE,
    m: int = 1024,
    kind: InitKind = InitKind.LINEAR,
    seed: int = 0,
) -> Reparametrization:
    """
    Starting point for the solver.

    Args:
        source_length: L_m
        target_length: L_n
        mode: boundary mode
        m: grid intervals
        kind: 'linear' gives v or w exactly; 'random-monotone' draws
            increments uniformly from [0.5, 1.5] and rescales them to sum L_n
        seed: generator seed for the random kind

    Returns:
        Admissible Reparametrization
    """
    kind = InitKind(kind)
    if kind is InitKind.LINEAR:
        return Reparametrization.linear(source_length, target_length, m, mode)

    rng = np.random.default_rng(seed)
    weights = rng.uniform(0.5, 1.5, size=m)
    increments = weights * (target_length / weights.sum())
    return Reparametrization.from_increments(source_length, target_length, increments, mode)


def _centered_gradient(d: np.ndarray, g: np.ndarray, floor: float) -> np.ndarray:
    """
    Drop the component of g along (1, ..., 1).

    Moves on the simplex keep sum(d) fixed, so that component does not change
    the energy. The mean is taken over the increments above the floor.
    """
    free = d > floor * (1.0 + FLOOR_RTOL)
    ref = g[free] if np.any(free) else g
    return g - float(np.mean(ref))


def _projected_gradient(d: np.ndarray, g: np.ndarray, total: float, floor: float) -> np.ndarray:
    return d - project_shifted_simplex(d - g, total, floor)


def _rounding_level(d: np.ndarray, g: np.ndarray) -> float:
    """Size of |pg| that projection rounding alone can produce."""
    return ROUNDING_FACTOR * np.finfo(float).eps * (float(np.max(np.abs(d))) + float(np.max(np.abs(g))))


def minimize_psi(
    source_length: float,
    target_length: float,
    mode: BoundaryMode = BoundaryMode.PRESERVE,
    cfg: Optional[SolverConfig] = None,
    init: Optional[Reparametrization] = None,
) -> SolveResult:
    """
    Minimize Psi over monotone grid maps with the given boundary mode.

    Args:
        source_length: L_m > 0
        target_length: L_n > 0
        mode: 'preserve' (set B) or 'reverse' (set C)
        cfg: solver configuration (defaults from settings)
        init: starting map; random-monotone with cfg.seed when omitted

    Returns:
        SolveResult. Hitting max_iters is reported as converged=False.
        For L_n < L_m the run is never reported as converged.
    """
    cfg = cfg or SolverConfig.from_settings()
    l_m, l_n = float(source_length), float(target_length)
    if not (l_m > 0 and l_n > 0):
        raise InputError(f"Lengths must be positive, got L_m={l_m}, L_n={l_n}")
    mode = BoundaryMode(mode)

    seed: Optional[int] = None
    if init is None:
        seed = cfg.seed
        init = initialize(l_m, l_n, mode, cfg.grid_size, InitKind.RANDOM, seed)
    else:
        if abs(init.source_length - l_m) > 1e-12 * l_m or abs(init.target_length - l_n) > 1e-12 * l_n:
            raise LengthMismatchError(
                f"Initial map is for L_m={init.source_length}, L_n={init.target_length}"
            )
        if init.mode is not mode:
            raise PreconditionError(f"Initial map is in {init.mode.value} mode, expected {mode.value}")

    m = init.grid_size
    h = l_m / m
    floor = cfg.increment_floor * l_n
    c = cfg.sufficient_decrease

    logger.info(f"Minimizing Psi: L_m={l_m:.6g}, L_n={l_n:.6g}, mode={mode.value}, m={m}")

    d = project_shifted_simplex(init.increments(), l_n, floor)
    s = d / h
    g_raw = increment_gradient(d, h)
    g = _centered_gradient(d, g_raw, floor)
    energy = increment_energy(d, h)
    history = [energy]

    step = h
    iterations = 0
    stationary = False
    stalled = False
    pg_sup = float(np.max(np.abs(_projected_gradient(d, g, l_n, floor))))

    while iterations < cfg.max_iters:
        if pg_sup <= cfg.grad_tol:
            stationary = True
            break

        # Armijo backtracking along the projection arc
        while True:
            trial = project_shifted_simplex(d - step * g, l_n, floor)
            s_trial = trial / h
            delta = energy_change(s, s_trial, h)
            predicted = float(np.dot(g, trial - d))
            if predicted < 0 and delta <= c * predicted:
                break
            step *= cfg.shrink
            if step < cfg.min_step or np.array_equal(trial, d):
                stalled = True
                break
        if stalled:
            if pg_sup <= _rounding_level(d, g_raw):
                logger.debug(f"   |pg|={pg_sup:.3e} is at rounding level, stopping")
                stationary = True
                stalled = False
            break

        d, s = trial, s_trial
        g_raw = increment_gradient(d, h)
        g = _centered_gradient(d, g_raw, floor)
        energy += delta
        history.append(energy)
        iterations += 1
        step /= cfg.shrink

        pg_sup = float(np.max(np.abs(_projected_gradient(d, g, l_n, floor))))
        if iterations % cfg.log_every == 0:
            logger.debug(f"   iter {iterations}: psi={energy:.12g}, |pg|={pg_sup:.3e}, step={step:.3e}")
    else:
        stationary = pg_sup <= cfg.grad_tol

    u = Reparametrization.from_increments(l_m, l_n, d, mode)
    report = energy_report(u)
    floor_active = int(np.count_nonzero(d <= floor * (1.0 + FLOOR_RTOL)))

    converged = stationary and l_n >= l_m
    diagnostic: Optional[str] = None
    if l_n < l_m:
        diagnostic = INFIMUM_NOT_ATTAINED
        if floor_active:
            diagnostic += f"; {floor_active} increments at the floor"
        logger.warning(f"{diagnostic} (psi={report.psi:.6g})")
    elif stalled:
        diagnostic = f"line search stalled with |pg|={pg_sup:.3e}"
        logger.warning(diagnostic)
    elif not stationary:
        diagnostic = f"iteration limit {cfg.max_iters} reached with |pg|={pg_sup:.3e}"
        logger.warning(diagnostic)

    logger.info(
        f"Finished after {iterations} iterations: psi={report.psi:.12g}, "
        f"|pg|={pg_sup:.3e}, converged={converged}"
    )

    return SolveResult(
        u=u,
        report=report,
        iterations=iterations,
        converged=converged,
        projected_gradient_sup=pg_sup,
        floor_active=floor_active,
        diagnostic=diagnostic,
        seed=seed,
        history=history,
    )


def minimize_multistart(
    source_length: float,
    target_length: float,
    mode: BoundaryMode = BoundaryMode.PRESERVE,
    cfg: Optional[SolverConfig] = None,
    runs: int = 4,
    workers: Optional[int] = None,
) -> Tuple[SolveResult, List[SolveResult]]:
    """
    Independent random-monotone runs with seeds cfg.seed + i.

    Returns:
        (best, all_runs): the lowest-energy result (earliest seed on ties)
        and every run in seed order
    """
    if runs < 1:
        raise InputError(f"Need at least one run, got {runs}")
    cfg = cfg or SolverConfig.from_settings()
    configs = [cfg.model_copy(update={"seed": cfg.seed + i}) for i in range(runs)]
    workers = min(workers or settings.workers, runs)

    logger.info(f"Multistart: {runs} runs on {workers} workers, seeds {cfg.seed}..{cfg.seed + runs - 1}")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(
            lambda run_cfg: minimize_psi(source_length, target_length, mode, run_cfg),
            configs,
        ))

    best = min(results, key=lambda r: r.report.psi)
    logger.info(f"Best run: seed={best.seed}, psi={best.report.psi:.12g}")
    return best, results
