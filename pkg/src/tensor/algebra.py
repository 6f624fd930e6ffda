"""
Pointwise Tensor Algebra
========================
Symmetric 2-tensors b_ij dx^i (x) dx^j, Riemannian metrics [g]_ij, the
strain tensor S = h*g_N - g_M and the induced metric

    G(B1, B2) = b1_ij b2_kl g^ik g^jl

on covariant 2-tensors, for any dimension n.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..utils.errors import DimensionMismatchError, SingularMetricError

SYMMETRY_TOL = 1e-12


def _square_matrix(a, name: str) -> np.ndarray:
    arr = np.array(a, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatchError(f"{name} must be a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DimensionMismatchError(f"{name} has non-finite entries")
    return arr


@dataclass(frozen=True, eq=False)
class SymTensor:
    """Components b_ij of a symmetric covariant 2-tensor at one point."""
    b: np.ndarray

    def __post_init__(self):
        b = _square_matrix(self.b, "SymTensor")
        if not np.allclose(b, b.T, rtol=0.0, atol=SYMMETRY_TOL):
            raise DimensionMismatchError("SymTensor components are not symmetric")
        b.setflags(write=False)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return self.b.shape[0]

    def congruent(self, a: np.ndarray) -> "SymTensor":
        """Components in new coordinates: A^T b A."""
        a = np.asarray(a, dtype=float)
        out = a.T @ self.b @ a
        return SymTensor(0.5 * (out + out.T))


@dataclass(frozen=True, eq=False)
class Metric:
    """
    Symmetric positive definite [g]_ij at one point.

    The Cholesky factor is computed once at construction and reused for
    the inverse [g]^ij.
    """
    g: np.ndarray

    def __post_init__(self):
        g = _square_matrix(self.g, "Metric")
        if not np.allclose(g, g.T, rtol=0.0, atol=SYMMETRY_TOL):
            raise SingularMetricError("Metric is not symmetric")
        try:
            factor = scipy.linalg.cho_factor(g, lower=True)
        except np.linalg.LinAlgError as e:
            raise SingularMetricError(f"Metric is not positive definite: {e}") from e

        inverse = scipy.linalg.cho_solve(factor, np.eye(g.shape[0]))
        inverse = 0.5 * (inverse + inverse.T)
        for arr in (g, inverse):
            arr.setflags(write=False)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "_inverse", inverse)
        object.__setattr__(self, "_factor", factor)

    @property
    def dim(self) -> int:
        return self.g.shape[0]

    @property
    def inverse(self) -> np.ndarray:
        """[g]^ij, the inverse matrix."""
        return self._inverse

    def solve(self, b: np.ndarray) -> np.ndarray:
        """[g]^-1 b through the stored Cholesky factor."""
        return scipy.linalg.cho_solve(self._factor, b)

    def congruent(self, a: np.ndarray) -> "Metric":
        a = np.asarray(a, dtype=float)
        out = a.T @ self.g @ a
        return Metric(0.5 * (out + out.T))

    @classmethod
    def identity(cls, dim: int) -> "Metric":
        return cls(np.eye(dim))


def _check_dims(*objs) -> int:
    dims = {o.dim for o in objs}
    if len(dims) != 1:
        raise DimensionMismatchError(f"Dimension mismatch: {sorted(dims)}")
    return dims.pop()


def strain(h_pullback: SymTensor, g_m: Metric) -> SymTensor:
    """Strain tensor S = h*g_N - g_M, componentwise."""
    _check_dims(h_pullback, g_m)
    return SymTensor(h_pullback.b - g_m.g)


def g_contract(b1: SymTensor, b2: SymTensor, g: Metric) -> float:
    """
    G(B1, B2) = sum_ijkl b1_ij b2_kl g^ik g^jl.

    Symmetric and bilinear in (b1, b2); G(B, B) >= 0 with equality iff B = 0.
    """
    _check_dims(b1, b2, g)
    # tr(g^-1 b1 g^-1 b2)
    c1 = g.solve(b1.b)
    c2 = g.solve(b2.b)
    return float(np.einsum("ij,ji->", c1, c2))


def strain_energy_density(h_pullback: SymTensor, g_m: Metric) -> float:
    """G(S, S) for S = h*g_N - g_M, the integrand of the deformation energy."""
    s = strain(h_pullback, g_m)
    return g_contract(s, s, g_m)
