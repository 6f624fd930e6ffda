import math

import numpy as np
import pytest

from src.tensor import (
    Metric,
    SymTensor,
    VectorFieldJet1D,
    g_contract,
    lie_derivative_1d,
    lie_derivative_1d_second,
    lie_derivative_general,
    strain,
    strain_energy_density,
)
from src.utils.errors import DimensionMismatchError, GridError, SingularMetricError


def random_spd(rng, n):
    a = rng.standard_normal((n, n))
    return a @ a.T + n * np.eye(n)


def random_sym(rng, n):
    a = rng.standard_normal((n, n))
    return 0.5 * (a + a.T)


def random_change_of_basis(rng, n):
    """Orthogonal matrix times a diagonal in [0.5, 2], so cond(A) <= 4."""
    q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    return q @ np.diag(rng.uniform(0.5, 2.0, size=n))


class TestStrain:
    def test_isometry_has_zero_strain(self):
        g = Metric(np.diag([2.0, 3.0]))
        assert np.array_equal(strain(SymTensor(g.g), g).b, np.zeros((2, 2)))

    def test_one_dimensional(self):
        u_dot = 1.7
        assert strain(SymTensor(u_dot ** 2), Metric(1.0)).b[0, 0] == pytest.approx(u_dot ** 2 - 1)

    def test_componentwise(self):
        s = strain(SymTensor(np.diag([4.0, 1.0])), Metric.identity(2))
        assert np.array_equal(s.b, np.diag([3.0, 0.0]))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            strain(SymTensor(np.eye(3)), Metric.identity(2))


class TestGContract:
    def test_identity_metric_gives_frobenius_norm(self):
        b = SymTensor(np.diag([0.5, -2.0]))
        assert g_contract(b, b, Metric.identity(2)) == pytest.approx(0.25 + 4.0)

    def test_hand_contracted_fixture(self):
        b = SymTensor(np.eye(2))
        assert g_contract(b, b, Metric(np.diag([4.0, 1.0]))) == pytest.approx(17 / 16, rel=1e-15)

    def test_one_dimensional_square(self):
        assert g_contract(SymTensor(0.3), SymTensor(0.3), Metric(1.0)) == pytest.approx(0.09)

    def test_strain_energy_density_matches_contraction(self):
        g = Metric(np.diag([1.0, 2.0]))
        pullback = SymTensor(np.array([[2.0, 0.5], [0.5, 3.0]]))
        s = strain(pullback, g)
        assert strain_energy_density(pullback, g) == pytest.approx(g_contract(s, s, g))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_congruence_invariance(self, rng, n):
        for _ in range(100):
            g = Metric(random_spd(rng, n))
            b1, b2 = SymTensor(random_sym(rng, n)), SymTensor(random_sym(rng, n))
            a = random_change_of_basis(rng, n)
            before = g_contract(b1, b2, g)
            after = g_contract(b1.congruent(a), b2.congruent(a), g.congruent(a))
            scale = math.sqrt(g_contract(b1, b1, g) * g_contract(b2, b2, g))
            assert after == pytest.approx(before, rel=1e-9, abs=1e-12 * scale)

    def test_matches_explicit_index_contraction(self, rng):
        for _ in range(20):
            g = Metric(random_spd(rng, 3))
            b1, b2 = SymTensor(random_sym(rng, 3)), SymTensor(random_sym(rng, 3))
            ginv = np.linalg.inv(g.g)
            expected = np.einsum("ij,kl,ik,jl->", b1.b, b2.b, ginv, ginv)
            assert g_contract(b1, b2, g) == pytest.approx(expected, rel=1e-10, abs=1e-13)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_positive_definite(self, rng, n):
        for _ in range(20):
            g = Metric(random_spd(rng, n))
            b = SymTensor(random_sym(rng, n))
            assert g_contract(b, b, g) > 0
        assert g_contract(SymTensor(np.zeros((n, n))), SymTensor(np.zeros((n, n))), g) == 0.0

    def test_symmetric_in_arguments(self, rng):
        g = Metric(random_spd(rng, 3))
        b1, b2 = SymTensor(random_sym(rng, 3)), SymTensor(random_sym(rng, 3))
        assert g_contract(b1, b2, g) == pytest.approx(g_contract(b2, b1, g), rel=1e-12)


class TestValidation:
    def test_singular_metric(self):
        with pytest.raises(SingularMetricError):
            Metric(np.diag([1.0, 0.0]))

    def test_indefinite_metric(self):
        with pytest.raises(SingularMetricError):
            Metric(np.diag([1.0, -1.0]))

    def test_asymmetric_tensor(self):
        with pytest.raises(DimensionMismatchError):
            SymTensor(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_inverse(self, rng):
        g = Metric(random_spd(rng, 3))
        np.testing.assert_allclose(g.inverse @ g.g, np.eye(3), atol=1e-12)


class TestLieDerivative1D:
    def grid(self, m=256, length=1.0):
        return np.linspace(0.0, length, m + 1)

    def test_zero_field(self):
        t = self.grid()
        field = VectorFieldJet1D.zero(t.size, 1.0)
        out = lie_derivative_1d(np.full_like(t, 2.0), np.zeros_like(t), field)
        assert np.array_equal(out, np.zeros_like(t))

    def test_linear_map_constant_field(self):
        t = self.grid()
        c = np.full_like(t, 0.3)
        field = VectorFieldJet1D(c, np.zeros_like(t), np.zeros_like(t), 1.0)
        out = lie_derivative_1d(np.full_like(t, 1.5), np.zeros_like(t), field)
        assert np.array_equal(out, np.zeros_like(t))

    def test_quadratic_map_linear_field(self):
        # u = t^2, y = t: 2 (2t) (2 t + 2t * 1) = 16 t^2
        t = self.grid()
        field = VectorFieldJet1D.from_values(t, 1.0, periodic=False)
        out = lie_derivative_1d(2.0 * t, np.full_like(t, 2.0), field)
        np.testing.assert_allclose(out, 16.0 * t ** 2, atol=1e-10)

    def test_non_periodic_field_rejected_by_default(self):
        t = self.grid()
        with pytest.raises(GridError):
            VectorFieldJet1D.from_values(t, 1.0)

    def test_grid_mismatch(self):
        t = self.grid()
        field = VectorFieldJet1D.zero(t.size, 1.0)
        with pytest.raises(GridError):
            lie_derivative_1d(np.ones(10), np.zeros(10), field)

    def test_second_lie_derivative_by_repetition(self):
        # Applying L_Y twice by hand: L_Y beta = y beta' + 2 beta y'
        m, length = 4096, 1.0
        t = self.grid(m, length)
        h = length / m
        y = 0.1 * np.sin(2 * np.pi * t)
        field = VectorFieldJet1D.from_values(y, length)
        u_dot = 1 + 0.1 * np.pi * np.cos(2 * np.pi * t)
        u_ddot = -0.2 * np.pi ** 2 * np.sin(2 * np.pi * t)
        u_dddot = -0.4 * np.pi ** 3 * np.cos(2 * np.pi * t)

        first = lie_derivative_1d(u_dot, u_ddot, field)
        by_hand = field.y * np.gradient(first, h) + 2.0 * first * field.y_dot
        second = lie_derivative_1d_second(u_dot, u_ddot, u_dddot, field)
        np.testing.assert_allclose(second[1:-1], by_hand[1:-1], atol=1e-4)


class TestLieDerivativeGeneral:
    def test_constant_tensor_constant_field(self):
        shape = (8, 8)
        beta = np.broadcast_to(np.array([[2.0, 0.3], [0.3, 1.0]]), shape + (2, 2)).copy()
        x = np.broadcast_to(np.array([0.5, -1.0]), shape + (2,)).copy()
        out = lie_derivative_general(beta, x, spacing=(0.1, 0.1))
        np.testing.assert_allclose(out, 0.0, atol=1e-12)

    def test_matches_one_dimensional_formula(self):
        m = 512
        t = np.linspace(0.0, 1.0, m + 1)
        u_dot = 1.2 + 0.1 * np.cos(2 * np.pi * t)
        u_ddot = -0.2 * np.pi * np.sin(2 * np.pi * t)
        y = 0.05 * np.sin(4 * np.pi * t)
        y_dot = 0.2 * np.pi * np.cos(4 * np.pi * t)
        field = VectorFieldJet1D(y, y_dot, np.zeros_like(t), 1.0, periodic=False)

        beta = (u_dot ** 2)[:, None, None]
        d_beta = (2.0 * u_dot * u_ddot)[:, None, None, None]
        out = lie_derivative_general(beta, y[:, None], d_beta=d_beta, d_x=y_dot[:, None, None])
        np.testing.assert_allclose(out[:, 0, 0], lie_derivative_1d(u_dot, u_ddot, field), atol=1e-10)

    def test_output_symmetric(self, rng):
        n, shape = 2, (16, 16)
        a = rng.standard_normal(shape + (n, n))
        beta = a + np.swapaxes(a, -1, -2)
        x = rng.standard_normal(shape + (n,))
        out = lie_derivative_general(beta, x, spacing=(0.1, 0.2))
        np.testing.assert_allclose(out, np.swapaxes(out, -1, -2), atol=1e-12)

    def test_flow_consistency(self):
        # beta = diag(1 + sin(2 pi x), 1) pulled back along the flow of X = (c, 0)
        n, c, delta = 128, 0.7, 1e-5
        axis = np.linspace(0.0, 1.0, n, endpoint=False)
        xx, _ = np.meshgrid(axis, axis, indexing="ij")

        def beta_at(shift):
            b = np.zeros(xx.shape + (2, 2))
            b[..., 0, 0] = 1.0 + np.sin(2 * np.pi * (xx + shift))
            b[..., 1, 1] = 1.0
            return b

        x_field = np.zeros(xx.shape + (2,))
        x_field[..., 0] = c
        expected = (beta_at(c * delta) - beta_at(0.0)) / delta
        out = lie_derivative_general(beta_at(0.0), x_field, spacing=(1.0 / n, 1.0 / n))
        np.testing.assert_allclose(out, expected, atol=5e-3)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            lie_derivative_general(np.zeros((4, 4, 2, 2)), np.zeros((4, 4, 3)), spacing=(1.0, 1.0))

    def test_spacing_required(self):
        with pytest.raises(GridError):
            lie_derivative_general(np.zeros((4, 4, 2, 2)), np.zeros((4, 4, 2)))
