import numpy as np
import pytest

from src.analysis import ZigZagProfile, decay_rate, mollify, profile_energy, zigzag_sequence
from src.analysis.zigzag import bump_kernel
from src.utils.errors import GridError, InputError, RegimeError


@pytest.fixture(scope="module")
def sequence():
    return zigzag_sequence(1.0, 0.5, k_max=8, m=8192)


class TestProfile:
    def test_single_tooth_layout(self):
        profile = ZigZagProfile(1.0, 0.5)
        np.testing.assert_allclose(profile.knots, [0.0, 0.75, 1.0])
        np.testing.assert_allclose(profile.knot_values, [0.0, 0.75, 0.5])
        np.testing.assert_array_equal(profile.slopes, [1.0, -1.0])
        assert profile_energy(profile) == 0.0

    def test_several_teeth_keep_unit_slopes(self):
        profile = ZigZagProfile(2.0, 1.2, teeth=3)
        np.testing.assert_allclose(np.abs(profile.slopes), 1.0, rtol=1e-12)
        assert profile.knot_values[-1] == 1.2
        assert profile_energy(profile) == pytest.approx(0.0, abs=1e-24)

    def test_linear_extension(self):
        profile = ZigZagProfile(1.0, 0.5)
        np.testing.assert_allclose(profile(np.array([-0.1, 1.1])), [-0.1, 0.4])

    def test_needs_shrinking_target(self):
        with pytest.raises(RegimeError):
            ZigZagProfile(1.0, 1.0)

    def test_needs_a_tooth(self):
        with pytest.raises(InputError):
            ZigZagProfile(1.0, 0.5, teeth=0)


class TestMollifier:
    def test_kernel_is_normalized_and_symmetric(self):
        kernel = bump_kernel(0.01, 1e-3)
        assert kernel.sum() == pytest.approx(1.0, rel=1e-14)
        np.testing.assert_allclose(kernel, kernel[::-1], atol=1e-16)

    def test_endpoints_are_exact(self):
        values = mollify(ZigZagProfile(1.0, 0.5), 1 / 32, 2048)
        assert values.size == 2049
        assert values[0] == 0.0 and values[-1] == 0.5

    def test_away_from_corner_profile_is_unchanged(self):
        profile = ZigZagProfile(1.0, 0.5)
        values = mollify(profile, 1 / 32, 2048)
        t = np.linspace(0.0, 1.0, 2049)
        far = np.abs(t - 0.75) > 1 / 16
        np.testing.assert_allclose(values[far], profile(t[far]), atol=1e-12)

    def test_width_must_be_resolved(self):
        with pytest.raises(GridError):
            mollify(ZigZagProfile(1.0, 0.5), 1e-5, 1024)


class TestSequence:
    def test_energy_decreases_with_k(self, sequence):
        energies = [s.energy for s in sequence]
        assert [s.k for s in sequence] == list(range(1, 9))
        assert all(b < a for a, b in zip(energies, energies[1:]))
        assert energies[-1] <= 0.05

    def test_energy_decays_like_one_over_k(self, sequence):
        assert decay_rate(sequence) <= -0.8

    def test_widths_and_boundary_values(self, sequence):
        for member in sequence:
            assert member.delta == pytest.approx(1.0 / (16 * member.k))
            assert member.smoothed[0] == 0.0 and member.smoothed[-1] == 0.5
            assert member.grid.size == member.smoothed.size
            assert member.to_dict()["k"] == member.k

    def test_needs_at_least_one_member(self):
        with pytest.raises(InputError):
            zigzag_sequence(1.0, 0.5, k_max=0, m=1024)

    def test_decay_rate_needs_two_points(self, sequence):
        with pytest.raises(InputError):
            decay_rate(sequence[:2])
