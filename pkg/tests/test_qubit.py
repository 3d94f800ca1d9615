import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from timequbit import qla
from timequbit.errors import DomainError, InvalidStateError
from timequbit.qubit import (
    BlochVector,
    bloch_from_state,
    bloch_vector,
    density_from_bloch,
    pauli,
    rodrigues,
    rotate,
    state_from_angles,
    state_from_bloch,
)

from conftest import random_ket, random_unit

R2 = 1 / math.sqrt(2)
LEVI = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}


class TestPauli:
    def test_tau_z(self):
        np.testing.assert_array_equal(pauli("z"), np.diag([1, -1]))

    def test_involution(self):
        np.testing.assert_array_equal(pauli("x") @ pauli("x"), np.eye(2))

    def test_commutator(self):
        np.testing.assert_array_equal(qla.commutator(pauli("z"), pauli("x")), 2j * pauli("y"))

    def test_full_algebra(self):
        taus = [pauli(k) for k in "xyz"]
        for a, b in itertools.product(range(3), repeat=2):
            expected = (a == b) * np.eye(2, dtype=complex)
            for c in range(3):
                expected = expected + 1j * LEVI.get((a, b, c), 0) * taus[c]
            assert np.max(np.abs(taus[a] @ taus[b] - expected)) <= 1e-15

    def test_read_only(self):
        with pytest.raises(ValueError):
            pauli("x")[0, 0] = 5

    def test_bad_axis(self):
        with pytest.raises(DomainError):
            pauli("w")


class TestAngles:
    @pytest.mark.parametrize(
        "theta,phi,expected",
        [
            (0.0, 0.0, [1, 0]),
            (math.pi / 2, 0.0, [R2, R2]),
            (math.pi / 2, math.pi / 2, [R2, 1j * R2]),
            (math.pi, 1.3, [0, 1]),
        ],
    )
    def test_known_states(self, theta, phi, expected):
        np.testing.assert_allclose(state_from_angles(theta, phi), expected, atol=1e-15)

    @pytest.mark.parametrize("theta,phi", [(-0.1, 0), (3.2, 0), (1, -0.1), (1, 2 * math.pi)])
    def test_out_of_range(self, theta, phi):
        with pytest.raises(DomainError):
            state_from_angles(theta, phi)

    @given(st.floats(0, math.pi), st.floats(0, 2 * math.pi, exclude_max=True))
    def test_bloch_components(self, theta, phi):
        r = bloch_from_state(state_from_angles(theta, phi))
        expected = [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
        np.testing.assert_allclose(r, expected, atol=1e-14)

    def test_state_from_bloch_roundtrip(self, rng):
        for _ in range(200):
            n = random_unit(rng)
            np.testing.assert_allclose(bloch_from_state(state_from_bloch(n)), n, atol=1e-13)


class TestBlochVector:
    def test_north_pole(self):
        assert bloch_vector(np.diag([1.0, 0.0])) == (0, 0, 1)

    def test_maximally_mixed(self):
        assert bloch_vector(np.eye(2) / 2) == (0, 0, 0)

    def test_plus_x(self):
        psi = np.array([R2, R2])
        np.testing.assert_allclose(bloch_vector(np.outer(psi, psi)), (1, 0, 0), atol=1e-15)

    def test_invalid(self):
        with pytest.raises(InvalidStateError):
            bloch_vector(np.diag([1.0, 1.0]))
        with pytest.raises(InvalidStateError):
            bloch_vector(np.diag([1.5, -0.5]))

    @pytest.mark.parametrize(
        "r,expected",
        [((0, 0, 0), np.eye(2) / 2), ((0, 0, 1), np.diag([1, 0])), ((1, 0, 0), [[0.5, 0.5], [0.5, 0.5]])],
    )
    def test_density_from_bloch(self, r, expected):
        np.testing.assert_allclose(density_from_bloch(r), expected, atol=1e-15)

    def test_density_out_of_ball(self):
        with pytest.raises(DomainError):
            density_from_bloch((1.0, 0.1, 0.0))

    def test_round_trip(self, rng):
        for _ in range(1000):
            r = random_unit(rng) * rng.uniform(0, 1) ** (1 / 3)
            assert np.max(np.abs(np.array(bloch_vector(density_from_bloch(r))) - r)) <= 1e-12

    def test_pure_and_mixed_lengths(self, rng):
        for _ in range(200):
            a, b = random_ket(rng, 2), random_ket(rng, 2)
            assert abs(bloch_from_state(a).norm - 1) <= 1e-12
            w = rng.uniform(0.05, 0.95)
            rho = w * np.outer(a, a.conj()) + (1 - w) * np.outer(b, b.conj())
            if abs(abs(np.vdot(a, b)) - 1) > 1e-6:
                assert bloch_vector(rho).norm < 1


class TestRotate:
    def test_zero_angle(self, rng):
        r = BlochVector(*(random_unit(rng) * 0.7))
        np.testing.assert_allclose(rotate(r, (0, 0, 1), 0.0), r, atol=1e-15)

    def test_half_turn(self):
        np.testing.assert_allclose(rotate(BlochVector(1, 0, 0), (0, 0, 1), math.pi), (-1, 0, 0), atol=1e-15)

    def test_about_own_axis(self):
        for angle in (0.3, 2.0, -7.1):
            np.testing.assert_allclose(rotate(BlochVector(0, 0, 1), (0, 0, 1), angle), (0, 0, 1), atol=1e-15)

    def test_quarter_turn_is_right_handed(self):
        np.testing.assert_allclose(rotate(BlochVector(1, 0, 0), (0, 0, 1), math.pi / 2), (0, 1, 0), atol=1e-15)

    def test_ket_matches_bloch_route(self, rng):
        # unitary conjugation and Rodrigues formula are independent routes
        for _ in range(200):
            psi, n, angle = random_ket(rng, 2), random_unit(rng), rng.uniform(-10, 10)
            via_ket = bloch_from_state(rotate(psi, n, angle))
            via_vec = rotate(bloch_from_state(psi), n, angle)
            np.testing.assert_allclose(via_ket, via_vec, atol=1e-12)

    def test_norm_and_composition(self, rng):
        for _ in range(500):
            r = BlochVector(*(random_unit(rng) * rng.uniform(0, 1)))
            n, a, b = random_unit(rng), rng.uniform(-10, 10), rng.uniform(-10, 10)
            ra = rotate(r, n, a)
            assert abs(ra.norm - r.norm) <= 1e-12
            assert np.max(np.abs(np.subtract(rotate(ra, n, b), rotate(r, n, a + b)))) <= 1e-10

    def test_non_unit_axis(self):
        with pytest.raises(DomainError):
            rotate(BlochVector(1, 0, 0), (0, 0, 2), 1.0)

    def test_rodrigues_matrix_oracle(self, rng):
        n, angle = random_unit(rng), 1.1
        k = np.array([[0, -n[2], n[1]], [n[2], 0, -n[0]], [-n[1], n[0], 0]])
        rot = np.eye(3) + math.sin(angle) * k + (1 - math.cos(angle)) * k @ k
        r = rng.normal(size=3)
        np.testing.assert_allclose(rodrigues(r, n, angle), rot @ r, atol=1e-14)
