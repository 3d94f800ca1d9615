"""Single time-qubit states, Bloch vectors and rotations.

The logical basis is ``|+>_T = (1, 0)`` (evolution under H+) and
``|->_T = (0, 1)`` (evolution under H-). Kets are 1-D complex arrays;
Bloch vectors are :class:`BlochVector` tuples. The two are converted
explicitly, never implicitly.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence, Union

import numpy as np

from . import qla
from .errors import DomainError

BLOCH_TOL = 1e-12
UNIT_TOL = 1e-12

_I2 = qla.frozen(np.eye(2, dtype=complex))
_PAULI = {
    "x": qla.frozen(np.array([[0, 1], [1, 0]], dtype=complex)),
    "y": qla.frozen(np.array([[0, -1j], [1j, 0]], dtype=complex)),
    "z": qla.frozen(np.array([[1, 0], [0, -1]], dtype=complex)),
}


def pauli(axis: str) -> np.ndarray:
    """Pauli matrix ``tau_x``, ``tau_y`` or ``tau_z`` (read-only array)."""
    try:
        return _PAULI[axis]
    except KeyError:
        raise DomainError(f"unknown Pauli axis {axis!r}; expected 'x', 'y' or 'z'") from None


def identity() -> np.ndarray:
    return _I2


def pauli_vector() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return _PAULI["x"], _PAULI["y"], _PAULI["z"]


def dot_pauli(n: Sequence[float]) -> np.ndarray:
    """``n . tau`` for a real 3-vector ``n``."""
    nx, ny, nz = (float(c) for c in n)
    return nx * _PAULI["x"] + ny * _PAULI["y"] + nz * _PAULI["z"]


def unit_vector(n: Sequence[float], tol: float = UNIT_TOL, name: str = "axis") -> np.ndarray:
    """Return ``n`` as a float array after checking it has unit length."""
    v = np.asarray(n, dtype=float)
    if v.shape != (3,):
        raise DomainError(f"{name} must be a 3-vector, got shape {v.shape}")
    if abs(np.linalg.norm(v) - 1.0) > tol:
        raise DomainError(f"{name} must be a unit vector (|{name}| = {float(np.linalg.norm(v))!r})")
    return v


class BlochVector(NamedTuple):
    """Real Bloch vector ``(<tau_x>, <tau_y>, <tau_z>)`` of a time-qubit state."""

    x: float
    y: float
    z: float

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=float)

    @classmethod
    def from_array(cls, r) -> "BlochVector":
        rx, ry, rz = (float(c) for c in r)
        return cls(rx, ry, rz)


class BlochAngles(NamedTuple):
    theta: float
    phi: float


def state_from_angles(theta: float, phi: float) -> np.ndarray:
    """Pure state ``cos(theta/2)|+> + exp(i phi) sin(theta/2)|->``.

    ``theta`` must lie in ``[0, pi]`` and ``phi`` in ``[0, 2 pi)``. The
    coefficient of ``|+>`` is real and nonnegative; at ``theta = pi`` the
    returned ket is exactly ``(0, 1)``.
    """
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta = {theta!r} outside [0, pi]")
    if not 0.0 <= phi < 2.0 * math.pi:
        raise DomainError(f"phi = {phi!r} outside [0, 2 pi)")
    if theta == math.pi:
        return np.array([0.0, 1.0], dtype=complex)
    return np.array([math.cos(theta / 2), np.exp(1j * phi) * math.sin(theta / 2)], dtype=complex)


def angles_from_bloch(r) -> BlochAngles:
    """Polar angles of the direction of a nonzero Bloch vector."""
    v = np.asarray(r, dtype=float)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise DomainError("the zero Bloch vector has no direction")
    theta = math.acos(max(-1.0, min(1.0, v[2] / n)))
    phi = math.atan2(v[1], v[0]) % (2 * math.pi)
    if phi >= 2 * math.pi:  # (-tiny) % 2pi rounds up to 2pi
        phi = 0.0
    return BlochAngles(theta, phi)


def state_from_bloch(r) -> np.ndarray:
    """Pure state whose Bloch vector points along the unit vector ``r``."""
    return state_from_angles(*angles_from_bloch(unit_vector(r, name="r")))


def bloch_vector(rho) -> BlochVector:
    """Bloch vector ``r_k = Tr(rho tau_k)`` of a 2x2 density matrix."""
    rho = qla.check_density(rho, dims=(2,))
    return BlochVector(*(float(np.trace(rho @ _PAULI[k]).real) for k in "xyz"))


def bloch_from_state(psi) -> BlochVector:
    """Bloch vector of a normalized ket."""
    psi = qla.check_ket(psi, dims=(2,))
    return BlochVector(*(float(np.vdot(psi, _PAULI[k] @ psi).real) for k in "xyz"))


def density_from_bloch(r) -> np.ndarray:
    """Density matrix ``(I + r . tau) / 2``; requires ``|r| <= 1``."""
    r = np.asarray(r, dtype=float)
    if r.shape != (3,):
        raise DomainError(f"Bloch vector must have 3 components, got shape {r.shape}")
    if np.linalg.norm(r) > 1.0 + BLOCH_TOL:
        raise DomainError(f"|r| = {float(np.linalg.norm(r))!r} exceeds 1")
    return 0.5 * (_I2 + dot_pauli(r))


def rotation_unitary(axis, angle: float) -> np.ndarray:
    """``exp(-i angle/2 n . tau)``: a rotation of the Bloch sphere by ``angle`` about ``n``."""
    n = unit_vector(axis)
    return qla.expm_i(0.5 * dot_pauli(n), angle)


def rodrigues(r, axis, angle: float) -> np.ndarray:
    """Rotate the 3-vector ``r`` by ``angle`` about the unit ``axis`` (right-handed)."""
    r = np.asarray(r, dtype=float)
    n = np.asarray(axis, dtype=float)
    c, s = math.cos(angle), math.sin(angle)
    return r * c + np.cross(n, r) * s + n * np.dot(n, r) * (1.0 - c)


StateOrBloch = Union[BlochVector, np.ndarray]


def rotate(state: StateOrBloch, axis, angle: float) -> StateOrBloch:
    """Evolve under ``H_T = (Omega_T/2) n . tau`` for phase ``angle = Omega_T t``.

    A :class:`BlochVector` is rotated rigidly about ``axis``; a ket is
    multiplied by ``exp(-i angle/2 n . tau)``. The result has the same kind
    as the input.
    """
    n = unit_vector(axis)
    if isinstance(state, BlochVector):
        return BlochVector.from_array(rodrigues(state.as_array(), n, angle))
    psi = qla.check_ket(state, dims=(2,))
    return rotation_unitary(n, angle) @ psi
