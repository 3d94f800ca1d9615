"""The free Dirac Hamiltonian as a time qubit coupled to a spin.

``H_D = tau_z (x) m + tau_x (x) sigma . p`` in natural units (c = hbar = 1).
``tau_z`` is the energy-sign operator; the momentum term mixes the two
signs. Restricted to a helicity-``s`` spin state the Hamiltonian becomes
``B_eff . tau`` with ``B_eff = (s |p|, 0, m)``, and the time-qubit Bloch
vector precesses about ``B_eff`` at angular frequency ``2 E(p)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import qla
from .errors import DegenerateError, DomainError, PreconditionError
from .qubit import (
    BlochVector,
    bloch_vector,
    density_from_bloch,
    dot_pauli,
    identity,
    pauli,
)

CLIFFORD_TOL = 1e-12
MINKOWSKI = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class DiracParams:
    mass: float
    momentum: tuple = (0.0, 0.0, 0.0)

    def __post_init__(self):
        if not self.mass >= 0.0:
            raise DomainError(f"mass must be >= 0, got {self.mass!r}")
        p = np.asarray(self.momentum, dtype=float)
        if p.shape != (3,):
            raise DomainError(f"momentum must be a 3-vector, got shape {p.shape}")
        object.__setattr__(self, "mass", float(self.mass))
        object.__setattr__(self, "momentum", tuple(float(c) for c in p))

    @property
    def p_norm(self) -> float:
        return math.sqrt(sum(c * c for c in self.momentum))


class EffectiveField(NamedTuple):
    b_x: float
    b_y: float
    b_z: float
    helicity: int

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.b_x, self.b_y, self.b_z])

    @property
    def magnitude(self) -> float:
        return math.hypot(self.b_x, self.b_y, self.b_z)


def _check_helicity(s: int) -> int:
    if s not in (1, -1):
        raise DomainError(f"helicity must be +1 or -1, got {s!r}")
    return int(s)


def dirac_hamiltonian(params: DiracParams) -> np.ndarray:
    """4x4 Dirac Hamiltonian ``tau_z (x) m I + tau_x (x) sigma . p``."""
    return qla.tensor(pauli("z"), params.mass * identity()) + qla.tensor(pauli("x"), dot_pauli(params.momentum))


def energy(params: DiracParams) -> float:
    """Positive branch of the dispersion relation, ``sqrt(m^2 + p^2)``."""
    return math.sqrt(params.mass**2 + params.p_norm**2)


def clifford_check(a, b, tol: float = CLIFFORD_TOL) -> bool:
    """Whether ``a^2 = b^2 = I`` and ``{a, b} = 0``, as required for ``H_D^2 = E^2``."""
    a = qla.as_matrix(a, dims=(2,))
    b = qla.as_matrix(b, dims=(2,))
    if not (qla.is_hermitian(a) and qla.is_hermitian(b)):
        raise DomainError("clifford_check requires Hermitian operands")
    i = np.eye(2)
    return bool(
        np.max(np.abs(a @ a - i)) <= tol
        and np.max(np.abs(b @ b - i)) <= tol
        and np.max(np.abs(qla.anticommutator(a, b))) <= tol
    )


def gamma_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """``gamma^0 = tau_z (x) I`` and ``gamma^i = i tau_y (x) sigma_i``."""
    g0 = qla.tensor(pauli("z"), identity())
    gs = tuple(qla.tensor(1j * pauli("y"), pauli(k)) for k in "xyz")
    return (g0,) + gs


def helicity_states(p: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """Spin eigenstates of ``sigma . p`` with eigenvalues ``+|p|`` and ``-|p|``.

    Returned as ``(chi_plus, chi_minus)``, phase-fixed by :func:`qla.herm_eig`.
    """
    p = np.asarray(p, dtype=float)
    if np.linalg.norm(p) == 0.0:
        raise DegenerateError("helicity is undefined at zero momentum")
    _, vecs = qla.herm_eig(dot_pauli(p))
    return vecs[:, 1], vecs[:, 0]


def effective_field(params: DiracParams, s: int) -> EffectiveField:
    s = _check_helicity(s)
    return EffectiveField(s * params.p_norm, 0.0, params.mass, s)


def reduced_hamiltonian(params: DiracParams, s: int) -> np.ndarray:
    """Time-qubit Hamiltonian ``m tau_z + s |p| tau_x`` in the helicity-``s`` sector."""
    b = effective_field(params, s)
    return dot_pauli(b.vector)


def project_spin(h, chi) -> np.ndarray:
    """Partial matrix element ``<chi| h |chi>`` over the spin factor of a 4x4 operator."""
    h = qla.as_matrix(h, dims=(4,))
    chi = qla.as_ket(chi, dims=(2,))
    return np.einsum("s,asbt,t->ab", chi.conj(), h.reshape(2, 2, 2, 2), chi)


def precess(initial, params: DiracParams, s: int, times) -> list[BlochVector]:
    """Time-qubit Bloch trajectory under the helicity-reduced Hamiltonian.

    ``initial`` is a 2-ket or a :class:`BlochVector` (mixed states allowed).
    Each point is ``bloch(U(t) rho U(t)^dag)`` with ``U(t) = exp(-i H_s t)``.
    """
    times = list(times)
    if not times:
        raise DomainError("precess needs at least one time")
    if not all(math.isfinite(t) for t in times):
        raise DomainError("times must be finite")
    if isinstance(initial, BlochVector):
        rho0 = density_from_bloch(initial)
    else:
        psi = qla.check_ket(initial, dims=(2,))
        rho0 = qla.ket_to_density(psi)
    h = reduced_hamiltonian(params, s)
    vals, vecs = qla.herm_eig(h)
    out = []
    for t in times:
        u = (vecs * np.exp(-1j * vals * t)) @ vecs.conj().T
        rho = u @ rho0 @ u.conj().T
        # re-Hermitize rounding before validation
        out.append(bloch_vector(0.5 * (rho + rho.conj().T)))
    return out


def representation_rotate(h, angle: float) -> np.ndarray:
    """Conjugate a 4x4 operator by ``exp(-i angle/2 tau_z) (x) I``.

    ``angle = pi/2`` maps ``tau_x (x) M`` onto ``tau_y (x) M``, turning the
    standard Dirac Hamiltonian into the equivalent ``tau_z m + tau_y sigma.p``
    form.
    """
    h = qla.as_matrix(h, dims=(4,))
    u = qla.tensor(qla.expm_i(0.5 * pauli("z"), angle), identity())
    return u @ h @ u.conj().T


def majorana_axis_check(h2, tol: float = 1e-10) -> tuple[np.ndarray, bool]:
    """Field direction of a traceless 2x2 Hamiltonian and whether it is transverse.

    Writes ``h2 = b . tau`` and returns ``(b / |b|, |b_z| / |b| < tol)``.
    Eigenstates are equal-weight superpositions of ``|+>_T`` and ``|->_T``
    exactly when the axis lies on the equator.
    """
    h2 = qla.as_matrix(h2, dims=(2,))
    if not qla.is_hermitian(h2):
        raise PreconditionError("majorana_axis_check requires a Hermitian matrix")
    if abs(np.trace(h2)) > 1e-12:
        raise PreconditionError("majorana_axis_check requires a traceless matrix")
    b = np.array([0.5 * np.trace(h2 @ pauli(k)).real for k in "xyz"])
    norm = np.linalg.norm(b)
    if norm == 0.0:
        raise DegenerateError("zero field has no axis")
    return b / norm, bool(abs(b[2]) / norm < tol)
