"""Controlled forward/backward evolution of a spin system.

A :class:`ControlledHamiltonian` holds a time-symmetric part ``h0`` and an
orientation-odd part ``v``. The time qubit selects ``H+ = h0 + v`` on
``|+>_T`` and ``H- = h0 - v`` on ``|->_T``; the composite generator is
``I (x) h0 + tau_z (x) v``. Times are dimensionless phases (hbar = 1) and
may be negative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qla
from .errors import PreconditionError
from .qubit import dot_pauli, identity, pauli, unit_vector


@dataclass(frozen=True)
class ControlledHamiltonian:
    h0: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        for name in ("h0", "v"):
            m = qla.as_matrix(getattr(self, name), dims=(2,))
            if not qla.is_hermitian(m):
                raise PreconditionError(f"{name} must be Hermitian")
            object.__setattr__(self, name, qla.frozen(m.copy()))


@dataclass(frozen=True)
class ZeemanParams:
    """Larmor angular frequency ``omega`` and unit field direction ``axis``.

    The Zeeman coupling ``(g mu_B / 2) sigma . B`` is written as
    ``(omega / 2) axis . sigma``; the individual factors g, mu_B and |B|
    are absorbed into ``omega``.
    """

    omega: float
    axis: tuple = (0.0, 0.0, 1.0)

    def __post_init__(self):
        object.__setattr__(self, "omega", float(self.omega))
        object.__setattr__(self, "axis", tuple(float(c) for c in unit_vector(self.axis)))

    def coupling(self) -> np.ndarray:
        """The orientation-odd term ``V = (omega/2) axis . sigma``."""
        return 0.5 * self.omega * dot_pauli(self.axis)

    def hamiltonian(self, h0=None) -> ControlledHamiltonian:
        """Controlled Hamiltonian with ``V`` from this field and optional ``h0``.

        ``h0`` defaults to zero: a kinetic term acts identically on both arms
        and only contributes a global phase.
        """
        if h0 is None:
            h0 = np.zeros((2, 2), dtype=complex)
        return ControlledHamiltonian(h0, self.coupling())


def h_plus_minus(ch: ControlledHamiltonian) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(h0 + v, h0 - v)``."""
    return ch.h0 + ch.v, ch.h0 - ch.v


def h_tot(ch: ControlledHamiltonian) -> np.ndarray:
    """Composite generator ``I_T (x) h0 + tau_z (x) v`` on time (x) spin."""
    return qla.tensor(identity(), ch.h0) + qla.tensor(pauli("z"), ch.v)


def branch_unitaries(ch: ControlledHamiltonian, t: float) -> tuple[np.ndarray, np.ndarray]:
    h_plus, h_minus = h_plus_minus(ch)
    return qla.expm_i(h_plus, t), qla.expm_i(h_minus, t)


def evolve_composite(psi0, ch: ControlledHamiltonian, t: float) -> np.ndarray:
    """Evolve a normalized 4-component state by ``exp(-i h_tot t)``."""
    psi0 = qla.check_ket(psi0, dims=(4,))
    return qla.expm_i(h_tot(ch), t) @ psi0


def kraus_pair(ch: ControlledHamiltonian, t: float) -> tuple[np.ndarray, np.ndarray]:
    """Time-even and time-odd parts of the two branch propagators.

    ``u_even = (U+ + U-)/2`` and ``u_odd = (U+ - U-)/2`` are the Kraus
    operators on the system for a time qubit prepared in ``|+_x>`` and
    measured in the ``tau_x`` basis; they satisfy
    ``u_even^dag u_even + u_odd^dag u_odd = I``.
    """
    u_plus, u_minus = branch_unitaries(ch, t)
    return 0.5 * (u_plus + u_minus), 0.5 * (u_plus - u_minus)
