"""Mach-Zehnder interferometer with opposite fields in its two arms.

The path qubit is the time qubit: upper arm ``|u> = |+>_T`` carries
``H+``, lower arm ``|l> = |->_T`` carries ``H-``. A 50/50 beam splitter
prepares ``|+_x>``; the second one maps the ``tau_x`` eigenstates onto the
output ports, ``D1 <-> |+_x>`` and ``D2 <-> |-_x>``.

Which-path decoherence is a phase-damping channel on the path applied
between the arms and the second beam splitter. It scales the path
coherences by ``1 - lam`` and leaves the arm populations untouched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from . import qla
from .dynamics import ZeemanParams, branch_unitaries, kraus_pair
from .errors import DomainError
from .qubit import identity, pauli

_BS = qla.frozen(np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2))


def beamsplitter() -> np.ndarray:
    """Symmetric, self-inverse 50/50 beam splitter ``[[1, 1], [1, -1]] / sqrt(2)``."""
    return _BS


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"dephasing strength {lam!r} outside [0, 1]")
    return lam


@dataclass(frozen=True)
class MzConfig:
    zeeman: ZeemanParams
    traversal_time: float
    spin_in: np.ndarray = field(default_factory=lambda: np.array([1, 1], dtype=complex) / math.sqrt(2))
    dephasing: float = 0.0

    def __post_init__(self):
        if not self.traversal_time >= 0.0:
            raise DomainError(f"traversal time {self.traversal_time!r} must be >= 0")
        try:
            spin = qla.check_ket(self.spin_in, dims=(2,))
        except Exception as exc:
            raise DomainError(f"invalid input spin: {exc}") from exc
        object.__setattr__(self, "spin_in", qla.frozen(spin.copy()))
        object.__setattr__(self, "dephasing", _check_lambda(self.dephasing))


@dataclass(frozen=True)
class PortResult:
    """Detection probabilities and conditional spin states at D1 and D2.

    ``rho_spin_d1``/``rho_spin_d2`` are the unnormalized conditional spin
    density matrices, with trace equal to the port probability. For a
    coherent run (no dephasing) the conditional spin states are pure and
    ``spin_out_d1``/``spin_out_d2`` hold the unnormalized amplitudes
    ``u_even chi0`` and ``u_odd chi0``; otherwise they are ``None``.
    """

    p_d1: float
    p_d2: float
    rho_spin_d1: np.ndarray
    rho_spin_d2: np.ndarray
    spin_out_d1: Optional[np.ndarray] = None
    spin_out_d2: Optional[np.ndarray] = None


def dephasing_kraus(lam: float) -> tuple[np.ndarray, np.ndarray]:
    """Kraus operators ``sqrt(1 - lam/2) I`` and ``sqrt(lam/2) tau_z``."""
    lam = _check_lambda(lam)
    return math.sqrt(1.0 - 0.5 * lam) * identity(), math.sqrt(0.5 * lam) * pauli("z")


def which_path_dephase(rho_t, lam: float) -> np.ndarray:
    """Phase-damp a path (time-qubit) density matrix.

    Maps the Bloch vector ``(r_x, r_y, r_z)`` to
    ``((1 - lam) r_x, (1 - lam) r_y, r_z)``.
    """
    rho_t = qla.check_density(rho_t, dims=(2,))
    return sum(k @ rho_t @ k.conj().T for k in dephasing_kraus(lam))


def _dephase_path(rho_ts: np.ndarray, lam: float) -> np.ndarray:
    ks = [qla.tensor(k, identity()) for k in dephasing_kraus(lam)]
    return sum(k @ rho_ts @ k.conj().T for k in ks)


def run_interferometer(cfg: MzConfig) -> PortResult:
    """Propagate the input spin through both beam splitters and the arms."""
    chi0 = cfg.spin_in
    ch = cfg.zeeman.hamiltonian()
    if cfg.dephasing == 0.0:
        u_even, u_odd = kraus_pair(ch, cfg.traversal_time)
        out1, out2 = u_even @ chi0, u_odd @ chi0
        return PortResult(
            p_d1=float(np.vdot(out1, out1).real),
            p_d2=float(np.vdot(out2, out2).real),
            rho_spin_d1=np.outer(out1, out1.conj()),
            rho_spin_d2=np.outer(out2, out2.conj()),
            spin_out_d1=out1,
            spin_out_d2=out2,
        )

    u_plus, u_minus = branch_unitaries(ch, cfg.traversal_time)
    # first beam splitter sends |u> into (|u> + |l>)/sqrt(2)
    path = _BS @ np.array([1, 0], dtype=complex)
    psi = np.concatenate([path[0] * (u_plus @ chi0), path[1] * (u_minus @ chi0)])
    rho = _dephase_path(np.outer(psi, psi.conj()), cfg.dephasing)
    bs2 = qla.tensor(_BS, identity())
    rho = bs2 @ rho @ bs2.conj().T
    d1, d2 = rho[:2, :2], rho[2:, 2:]
    return PortResult(
        p_d1=float(np.trace(d1).real),
        p_d2=float(np.trace(d2).real),
        rho_spin_d1=d1,
        rho_spin_d2=d2,
    )


def fringe_sweep(cfg: MzConfig, phase_max: float, steps: int) -> list[tuple[float, float, float]]:
    """Port probabilities on a uniform grid of Larmor phases ``omega T``.

    The grid runs from 0 to ``phase_max`` inclusive with ``steps`` points;
    the traversal time at each point is ``phase / omega``. Returns rows
    ``(phase, p_d1, p_d2)`` in phase order.
    """
    if int(steps) != steps or steps < 2:
        raise DomainError(f"steps must be an integer >= 2, got {steps!r}")
    if cfg.zeeman.omega <= 0.0:
        raise DomainError("fringe sweeps need a positive Larmor frequency")
    if phase_max < 0.0:
        raise DomainError(f"phase_max = {phase_max!r} must be >= 0")
    rows = []
    for phase in np.linspace(0.0, phase_max, int(steps)):
        res = run_interferometer(replace(cfg, traversal_time=phase / cfg.zeeman.omega))
        rows.append((float(phase), res.p_d1, res.p_d2))
    return rows


def fringe_visibility(phases, p_d1) -> float:
    """Visibility of a sampled fringe ``a + b cos(phase) + c sin(phase)``.

    The three coefficients are fitted by linear least squares and the
    visibility ``sqrt(b^2 + c^2) / a`` is returned. For the sinusoidal
    fringes of a z-field this equals ``(max - min) / (max + min)``.
    """
    phases = np.asarray(phases, dtype=float)
    design = np.column_stack([np.ones_like(phases), np.cos(phases), np.sin(phases)])
    (a, b, c), *_ = np.linalg.lstsq(design, np.asarray(p_d1, dtype=float), rcond=None)
    return float(math.hypot(b, c) / a)
