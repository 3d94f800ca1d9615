"""CHSH tests between the time qubit and the spin.

Observables are ``a . tau`` on the time side and ``b . sigma`` on the spin
side, both with eigenvalues +-1. Exact correlations are traces against a
4x4 density matrix; finite-shot estimates draw joint outcomes from the Born
distribution over the four product eigenprojectors.

Sampling uses numpy's PCG64 generator (128-bit state LCG with a 64-bit
XSL-RR output permutation) seeded explicitly, and inverse-CDF lookup over
the four joint outcomes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from . import qla
from .errors import DomainError, InvalidStateError
from .qubit import dot_pauli, identity, unit_vector

Side = Literal["time", "spin"]
OUTCOMES = ((+1, +1), (+1, -1), (-1, +1), (-1, -1))
NEGATIVE_PROB_TOL = 1e-12


@dataclass(frozen=True)
class MeasurementSetting:
    direction: tuple
    side: Side

    def __post_init__(self):
        if self.side not in ("time", "spin"):
            raise DomainError(f"side must be 'time' or 'spin', got {self.side!r}")
        d = unit_vector(self.direction, name="direction")
        object.__setattr__(self, "direction", tuple(float(c) for c in d))


@dataclass(frozen=True)
class ChshResult:
    e00: float
    e01: float
    e10: float
    e11: float
    s: float


@dataclass(frozen=True)
class ShotRecord:
    """Joint outcome counts ``n(+,+), n(+,-), n(-,+), n(-,-)`` (time, spin)."""

    n_pp: int
    n_pm: int
    n_mp: int
    n_mm: int

    @property
    def shots(self) -> int:
        return self.n_pp + self.n_pm + self.n_mp + self.n_mm

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.n_pp, self.n_pm, self.n_mp, self.n_mm)

    def as_dict(self) -> dict:
        return {"n_pp": self.n_pp, "n_pm": self.n_pm, "n_mp": self.n_mp, "n_mm": self.n_mm}


def tsirelson_settings() -> tuple[MeasurementSetting, MeasurementSetting, MeasurementSetting, MeasurementSetting]:
    """Maximal-violation settings: a0 = z, a1 = x, b0 = (z+x)/sqrt2, b1 = (z-x)/sqrt2."""
    r = 1 / math.sqrt(2)
    return (
        MeasurementSetting((0.0, 0.0, 1.0), "time"),
        MeasurementSetting((1.0, 0.0, 0.0), "time"),
        MeasurementSetting((r, 0.0, r), "spin"),
        MeasurementSetting((-r, 0.0, r), "spin"),
    )


def bell_state() -> np.ndarray:
    """``(|+>|up> + |->|down>)/sqrt(2)`` in time (x) spin ordering."""
    return np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)


def observable(setting: MeasurementSetting) -> np.ndarray:
    """The dichotomic observable ``direction . tau`` (or ``. sigma``)."""
    return dot_pauli(setting.direction)


def _as_density(rho) -> np.ndarray:
    a = np.asarray(rho, dtype=complex)
    if a.ndim == 1:
        a = qla.ket_to_density(qla.check_ket(a, dims=(4,)))
    return qla.check_density(a, dims=(4,), positivity=False)


def _check_sides(a: MeasurementSetting, b: MeasurementSetting) -> None:
    if a.side != "time" or b.side != "spin":
        raise DomainError(f"expected a time-side and a spin-side setting, got {a.side!r} and {b.side!r}")


def correlation(rho, a: MeasurementSetting, b: MeasurementSetting) -> float:
    """``E(a, b) = Tr[rho (a . tau) (x) (b . sigma)]``. ``rho`` may also be a 4-ket."""
    _check_sides(a, b)
    rho = _as_density(rho)
    return float(np.trace(rho @ qla.tensor(observable(a), observable(b))).real)


def chsh(rho, a0, a1, b0, b1) -> ChshResult:
    """``S = E(a0,b0) + E(a0,b1) + E(a1,b0) - E(a1,b1)`` with its four terms."""
    for a, b in ((a0, b0), (a1, b1)):
        _check_sides(a, b)
    rho = _as_density(rho)
    e = {(j, k): correlation(rho, aj, bk) for j, aj in enumerate((a0, a1)) for k, bk in enumerate((b0, b1))}
    s = e[0, 0] + e[0, 1] + e[1, 0] - e[1, 1]
    return ChshResult(e[0, 0], e[0, 1], e[1, 0], e[1, 1], s)


def eigenprojectors(op) -> dict[int, np.ndarray]:
    """Projectors onto the +1 and -1 eigenspaces of a dichotomic observable."""
    i = identity()
    return {+1: 0.5 * (i + op), -1: 0.5 * (i - op)}


def joint_probabilities(rho, a: MeasurementSetting, b: MeasurementSetting) -> np.ndarray:
    """Born probabilities of the outcomes ``(+,+), (+,-), (-,+), (-,-)``.

    Values in ``[-1e-12, 0)`` are clamped to zero; anything more negative
    means ``rho`` is not a state.
    """
    _check_sides(a, b)
    rho = _as_density(rho)
    pa, pb = eigenprojectors(observable(a)), eigenprojectors(observable(b))
    probs = np.array([np.trace(rho @ qla.tensor(pa[x], pb[y])).real for x, y in OUTCOMES])
    if probs.min() < -NEGATIVE_PROB_TOL:
        raise InvalidStateError(f"negative outcome probability {float(probs.min())!r}")
    return np.clip(probs, 0.0, None)


SeedLike = Union[int, np.random.SeedSequence]


def sample_correlation(rho, a, b, shots: int, seed: SeedLike) -> tuple[ShotRecord, float]:
    """Sample ``shots`` joint measurements and estimate the correlation.

    Deterministic for a fixed ``seed``. Returns the counts and
    ``e_hat = sum(alpha beta n(alpha, beta)) / shots``.
    """
    if int(shots) != shots or shots < 1:
        raise DomainError(f"shots must be a positive integer, got {shots!r}")
    shots = int(shots)
    probs = joint_probabilities(rho, a, b)
    cdf = np.cumsum(probs)
    cdf /= cdf[-1]
    rng = np.random.Generator(np.random.PCG64(seed))
    idx = np.searchsorted(cdf, rng.random(shots), side="right")
    counts = np.bincount(np.minimum(idx, 3), minlength=4)
    record = ShotRecord(*(int(c) for c in counts))
    e_hat = (counts[0] - counts[1] - counts[2] + counts[3]) / shots
    return record, float(e_hat)


def sample_chsh(rho, a0, a1, b0, b1, shots: int, seed: int):
    """Finite-shot CHSH estimate with an independent stream per setting pair.

    Returns ``(records, e_hats, s_hat)`` where the first two are dicts keyed
    by ``"00"``, ``"01"``, ``"10"``, ``"11"``.
    """
    children = np.random.SeedSequence(seed).spawn(4)
    records, e_hats = {}, {}
    pairs = {"00": (a0, b0), "01": (a0, b1), "10": (a1, b0), "11": (a1, b1)}
    for child, (key, (a, b)) in zip(children, pairs.items()):
        records[key], e_hats[key] = sample_correlation(rho, a, b, shots, child)
    s_hat = e_hats["00"] + e_hats["01"] + e_hats["10"] - e_hats["11"]
    return records, e_hats, s_hat


def lhv_table() -> list[tuple[int, int, int, int, int]]:
    """All deterministic local assignments ``(a0, a1, b0, b1, S)``."""
    rows = []
    for a0, a1, b0, b1 in itertools.product((+1, -1), repeat=4):
        rows.append((a0, a1, b0, b1, a0 * b0 + a0 * b1 + a1 * b0 - a1 * b1))
    return rows


def lhv_extremes() -> tuple[list[int], int]:
    """CHSH values of the 16 deterministic strategies and their max ``|S|``."""
    s_values = [row[-1] for row in lhv_table()]
    return s_values, max(abs(s) for s in s_values)
