"""Dense complex linear algebra for 2- and 4-dimensional operators.

Matrices are plain ``numpy`` complex arrays. Composite operators on the
time-qubit/system space are always ordered with the time factor on the left,
so the 4-dimensional basis reads ``|+,up>, |+,down>, |-,up>, |-,down>``.
This is the only place the convention is fixed; everything else builds
composite operators through :func:`tensor`.

The Hermitian eigensolver is a cyclic complex Jacobi iteration and matrix
exponentials are taken through it, so no LAPACK routine sits on the
computational path.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DimensionError, InvalidStateError, PreconditionError

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-12
NORM_TOL = 1e-12
POSITIVITY_TOL = 1e-10

JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100

_ALLOWED_DIMS = (2, 4)


def as_matrix(m, dims=_ALLOWED_DIMS) -> np.ndarray:
    """Return ``m`` as a square complex array, checking its dimension."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in dims:
        raise DimensionError(f"expected a square matrix of dimension {dims}, got shape {a.shape}")
    return a


def as_ket(psi, dims=_ALLOWED_DIMS) -> np.ndarray:
    """Return ``psi`` as a 1-D complex array, checking its dimension."""
    a = np.asarray(psi, dtype=complex)
    if a.ndim != 1 or a.shape[0] not in dims:
        raise DimensionError(f"expected a state vector of dimension {dims}, got shape {a.shape}")
    return a


def frozen(a: np.ndarray) -> np.ndarray:
    """Mark an array read-only and return it."""
    a.setflags(write=False)
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(m)).T


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    a = np.asarray(m, dtype=complex)
    return bool(np.max(np.abs(a - a.conj().T)) <= tol)


def is_unitary(m, tol: float = UNITARY_TOL) -> bool:
    a = np.asarray(m, dtype=complex)
    return bool(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))) <= tol)


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a, b) -> np.ndarray:
    return a @ b + b @ a


def tensor(a, b) -> np.ndarray:
    """Kronecker product of a time-qubit operator ``a`` and a spin operator ``b``.

    Both operands must be 2x2. The time factor is the slow (left) index.

    >>> tensor(np.diag([1, -1]), np.eye(2)).diagonal().real
    array([ 1.,  1., -1., -1.])
    """
    a = as_matrix(a, dims=(2,))
    b = as_matrix(b, dims=(2,))
    return np.kron(a, b)


def tensor_ket(a, b) -> np.ndarray:
    """Product ket ``a (x) b`` with the time factor on the left."""
    return np.kron(as_ket(a, dims=(2,)), as_ket(b, dims=(2,)))


def _offdiag_norm(a: np.ndarray) -> float:
    off = a[~np.eye(a.shape[0], dtype=bool)]
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _phase_normalize(v: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    # first component above tol made real positive
    for comp in v:
        if abs(comp) > tol:
            return v * (abs(comp) / comp)
    return v


def _jacobi(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = a.shape[0]
    a = a.copy()
    v = np.eye(n, dtype=complex)
    threshold = JACOBI_TOL * max(1.0, float(np.linalg.norm(a)))
    for _ in range(JACOBI_MAX_SWEEPS):
        if _offdiag_norm(a) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                # unitary J = diag(1, e^{-i phase}) . real rotation, zeroes a[p, q]
                phase = apq / r
                theta = 0.5 * math.atan2(2.0 * r, a[p, p].real - a[q, q].real)
                c, s = math.cos(theta), math.sin(theta)
                j = np.eye(n, dtype=complex)
                j[p, p] = c
                j[p, q] = -s
                j[q, p] = s / phase
                j[q, q] = c / phase
                a = j.conj().T @ a @ j
                a[p, q] = a[q, p] = 0.0
                v = v @ j
        # keep the diagonal exactly real
        a[np.diag_indices(n)] = a.diagonal().real
    return a.diagonal().real.copy(), v


def herm_eig(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian 2x2 or 4x4 matrix.

    Returns
    -------
    eigenvalues : ndarray, shape (n,)
        Real eigenvalues in ascending order.
    eigenvectors : ndarray, shape (n, n)
        Orthonormal eigenvectors as columns. Each column is phase-fixed so
        that its first non-negligible component is real and positive.
        Within a degenerate cluster (eigenvalues equal within 1e-10) columns are
        ordered lexicographically by their components.

    Raises
    ------
    PreconditionError
        If ``h`` is not Hermitian within 1e-12.
    """
    a = as_matrix(h)
    if not is_hermitian(a):
        raise PreconditionError("herm_eig requires a Hermitian matrix")
    # symmetrize so rounding in the input cannot leak into the iteration
    a = 0.5 * (a + a.conj().T)
    vals, vecs = _jacobi(a)
    vecs = np.column_stack([_phase_normalize(vecs[:, k]) for k in range(vecs.shape[1])])

    def vec_key(k):
        col = np.round(vecs[:, k], 12)
        return tuple(x for c in col for x in (c.real, c.imag))

    order = sorted(range(len(vals)), key=lambda k: vals[k])
    # reorder ties by eigenvector components
    out, i = [], 0
    while i < len(order):
        j = i + 1
        while j < len(order) and vals[order[j]] - vals[order[i]] <= 1e-10:
            j += 1
        out.extend(sorted(order[i:j], key=vec_key))
        i = j
    return vals[out], vecs[:, out]


def expm_i(h, t: float) -> np.ndarray:
    """Unitary ``exp(-i h t)`` for Hermitian ``h`` (hbar = 1), by spectral sum."""
    vals, vecs = herm_eig(h)
    return (vecs * np.exp(-1j * vals * t)) @ vecs.conj().T


def ket_to_density(psi) -> np.ndarray:
    psi = as_ket(psi)
    return np.outer(psi, psi.conj())


def check_ket(psi, dims=_ALLOWED_DIMS) -> np.ndarray:
    """Validate a normalized ket and return it as an array."""
    psi = as_ket(psi, dims)
    if abs(np.vdot(psi, psi).real - 1.0) > NORM_TOL:
        raise InvalidStateError(f"state vector is not normalized (norm^2 = {float(np.vdot(psi, psi).real)!r})")
    return psi


def check_density(rho, dims=_ALLOWED_DIMS, positivity: bool = True) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace and (optionally) positive."""
    try:
        rho = as_matrix(rho, dims)
    except DimensionError as exc:
        raise InvalidStateError(str(exc)) from exc
    if not is_hermitian(rho):
        raise InvalidStateError("density matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > NORM_TOL:
        raise InvalidStateError(f"density matrix trace is {complex(tr).real!r}, expected 1")
    if positivity:
        vals, _ = herm_eig(rho)
        if vals[0] < -POSITIVITY_TOL:
            raise InvalidStateError(f"density matrix has negative eigenvalue {float(vals[0])!r}")
    return rho


def partial_trace_system(rho) -> np.ndarray:
    """Reduced time-qubit state ``Tr_S rho`` of a 4x4 time (x) spin density matrix."""
    rho = check_density(rho, dims=(4,), positivity=False)
    return np.einsum("asbs->ab", rho.reshape(2, 2, 2, 2))


def partial_trace_time(rho) -> np.ndarray:
    """Reduced spin state ``Tr_T rho`` of a 4x4 time (x) spin density matrix."""
    rho = check_density(rho, dims=(4,), positivity=False)
    return np.einsum("tatb->ab", rho.reshape(2, 2, 2, 2))
