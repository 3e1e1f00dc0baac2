"""Dense complex linear algebra for small quantum systems.

Everything here operates on plain ``numpy`` arrays: state vectors are
1-d complex arrays, operators and density matrices are 2-d complex
arrays in row-major subsystem ordering (the first tensor factor is the
slow index).  All entropies are in bits (base-2 logarithms).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

# Validation tolerances.  16x16 is the largest matrix in this package, so
# double precision leaves a wide margin around these.
HERM_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-9
UNITARY_TOL = 1e-10
NORM_TOL = 1e-10

# Eigenvalues below this are treated as exact zeros inside entropies, so
# numerically pure states report entropy 0.
ENTROPY_EIG_FLOOR = 1e-12


def as_complex_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got array of ndim {m.ndim}")
    return m


def check_unitary(u, tol: float = UNITARY_TOL) -> np.ndarray:
    u = as_complex_matrix(u)
    if u.shape[0] != u.shape[1]:
        raise ValueError(f"unitary must be square, got shape {u.shape}")
    dev = np.abs(u.conj().T @ u - np.eye(u.shape[0])).max()
    if dev > tol:
        raise ValueError(f"matrix is not unitary: ||U^dag U - I||_max = {dev:.3e}")
    return u


def check_state_vector(psi, tol: float = NORM_TOL) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise ValueError(f"expected a state vector, got array of ndim {psi.ndim}")
    nrm = np.linalg.norm(psi)
    if abs(nrm - 1.0) > tol:
        raise ValueError(f"state vector is not normalized: ||psi|| = {nrm!r}")
    return psi


def check_density_matrix(rho, herm_tol: float = HERM_TOL,
                         trace_tol: float = TRACE_TOL,
                         psd_tol: float = PSD_TOL) -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity of ``rho``."""
    rho = as_complex_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    herm_dev = np.abs(rho - rho.conj().T).max()
    if herm_dev > herm_tol:
        raise ValueError(f"density matrix is not Hermitian: deviation {herm_dev:.3e}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"density matrix trace is {tr!r}, expected 1")
    wmin = np.linalg.eigvalsh((rho + rho.conj().T) / 2).min()
    if wmin < -psd_tol:
        raise ValueError(f"density matrix has negative eigenvalue {wmin:.3e}")
    return rho


def tensor(a, b, *rest) -> np.ndarray:
    """Kronecker product of two or more matrices (or vectors)."""
    out = np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))
    for m in rest:
        out = np.kron(out, np.asarray(m, dtype=complex))
    return out


def partial_trace(m, dims: Sequence[int], keep) -> np.ndarray:
    """Trace out all subsystems of ``m`` except those listed in ``keep``.

    ``dims`` gives the dimension of each tensor factor (row-major order)
    and must multiply to the side of ``m``.  ``keep`` is a subsystem
    index or an iterable of indices; the kept factors stay in their
    original relative order.
    """
    m = as_complex_matrix(m)
    dims = [int(d) for d in dims]
    side = int(np.prod(dims))
    if m.shape != (side, side):
        raise ValueError(
            f"matrix of shape {m.shape} does not match subsystem split {tuple(dims)}")
    if isinstance(keep, (int, np.integer)):
        keep = [int(keep)]
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= len(dims) for k in keep):
        raise ValueError(f"keep indices {keep} out of range for {len(dims)} subsystems")
    cur = m
    cur_dims = list(dims)
    for i in [i for i in reversed(range(len(dims))) if i not in keep]:
        n = len(cur_dims)
        cur = np.trace(cur.reshape(cur_dims + cur_dims), axis1=i, axis2=n + i)
        cur_dims.pop(i)
        d = int(np.prod(cur_dims)) if cur_dims else 1
        cur = cur.reshape(d, d)
    return cur


def herm_eigvals(h, tol: float = 1e-9) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    h = as_complex_matrix(h)
    dev = np.abs(h - h.conj().T).max()
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian: deviation {dev:.3e}")
    return np.linalg.eigvalsh(h)


def entropy_from_eigvals(w: np.ndarray) -> float:
    """Von Neumann entropy in bits from an eigenvalue array."""
    w = np.asarray(w, dtype=float)
    w = w[w > ENTROPY_EIG_FLOOR]
    if w.size == 0:
        return 0.0
    return float(-(w * np.log2(w)).sum())


def entropy(rho, validate: bool = True) -> float:
    """Von Neumann entropy S(rho) = -Tr rho log2 rho, in bits."""
    if validate:
        rho = check_density_matrix(rho)
    else:
        rho = as_complex_matrix(rho)
    return entropy_from_eigvals(np.linalg.eigvalsh(rho))


def binary_entropy(x: float) -> float:
    """H2(x) = -x log2 x - (1-x) log2(1-x), with H2(0) = H2(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary entropy argument {x!r} outside [0, 1]")
    out = 0.0
    if x > ENTROPY_EIG_FLOOR:
        out -= x * np.log2(x)
    if 1.0 - x > ENTROPY_EIG_FLOOR:
        out -= (1.0 - x) * np.log2(1.0 - x)
    return float(out)


def projector(psi) -> np.ndarray:
    """|psi><psi| for a state vector."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, psi.conj())


def maximally_mixed(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex) / dim


def maximally_entangled(dim: int) -> np.ndarray:
    """State vector of the maximally entangled pair on two dim-level systems."""
    psi = np.zeros(dim * dim, dtype=complex)
    psi[:: dim + 1] = 1.0 / np.sqrt(dim)
    return psi


def basis_state(dim: int, i: int) -> np.ndarray:
    psi = np.zeros(dim, dtype=complex)
    psi[i] = 1.0
    return psi


def bloch_state(theta: float, phi: float) -> np.ndarray:
    """Qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>."""
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)],
                    dtype=complex)


def bloch_density(r) -> np.ndarray:
    """Qubit density matrix (I + r.sigma)/2; ``r`` is clipped into the unit ball."""
    r = np.asarray(r, dtype=float)
    nrm = np.linalg.norm(r)
    if nrm > 1.0:
        r = r / nrm
    bx, by, bz = r
    return 0.5 * np.array([[1 + bz, bx - 1j * by], [bx + 1j * by, 1 - bz]],
                          dtype=complex)


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_pure_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_density_matrix(dim: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    rank = dim if rank is None else rank
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real
