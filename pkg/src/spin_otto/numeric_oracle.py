"""Brute-force reference path: explicit 4x4 matrices and numerical linear algebra.

Nothing here calls the closed forms in :mod:`spin_otto.spin_model`; the
functions build the Hamiltonian from Pauli matrices, diagonalize it with
LAPACK, and sum Boltzmann weights directly. Tests compare the two paths.

Basis order is ``|00>, |11>, |01>, |10>`` so that matrix indices line up with
the eigenstate labels psi1..psi4. ``|0>`` is the single-spin ground state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DomainError
from .otto_engine import CycleResult, CycleSpec, make_result
from .spin_model import ModelParams, Spectrum

# single-spin operators in the (|0>, |1>) basis, |0> = spin down
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, 1j], [-1j, 0]], dtype=complex)
SIGMA_Z = np.array([[-1, 0], [0, 1]], dtype=complex)
SIGMA_PLUS = (SIGMA_X + 1j * SIGMA_Y) / 2  # |1><0|
SIGMA_MINUS = (SIGMA_X - 1j * SIGMA_Y) / 2  # |0><1|

# kron order |00>,|01>,|10>,|11>  ->  |00>,|11>,|01>,|10>
_PERM = [0, 3, 1, 2]

HERMITIAN_TOL = 1e-12


def two_spin(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a (x) b`` expressed in the |00>, |11>, |01>, |10> basis."""
    return np.kron(a, b)[np.ix_(_PERM, _PERM)]


SIGMA_YY = two_spin(SIGMA_Y, SIGMA_Y)


def hamiltonian(params: ModelParams) -> np.ndarray:
    """``J/2 [sx sx + sy sy + D (sx sy - sy sx)]`` as a dense 4x4 matrix."""
    xx = two_spin(SIGMA_X, SIGMA_X)
    yy = two_spin(SIGMA_Y, SIGMA_Y)
    xy = two_spin(SIGMA_X, SIGMA_Y)
    yx = two_spin(SIGMA_Y, SIGMA_X)
    return params.j / 2 * (xx + yy + params.d * (xy - yx))


def hamiltonian_ladder(params: ModelParams) -> np.ndarray:
    """Same Hamiltonian written as ``J[(1+iD) s1+ s2- + (1-iD) s1- s2+]``."""
    return params.j * (
        (1 + 1j * params.d) * two_spin(SIGMA_PLUS, SIGMA_MINUS)
        + (1 - 1j * params.d) * two_spin(SIGMA_MINUS, SIGMA_PLUS)
    )


@dataclass(frozen=True)
class Eigensystem:
    """Eigenpairs matched to psi1..psi4; ``vectors[:, i]`` belongs to ``energies[i]``."""

    energies: np.ndarray
    vectors: np.ndarray
    theta: float


def eigensystem(params: ModelParams) -> Eigensystem:
    h = hamiltonian(params)
    outer, block = [0, 1], [2, 3]
    if np.any(h[np.ix_(outer, block)] != 0):
        raise AssertionError("Hamiltonian is expected to leave span{|01>,|10>} invariant")

    vectors = np.zeros((4, 4), dtype=complex)
    energies = np.zeros(4)
    # |00> and |11> are eigenvectors on their own
    for i in outer:
        vectors[i, i] = 1.0
        energies[i] = h[i, i].real + 0.0  # drop the sign of -0.0

    w, v = np.linalg.eigh(h[np.ix_(block, block)])
    if not np.all(np.isfinite(w)):
        raise ArithmeticError(f"eigensolver failed for {params}")
    if abs(h[2, 3]) == 0:
        # j == 0: every vector is an eigenvector; report the conventional phase
        theta = math.atan(params.d)
        pair = np.array([[1, 1], [np.exp(1j * theta), -np.exp(1j * theta)]]) / math.sqrt(2)
        vectors[2:, 2:] = pair
        energies[2:] = w
    else:
        # psi3 is the member of the pair whose |10>/|01> phase lies in (-pi/2, pi/2)
        phases = [np.angle(v[1, k] / v[0, k]) for k in range(2)]
        k3 = 0 if abs(phases[0]) < math.pi / 2 else 1
        k4 = 1 - k3
        for slot, k in ((2, k3), (3, k4)):
            col = v[:, k] * np.exp(-1j * np.angle(v[0, k]))  # real positive |01> amplitude
            vectors[2:, slot] = col
            energies[slot] = w[k]
        theta = float(phases[k3])
    return Eigensystem(energies=energies, vectors=vectors, theta=theta)


def diagonalize(params: ModelParams) -> Spectrum:
    es = eigensystem(params)
    return Spectrum(energies=tuple(float(e) for e in es.energies), theta=es.theta)


def boltzmann_weights(energies: np.ndarray, temperature: float) -> np.ndarray:
    if not temperature > 0:
        raise DomainError(f"temperature must be positive, got {temperature!r}")
    energies = np.asarray(energies, dtype=float)
    weights = np.exp(-(energies - energies.min()) / temperature)
    return weights / weights.sum()


def gibbs_density(params: ModelParams, temperature: float) -> np.ndarray:
    """``sum_i p_i |psi_i><psi_i|`` from the numerical eigensystem."""
    es = eigensystem(params)
    p = boltzmann_weights(es.energies, temperature)
    return (es.vectors * p) @ es.vectors.conj().T


def gibbs_density_expm(params: ModelParams, temperature: float) -> np.ndarray:
    """``exp(-H/T) / Z`` through a dense matrix exponential."""
    if not temperature > 0:
        raise DomainError(f"temperature must be positive, got {temperature!r}")
    h = hamiltonian(params)
    shift = np.linalg.eigvalsh(h).min()
    rho = scipy.linalg.expm(-(h - shift * np.eye(4)) / temperature)
    return rho / np.trace(rho).real


@dataclass(frozen=True)
class DensityMatrix4:
    """Validated two-qubit density matrix in the |00>, |11>, |01>, |10> basis."""

    entries: np.ndarray

    def __post_init__(self):
        rho = np.asarray(self.entries, dtype=complex)
        if rho.shape != (4, 4):
            raise DomainError(f"expected a 4x4 matrix, got shape {rho.shape}")
        if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
            raise DomainError("density matrix is not Hermitian")
        if abs(np.trace(rho) - 1) > HERMITIAN_TOL:
            raise DomainError(f"density matrix trace is {np.trace(rho).real!r}, expected 1")
        if np.linalg.eigvalsh(rho).min() < -HERMITIAN_TOL:
            raise DomainError("density matrix has a negative eigenvalue")
        object.__setattr__(self, "entries", rho)


def _psd_sqrt(rho: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(rho)
    return (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T


def wootters_concurrence(rho) -> float:
    """Wootters concurrence ``max(0, l1 - l2 - l3 - l4)``.

    The ``l_i`` are the square roots of the eigenvalues of ``rho rho~``, with
    ``rho~ = (sy x sy) rho* (sy x sy)``. They are obtained as the singular
    values of ``sqrt(rho) sqrt(rho~)``, which keeps small ``l_i`` accurate.
    """
    if not isinstance(rho, DensityMatrix4):
        rho = DensityMatrix4(rho)
    m = rho.entries
    root = _psd_sqrt(m)
    root_flipped = SIGMA_YY @ root.conj() @ SIGMA_YY
    lam = np.linalg.svd(root @ root_flipped, compute_uv=False)
    lam = np.sort(lam)[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def thermal_concurrence(params: ModelParams, temperature: float) -> float:
    return wootters_concurrence(gibbs_density(params, temperature))


def simulate_cycle(spec: CycleSpec) -> CycleResult:
    """Cycle heats by direct summation over numerically obtained levels."""
    e1 = eigensystem(spec.hot).energies
    e2 = eigensystem(spec.cold).energies
    p1 = boltzmann_weights(e1, spec.th)
    p2 = boltzmann_weights(e2, spec.tl)
    q_h = float(np.dot(e1, p1 - p2))
    q_l = float(np.dot(e2, p2 - p1))
    w = q_h + q_l
    return make_result(q_h, q_l, w, w / q_h if q_h != 0 else math.nan, spec.th, spec.tl)
