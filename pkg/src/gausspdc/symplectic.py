"""Symplectic linear algebra for Gaussian states in quadrature representation.

Conventions used throughout the package: quadratures are interleaved as
(x_0, p_0, x_1, p_1, ...), with x = 2 Re a and p = 2 Im a, so the vacuum
covariance matrix is the identity and physical states satisfy
sigma + i*Omega >= 0, i.e. all symplectic eigenvalues are >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

# Tolerances: ~100x machine-epsilon headroom for the <= 20-mode matrices
# this package produces.
SYMPLECTIC_TOL = 1e-10
SYMMETRY_TOL = 1e-12
PHYSICALITY_TOL = 1e-10
PAIRING_TOL = 1e-8


@dataclass(frozen=True)
class ModeLayout:
    """Mapping between mode indices and quadrature slots.

    Mode m occupies slots (2m, 2m+1) = (x_m, p_m).  For pump layouts the
    convention is: mode 0 is the central (untilted) mode and modes 1..2N
    enumerate the side modes in the order +1, -1, +2, -2, ..., +N, -N,
    so the 3-mode quadrature vector reads (x_0, p_0, x_+, p_+, x_-, p_-).
    """

    n_modes: int

    def __post_init__(self) -> None:
        if self.n_modes < 1:
            raise ValueError(f"n_modes must be positive, got {self.n_modes}")

    @classmethod
    def for_pairs(cls, n_pairs: int) -> "ModeLayout":
        """Layout of a central mode plus n_pairs symmetric side-mode pairs."""
        if n_pairs < 1:
            raise ValueError(f"n_pairs must be positive, got {n_pairs}")
        return cls(2 * n_pairs + 1)

    @property
    def n_quadratures(self) -> int:
        return 2 * self.n_modes

    def x_index(self, mode: int) -> int:
        self._check_mode(mode)
        return 2 * mode

    def p_index(self, mode: int) -> int:
        self._check_mode(mode)
        return 2 * mode + 1

    def side_pair(self, k: int) -> tuple[int, int]:
        """Mode indices (+k, -k) of the k-th side pair, k = 1..N."""
        if self.n_modes % 2 == 0 or not 1 <= k <= (self.n_modes - 1) // 2:
            raise ValueError(f"no side pair {k} in a {self.n_modes}-mode layout")
        return 2 * k - 1, 2 * k

    def mode_labels(self) -> list[str]:
        if self.n_modes % 2 == 1 and self.n_modes > 1:
            labels = ["0"]
            for k in range(1, (self.n_modes - 1) // 2 + 1):
                labels += [f"+{k}", f"-{k}"]
            return labels
        return [str(m) for m in range(self.n_modes)]

    def quadrature_labels(self) -> list[str]:
        out = []
        for label in self.mode_labels():
            out += [f"x{label}", f"p{label}"]
        return out

    def _check_mode(self, mode: int) -> None:
        if not 0 <= mode < self.n_modes:
            raise ValueError(f"mode {mode} out of range for {self.n_modes} modes")


@dataclass(frozen=True)
class CovarianceValidation:
    """Verdict of :func:`validate_covariance`."""

    symmetric: bool
    physical: bool
    min_symplectic_eigenvalue: float | None

    @property
    def valid(self) -> bool:
        return self.symmetric and self.physical


def _as_even_square(m: np.ndarray, name: str) -> tuple[np.ndarray, int]:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {m.shape}")
    if m.shape[0] % 2 != 0 or m.shape[0] == 0:
        raise ValueError(f"{name} must have even dimension, got {m.shape[0]}")
    return m, m.shape[0] // 2


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal symplectic form, one [[0, 1], [-1, 0]] block per mode."""
    if n_modes < 1:
        raise ValueError(f"n_modes must be positive, got {n_modes}")
    omega = np.zeros((2 * n_modes, 2 * n_modes))
    for m in range(n_modes):
        omega[2 * m, 2 * m + 1] = 1.0
        omega[2 * m + 1, 2 * m] = -1.0
    return omega


def is_symplectic(s: np.ndarray, tol: float = SYMPLECTIC_TOL) -> bool:
    """True if s preserves the symplectic form: max|s^T Omega s - Omega| <= tol."""
    s, n = _as_even_square(s, "s")
    omega = symplectic_form(n)
    return bool(np.abs(s.T @ omega @ s - omega).max() <= tol)


def congruence(sigma: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Congruence transform s^T sigma s of a covariance matrix.

    For symplectic s this is the covariance of the state after the linear
    optical map whose quadrature action is xi' = s^T xi; the symplectic
    spectrum is preserved.  The result is symmetrized exactly.
    """
    sigma, n = _as_even_square(sigma, "sigma")
    s, ns = _as_even_square(s, "s")
    if ns != n:
        raise ValueError(f"dimension mismatch: sigma has {n} modes, s has {ns}")
    out = s.T @ sigma @ s
    return 0.5 * (out + out.T)


def symplectic_eigenvalues(sigma: np.ndarray, pair_tol: float = PAIRING_TOL) -> np.ndarray:
    """Symplectic spectrum of a symmetric positive-definite matrix.

    Returns the n moduli of the eigenvalues of i*Omega*sigma (which come in
    +/- pairs), collapsed pairwise and sorted in descending order.

    Raises:
        ValueError: non-symmetric or non-positive-definite input.
        numpy.linalg.LinAlgError: the +/- pairing fails beyond pair_tol.
    """
    sigma, n = _as_even_square(sigma, "sigma")
    scale = max(1.0, float(np.abs(sigma).max()))
    if np.abs(sigma - sigma.T).max() > 1e-10 * scale:
        raise ValueError("sigma is not symmetric")
    if np.linalg.eigvalsh(sigma).min() <= 0.0:
        raise ValueError("sigma is not positive definite")
    moduli = np.sort(np.abs(np.linalg.eigvals(symplectic_form(n) @ sigma)))[::-1]
    first, second = moduli[0::2], moduli[1::2]
    if np.any(np.abs(first - second) > pair_tol * np.maximum(1.0, first)):
        raise np.linalg.LinAlgError(
            "eigenvalues of i*Omega*sigma do not pair within tolerance"
        )
    return 0.5 * (first + second)


def partial_transpose(sigma: np.ndarray, modes: Iterable[int]) -> np.ndarray:
    """Covariance matrix of the state partially transposed on the given modes.

    Flips the sign of the p quadrature of every selected mode.  The mode set
    must be a nonempty proper subset, i.e. describe an actual bipartition.
    """
    sigma, n = _as_even_square(sigma, "sigma")
    mode_set = set(modes)
    if not mode_set or not mode_set < set(range(n)):
        raise ValueError(
            f"modes must be a nonempty proper subset of 0..{n - 1}, got {sorted(mode_set)}"
        )
    signs = np.ones(2 * n)
    for m in mode_set:
        signs[2 * m + 1] = -1.0
    return sigma * np.outer(signs, signs)


def direct_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Block-diagonal concatenation of two covariance matrices."""
    a, na = _as_even_square(a, "a")
    b, nb = _as_even_square(b, "b")
    out = np.zeros((2 * (na + nb), 2 * (na + nb)))
    out[: 2 * na, : 2 * na] = a
    out[2 * na :, 2 * na :] = b
    return out


def validate_covariance(sigma: np.ndarray) -> CovarianceValidation:
    """Check the covariance-matrix invariants without mutating the input.

    symmetric: max|sigma - sigma^T| <= 1e-12.
    physical:  sigma + i*Omega >= 0, i.e. all symplectic eigenvalues
               >= 1 - 1e-10 (requires positive definiteness).
    """
    sigma, _ = _as_even_square(sigma, "sigma")
    symmetric = bool(np.abs(sigma - sigma.T).max() <= SYMMETRY_TOL)
    half = 0.5 * (sigma + sigma.T)
    if np.linalg.eigvalsh(half).min() <= 0.0:
        return CovarianceValidation(symmetric, False, None)
    try:
        nu = symplectic_eigenvalues(half)
    except np.linalg.LinAlgError:
        return CovarianceValidation(symmetric, False, None)
    nu_min = float(nu.min())
    return CovarianceValidation(symmetric, nu_min >= 1.0 - PHYSICALITY_TOL, nu_min)


def two_mode_squeezed_cov(r: float) -> np.ndarray:
    """Covariance matrix of a two-mode squeezed vacuum with parameter r.

    Diagonal blocks cosh(2r)*I, off-diagonal blocks diag(sinh(2r), -sinh(2r)).
    """
    c, s = np.cosh(2.0 * r), np.sinh(2.0 * r)
    return np.array(
        [
            [c, 0.0, s, 0.0],
            [0.0, c, 0.0, -s],
            [s, 0.0, c, 0.0],
            [0.0, -s, 0.0, c],
        ]
    )


def mode_map_to_quadrature(a_block: np.ndarray, b_block: np.ndarray) -> np.ndarray:
    """Real quadrature matrix of the operator map a -> A a + B a^dagger.

    With x = 2 Re a and p = 2 Im a the blocks are
        x' = (Re A + Re B) x + (Im B - Im A) p
        p' = (Im A + Im B) x + (Re A - Re B) p
    interleaved per mode.  No Bogoliubov validation is performed here.
    """
    a = np.asarray(a_block, dtype=complex)
    b = np.asarray(b_block, dtype=complex)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"blocks must be equal square matrices, got {a.shape}, {b.shape}")
    n = a.shape[0]
    m = np.empty((2 * n, 2 * n))
    m[0::2, 0::2] = (a + b).real
    m[0::2, 1::2] = (b - a).imag
    m[1::2, 0::2] = (a + b).imag
    m[1::2, 1::2] = (a - b).real
    return m
