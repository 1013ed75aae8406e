"""Analytic propagator and output state for parametric down-conversion pumped
by 2N symmetrically tilted plane waves.

In the rotating-wave, undepleted-pump model the central mode a_0 couples to
each of the 2N side modes with the same strength alpha*lambda and phase
factor e^{i*delta*z}.  The symmetric side-mode combination therefore forms a
two-mode squeezer with a_0 at effective gain g = sqrt(2N)*alpha*lambda, while
the 2N-1 orthogonal side combinations propagate unchanged.  This module
builds the resulting mode map in closed form and converts it to a real
symplectic matrix on quadratures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .symplectic import ModeLayout, mode_map_to_quadrature

BISYMMETRY_TOL = 1e-12

# Relative window around gamma^2 = 0 where the hyperbolic/trigonometric
# expressions degenerate to their polynomial limits (avoids 0/0 in sinh(G z)/G).
_DEGENERATE_REL_TOL = 1e-12


@dataclass(frozen=True)
class PdcConfig:
    """Physical parameters of a down-conversion run.

    alpha:    pump amplitude (real, >= 0)
    coupling: nonlinear coupling constant lambda (> 0)
    length:   crystal length (>= 0)
    delta:    phase mismatch (any real)
    n_pairs:  number N of tilted pump pairs (>= 1); the field carries
              2N+1 modes, the central one plus N symmetric side pairs
    """

    alpha: float
    coupling: float
    length: float
    delta: float = 0.0
    n_pairs: int = 1

    def __post_init__(self) -> None:
        if self.alpha < 0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha}")
        if self.coupling <= 0:
            raise ValueError(f"coupling must be positive, got {self.coupling}")
        if self.length < 0:
            raise ValueError(f"length must be nonnegative, got {self.length}")
        if int(self.n_pairs) != self.n_pairs or self.n_pairs < 1:
            raise ValueError(f"n_pairs must be a positive integer, got {self.n_pairs}")

    @property
    def n_modes(self) -> int:
        return 2 * self.n_pairs + 1

    @property
    def layout(self) -> ModeLayout:
        return ModeLayout.for_pairs(self.n_pairs)


@dataclass(frozen=True)
class PropagatorFunctions:
    """Scalar propagator functions of the effective two-mode squeezer.

    u and v satisfy |u|^2 - |v|^2 = 1; gamma_squared = 2N*(alpha*lambda)^2
    - delta^2/4 selects the hyperbolic (> 0), degenerate (= 0) or
    oscillatory (< 0) regime.
    """

    u: complex
    v: complex
    gamma_squared: float


def squeezing_parameter(config: PdcConfig) -> float:
    """Squeezing parameter r = sqrt(2) * alpha * lambda * length."""
    return math.sqrt(2.0) * config.alpha * config.coupling * config.length


def propagator_functions(config: PdcConfig, z: float) -> PropagatorFunctions:
    """Evaluate u(z) and v(z) of the effective two-mode squeezer at depth z.

    u(z) = e^{i delta z / 2} (cosh(G z) - i (delta / 2G) sinh(G z))
    v(z) = e^{i delta z / 2} (g alpha lambda / G) sinh(G z)

    with g = sqrt(2N) and G^2 = (g alpha lambda)^2 - delta^2 / 4.  The
    expressions continue analytically through G^2 <= 0: cosh/sinh become
    cos/sin for G^2 < 0, and sinh(G z)/G -> z at G^2 = 0.
    """
    kappa = math.sqrt(2.0 * config.n_pairs) * config.alpha * config.coupling
    quarter_delta_sq = 0.25 * config.delta**2
    gamma_sq = kappa**2 - quarter_delta_sq
    if abs(gamma_sq) < _DEGENERATE_REL_TOL * (kappa**2 + quarter_delta_sq + 1.0):
        c = 1.0 + 0.5 * gamma_sq * z**2
        s = z * (1.0 + gamma_sq * z**2 / 6.0)
    elif gamma_sq > 0.0:
        gamma = math.sqrt(gamma_sq)
        c = math.cosh(gamma * z)
        s = math.sinh(gamma * z) / gamma
    else:
        w = math.sqrt(-gamma_sq)
        c = math.cos(w * z)
        s = math.sin(w * z) / w
    phase = complex(math.cos(0.5 * config.delta * z), math.sin(0.5 * config.delta * z))
    u = phase * complex(c, -0.5 * config.delta * s)
    v = phase * (kappa * s)
    return PropagatorFunctions(u=u, v=v, gamma_squared=gamma_sq)


def _mode_map(config: PdcConfig, z: float) -> tuple[np.ndarray, np.ndarray]:
    """Complex blocks (A, B) of a(z) = A a(0) + B a^dagger(0).

    The central mode evolves as a_0 -> u a_0 + (v / sqrt(2N)) sum_k a_k^dag;
    each side mode picks up (u - 1)/(2N) from every side mode and
    v / sqrt(2N) from a_0^dag.
    """
    n_side = 2 * config.n_pairs
    n = n_side + 1
    pf = propagator_functions(config, z)
    a = np.zeros((n, n), dtype=complex)
    b = np.zeros((n, n), dtype=complex)
    a[0, 0] = pf.u
    a[1:, 1:] = np.eye(n_side) + (pf.u - 1.0) / n_side
    b[0, 1:] = pf.v / math.sqrt(n_side)
    b[1:, 0] = pf.v / math.sqrt(n_side)
    return a, b


def build_propagator(config: PdcConfig) -> np.ndarray:
    """Symplectic quadrature propagator of the full (2N+1)-mode crystal pass."""
    return mode_map_to_quadrature(*_mode_map(config, config.length))


def output_covariance(config: PdcConfig) -> np.ndarray:
    """Covariance matrix M M^T of the output state for vacuum input.

    The output is a pure Gaussian state; its symplectic spectrum is all ones.
    """
    m = build_propagator(config)
    sigma = m @ m.T
    return 0.5 * (sigma + sigma.T)


def is_bisymmetric(sigma: np.ndarray, tol: float = BISYMMETRY_TOL) -> bool:
    """True if sigma is invariant under swapping every side-mode pair +k <-> -k.

    Expects a (2N+1)-mode covariance matrix in the standard layout; raises on
    an even mode count (no central-mode-plus-pairs structure).
    """
    sigma = np.asarray(sigma, dtype=float)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1] or sigma.shape[0] % 2 != 0:
        raise ValueError(f"sigma must be an even-dimension square matrix, got {sigma.shape}")
    n = sigma.shape[0] // 2
    if n % 2 == 0 or n < 3:
        raise ValueError(f"expected an odd mode count >= 3, got {n} modes")
    perm = np.arange(2 * n)
    for k in range(1, (n - 1) // 2 + 1):
        plus, minus = 2 * k - 1, 2 * k
        perm[[2 * plus, 2 * plus + 1, 2 * minus, 2 * minus + 1]] = [
            2 * minus,
            2 * minus + 1,
            2 * plus,
            2 * plus + 1,
        ]
    return bool(np.abs(sigma[np.ix_(perm, perm)] - sigma).max() <= tol)
