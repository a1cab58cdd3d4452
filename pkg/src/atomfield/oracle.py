"""Brute-force validation path: finite-mode Hamiltonian in the
single-excitation sector.

A :class:`ModeSet` is an explicit list of (frequency, coupling) pairs.
Diagonalizing the (N+1) x (N+1) single-excitation Hamiltonian gives the
survival amplitude u(t) exactly (up to roundoff), with no time stepping
and no contour -- an independent check on the integro-differential and
Laplace routes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import ConfigurationError, DomainError
from .fields import AtomSpec, Band, Cavity, FieldSpec, FreeSpace, SingleMode, spectral_density

__all__ = ["ModeSet", "discretize", "u_exact_finite", "resolvent_F"]


@dataclass(frozen=True)
class ModeSet:
    """Finite list of field modes: strictly increasing frequencies > 0,
    couplings >= 0."""

    omegas: np.ndarray
    couplings: np.ndarray

    def __post_init__(self):
        om = np.asarray(self.omegas, dtype=float)
        g = np.asarray(self.couplings, dtype=float)
        object.__setattr__(self, "omegas", om)
        object.__setattr__(self, "couplings", g)
        if om.ndim != 1 or g.shape != om.shape:
            raise ConfigurationError("ModeSet: omegas and couplings must be 1-d arrays of equal length")
        if om.size and (np.any(om <= 0) or np.any(np.diff(om) <= 0)):
            raise ConfigurationError("ModeSet: frequencies must be positive and strictly increasing")
        if np.any(~np.isfinite(om)) or np.any(~np.isfinite(g)) or np.any(g < 0):
            raise ConfigurationError("ModeSet: couplings must be finite and >= 0")

    def __len__(self):
        return int(self.omegas.size)


def discretize(spec: FieldSpec, n: int, omega_max: float) -> ModeSet:
    """Midpoint-rule discretization of a field's coupling density.

    Frequencies sit at the n cell centers of (0, omega_max]; weights are
    g_k^2 = J(omega_k) * delta_omega. A SingleMode spec passes through as
    its one mode.
    """
    if isinstance(spec, SingleMode):
        return ModeSet(np.array([spec.k]), np.array([spec.g]))
    if not isinstance(spec, (FreeSpace, Band, Cavity)):
        raise ConfigurationError(f"discretize: unknown field kind {type(spec).__name__}")
    if n < 1:
        raise ConfigurationError("discretize: need n >= 1 modes")
    if omega_max <= 0:
        raise DomainError("discretize: omega_max must be > 0")
    d_omega = omega_max / n
    omegas = (np.arange(n) + 0.5) * d_omega
    g2 = spectral_density(spec, omegas) * d_omega
    return ModeSet(omegas, np.sqrt(g2))


def u_exact_finite(modes: ModeSet, atom: AtomSpec, times):
    """Survival amplitude from dense diagonalization.

    Builds the arrowhead Hamiltonian with the atom splitting on the first
    diagonal entry and mode couplings on the first row/column,
    diagonalizes it, and returns u(t) = <excited, vacuum| e^{-iHt}
    |excited, vacuum> as a UTrajectory on the (uniform) ``times`` grid.
    Unitarity guarantees |u| <= 1 to machine precision.
    """
    from .usolve import UTrajectory, as_uniform_grid

    n = len(modes)
    if n + 1 > 5001:
        raise ConfigurationError("u_exact_finite: more than 5000 modes; dense diagonalization refused")
    t, dt = as_uniform_grid(times)
    H = np.zeros((n + 1, n + 1))
    H[0, 0] = atom.omega_tilde
    if n:
        H[0, 1:] = modes.couplings
        H[1:, 0] = modes.couplings
        idx = np.arange(1, n + 1)
        H[idx, idx] = modes.omegas
    try:
        energies, vecs = scipy.linalg.eigh(H)
    except scipy.linalg.LinAlgError as exc:  # pragma: no cover - hard to trigger
        raise RuntimeError(
            f"u_exact_finite: diagonalization failed (condition estimate "
            f"{np.linalg.cond(H):.2e}): {exc}"
        ) from exc
    weights = vecs[0, :] ** 2
    # u(t) = sum_j |<0|v_j>|^2 e^{-i E_j t}; chunk over times to bound memory
    u = np.empty(t.size, complex)
    step = max(1, int(2e7 // max(1, energies.size)))
    for i0 in range(0, t.size, step):
        phase = np.exp(-1j * np.outer(t[i0:i0 + step], energies))
        u[i0:i0 + step] = phase @ weights
    return UTrajectory(dt=dt, values=u, tol=1e-12)


def resolvent_F(modes: ModeSet, E):
    """Level-shift function F(E) = sum_k g_k^2 / (E - omega_k).

    Real E equal to a mode frequency is a pole and raises; complex E is
    always fine.
    """
    E = np.asarray(E, dtype=complex)
    if np.any(np.isin(E, modes.omegas.astype(complex))):
        raise DomainError("resolvent_F: E coincides with a mode frequency (pole)")
    if len(modes) == 0:
        out = np.zeros_like(E)
        return out if out.ndim else complex(out)
    out = np.zeros(E.shape, complex)
    flat = out.reshape(-1)
    Ef = E.reshape(-1)
    g2 = modes.couplings**2
    step = max(1, int(2e7 // max(1, len(modes))))
    for i0 in range(0, Ef.size, step):
        flat[i0:i0 + step] = (g2[None, :] / (Ef[i0:i0 + step, None] - modes.omegas[None, :])).sum(axis=1)
    return out if out.ndim else complex(out)
