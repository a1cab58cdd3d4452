"""Field environments of a two-level atom and their memory kernels.

A field environment is one of four value types (:class:`SingleMode`,
:class:`FreeSpace`, :class:`Band`, :class:`Cavity`). The memory kernel

    mu(s) = sum_k g_k^2 exp(-i omega_k s)

encodes the field's back-action on the atom; everything downstream (the
amplitude u(t), decay rates, frequency shifts) derives from mu and its
Laplace transform. All quantities use hbar = c = 1; the atom is specified
by its renormalized splitting omega_tilde (the cutoff-divergent shift
lambda^2/(pi^2 eps) is absorbed, see :func:`renormalization_shift`).
"""

from __future__ import annotations

from dataclasses import dataclass, fields as _dc_fields
from typing import Union

import numpy as np

from .errors import ConfigurationError, DomainError
from .specfun import expint_e1, stirling_remainder

__all__ = [
    "SingleMode",
    "FreeSpace",
    "Band",
    "Cavity",
    "FieldSpec",
    "AtomSpec",
    "kernel_mu",
    "kernel_mu_laplace",
    "coupling_g",
    "spectral_density",
    "renormalization_shift",
    "field_to_dict",
    "field_from_dict",
]


@dataclass(frozen=True)
class SingleMode:
    """One field mode of frequency ``k`` coupled with strength ``g``."""

    g: float
    k: float

    def __post_init__(self):
        if self.g < 0:
            raise ConfigurationError("SingleMode: coupling g must be >= 0")
        if self.k <= 0:
            raise ConfigurationError("SingleMode: mode frequency k must be > 0")


@dataclass(frozen=True)
class FreeSpace:
    """Unbounded vacuum field; couplings g_k = lambda / sqrt(omega_k) with an
    exponential UV cutoff exp(-eps omega)."""

    lambda2: float
    epsilon: float

    def __post_init__(self):
        if self.lambda2 < 0:
            raise ConfigurationError("FreeSpace: lambda2 must be >= 0")
        if self.epsilon <= 0:
            raise ConfigurationError("FreeSpace: epsilon must be > 0 (kernel divergent otherwise)")


@dataclass(frozen=True)
class Band:
    """Field transparent outside a frequency strip [omega1, omega2]."""

    lambda2: float
    omega1: float
    omega2: float

    def __post_init__(self):
        if self.lambda2 < 0:
            raise ConfigurationError("Band: lambda2 must be >= 0")
        if not (0 <= self.omega1 < self.omega2):
            raise ConfigurationError("Band: need 0 <= omega1 < omega2")


@dataclass(frozen=True)
class Cavity:
    """Field between parallel plates a distance ``cavity_L`` apart (Dirichlet
    walls); transverse resonances at multiples of pi / cavity_L."""

    lambda2: float
    cavity_L: float
    epsilon: float

    def __post_init__(self):
        if self.lambda2 < 0:
            raise ConfigurationError("Cavity: lambda2 must be >= 0")
        if self.cavity_L <= 0:
            raise ConfigurationError("Cavity: plate separation cavity_L must be > 0")
        if self.epsilon <= 0:
            raise ConfigurationError("Cavity: epsilon must be > 0 (kernel divergent otherwise)")


FieldSpec = Union[SingleMode, FreeSpace, Band, Cavity]


@dataclass(frozen=True)
class AtomSpec:
    """Two-level atom with renormalized splitting omega_tilde > 0."""

    omega_tilde: float

    def __post_init__(self):
        if self.omega_tilde <= 0:
            raise ConfigurationError("AtomSpec: omega_tilde must be > 0")


def _check_kind(spec):
    if not isinstance(spec, (SingleMode, FreeSpace, Band, Cavity)):
        raise ConfigurationError(f"unknown field kind: {type(spec).__name__}")


def renormalization_shift(spec: FieldSpec) -> float:
    """Constant absorbed into omega_tilde: bare frequency = omega_tilde + shift.

    FreeSpace/Cavity: lambda^2/(pi^2 eps); Band: lambda^2 (omega2-omega1)/pi^2;
    SingleMode: 0.
    """
    _check_kind(spec)
    if isinstance(spec, (FreeSpace, Cavity)):
        return spec.lambda2 / (np.pi**2 * spec.epsilon)
    if isinstance(spec, Band):
        return spec.lambda2 * (spec.omega2 - spec.omega1) / np.pi**2
    return 0.0


def coupling_g(spec: FieldSpec, omega_k) -> float:
    """Mode coupling g(omega_k) = sqrt(lambda2 / omega_k) for continuum kinds."""
    _check_kind(spec)
    if isinstance(spec, SingleMode):
        raise ConfigurationError("coupling_g: SingleMode has a single fixed coupling g")
    omega_k = np.asarray(omega_k, dtype=float)
    if np.any(omega_k <= 0):
        raise DomainError("coupling_g: omega_k must be > 0")
    out = np.sqrt(spec.lambda2 / omega_k)
    return out if out.ndim else float(out)


def spectral_density(spec: FieldSpec, omega):
    """Coupling density J(omega) >= 0 such that mu(s) = int J(w) e^{-iws} dw.

    Defined for the continuum kinds; the SingleMode density is a delta
    function and is not representable here.
    """
    _check_kind(spec)
    omega = np.asarray(omega, dtype=float)
    if isinstance(spec, FreeSpace):
        out = (spec.lambda2 / np.pi**2) * omega * np.exp(-spec.epsilon * omega)
    elif isinstance(spec, Band):
        out = (spec.lambda2 / np.pi**2) * omega * ((omega >= spec.omega1) & (omega <= spec.omega2))
    elif isinstance(spec, Cavity):
        half_waves = np.floor(omega * spec.cavity_L / np.pi)
        out = (spec.lambda2 / (2 * np.pi * spec.cavity_L)) * (2 * half_waves + 1) \
            * np.exp(-spec.epsilon * omega) * (omega > 0)
    else:
        raise ConfigurationError("spectral_density: SingleMode has no density")
    return out if out.ndim else float(out)


def _mu_band(spec: Band, s):
    l2pi2 = spec.lambda2 / np.pi**2
    w1, w2 = spec.omega1, spec.omega2
    s = np.asarray(s, dtype=complex)
    out = np.empty_like(s)
    small = np.abs(s) * w2 < 1e-4
    sb = s[~small]
    out[~small] = l2pi2 * (
        np.exp(-1j * w2 * sb) * (1j * w2 * sb + 1.0)
        - np.exp(-1j * w1 * sb) * (1j * w1 * sb + 1.0)
    ) / sb**2
    ss = s[small]
    out[small] = l2pi2 * (
        (w2**2 - w1**2) / 2.0
        - 1j * ss * (w2**3 - w1**3) / 3.0
        - ss**2 * (w2**4 - w1**4) / 8.0
        + 1j * ss**3 * (w2**5 - w1**5) / 30.0
    )
    return out


def kernel_mu(spec: FieldSpec, s):
    """Memory kernel mu(s) for s >= 0 (vectorized over s)."""
    _check_kind(spec)
    s_arr = np.asarray(s, dtype=float)
    if np.any(s_arr < 0):
        raise DomainError("kernel_mu: s must be >= 0")
    if isinstance(spec, SingleMode):
        out = spec.g**2 * np.exp(-1j * spec.k * s_arr)
    elif isinstance(spec, FreeSpace):
        out = -(spec.lambda2 / np.pi**2) / (s_arr - 1j * spec.epsilon) ** 2
    elif isinstance(spec, Band):
        out = _mu_band(spec, s_arr)
    else:  # Cavity
        L, eps = spec.cavity_L, spec.epsilon
        q = np.exp(-1j * (np.pi / L) * (s_arr - 1j * eps))
        out = (spec.lambda2 / (2 * np.pi * L)) / (eps + 1j * s_arr) * (1 + q) / (1 - q)
    return out if np.ndim(s) else complex(out)


def _mu_laplace_free(lambda2, epsilon, z):
    """Closed form for the free-space transform; `z` complex array."""
    const = -1j * lambda2 / (np.pi**2 * epsilon)
    w = -1j * epsilon * z
    tail = np.where(z == 0, 0.0, (lambda2 / np.pi**2) * z * np.exp(w) * expint_e1(w))
    return const + tail


def kernel_mu_laplace(spec: FieldSpec, z, renormalized: bool = False):
    """Laplace transform mu~(z) of the memory kernel (closed forms).

    With ``renormalized=True`` the constant ``-i * renormalization_shift``
    is subtracted, so that z + i*omega_bare + mu~(z) equals
    z + i*omega_tilde + mu~_ren(z).

    Raises
    ------
    DomainError
        At poles of the closed form (z = -ik for a single mode) and at the
        cavity branch points z = -i n pi / L (including z = 0).
    """
    _check_kind(spec)
    z_arr = np.asarray(z, dtype=complex)
    if isinstance(spec, SingleMode):
        denom = z_arr + 1j * spec.k
        if np.any(denom == 0):
            raise DomainError(f"kernel_mu_laplace: pole of the single-mode transform at z = {-1j * spec.k}")
        out = spec.g**2 / denom
    elif isinstance(spec, FreeSpace):
        out = _mu_laplace_free(spec.lambda2, spec.epsilon, z_arr)
        if renormalized:
            out = out + 1j * spec.lambda2 / (np.pi**2 * spec.epsilon)
    elif isinstance(spec, Band):
        log_ratio = np.log(spec.omega2 - 1j * z_arr) - np.log(spec.omega1 - 1j * z_arr)
        out = (spec.lambda2 / np.pi**2) * z_arr * log_ratio
        if not renormalized:
            out = out - 1j * (spec.lambda2 / np.pi**2) * (spec.omega2 - spec.omega1)
    else:  # Cavity
        L = spec.cavity_L
        nu = -1j * L * z_arr / np.pi
        near_branch = (np.abs(nu - np.round(nu.real)) < 1e-13) & (nu.real <= 1e-13)
        if np.any(near_branch):
            n = int(np.round(-np.min(nu.real)))
            raise DomainError(
                f"kernel_mu_laplace: cavity branch point at z = -i n pi/L (n = {n})"
            )
        out = _mu_laplace_free(spec.lambda2, spec.epsilon, z_arr) \
            - (1j * spec.lambda2 / (np.pi * L)) * np.exp(-1j * spec.epsilon * z_arr) \
            * stirling_remainder(nu)
        if renormalized:
            out = out + 1j * spec.lambda2 / (np.pi**2 * spec.epsilon)
        if not np.all(np.isfinite(out)):
            raise DomainError("kernel_mu_laplace: non-finite value at a cavity branch point")
    if renormalized and isinstance(spec, SingleMode):
        pass  # no constant to subtract
    return out if np.ndim(z) else complex(out)


# --- flat key-value (de)serialization used by the config front end -------

_KIND_NAMES = {
    "single_mode": SingleMode,
    "free_space": FreeSpace,
    "band": Band,
    "cavity": Cavity,
}


def field_to_dict(spec: FieldSpec) -> dict:
    """Flat key-value representation, round-trips through field_from_dict."""
    _check_kind(spec)
    name = {SingleMode: "single_mode", FreeSpace: "free_space",
            Band: "band", Cavity: "cavity"}[type(spec)]
    out = {"kind": name}
    for f in _dc_fields(spec):
        out[f.name] = repr(getattr(spec, f.name))
    return out


def field_from_dict(d: dict) -> FieldSpec:
    """Build a field spec from a flat key-value mapping (string values ok)."""
    try:
        kind = d["kind"].strip().lower()
    except KeyError:
        raise ConfigurationError("field config: missing 'kind'") from None
    try:
        cls = _KIND_NAMES[kind]
    except KeyError:
        raise ConfigurationError(
            f"field config: unknown kind {kind!r}; expected one of {sorted(_KIND_NAMES)}"
        ) from None
    kwargs = {}
    for f in _dc_fields(cls):
        if f.name not in d:
            raise ConfigurationError(f"field config: kind {kind!r} requires key {f.name!r}")
        try:
            kwargs[f.name] = float(d[f.name])
        except ValueError:
            raise ConfigurationError(
                f"field config: key {f.name!r} must be a number, got {d[f.name]!r}"
            ) from None
    extras = set(d) - {"kind"} - {f.name for f in _dc_fields(cls)}
    if extras:
        raise ConfigurationError(
            f"field config: keys {sorted(extras)} are not valid for kind {kind!r}"
        )
    return cls(**kwargs)
