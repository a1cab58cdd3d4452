"""Numerical inverse Laplace transforms on a vertical Bromwich contour.

Two complementary primitives:

* :func:`invert_octave_dehoog` -- the de Hoog/Knight/Stokes quotient-
  difference accelerated Fourier series [SIAM J. Sci. Stat. Comput. 3, 357
  (1982)], applied per octave-sized time block so every evaluation time
  sits snugly inside its window. Reliable for transforms with a handful of
  singularities (float64 breaks down for pole-dense transforms).

* :func:`invert_fft_contour` -- plain trapezoid quadrature of a truncated,
  cosine-tapered vertical contour, assembled for a whole uniform time grid
  with one FFT. The caller is expected to subtract dominant poles and the
  large-|z| tail from the transform beforehand; what remains only needs to
  be smooth on the scale of the contour offset.

Both treat complex-valued time signals by inverting the real and imaginary
parts separately (each has a conjugate-symmetric transform assembled from
F(z) and F(conj z)).
"""

from __future__ import annotations

import numpy as np

from .errors import ContourError

__all__ = ["dehoog_inversion", "invert_octave_dehoog", "invert_fft_contour"]


def _dehoog_real(fp, t, T, gamma, M):
    """Quotient-difference/Pade acceleration for a real-valued signal.

    fp: F(gamma + i pi k / T) for k = 0..2M; t: evaluation times (array).
    """
    NP = 2 * M + 1
    e = np.zeros((NP, M + 1), complex)
    q = np.zeros((2 * M, M), complex)
    q[0, 0] = fp[1] / (fp[0] / 2.0)
    q[1:2 * M, 0] = fp[2:NP] / fp[1:NP - 1]
    for r in range(1, M + 1):
        mr = 2 * (M - r) + 1
        e[0:mr, r] = q[1:mr + 1, r - 1] - q[0:mr, r - 1] + e[1:mr + 1, r - 1]
        if r != M:
            rq = r + 1
            mq = 2 * (M - rq) + 3
            q[0:mq, rq - 1] = q[1:mq + 1, rq - 2] * e[1:mq + 1, rq - 1] / e[0:mq, rq - 1]
    d = np.zeros(NP, complex)
    d[0] = fp[0] / 2.0
    d[1:2 * M:2] = -q[0, 0:M]
    d[2:NP:2] = -e[0, 1:M + 1]

    z = np.exp(1j * np.pi * t / T)
    A_prev = np.zeros_like(z)
    A_cur = np.full_like(z, d[0])
    B_prev = np.ones_like(z)
    B_cur = np.ones_like(z)
    for k in range(1, 2 * M):
        A_prev, A_cur = A_cur, A_cur + d[k] * A_prev * z
        B_prev, B_cur = B_cur, B_cur + d[k] * B_prev * z
    # improved remainder for the last continued-fraction term
    brem = (1.0 + (d[2 * M - 1] - d[2 * M]) * z) / 2.0
    rem = brem * (np.sqrt(1.0 + d[2 * M] * z / brem) - 1.0)
    A_np = A_cur + rem * A_prev
    B_np = B_cur + rem * B_prev
    return np.exp(gamma * t) / T * (A_np / B_np).real


def dehoog_inversion(F, t, T, alpha=0.0, tol=1e-13, M=48):
    """Invert a transform of a complex signal on one window [0, T/2].

    ``F`` must accept a complex ndarray. Returns complex values at ``t``.
    """
    t = np.asarray(t, dtype=float)
    gamma = alpha - np.log(tol) / (2.0 * T)
    p = gamma + 1j * np.pi * np.arange(2 * M + 1) / T
    Fp = np.asarray(F(p), dtype=complex)
    Fm = np.conj(np.asarray(F(np.conj(p)), dtype=complex))
    re = _dehoog_real(0.5 * (Fp + Fm), t, T, gamma, M)
    im = _dehoog_real((Fp - Fm) / 2j, t, T, gamma, M)
    return re + 1j * im


def invert_octave_dehoog(F, t, alpha=0.0, tol=1e-13, M=48):
    """Invert F at strictly positive times, blocked by octaves of t.

    Each block [hi/2, hi] uses window T = 2 hi, so t/T stays in [1/4, 1/2]
    where the accelerated series is most accurate.
    """
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise ValueError("invert_octave_dehoog: times must be > 0")
    out = np.empty(t.shape, complex)
    done = np.zeros(t.shape, bool)
    hi = float(t.max())
    tmin = float(t.min())
    while not done.all():
        lo = hi / 2.0
        if lo <= tmin * (1 + 1e-12):
            sel = ~done
        else:
            sel = (~done) & (t <= hi * (1 + 1e-12)) & (t > lo)
        if sel.any():
            out[sel] = dehoog_inversion(F, t[sel], 2.0 * hi, alpha=alpha, tol=tol, M=M)
            done |= sel
        hi = lo
    return out


def invert_fft_contour(G, n_times, dt, gamma, y_max, n_fft=None, taper_frac=0.2,
                       alias_decades=13.0):
    """Trapezoid Bromwich contour z = gamma + i y, |y| <= y_max, via one FFT.

    Returns the inverse transform of ``G`` on the uniform grid
    t_n = n dt, n = 0..n_times. ``G`` must accept a complex ndarray and be
    smooth on the contour at scale >= a few grid spacings (subtract poles
    first). A raised-cosine taper over the outer ``taper_frac`` of the
    contour suppresses truncation ringing.

    Raises
    ------
    ContourError
        If gamma <= 0 or the alias-suppression constraint cannot be met
        with the given n_fft.
    """
    if gamma <= 0:
        raise ContourError("invert_fft_contour: contour offset gamma must be > 0")
    t_max = n_times * dt
    if n_fft is None:
        n_fft = 1 << int(np.ceil(np.log2((t_max + alias_decades * np.log(10.0) / gamma) / dt)))
    if n_fft < n_times + 1:
        raise ContourError("invert_fft_contour: n_fft smaller than the time grid")
    t_alias = n_fft * dt
    if gamma * (t_alias - t_max) < 0.8 * alias_decades * np.log(10.0):
        raise ContourError(
            "invert_fft_contour: alias window too short for the requested damping; "
            "increase n_fft or gamma"
        )
    dy = 2.0 * np.pi / (n_fft * dt)
    n_y = int(np.ceil(2.0 * y_max / dy))
    y = -y_max + dy * np.arange(n_y)
    vals = np.asarray(G(gamma + 1j * y), dtype=complex)

    n_tap = max(2, int(taper_frac * n_y))
    ramp = 0.5 * (1.0 + np.cos(np.linspace(0.0, np.pi, n_tap)))
    vals[-n_tap:] *= ramp
    vals[:n_tap] *= ramp[::-1]

    spec = np.zeros(n_fft, complex)
    spec[:n_y] = vals
    coeff = np.fft.ifft(spec) * n_fft
    t = dt * np.arange(n_times + 1)
    return (np.exp(gamma * t) * dy / (2.0 * np.pi)) * np.exp(-1j * y_max * t) * coeff[:n_times + 1]
