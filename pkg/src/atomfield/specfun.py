"""Complex-plane special functions used by the closed-form Laplace transforms.

Everything here is a thin, branch-careful layer over scipy.special. The
exponential integral is assembled from E1 with explicit branch bookkeeping
so that the continuation onto the negative real axis is the limit from the
upper half-plane (numpy's signed-zero log conventions do the right thing).
"""

from __future__ import annotations

import numpy as np
import scipy.integrate
import scipy.special as _sp

from .errors import ConvergenceError, DomainError

#: Euler-Mascheroni constant.
EULER_GAMMA = float(np.euler_gamma)

_LOG_2PI = float(np.log(2.0 * np.pi))


def expint_e1(w):
    """Principal-branch exponential integral E1(w), complex-capable.

    Thin wrapper over scipy; cut along the negative real axis, on-cut
    values are the limit from above.
    """
    return _sp.exp1(w)


def expint_e1_lower(w):
    """E1 with on-cut values taken as the limit from below the cut.

    Off the cut this is identical to :func:`expint_e1`. Needed when an
    integration path approaches the negative real axis from Im < 0.
    """
    w = np.asarray(w, dtype=complex)
    out = _sp.exp1(w)
    on_cut = (w.imag == 0.0) & (w.real < 0.0)
    if np.any(on_cut):
        # Schwarz reflection: the lower-side limit is the conjugate of the
        # upper-side value at the conjugate point.
        out = np.where(on_cut, np.conj(_sp.exp1(np.conj(w))), out)
    return out if out.ndim else complex(out)


def expint_ei(w):
    """Analytic continuation of the exponential integral Ei.

    Satisfies the small-argument expansion
    ``Ei(w) = euler_gamma + log(w) + sum_{n>=1} w**n/(n*n!)`` with the
    principal branch of the logarithm; on the cut (negative real axis) the
    value is continuous from the upper half-plane.

    Raises
    ------
    DomainError
        If ``w`` is zero (logarithmic singularity) or non-finite.
    """
    w = np.asarray(w, dtype=complex)
    if np.any(w == 0):
        raise DomainError("expint_ei: logarithmic singularity at w = 0")
    if not np.all(np.isfinite(w)):
        raise DomainError("expint_ei: non-finite argument")
    out = -_sp.exp1(-w) + np.log(w) - np.log(-w)
    return out if out.ndim else complex(out)


def log_gamma(w):
    """Continuous (un-wrapped) log-gamma, cut along the negative real axis.

    This is the analytic continuation of log(Gamma) from the positive real
    axis, *not* log of gamma; its imaginary part is not restricted to
    (-pi, pi].

    Raises
    ------
    DomainError
        If ``w`` is a non-positive integer (pole of Gamma).
    """
    w = np.asarray(w, dtype=complex)
    at_pole = (w.imag == 0.0) & (w.real <= 0.0) & (w.real == np.round(w.real))
    if np.any(at_pole):
        raise DomainError("log_gamma: pole of Gamma at non-positive integer w")
    out = _sp.loggamma(w)
    return out if out.ndim else complex(out)


def stirling_remainder(w):
    """Binet function chi(w) = log Gamma(w) - (w - 1/2) log w + w - log(2 pi)/2.

    Vanishes like 1/(12 w) as |w| -> infinity; evaluated by its asymptotic
    series for large |w| to dodge cancellation, directly otherwise.
    """
    w = np.asarray(w, dtype=complex)
    out = np.empty_like(w)
    big = np.abs(w) >= 20.0
    if np.any(big):
        iw2 = 1.0 / (w[big] * w[big])
        # Stirling series: B_{2n} / (2n (2n-1) w^{2n-1})
        out[big] = (1.0 / (12.0 * w[big])) * (
            1.0 + iw2 * (-1.0 / 30.0 + iw2 * (1.0 / 105.0 + iw2 * (-1.0 / 140.0 + iw2 / 99.0)))
        )
    if np.any(~big):
        ws = w[~big]
        out[~big] = _sp.loggamma(ws) - (ws - 0.5) * np.log(ws) + ws - 0.5 * _LOG_2PI
    return out if out.ndim else complex(out)


def _complex_quad(f, a, b, **kw):
    re = scipy.integrate.quad(lambda x: f(x).real, a, b, **kw)
    im = scipy.integrate.quad(lambda x: f(x).imag, a, b, **kw)
    return re[0] + 1j * im[0], max(re[1], im[1])


def coth_integral_J(x, a, rtol=1e-10):
    """Evaluate J(x, a) = integral_x^infinity dy exp(-y) coth(a y) / y.

    The path runs from ``x`` to infinity along a ray; if a pole of
    coth(a y) (at y = i k pi / a) comes too close, the ray is rotated
    slightly. Validation-only helper; adaptive Gauss-Kronrod quadrature.

    Raises
    ------
    DomainError
        If no admissible ray is found (pole on every candidate path).
    ConvergenceError
        If the quadrature error estimate exceeds the target.
    """
    x = complex(x)
    a = complex(a)
    if x == 0:
        raise DomainError("coth_integral_J: logarithmic singularity at x = 0")

    def pole_distance(phi):
        # poles at y_k = i k pi / a, k integer != 0; distance to ray x + t e^{-i phi}
        d = np.exp(-1j * phi)
        ks = np.arange(-200, 201)
        ks = ks[ks != 0]
        yk = 1j * ks * np.pi / a
        t = np.real((yk - x) * np.conj(d))
        t = np.clip(t, 0.0, None)
        return np.min(np.abs(yk - (x + t * d)))

    ray = None
    for phi in (0.0, 0.25, -0.25, 0.45, -0.45):
        if pole_distance(phi) > 0.05 * min(1.0, abs(np.pi / a)):
            ray = np.exp(-1j * phi)
            break
    if ray is None:
        raise DomainError("coth_integral_J: integrand pole on every candidate path")

    def integrand(t):
        y = x + t * ray
        return np.exp(-y) / np.tanh(a * y) / y * ray

    val, err = _complex_quad(integrand, 0.0, np.inf, limit=400, epsabs=1e-13, epsrel=rtol)
    if err > 10 * rtol * max(1.0, abs(val)) + 1e-10:
        raise ConvergenceError(
            f"coth_integral_J: quadrature error estimate {err:.2e} above target"
        )
    return val
