"""Legendre elliptic integrals of the first and second kind.

All functions take the *modulus* p (the integrands contain p^2 sin^2(theta)),
not the parameter m = p^2.  Amplitudes are restricted to the first quadrant,
which is the only region the downstream beam model evaluates.

Two independent evaluation routes are provided:

* a fast path built on Carlson symmetric forms (duplication theorem, the
  SLATEC algorithm), accurate to a few ULP, and
* ``*_quadrature`` reference implementations that integrate the defining
  integrals with adaptive Simpson quadrature.  These are deliberately kept
  algorithm-independent from the fast path so the two can cross-check each
  other in the test suite.
"""

from __future__ import annotations

import math

from .errors import DomainError

# K(p) has a logarithmic singularity at p = 1; the beam model never needs
# moduli this close to it (the tip angle is already 90 deg in that limit).
MODULUS_MAX = 1.0 - 1e-9

HALF_PI = math.pi / 2.0


def _check_modulus(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= MODULUS_MAX:
        raise DomainError(
            f"modulus p={p!r} outside [0, {MODULUS_MAX}] "
            "(integrals diverge as p approaches 1)"
        )
    return p


def _check_amplitude(phi: float) -> float:
    phi = float(phi)
    # allow half a ULP of slack at pi/2 so that computed amplitudes
    # such as asin(...) never trip the guard
    if not 0.0 <= phi <= HALF_PI * (1.0 + 1e-15):
        raise DomainError(f"amplitude phi={phi!r} outside [0, pi/2]")
    return min(phi, HALF_PI)


# ---------------------------------------------------------------------------
# Carlson symmetric forms
# ---------------------------------------------------------------------------

_RF_TOL = 1e-4  # deviation threshold; 5th-order tail then contributes < 1 ULP
_RD_TOL = 1e-4


def _rf(x: float, y: float, z: float) -> float:
    """Carlson R_F(x, y, z) for nonnegative arguments, at most one zero."""
    xm, ym, zm = x, y, z
    while True:
        sx, sy, sz = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm)
        lam = sx * (sy + sz) + sy * sz
        xm = (xm + lam) * 0.25
        ym = (ym + lam) * 0.25
        zm = (zm + lam) * 0.25
        mu = (xm + ym + zm) / 3.0
        dx = (mu - xm) / mu
        dy = (mu - ym) / mu
        dz = (mu - zm) / mu
        if max(abs(dx), abs(dy), abs(dz)) < _RF_TOL:
            break
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    s = 1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0
    return s / math.sqrt(mu)


def _rd(x: float, y: float, z: float) -> float:
    """Carlson R_D(x, y, z); z must be positive."""
    xm, ym, zm = x, y, z
    total = 0.0
    pow4 = 1.0
    while True:
        sx, sy, sz = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm)
        lam = sx * (sy + sz) + sy * sz
        total += pow4 / (sz * (zm + lam))
        pow4 *= 0.25
        xm = (xm + lam) * 0.25
        ym = (ym + lam) * 0.25
        zm = (zm + lam) * 0.25
        mu = (xm + ym + 3.0 * zm) * 0.2
        dx = (mu - xm) / mu
        dy = (mu - ym) / mu
        dz = (mu - zm) / mu
        if max(abs(dx), abs(dy), abs(dz)) < _RD_TOL:
            break
    ea = dx * dy
    eb = dz * dz
    ec = ea - eb
    ed = ea - 6.0 * eb
    ef = ed + ec + ec
    s1 = ed * (-3.0 / 14.0 + 0.25 * (9.0 / 22.0) * ed - 1.5 * (3.0 / 26.0) * dz * ef)
    s2 = dz * ((1.0 / 6.0) * ef + dz * (-(9.0 / 22.0) * ec + dz * (3.0 / 26.0) * ea))
    return 3.0 * total + pow4 * (1.0 + s1 + s2) / (mu * math.sqrt(mu))


# ---------------------------------------------------------------------------
# Fast path
# ---------------------------------------------------------------------------

def ellip_f(phi: float, p: float) -> float:
    """Incomplete elliptic integral of the first kind F(phi, p).

    Integral of 1/sqrt(1 - p^2 sin^2 theta) for theta in [0, phi],
    with 0 <= phi <= pi/2 and modulus 0 <= p <= MODULUS_MAX.
    """
    phi = _check_amplitude(phi)
    p = _check_modulus(p)
    if phi == 0.0:
        return 0.0
    s = math.sin(phi)
    c = math.cos(phi)
    ps = p * s
    return s * _rf(c * c, 1.0 - ps * ps, 1.0)


def ellip_e(phi: float, p: float) -> float:
    """Incomplete elliptic integral of the second kind E(phi, p).

    Integral of sqrt(1 - p^2 sin^2 theta) for theta in [0, phi].
    """
    phi = _check_amplitude(phi)
    p = _check_modulus(p)
    if phi == 0.0:
        return 0.0
    s = math.sin(phi)
    c = math.cos(phi)
    ps = p * s
    y = 1.0 - ps * ps
    return s * _rf(c * c, y, 1.0) - (p * p) * (s * s * s) * _rd(c * c, y, 1.0) / 3.0


def ellip_k(p: float) -> float:
    """Complete elliptic integral of the first kind K(p) = F(pi/2, p)."""
    p = _check_modulus(p)
    return _rf(0.0, 1.0 - p * p, 1.0)


def ellip_e_complete(p: float) -> float:
    """Complete elliptic integral of the second kind E(p) = E(pi/2, p)."""
    p = _check_modulus(p)
    m = p * p
    y = 1.0 - m
    return _rf(0.0, y, 1.0) - m * _rd(0.0, y, 1.0) / 3.0


# ---------------------------------------------------------------------------
# Quadrature reference path
# ---------------------------------------------------------------------------

def _adaptive_simpson(f, a: float, b: float, tol: float) -> float:
    """Adaptive Simpson quadrature with Richardson extrapolation."""
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)

    def recurse(a, fa, b, fb, m, fm, whole, tol, depth):
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return (
            recurse(a, fa, m, fm, lm, flm, left, tol * 0.5, depth - 1)
            + recurse(m, fm, b, fb, rm, frm, right, tol * 0.5, depth - 1)
        )

    m = 0.5 * (a + b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return recurse(a, fa, b, fb, m, fm, whole, tol, 48)


def ellip_f_quadrature(phi: float, p: float, tol: float = 1e-12) -> float:
    """F(phi, p) by adaptive Simpson on the defining integral."""
    phi = _check_amplitude(phi)
    p = _check_modulus(p)
    if phi == 0.0:
        return 0.0
    m = p * p

    def integrand(theta: float) -> float:
        s = math.sin(theta)
        return 1.0 / math.sqrt(1.0 - m * s * s)

    return _adaptive_simpson(integrand, 0.0, phi, tol)


def ellip_e_quadrature(phi: float, p: float, tol: float = 1e-12) -> float:
    """E(phi, p) by adaptive Simpson on the defining integral."""
    phi = _check_amplitude(phi)
    p = _check_modulus(p)
    if phi == 0.0:
        return 0.0
    m = p * p

    def integrand(theta: float) -> float:
        s = math.sin(theta)
        return math.sqrt(1.0 - m * s * s)

    return _adaptive_simpson(integrand, 0.0, phi, tol)


def ellip_k_quadrature(p: float, tol: float = 1e-12) -> float:
    """K(p) by adaptive Simpson."""
    return ellip_f_quadrature(HALF_PI, p, tol)


def ellip_e_complete_quadrature(p: float, tol: float = 1e-12) -> float:
    """Complete E(p) by adaptive Simpson."""
    return ellip_e_quadrature(HALF_PI, p, tol)
