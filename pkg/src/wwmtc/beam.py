"""Closed-form large-deflection cantilever: the shape of one loaded arch.

Model: an inextensible elastic strip of arc length L, clamped at one end,
loaded by a point force at the free end acting perpendicular to the clamped
tangent.  The solution family is parameterized by a single shape parameter
p in [1/sqrt(2), 1): p = 1/sqrt(2) is the unloaded straight strip, p -> 1
curls the tip up to 90 degrees.

With phi1 = asin(1/(sqrt(2) p)) and the scale factor
k = (K(p) - F(phi1, p)) / L  (k is sqrt(load / bending stiffness)),
the tip position decomposes as

* along the clamped tangent:   sqrt(2 (2 p^2 - 1)) / k
* along the load direction:    (K(p) - F(phi1,p) - 2 E(p) + 2 E(phi1,p)) / k

and the tip rotates by psi0 with sin(psi0) = 2 p^2 - 1.

In the muscle exterior the clamped tangent lies along the muscle axis, so the
along-tangent coordinate is the arch *height* h (equal to L when straight)
and the along-load deflection is the radial *width* w (zero when straight).
Note the height carries the sqrt(2(2p^2-1))/k expression and the width the
bracketed one; assigning them the other way round would make the natural
(zero-load) state come out as h = 0, w = L, which the shooting oracle in the
test suite disproves.  See tests/test_beam.py::test_matches_shooting_oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import (
    MODULUS_MAX,
    ellip_e,
    ellip_e_complete,
    ellip_f,
    ellip_k,
)
from .errors import DomainError, NumericalInstabilityError, OutOfRangeError

# Shape parameter of the straight (unloaded) strip.
P_STRAIGHT = 1.0 / math.sqrt(2.0)
# Upper bound: keep clear of the logarithmic singularity of K at p = 1.
P_MAX = MODULUS_MAX

# Tolerance for "p is the straight-beam boundary"; 2 p^2 - 1 underflows to a
# small negative number when p is the float nearest 1/sqrt(2).
_BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class BeamSolution:
    """Deflected-arch geometry for one (L, p) pair.  Lengths in mm."""

    w: float      # deflection along the load (muscle width contribution)
    h: float      # tip coordinate along the clamped tangent (arch height)
    psi0: float   # tip rotation relative to the clamped tangent, rad
    k: float      # scale factor sqrt(load/stiffness), 1/mm
    phi1: float   # lower amplitude limit of the elliptic integrals, rad


def _check_shape_param(p: float) -> float:
    p = float(p)
    if not (P_STRAIGHT - _BOUNDARY_TOL) <= p <= P_MAX:
        raise DomainError(
            f"shape parameter p={p!r} outside [{P_STRAIGHT!r}, {P_MAX!r}]"
        )
    return p


def _check_length(length: float) -> float:
    length = float(length)
    if not length > 0.0:
        raise DomainError(f"beam length L={length!r} must be positive")
    return length


def solve_beam(L: float, p: float) -> BeamSolution:
    """Deflected width, height, tip angle and scale factor of one arch.

    Args:
        L: arc length of the undeformed strip, mm (> 0).
        p: shape parameter in [1/sqrt(2), P_MAX].

    The boundary p = 1/sqrt(2) is returned as the exact straight-strip
    limit (w = 0, h = L, psi0 = 0); the general formulas degenerate to 0/0
    there because k -> 0 with the load.
    """
    L = _check_length(L)
    p = _check_shape_param(p)

    sin_psi0 = 2.0 * p * p - 1.0
    if sin_psi0 <= 0.0:
        return BeamSolution(w=0.0, h=L, psi0=0.0, k=0.0, phi1=math.pi / 2.0)

    phi1 = math.asin(min(1.0, 1.0 / (math.sqrt(2.0) * p)))
    kL = ellip_k(p) - ellip_f(phi1, p)
    if kL < 1e-12:
        raise NumericalInstabilityError(
            f"scale factor k*L={kL!r} too small at p={p!r}; "
            "result would be dominated by cancellation"
        )
    k = kL / L
    h = math.sqrt(2.0 * sin_psi0) / k
    # within ~1e-10 of the straight boundary the bracket cancels to noise of
    # order 1e-9*L; clamp so w >= 0 holds there (true w is below the noise)
    w = max(0.0, (kL - 2.0 * (ellip_e_complete(p) - ellip_e(phi1, p))) / k)
    psi0 = math.asin(min(1.0, sin_psi0))
    return BeamSolution(w=w, h=h, psi0=psi0, k=k, phi1=phi1)


def solve_p_for_height(L: float, h_target: float) -> float:
    """Invert h(L, p) for p by bracketed bisection.

    h is strictly decreasing in p on [P_STRAIGHT, P_MAX] (verified by dense
    sampling in the test suite), so a plain bisection is reliable all the
    way to the degenerate straight-strip boundary.

    Raises OutOfRangeError when h_target is below the smallest achievable
    height (at p = P_MAX); the error carries the achievable interval.
    """
    L = _check_length(L)
    h_target = float(h_target)
    if not 0.0 < h_target <= L:
        raise DomainError(f"target height {h_target!r} must lie in (0, L={L}]")

    if h_target == L:
        return P_STRAIGHT
    h_min = solve_beam(L, P_MAX).h
    if h_target < h_min:
        raise OutOfRangeError(
            f"target height {h_target!r} below minimum achievable "
            f"{h_min!r} (heights span [{h_min!r}, {L!r}])",
            lo=h_min,
            hi=L,
        )

    lo, hi = P_STRAIGHT, P_MAX  # h(lo) = L >= h_target >= h(hi)
    for _ in range(64):
        mid = 0.5 * (lo + hi)
        if solve_beam(L, mid).h >= h_target:
            lo = mid
        else:
            hi = mid
    p = 0.5 * (lo + hi)
    # the bisection interval is ~1e-19 wide here; this guard only fires if
    # the monotonicity assumption were ever violated
    if abs(solve_beam(L, p).h - h_target) > 1e-9 * L:
        raise NumericalInstabilityError(
            f"height inversion did not converge at h_target={h_target!r}"
        )
    return p
