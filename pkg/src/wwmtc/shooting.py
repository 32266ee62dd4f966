"""Independent elastica oracle: direct integration of the rod equations.

This solves the same physical problem as :mod:`wwmtc.beam` — a clamped
inextensible strip with a transverse point load at the free end — but by
numerically integrating the planar rod equilibrium equation

    psi''(s) = -lambda * cos(psi),   psi(0) = 0,

and shooting on the load magnitude lambda until the free end (the first
point of zero curvature) lands exactly at arc length L.  No elliptic
integrals are involved, so agreement with the closed form is a genuine
cross-check rather than a tautology.

The initial curvature psi'(0) = sqrt(2 lambda sin(psi0)) follows from the
first integral of the rod equation (moment balance at the clamp) for a
trajectory whose turning point is at tip angle psi0.  The arc length of
that first turning point is strictly decreasing in lambda, which gives the
shooting residual a single bracketed root.
"""

from __future__ import annotations

import math

from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .errors import DomainError

# generous cap: a rod that has not turned by 20 lengths is effectively straight
_S_MAX = 20.0


def shoot_tip(L: float, psi0: float, rtol: float = 1e-12) -> tuple[float, float, float]:
    """Tip position of the loaded strip found by shooting, no closed forms.

    Args:
        L: strip arc length (mm).
        psi0: target tip angle in (0, pi/2), radians.
        rtol: relative tolerance of the ODE integrator.

    Returns:
        (h, w, k): tip coordinate along the clamped tangent, tip deflection
        along the load, and the fitted load scale sqrt(lambda) in 1/mm.
    """
    if not 0.0 < psi0 < math.pi / 2.0:
        raise DomainError(f"tip angle psi0={psi0!r} outside (0, pi/2)")
    if not L > 0.0:
        raise DomainError(f"beam length L={L!r} must be positive")

    sin_psi0 = math.sin(psi0)

    def first_turn(lam: float):
        """Integrate until curvature first hits zero; dimensionless arc length."""

        def rhs(s, u):
            psi, dpsi, x, y = u
            return (dpsi, -lam * math.cos(psi), math.cos(psi), math.sin(psi))

        def turning(s, u):
            return u[1]

        turning.terminal = True
        turning.direction = -1.0

        u0 = (0.0, math.sqrt(2.0 * lam * sin_psi0), 0.0, 0.0)
        sol = solve_ivp(
            rhs,
            (0.0, _S_MAX),
            u0,
            method="DOP853",
            rtol=rtol,
            atol=1e-14,
            events=turning,
        )
        if sol.t_events[0].size:
            return sol.t_events[0][0], sol.y_events[0][0]
        return _S_MAX, sol.y[:, -1]

    def residual(lam: float) -> float:
        return first_turn(lam)[0] - 1.0

    lam = brentq(residual, 1e-10, 1.5e3, xtol=1e-14, rtol=8.9e-16, maxiter=200)
    _, (psi_end, _, x_end, y_end) = first_turn(lam)
    # energy conservation puts the turning point at the target angle; a large
    # mismatch would mean the root finder latched onto a higher buckling mode
    if abs(psi_end - psi0) > 1e-8:
        raise DomainError(
            f"shooting converged to tip angle {psi_end!r}, wanted {psi0!r}"
        )
    return x_end * L, y_end * L, math.sqrt(lam) / L
