"""Finite-difference application of the Hamiltonian and its integrals of motion.

These operators exist to *check* the closed-form states, so they are
built from plain central differences (second order) with Richardson
extrapolation over step halvings, entirely independent of the
recurrences that produced the states.

Operators, acting on functions of (r, theta, phi) on the open octant:

    H  = -1/2 [d_rr + (2/r) d_r + Lambda / r^2] - gamma / r
         + (s1^2 - 1/4) / (2 r^2 sin^2(th) sin^2(ph))
         + (s2^2 - 1/4) / (2 r^2 sin^2(th) cos^2(ph))
         + (s3^2 - 1/4) / (2 r^2 cos^2(th))

with Lambda = (1/sin th) d_th (sin th d_th) + d_phph / sin^2(th), and on
angular functions

    J1 = -Lambda + (s1^2 - 1/4)/(sin^2 th sin^2 ph)
               + (s2^2 - 1/4)/(sin^2 th cos^2 ph)
               + (s3^2 - 1/4)/cos^2 th - 15/4
    J2 = -d_phph + (s1^2 - 1/4)/sin^2 ph + (s2^2 - 1/4)/cos^2 ph - 1

J1 and J2 commute with H and are the restrictions of the underlying
group Casimir operators; the constant offsets -15/4 and -1 absorb the
curvature terms produced by the half-power weight that flattens the
angular measure, so that the eigenvalues on the channel's angular basis
come out as the Casimir labels l (l + 4) and m (m + 2).  (Without the
offsets the same functions are still eigenfunctions, shifted to
(l + 2)^2 - 1/4 and (m + 1)^2.)
"""

import math
from dataclasses import dataclass

from .errors import GeometryError
from .spectrum import ChannelSpec

__all__ = [
    "StencilConfig",
    "apply_hamiltonian",
    "apply_angular_invariant",
    "apply_azimuthal_invariant",
    "ANGULAR_OFFSET",
    "AZIMUTHAL_OFFSET",
]

_HALF_PI = 0.5 * math.pi

# curvature constants of the measure-flattening weight (see module docstring)
ANGULAR_OFFSET = -3.75
AZIMUTHAL_OFFSET = -1.0


@dataclass(frozen=True)
class StencilConfig:
    """Central-difference steps and Richardson depth.

    ``step_r`` is relative (the radial step is step_r * r); the angular
    steps are absolute.  ``richardson_levels`` counts the step sizes
    h, h/2, ..., h/2^(levels-1) combined; 1 means raw differences.
    """

    step_r: float = 1e-3
    step_theta: float = 1e-3
    step_phi: float = 1e-3
    richardson_levels: int = 2

    def __post_init__(self):
        if min(self.step_r, self.step_theta, self.step_phi) <= 0.0:
            raise GeometryError("stencil steps must be positive")
        if self.richardson_levels < 1:
            raise GeometryError("richardson_levels must be >= 1")


def _richardson(values):
    """Extrapolate a sequence D(h), D(h/2), ... of O(h^2) estimates."""
    vals = list(values)
    factor = 4.0
    while len(vals) > 1:
        vals = [(factor * fine - coarse) / (factor - 1.0)
                for coarse, fine in zip(vals[:-1], vals[1:])]
        factor *= 4.0
    return vals[0]


def _require_margin(value, low, high, step, label):
    if not (low + 3.0 * step < value < high - 3.0 * step):
        raise GeometryError(
            f"{label} = {value} too close to the boundary for step {step}")


def apply_hamiltonian(channel: ChannelSpec, psi, r: float, direction, cfg: StencilConfig = StencilConfig()) -> float:
    """(H psi)(r, theta, phi) by Richardson-extrapolated central differences.

    ``psi`` is any callable (r, theta, phi) -> float; the evaluation
    point must sit inside the open domain with a margin of three steps.
    """
    th, ph = direction.theta, direction.phi
    hr = cfg.step_r * r
    _require_margin(r, 0.0, math.inf, hr, "r")
    _require_margin(th, 0.0, _HALF_PI, cfg.step_theta, "theta")
    _require_margin(ph, 0.0, _HALF_PI, cfg.step_phi, "phi")

    center = psi(r, th, ph)
    s1, s2, s3 = channel.s1, channel.s2, channel.s3
    sin_th, cos_th = math.sin(th), math.cos(th)
    sin_ph, cos_ph = math.sin(ph), math.cos(ph)
    potential = (-channel.gamma / r
                 + (s1 * s1 - 0.25) / (2.0 * r * r * sin_th**2 * sin_ph**2)
                 + (s2 * s2 - 0.25) / (2.0 * r * r * sin_th**2 * cos_ph**2)
                 + (s3 * s3 - 0.25) / (2.0 * r * r * cos_th**2))

    estimates = []
    for level in range(cfg.richardson_levels):
        scale = 0.5**level
        h_r, h_t, h_p = hr * scale, cfg.step_theta * scale, cfg.step_phi * scale
        rp, rm = psi(r + h_r, th, ph), psi(r - h_r, th, ph)
        tp, tm = psi(r, th + h_t, ph), psi(r, th - h_t, ph)
        pp, pm = psi(r, th, ph + h_p), psi(r, th, ph - h_p)
        d_rr = (rp - 2.0 * center + rm) / (h_r * h_r)
        d_r = (rp - rm) / (2.0 * h_r)
        d_tt = (tp - 2.0 * center + tm) / (h_t * h_t)
        d_t = (tp - tm) / (2.0 * h_t)
        d_pp = (pp - 2.0 * center + pm) / (h_p * h_p)
        angular = d_tt + d_t * cos_th / sin_th + d_pp / (sin_th * sin_th)
        estimates.append(-0.5 * (d_rr + 2.0 / r * d_r + angular / (r * r)))
    return _richardson(estimates) + potential * center


def _angular_operator(channel, psi_angular, direction, cfg, azimuthal_only):
    th, ph = direction.theta, direction.phi
    _require_margin(th, 0.0, _HALF_PI, cfg.step_theta, "theta")
    _require_margin(ph, 0.0, _HALF_PI, cfg.step_phi, "phi")
    center = psi_angular(th, ph)
    s1, s2, s3 = channel.s1, channel.s2, channel.s3
    sin_th, cos_th = math.sin(th), math.cos(th)
    sin_ph, cos_ph = math.sin(ph), math.cos(ph)

    estimates = []
    for level in range(cfg.richardson_levels):
        scale = 0.5**level
        h_t, h_p = cfg.step_theta * scale, cfg.step_phi * scale
        pp, pm = psi_angular(th, ph + h_p), psi_angular(th, ph - h_p)
        d_pp = (pp - 2.0 * center + pm) / (h_p * h_p)
        if azimuthal_only:
            estimates.append(-d_pp)
        else:
            tp, tm = psi_angular(th + h_t, ph), psi_angular(th - h_t, ph)
            d_tt = (tp - 2.0 * center + tm) / (h_t * h_t)
            d_t = (tp - tm) / (2.0 * h_t)
            estimates.append(-(d_tt + d_t * cos_th / sin_th + d_pp / (sin_th * sin_th)))
    derivative_part = _richardson(estimates)

    if azimuthal_only:
        barrier = ((s1 * s1 - 0.25) / (sin_ph * sin_ph)
                   + (s2 * s2 - 0.25) / (cos_ph * cos_ph))
        return derivative_part + (barrier + AZIMUTHAL_OFFSET) * center
    barrier = ((s1 * s1 - 0.25) / (sin_th**2 * sin_ph**2)
               + (s2 * s2 - 0.25) / (sin_th**2 * cos_ph**2)
               + (s3 * s3 - 0.25) / (cos_th * cos_th))
    return derivative_part + (barrier + ANGULAR_OFFSET) * center


def apply_angular_invariant(channel: ChannelSpec, psi_angular, direction, cfg: StencilConfig = StencilConfig()) -> float:
    """(J1 psi)(theta, phi); eigenvalue l (l + 4) on the channel basis."""
    return _angular_operator(channel, psi_angular, direction, cfg, azimuthal_only=False)


def apply_azimuthal_invariant(channel: ChannelSpec, psi_angular, direction, cfg: StencilConfig = StencilConfig()) -> float:
    """(J2 psi)(theta, phi); eigenvalue m (m + 2) on the channel basis."""
    return _angular_operator(channel, psi_angular, direction, cfg, azimuthal_only=True)
