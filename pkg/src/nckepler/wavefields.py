"""Normalized bound-state wavefunctions.

A bound state factorizes as psi = R_jl(r) * Y_lm(theta, phi) on the open
octant 0 < theta, phi < pi/2, r > 0.  With u = 2 gamma r / (j + 5/2) and
n = j - l the radial part is

    R_jl(r) = c u^(l + 3/2) e^(-u/2) L_n^(2l+4)(u),
    c = (2 gamma / (j + 5/2))^(3/2)
        * sqrt( Gamma(j - l + 1) / (2 (j + 5/2) Gamma(j + l + 5)) ),

which makes integral R^2 r^2 dr = 1 exactly (Laguerre orthogonality);
the 3/2 power of the u-scale is what the r^2 dr measure requires.  The
angular part is

    Y_lm = chi sin^(m+1)(th) cos^(s3+1/2)(th) sin^(s1+1/2)(ph)
           cos^(s2+1/2)(ph) P_k1^(m+1, s3)(cos 2th) P_k2^(s1, s2)(cos 2ph)

with 2 k1 = l - m - s3 and 2 k2 = m - s1 - s2; the constant chi makes
the family orthonormal under sin(th) dth dph on the octant (verified by
the Gram-matrix suite).  All gamma-laden constants are accumulated in
log space and exponentiated once, so large j, l do not overflow.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConstraintError, DomainError
from .quadrature import build_rule
from .specfun import jacobi, jacobi_all, laguerre, log_gamma_real
from .spectrum import ChannelSpec, QuantumNumbers

__all__ = [
    "AngularDirection",
    "RadialPoint",
    "radial_norm_constant",
    "radial_wavefunction",
    "angular_norm_constant",
    "angular_wavefunction",
    "full_wavefunction",
    "angular_pairs",
    "angular_gram_matrix",
    "radial_norm_integral",
    "make_angular_function",
    "make_bound_state_function",
]

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class AngularDirection:
    """Point (theta, phi) in the closed octant [0, pi/2]^2.

    The wavefunction is defined as its limit 0 on the boundary; most
    operations require the open interior.
    """

    theta: float
    phi: float

    def __post_init__(self):
        if not (0.0 <= self.theta <= _HALF_PI and 0.0 <= self.phi <= _HALF_PI):
            raise DomainError(f"direction outside the octant: {self}")

    @property
    def interior(self) -> bool:
        return 0.0 < self.theta < _HALF_PI and 0.0 < self.phi < _HALF_PI


@dataclass(frozen=True)
class RadialPoint:
    r: float

    def __post_init__(self):
        if not self.r > 0.0:
            raise DomainError(f"r must be > 0, got {self.r!r}")


def _check_radial_labels(channel, j, l):
    if not (isinstance(j, int) and isinstance(l, int)) or j < 0 or l < 0:
        raise ConstraintError(f"j, l must be nonnegative integers, got {j!r}, {l!r}")
    if l > j:
        raise ConstraintError(f"need l <= j, got l = {l}, j = {j}")
    t = l - channel.s_total
    if t < 0 or t % 2:
        raise ConstraintError(
            f"l = {l} not reachable in channel (l - sum(s) must be even and >= 0)")


def _check_angular_labels(channel, l, m):
    if not (isinstance(l, int) and isinstance(m, int)) or l < 0 or m < 0:
        raise ConstraintError(f"l, m must be nonnegative integers, got {l!r}, {m!r}")
    two_k2 = m - channel.s1 - channel.s2
    two_k1 = l - m - channel.s3
    if two_k2 < 0 or two_k2 % 2 or two_k1 < 0 or two_k1 % 2:
        raise ConstraintError(
            f"(l, m) = ({l}, {m}) violates the selection rules of channel "
            f"({channel.s1}, {channel.s2}, {channel.s3})")
    return two_k1 // 2, two_k2 // 2


def radial_norm_constant(channel: ChannelSpec, j: int, l: int) -> float:
    """Normalization constant of R_jl (log-space evaluation)."""
    _check_radial_labels(channel, j, l)
    beta = 2.0 * channel.gamma / (j + 2.5)
    log_c = 1.5 * math.log(beta) + 0.5 * (
        log_gamma_real(j - l + 1.0)
        - math.log(2.0 * (j + 2.5))
        - log_gamma_real(j + l + 5.0)
    )
    return math.exp(log_c)


def radial_wavefunction(channel: ChannelSpec, j: int, l: int, point: RadialPoint) -> float:
    """R_jl at one radius."""
    c = radial_norm_constant(channel, j, l)
    beta = 2.0 * channel.gamma / (j + 2.5)
    u = beta * point.r
    return c * u ** (l + 1.5) * math.exp(-0.5 * u) * laguerre(j - l, 2 * l + 4, u)


def angular_norm_constant(channel: ChannelSpec, l: int, m: int) -> float:
    """Normalization constant chi of Y_lm (log-space evaluation)."""
    _check_angular_labels(channel, l, m)
    s1, s2, s3 = channel.s1, channel.s2, channel.s3
    log_sq = (
        log_gamma_real(0.5 * (l + m + s3 + 4))
        + log_gamma_real(0.5 * (l - m - s3 + 2))
        + log_gamma_real(0.5 * (m + s1 + s2 + 2))
        - log_gamma_real(0.5 * (l + m - s3 + 4))
        - log_gamma_real(0.5 * (l - m + s3 + 2))
        - log_gamma_real(0.5 * (m + s1 - s2 + 2))
        + log_gamma_real(0.5 * (m - s1 - s2 + 2))
        - log_gamma_real(0.5 * (m - s1 + s2 + 2))
        + math.log(2.0 * l + 4.0)
        + math.log(2.0 * m + 2.0)
    )
    return math.exp(0.5 * log_sq)


def angular_wavefunction(channel: ChannelSpec, l: int, m: int, direction: AngularDirection) -> float:
    """Y_lm at one direction; 0 on the octant boundary by continuity."""
    chi = angular_norm_constant(channel, l, m)
    if not direction.interior:
        return 0.0
    k1, k2 = _check_angular_labels(channel, l, m)
    s1, s2, s3 = channel.s1, channel.s2, channel.s3
    th, ph = direction.theta, direction.phi
    return (chi
            * math.sin(th) ** (m + 1) * math.cos(th) ** (s3 + 0.5)
            * math.sin(ph) ** (s1 + 0.5) * math.cos(ph) ** (s2 + 0.5)
            * jacobi(k1, m + 1.0, float(s3), math.cos(2.0 * th))
            * jacobi(k2, float(s1), float(s2), math.cos(2.0 * ph)))


def full_wavefunction(channel: ChannelSpec, qn: QuantumNumbers, point: RadialPoint,
                      direction: AngularDirection) -> float:
    """psi = R_jl(r) Y_lm(theta, phi)."""
    qn.check_channel(channel)
    return (radial_wavefunction(channel, qn.j, qn.l, point)
            * angular_wavefunction(channel, qn.l, qn.m, direction))


def angular_pairs(channel: ChannelSpec, l_max: int) -> list:
    """All (l, m) admissible in the channel with l <= l_max, sorted."""
    pairs = []
    for l in range(channel.s_total, l_max + 1):
        for m in range(channel.s1 + channel.s2, l - channel.s3 + 1, 2):
            if (l - m - channel.s3) >= 0 and (l - m - channel.s3) % 2 == 0:
                pairs.append((l, m))
    return pairs


def make_angular_function(channel: ChannelSpec, l: int, m: int):
    """Fast closure (theta, phi) -> Y_lm with constants precomputed."""
    k1, k2 = _check_angular_labels(channel, l, m)
    chi = angular_norm_constant(channel, l, m)
    s1, s2, s3 = channel.s1, channel.s2, channel.s3

    def fn(theta, phi):
        if not (0.0 < theta < _HALF_PI and 0.0 < phi < _HALF_PI):
            return 0.0
        return (chi
                * math.sin(theta) ** (m + 1) * math.cos(theta) ** (s3 + 0.5)
                * math.sin(phi) ** (s1 + 0.5) * math.cos(phi) ** (s2 + 0.5)
                * jacobi(k1, m + 1.0, float(s3), math.cos(2.0 * theta))
                * jacobi(k2, float(s1), float(s2), math.cos(2.0 * phi)))

    return fn


def make_bound_state_function(channel: ChannelSpec, qn: QuantumNumbers):
    """Fast closure (r, theta, phi) -> psi with constants precomputed."""
    qn.check_channel(channel)
    c = radial_norm_constant(channel, qn.j, qn.l)
    beta = 2.0 * channel.gamma / (qn.j + 2.5)
    n, l = qn.n, qn.l
    ang = make_angular_function(channel, qn.l, qn.m)

    def fn(r, theta, phi):
        u = beta * r
        rad = c * u ** (l + 1.5) * math.exp(-0.5 * u) * laguerre(n, 2 * l + 4, u)
        return rad * ang(theta, phi)

    return fn


def _angular_parts_on_grid(channel, l, m, thetas, phis):
    """theta-part and phi-part arrays of Y_lm on given angle arrays."""
    k1, k2 = _check_angular_labels(channel, l, m)
    chi = angular_norm_constant(channel, l, m)
    s1, s2, s3 = channel.s1, channel.s2, channel.s3
    th = np.asarray(thetas, dtype=float)
    ph = np.asarray(phis, dtype=float)
    th_part = (chi * np.sin(th) ** (m + 1) * np.cos(th) ** (s3 + 0.5)
               * kernels.jacobi_values(k1, m + 1.0, float(s3), np.cos(2.0 * th)))
    ph_part = (np.sin(ph) ** (s1 + 0.5) * np.cos(ph) ** (s2 + 0.5)
               * kernels.jacobi_values(k2, float(s1), float(s2), np.cos(2.0 * ph)))
    return th_part, ph_part


def angular_gram_matrix(channel: ChannelSpec, l_max: int, order: int = 160):
    """Gram matrix of {Y_lm : l <= l_max} under sin(th) dth dph.

    Returns (pairs, G).  Each basis function is a theta-part times a
    phi-part, so every Gram entry separates into a product of two 1-D
    quadratures over the same Gauss-Legendre grid mapped to (0, pi/2).
    """
    pairs = angular_pairs(channel, l_max)
    rule = build_rule("finite_legendre", order)
    half = 0.25 * math.pi
    ang = half * rule.nodes + half
    w = half * rule.weights
    th_rows = np.empty((len(pairs), order))
    ph_rows = np.empty((len(pairs), order))
    for i, (l, m) in enumerate(pairs):
        th_part, ph_part = _angular_parts_on_grid(channel, l, m, ang, ang)
        th_rows[i] = th_part
        ph_rows[i] = ph_part
    th_overlap = (th_rows * (w * np.sin(ang))) @ th_rows.T
    ph_overlap = (ph_rows * w) @ ph_rows.T
    return pairs, th_overlap * ph_overlap


def radial_norm_integral(channel: ChannelSpec, j: int, l: int, order: int = 160) -> float:
    """integral_0^inf R_jl(r)^2 r^2 dr by half-line Gauss quadrature.

    In the variable u the integrand is c^2 u^(2l+5) L_n(u)^2 e^(-u) /
    beta^3; the polynomial factor is evaluated directly (it stays well
    inside double range for the j <= ~16 used in verification).
    """
    _check_radial_labels(channel, j, l)
    rule = build_rule("halfline_laguerre", order)
    beta = 2.0 * channel.gamma / (j + 2.5)
    c = radial_norm_constant(channel, j, l)
    u = rule.nodes
    lag = kernels.laguerre_values(j - l, 2 * l + 4.0, u)
    vals = u ** (2 * l + 5) * lag * lag
    return float(c * c / beta**3 * np.sum(rule.weights * vals))
