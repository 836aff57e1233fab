"""Positive-energy channel: S-matrix, scattering amplitude, intertwiner checks.

For energy E > 0 the channel is labelled by p = sqrt(2 E) and
rho = gamma / p (the principal-series label forced by equating the
Casimir value -25/4 - rho^2 with -25/4 - gamma^2 / (2 E)).  The
partial-wave S-matrix element is the unimodular gamma ratio

    A_l = Gamma(5/2 + i rho + l) / Gamma(5/2 - i rho + l),

the S-kernel is sum_{l,m} A_l Y_lm(n) Y_lm(n') over the channel's
angular basis, and the scattering amplitude is (2 pi / (i p)) times the
same sum (the identity term drops for separated directions).  Since
|A_l| = 1 the sum is a distribution; its value at separated directions
is defined as the Abel limit of e^(-eps l)-damped sums, extrapolated
to eps = 0.

The amplitude has an equivalent triple-integral form obtained by
expanding the intertwining kernel eta (1 - n.n')^(-5/2 - i rho) over the
five-sphere:

    f = (2 pi / (i p)) eta W(n, n') *
        integral  (1 - a sin th sin th' - cos th cos th' cos a3)^(-5/2 - i rho)
                  e^(-i (s1 a1 + s2 a2 + s3 a3))  da1 da2 da3,
    a = sin ph sin ph' cos a1 + cos ph cos ph' cos a2,

where W(n, n') = w(th, ph) w(th', ph') with w = sin th sqrt(cos th
sin ph cos ph), the product of half-power circle-radius factors that
converts the weight-flattened channel functions Y_lm into genuine
five-sphere harmonics.  Both routes must agree; that cross-check is the
keystone of the validation suite.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, EvaluationError
from .quadrature import integrate_endpoint_regularized
from .specfun import gamma_ratio_unimodular, jacobi, jacobi_all, log_gamma_complex, log_gamma_real
from .spectrum import ChannelSpec
from .wavefields import AngularDirection, angular_norm_constant

__all__ = [
    "ScatteringState",
    "AmplitudeRequest",
    "make_scattering_state",
    "phase_element",
    "partial_wave_element",
    "angular_pair_sums",
    "s_kernel",
    "s_kernel_from_rho",
    "amplitude_partial_wave",
    "amplitude_partial_wave_detailed",
    "amplitude_integral",
    "amplitude_integral_detailed",
    "intertwiner_constant",
    "intertwiner_constant_from_rho",
    "intertwiner_kernel",
    "verify_expansion_coefficient",
    "extrapolate_to_zero",
]

DEFAULT_ABEL_EPSILONS = (0.2, 0.15, 0.1, 0.075, 0.05)


@dataclass(frozen=True)
class ScatteringState:
    """Positive-energy channel state; p = sqrt(2 E), rho = gamma / p."""

    channel: ChannelSpec
    energy: float
    p: float
    rho: float

    def __post_init__(self):
        if not self.energy > 0.0:
            raise DomainError(f"scattering energy must be > 0, got {self.energy!r}")
        if abs(self.p - math.sqrt(2.0 * self.energy)) > 1e-12 * self.p:
            raise DomainError("p inconsistent with sqrt(2 E)")
        if abs(self.rho - self.channel.gamma / self.p) > 1e-12 * self.rho:
            raise DomainError("rho inconsistent with gamma / p")


@dataclass(frozen=True)
class AmplitudeRequest:
    """Direction pair plus truncation/method controls."""

    in_dir: AngularDirection
    out_dir: AngularDirection
    l_max: int = 420
    method: str = "partial_wave"

    def __post_init__(self):
        if self.l_max < 1:
            raise DomainError(f"l_max must be >= 1, got {self.l_max}")
        if self.method not in ("partial_wave", "integral_rep"):
            raise DomainError(f"unknown method {self.method!r}")
        if (self.in_dir.theta == self.out_dir.theta
                and self.in_dir.phi == self.out_dir.phi):
            raise DomainError("amplitude requires distinct in/out directions")


def make_scattering_state(channel: ChannelSpec, energy: float) -> ScatteringState:
    if not energy > 0.0:
        raise DomainError(f"scattering energy must be > 0, got {energy!r}")
    p = math.sqrt(2.0 * energy)
    return ScatteringState(channel=channel, energy=energy, p=p, rho=channel.gamma / p)


def phase_element(rho: float, l: int) -> complex:
    """A_l as a function of rho alone (rho = 0 gives exactly 1)."""
    if l < 0:
        raise DomainError(f"l must be >= 0, got {l}")
    return gamma_ratio_unimodular(2.5 + l, rho)


def partial_wave_element(state: ScatteringState, l: int) -> complex:
    """Partial-wave S-matrix element A_l of the state's channel."""
    return phase_element(state.rho, l)


def angular_pair_sums(channel: ChannelSpec, dir1: AngularDirection,
                      dir2: AngularDirection, l_max: int) -> np.ndarray:
    """T[l] = sum_m Y_lm(dir1) Y_lm(dir2) for l = 0 .. l_max.

    One Jacobi recurrence pass per m column covers every l at once, so
    the full table costs O(l_max^2) operations.
    """
    s1, s2, s3 = channel.s1, channel.s2, channel.s3
    sums = np.zeros(l_max + 1)
    if not (dir1.interior and dir2.interior):
        return sums
    th1, ph1 = dir1.theta, dir1.phi
    th2, ph2 = dir2.theta, dir2.phi
    x1, x2 = math.cos(2.0 * th1), math.cos(2.0 * th2)
    for m in range(s1 + s2, l_max - s3 + 1, 2):
        k2 = (m - s1 - s2) // 2
        k1_max = (l_max - m - s3) // 2
        if k1_max < 0:
            break
        phi_factor = (
            math.sin(ph1) ** (s1 + 0.5) * math.cos(ph1) ** (s2 + 0.5)
            * math.sin(ph2) ** (s1 + 0.5) * math.cos(ph2) ** (s2 + 0.5)
            * jacobi(k2, float(s1), float(s2), math.cos(2.0 * ph1))
            * jacobi(k2, float(s1), float(s2), math.cos(2.0 * ph2)))
        theta_base = (math.sin(th1) * math.sin(th2)) ** (m + 1) \
            * (math.cos(th1) * math.cos(th2)) ** (s3 + 0.5)
        col1 = jacobi_all(k1_max, m + 1.0, float(s3), x1)
        col2 = jacobi_all(k1_max, m + 1.0, float(s3), x2)
        for k1 in range(k1_max + 1):
            l = m + s3 + 2 * k1
            chi = angular_norm_constant(channel, l, m)
            sums[l] += chi * chi * phi_factor * theta_base * col1[k1] * col2[k1]
    return sums


def _phase_vector(rho, l_max):
    return np.array([phase_element(rho, l) for l in range(l_max + 1)])


def s_kernel_from_rho(channel: ChannelSpec, rho: float, dir1: AngularDirection,
                      dir2: AngularDirection, l_max: int) -> complex:
    """Truncated S-kernel sum_{l <= l_max, m} A_l Y_lm(n) Y_lm(n')."""
    sums = angular_pair_sums(channel, dir1, dir2, l_max)
    return complex(np.sum(_phase_vector(rho, l_max) * sums))


def s_kernel(state: ScatteringState, dir1: AngularDirection, dir2: AngularDirection,
             l_max: int) -> complex:
    return s_kernel_from_rho(state.channel, state.rho, dir1, dir2, l_max)


def extrapolate_to_zero(xs, ys):
    """Neville polynomial extrapolation of (xs, ys) to x = 0."""
    xs = [float(x) for x in xs]
    ys = [complex(y) for y in ys]
    n = len(ys)
    for m in range(1, n):
        for i in range(n - m):
            ys[i] = ((0.0 - xs[i + m]) * ys[i] + xs[i] * ys[i + 1]) / (xs[i] - xs[i + m])
    return ys[0]


def _check_epsilons(abel_epsilons):
    eps = [float(e) for e in abel_epsilons]
    if len(eps) < 2:
        raise DomainError("need at least two damping parameters")
    if any(e <= 0.0 for e in eps):
        raise DomainError("damping parameters must be positive")
    if any(b >= a for a, b in zip(eps[:-1], eps[1:])):
        raise DomainError("damping parameters must decrease")
    return eps


def amplitude_partial_wave_detailed(state: ScatteringState, req: AmplitudeRequest,
                                    abel_epsilons=DEFAULT_ABEL_EPSILONS):
    """Abel-extrapolated partial-wave amplitude plus the damped ladder."""
    eps = _check_epsilons(abel_epsilons)
    sums = angular_pair_sums(state.channel, req.in_dir, req.out_dir, req.l_max)
    phases = _phase_vector(state.rho, req.l_max)
    ls = np.arange(req.l_max + 1)
    prefactor = 2.0 * math.pi / (1j * state.p)
    ladder = [complex(prefactor * np.sum(phases * np.exp(-e * ls) * sums)) for e in eps]
    value = extrapolate_to_zero(eps, ladder)
    detail = {"l_max": req.l_max, "abel_epsilons": eps, "damped_sums": ladder}
    return value, detail


def amplitude_partial_wave(state: ScatteringState, req: AmplitudeRequest,
                           abel_epsilons=DEFAULT_ABEL_EPSILONS) -> complex:
    """Scattering amplitude from the damped partial-wave sum (Abel limit)."""
    return amplitude_partial_wave_detailed(state, req, abel_epsilons)[0]


def _harmonic_weight(direction: AngularDirection) -> float:
    """w = sin th sqrt(cos th sin ph cos ph), the half-power weight that
    relates the channel angular functions to five-sphere harmonics."""
    th, ph = direction.theta, direction.phi
    return math.sin(th) * math.sqrt(math.cos(th) * math.sin(ph) * math.cos(ph))


def amplitude_integral_detailed(state: ScatteringState, req: AmplitudeRequest,
                                n_start: int = 64, rel_tol: float = 1e-3,
                                n_max: int = 512):
    """Triple-integral amplitude plus the quadrature doubling ladder.

    Periodic trapezoid per axis (spectrally accurate here); the grid is
    doubled from n_start until two successive values differ by less
    than rel_tol, with at least 128 points per axis.
    """
    d1, d2 = req.in_dir, req.out_dir
    th1, ph1, th2, ph2 = d1.theta, d1.phi, d2.theta, d2.phi
    c1 = math.sin(th1) * math.sin(th2) * math.sin(ph1) * math.sin(ph2)
    c2 = math.sin(th1) * math.sin(th2) * math.cos(ph1) * math.cos(ph2)
    c3 = math.cos(th1) * math.cos(th2)
    if 1.0 - (c1 + c2 + c3) <= 1e-12:
        raise DomainError("directions coincide (integrand base touches zero)")
    s = state.channel
    grid_sizes = []
    prev = None
    n = n_start
    rel = math.inf
    while n <= n_max:
        value = kernels.oscillatory_power_sum(c1, c2, c3, state.rho, s.s1, s.s2, s.s3, n)
        grid_sizes.append(n)
        if prev is not None:
            rel = abs(value - prev) / abs(value)
            if rel < rel_tol and n >= 128:
                break
        prev = value
        n *= 2
    else:
        raise EvaluationError(
            f"triple integral not converged at {n_max}^3 (rel change {rel:.2e})")
    weight = _harmonic_weight(d1) * _harmonic_weight(d2)
    prefactor = 2.0 * math.pi / (1j * state.p) * intertwiner_constant(state) * weight
    detail = {"grid_sizes": grid_sizes, "rel_change": rel}
    return prefactor * value, detail


def amplitude_integral(state: ScatteringState, req: AmplitudeRequest,
                       n_start: int = 64, rel_tol: float = 1e-3,
                       n_max: int = 512) -> complex:
    """Scattering amplitude from the triple-integral representation."""
    return amplitude_integral_detailed(state, req, n_start, rel_tol, n_max)[0]


def intertwiner_constant_from_rho(rho: float) -> complex:
    """Normalization constant of the unitary intertwining kernel.

    eta = 2^(-5/2 + i rho) Gamma(5/2 + i rho) / (pi^(5/2) Gamma(-i rho));
    rho = 0 hits the Gamma(-i rho) pole and is rejected.
    """
    if not rho > 0.0:
        raise DomainError(f"rho must be > 0, got {rho!r}")
    log_eta = ((-2.5 + 1j * rho) * math.log(2.0)
               + log_gamma_complex(complex(2.5, rho))
               - log_gamma_complex(complex(0.0, -rho))
               - 2.5 * math.log(math.pi))
    return cmath.exp(log_eta)


def intertwiner_constant(state: ScatteringState) -> complex:
    return intertwiner_constant_from_rho(state.rho)


def intertwiner_kernel(state: ScatteringState, x: float) -> complex:
    """Kernel value eta (1 - x)^(-5/2 - i rho) at x = n.n' < 1."""
    if x >= 1.0:
        raise DomainError(f"kernel argument must satisfy x < 1, got {x}")
    eta = intertwiner_constant(state)
    return eta * cmath.exp((-2.5 - 1j * state.rho) * math.log(1.0 - x))


def verify_expansion_coefficient(state: ScatteringState, l: int) -> complex:
    """Extract A_l from the kernel's Gegenbauer expansion and return it.

    Projecting eta (1 - x)^(-5/2 - i rho) on C_l^2 against the weight
    (1 - x^2)^(3/2), the endpoint factors combine into
    (1 - x)^(-1 - i rho), handled by the regularized integrator with
    smooth factor g(x) = eta C_l^2(x) (1 + x)^(3/2); the Gegenbauer
    normalization integral pi Gamma(l + 4) / (8 l! (l + 2)) and the
    expansion's (l + 2) / (2 pi^3) coefficient combine to the prefactor
    16 pi^2 l! / Gamma(l + 4).
    """
    if l < 0:
        raise DomainError(f"l must be >= 0, got {l}")
    eta = intertwiner_constant(state)

    def g(x):
        x = np.asarray(x, dtype=float)
        return eta * kernels.gegenbauer2_values(l, x) * (1.0 + x) ** 1.5

    integral = integrate_endpoint_regularized(g, state.rho)
    prefactor = 16.0 * math.pi**2 * math.exp(
        log_gamma_real(l + 1.0) - log_gamma_real(l + 4.0))
    return prefactor * integral
