"""Analytic solution of a non-central Kepler-Coulomb Hamiltonian.

The Hamiltonian (units hbar = m = 1)

    H = -1/2 nabla^2 - gamma / r + (s1^2 - 1/4) / (2 x^2)
        + (s2^2 - 1/4) / (2 y^2) + (s3^2 - 1/4) / (2 z^2)

is solved in closed form on the open octant: bound-state energies,
degeneracies and normalized wavefunctions, and for E > 0 the
partial-wave S-matrix and scattering amplitude.  Every closed-form
result ships with an independent numerical verification (quadrature,
finite differences, brute-force enumeration); see the validate CLI
subcommand and the test suite.
"""

from .errors import (CapacityError, ConstraintError, DomainError, EvaluationError,
                     GeometryError, NCKeplerError, NoStateError)
from .kernels import BACKEND
from .operators import (StencilConfig, apply_angular_invariant, apply_azimuthal_invariant,
                        apply_hamiltonian)
from .quadrature import (QuadratureRule, build_rule, integrate_endpoint_regularized,
                         integrate_nd)
from .scattering import (AmplitudeRequest, ScatteringState, amplitude_integral,
                         amplitude_partial_wave, intertwiner_constant, intertwiner_kernel,
                         make_scattering_state, partial_wave_element, s_kernel,
                         verify_expansion_coefficient)
from .spectrum import (BoundState, ChannelSpec, QuantumNumbers, bound_energy, degeneracy,
                       enumerate_states, make_bound_state)
from .wavefields import (AngularDirection, RadialPoint, angular_norm_constant,
                         angular_wavefunction, full_wavefunction, radial_norm_constant,
                         radial_wavefunction)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    "NCKeplerError", "DomainError", "ConstraintError", "NoStateError",
    "GeometryError", "CapacityError", "EvaluationError",
    "ChannelSpec", "QuantumNumbers", "BoundState",
    "bound_energy", "degeneracy", "enumerate_states", "make_bound_state",
    "AngularDirection", "RadialPoint",
    "radial_norm_constant", "radial_wavefunction",
    "angular_norm_constant", "angular_wavefunction", "full_wavefunction",
    "QuadratureRule", "build_rule", "integrate_nd", "integrate_endpoint_regularized",
    "StencilConfig", "apply_hamiltonian",
    "apply_angular_invariant", "apply_azimuthal_invariant",
    "ScatteringState", "AmplitudeRequest", "make_scattering_state",
    "partial_wave_element", "s_kernel", "amplitude_partial_wave",
    "amplitude_integral", "intertwiner_constant", "intertwiner_kernel",
    "verify_expansion_coefficient",
]
