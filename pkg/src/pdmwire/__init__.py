"""Exactly solvable quantum wire with a power-law position-dependent mass.

Closed-form spectra and wavefunctions for a 2-D harmonic wire whose mass
profile is m(ρ) = m0 (λ0 ρ)^{2a}, in two confinement branches:

* canonical: free angular motion, states labeled (n, m);
* non-canonical: a Pöschl–Teller-type angular confinement of strength γ
  that splits each level into even/odd parity branches and pins the
  density nodes to the four angles φ = 0, π/2, π, 3π/2.

`oracle` and `verification` certify every closed form numerically; the
`pdmwire` command line exposes spectra, traces, density rasters, and the
verification sweep.
"""
from .model import ModelParams, QuantumNumbers, make_params, mass_at, potential_at
from .canonical import (
    CanonicalState,
    angular,
    axial,
    canonical_state,
    density,
    dimensionless_eigenvalue,
    energy_radial,
    energy_total,
    norm_coeff,
    radial_wavefunction,
    total_wavefunction,
)
from .noncanonical import (
    NoncanonicalState,
    angular_even,
    angular_odd,
    density_nc,
    dimensionless_eigenvalue_nc,
    energy_even,
    energy_odd,
    m_eff,
    noncanonical_state,
    radial_even,
    radial_odd,
    total_wavefunction_nc,
)
from .fields import (
    DensityField,
    angular_trace,
    build_density_field,
    potential_trace,
    radial_trace,
    riemann_mass,
)
from .oracle import (
    ResidualReport,
    TridiagonalOperator,
    build_radial_operator,
    limit_sweep_a_to_zero,
    lowest_eigenvalues,
    orthonormality_matrix,
    residual_angular,
    residual_radial,
)
from .verification import run_verification

__version__ = "0.1.0"

__all__ = [
    "ModelParams", "QuantumNumbers", "make_params", "mass_at", "potential_at",
    "CanonicalState", "canonical_state", "energy_radial", "energy_total",
    "dimensionless_eigenvalue", "norm_coeff", "radial_wavefunction", "angular",
    "axial", "total_wavefunction", "density",
    "NoncanonicalState", "noncanonical_state", "m_eff", "energy_even",
    "energy_odd", "dimensionless_eigenvalue_nc", "angular_even", "angular_odd",
    "radial_even", "radial_odd", "total_wavefunction_nc", "density_nc",
    "DensityField", "build_density_field", "riemann_mass", "radial_trace",
    "angular_trace", "potential_trace",
    "TridiagonalOperator", "ResidualReport", "build_radial_operator",
    "lowest_eigenvalues", "residual_radial", "residual_angular",
    "orthonormality_matrix", "limit_sweep_a_to_zero",
    "run_verification",
    "__version__",
]
