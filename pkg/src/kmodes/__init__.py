"""kmodes: closed-form parametric oscillator modes with complex gain/loss coupling.

A numerical library and CLI built around a self-contained complex Gauss
hypergeometric engine, with every closed form certified against an
independent adaptive ODE integration oracle.
"""

from .applications import (
    ScarfSpec,
    SchumannSpec,
    TwoBeamSpec,
    WaveguideSpec,
    riccati_index_check,
    scarf_basis,
    scarf_coefficient,
    scarf_residual,
    scarf_solution,
    schumann_shift,
    two_beam_profile,
    waveguide_profiles,
)
from .errors import (
    ConvergenceError,
    CouplingError,
    DegenerateParameterError,
    DivergenceError,
    DomainError,
    GridError,
    IntegrationError,
    KmodesError,
    NumericalError,
    PoleError,
    SingularityError,
    ValidationError,
)
from .hypergeom import (
    EvalOptions,
    HypParams,
    cpow_principal,
    hyp2f1,
    hyp2f1_deriv,
    lngamma,
)
from .multi_k import (
    MultiKSpec,
    OmegaParams,
    coeff_z,
    gauge_factor,
    omega_params,
    potential_coefficient_gap,
    potential_q,
    w_from_z,
    z_basis,
    z_mode,
)
from .oscillator import (
    OscillatorSpec,
    SingularityMask,
    classical_mode,
    factorization_residual,
    fermionic_freq_sq,
    fermionic_zero_mode,
    riccati_particular,
    spinor_pair,
)
from .single_k import (
    DerivedParams,
    ModeConstants,
    SingleKSpec,
    bosonic_basis,
    bosonic_mode,
    bosonic_mode_small_k,
    bosonic_mode_zero_k_limit,
    coeff_bosonic,
    coeff_fermionic,
    derived_params,
    fermionic_from_coupling,
    fermionic_reciprocal,
    z_variables,
)
from .verify import (
    ComplexSeries,
    IntegratorOptions,
    ResidualReport,
    TimeGrid,
    compare_series,
    integrate_second_order,
    integrate_to,
    ode_residual,
    wronskian,
)

__version__ = "1.0.0"
