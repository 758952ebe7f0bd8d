"""Vacuum and mass spectrum of a composite scalar meson with a finite compositeness scale."""
from .condensates import Condensates, condensates_forward, condensates_invert, forward_jacobian
from .errors import (
    ConsistencyError,
    ConvergenceError,
    DomainError,
    InstabilityError,
    MisuseError,
    ModelError,
    NoSolutionError,
    NoVacuumError,
    OracleRangeError,
)
from .params import FPiMode, ModelParams, RunningPoint, XiFactors, derive_fpi, running_scale, validate_params, xi_factor
from .pipeline import GridSpec, PointReport, ScanTable, Spacing, run_point, run_scan
from .potential import (
    PotentialCoeffs,
    SingletPotential,
    kinetic_constant,
    potential_coeffs,
    potential_derivatives,
    potential_value,
    singlet_potential,
)
from .report import emit_report
from .spectrum import (
    SpectrumReport,
    axial_mass_shift,
    axial_quadratic_check,
    quark_mass,
    scalar_mass,
    scalar_mass_hessian_oracle,
    vector_coupling_shift,
    width_coupling_ratio,
)
from .vacuum import (
    CubicCoefficients,
    VacuumKind,
    VacuumSolution,
    cubic_coefficients,
    find_vacuum,
    scaled_potential,
    select_vacuum,
    solve_cubic,
    vacuum_closed_form_m0,
    vacuum_closed_form_sigma0,
    vacuum_oracle_grid,
)

__version__ = "0.1.0"
