"""Dressed-state dynamics of a spin-1/2 in a circularly polarized drive.

Exact two-level Floquet solutions, radiative decay between the dressed
states, rectangular-pulse spin-flip probabilities, direct TDSE checks, and
(H0, tau0) parameter sweeps with a small command-line front end.
"""

__version__ = "0.1.0"

from .errors import (ConfigError, DomainError, GridResolutionError,
                     IntegrationError, UnitError)
from .units import (CONSTANTS, CODATA2018, PhysicalConstants, ReducedParams,
                    convert, photon_energy_to_omega, reduced_drive_strength,
                    reduced_params, reference_decay_rate)
from .floquet import (DriveField, FloquetSolution, Spinor, drive_field_at,
                      floquet_state, schrodinger_residual, solve_floquet)
from .decay import (ApplicabilityVerdict, DecayModel, SurvivalTrajectory,
                    applicability_check, decay_rate, emission_probability,
                    memory_kernel_evolution)
from .pulse import (FlipResult, PulseSpec, ScenarioBreakdown,
                    evolve_through_pulse, flip_anisotropy, flip_probability,
                    flip_result, induced_spin, projection_coefficients,
                    reverse_helicity, scenario_composition)
from .tdse import (IntegratorSettings, McFlipEstimate, Trajectory,
                   flip_probability_tdse, integrate_tdse, monte_carlo_flip,
                   quasienergies_from_monodromy)
from .sweep import (SweepConfig, SweepRow, SweepTable, SWEEP_COLUMNS,
                    load_config, read_csv, read_json, run_sweep, write_outputs)

__all__ = [
    "__version__",
    "ConfigError", "DomainError", "GridResolutionError", "IntegrationError",
    "UnitError",
    "CONSTANTS", "CODATA2018", "PhysicalConstants", "ReducedParams",
    "convert", "photon_energy_to_omega", "reduced_drive_strength",
    "reduced_params", "reference_decay_rate",
    "DriveField", "FloquetSolution", "Spinor", "drive_field_at",
    "floquet_state", "schrodinger_residual", "solve_floquet",
    "ApplicabilityVerdict", "DecayModel", "SurvivalTrajectory",
    "applicability_check", "decay_rate", "emission_probability",
    "memory_kernel_evolution",
    "FlipResult", "PulseSpec", "ScenarioBreakdown", "evolve_through_pulse",
    "flip_anisotropy", "flip_probability", "flip_result", "induced_spin",
    "projection_coefficients", "reverse_helicity", "scenario_composition",
    "IntegratorSettings", "McFlipEstimate", "Trajectory",
    "flip_probability_tdse", "integrate_tdse", "monte_carlo_flip",
    "quasienergies_from_monodromy",
    "SweepConfig", "SweepRow", "SweepTable", "SWEEP_COLUMNS", "load_config",
    "read_csv", "read_json", "run_sweep", "write_outputs",
]
