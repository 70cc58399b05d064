"""Simulator and design calculator for a levitated mesoscopic-mirror
interference experiment: reflected double-slit patterns for arbitrary
mirror position densities, measurement-induced density truncation, the
thermal/gas feasibility envelope and the magnetic levitation trap."""

from .config import (Config, EnvironmentSpec, ExperimentGeometry, MirrorSpec,
                     default_config, default_environment, default_geometry,
                     default_mirror, validate_config)
from .constants import CGS, AVOGADRO, PhysicalConstants
from .feasibility import (CollisionBudget, FeasibilityReport,
                          collision_constraint, energy_budget,
                          feasibility_report, folded_spreading_velocity,
                          gas_temperature_limit, phonon_cutoff,
                          phonon_mode_frequency, radiation_temperature,
                          thermal_velocity)
from .geometry import (PathPair, pl_delta, probe_resolution,
                       recoil_displacement, round_trip_path,
                       solve_slit_separation)
from .interference import (ComparisonReport, NodeMetrics, Pattern,
                           bifurcated_center_phase, compare_densities,
                           field_from_slit, node_metrics, pattern,
                           pattern_to_csv, write_pattern_csv)
from .quadrature import QuadratureSettings
from .trap import (ReleaseCheck, TrapDesign, design_trap, em_force,
                   grad_product_check, release_check)
from .wavepacket import (Bifurcated, Delta, Gaussian, Tabulated,
                         TruncatedGaussian, density_value, sigma_at_time,
                         spb_velocity, spread_time, spreading_velocity,
                         support, tabulated_from_csv, trap_spring_constant,
                         truncate)

__version__ = "0.1.0"
