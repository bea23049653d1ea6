"""Ground-state energies of few-electron atoms and H2 by dimensional
interpolation between the exactly solvable D = 1 and D -> infinity limits.
"""

from ._accel import NUMBA_ENABLED
from .delta1d import (BE, HE, LI, AtomSpec, VariationalResult1D, atom,
                      delta_pair_values, energy_quadratic, h2_epsilon1,
                      optimize_xi, pair_delta_coefficient)
from .errors import DomainError, NonConvergenceError
from .interp import (AtomInterpolationInput, AtomInterpolationResult,
                     PotentialCurve, atom_epsilon3, build_curve,
                     h2_epsilon3, h2_epsilon3_rescaled, interpolate_atom,
                     one_dim_subformula, prepare_atom_inputs, to_hartree)
from .large_d import (AtomGeometry, H2Geometry, OptimSettings,
                      atom_effective_energy, gram_factor_polynomial,
                      gram_ratio, h2_effective_energy, minimize_atom,
                      minimize_h2, minimize_h2_rescaled)
from .pertcoef import (PairOrbitalParams, PerturbCoeffs,
                       assemble_coefficients, derivative_integral_K,
                       pair_coefficient, parent_integral_G,
                       quadrature_oracle_D3)
from .specfun import Dimension, f_universal, gauss_2f1_family, log_gamma

__version__ = "1.0.0"

__all__ = [
    "NUMBA_ENABLED", "__version__",
    "AtomSpec", "VariationalResult1D", "HE", "LI", "BE", "atom",
    "delta_pair_values", "energy_quadratic", "h2_epsilon1", "optimize_xi",
    "pair_delta_coefficient",
    "DomainError", "NonConvergenceError",
    "AtomInterpolationInput", "AtomInterpolationResult", "PotentialCurve",
    "atom_epsilon3", "build_curve", "h2_epsilon3", "h2_epsilon3_rescaled",
    "interpolate_atom", "one_dim_subformula", "prepare_atom_inputs",
    "to_hartree",
    "AtomGeometry", "H2Geometry", "OptimSettings", "atom_effective_energy",
    "gram_factor_polynomial", "gram_ratio", "h2_effective_energy",
    "minimize_atom", "minimize_h2", "minimize_h2_rescaled",
    "PairOrbitalParams", "PerturbCoeffs", "assemble_coefficients",
    "derivative_integral_K", "pair_coefficient", "parent_integral_G",
    "quadrature_oracle_D3",
    "Dimension", "f_universal", "gauss_2f1_family", "log_gamma",
]
