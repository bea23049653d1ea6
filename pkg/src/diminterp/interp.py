"""Dimensional interpolation of ground-state energies.

The reduced D = 3 energy is estimated from the exactly solvable D = 1 and
D -> infinity limits plus a first-order coupling correction:

    eps3 = (1/3) eps1 + (2/3) epsinf
           + [eps3' - (1/3) eps1' - (2/3) epsinf'] * lam,

where the primed quantities are the first-order repulsion coefficients and
lam = 1/Z.  A one-dimensional subformula estimates eps1 itself from the
infinite-dimension limit when no exact D = 1 value is available.  For H2 the
same weights act through coordinate scaling: the D = 1 energy is taken at
R/3 and the infinite-dimension energy at 2R/3.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import delta1d, pertcoef
from .delta1d import AtomSpec, h2_epsilon1, optimize_xi
from .errors import DomainError
from .large_d import (OptimSettings, minimize_atom, minimize_h2,
                      minimize_h2_rescaled)

EPS1_WEIGHT = 1.0 / 3.0
EPSINF_WEIGHT = 2.0 / 3.0

# exact two-electron delta-model ground state, used for He instead of the
# single-parameter variational bound
EXACT_EPS1_HE = -0.788843

EPS1_SOURCES = ("exact_constant", "variational_1d", "subformula")


@dataclass(frozen=True)
class AtomInterpolationInput:
    """Everything the atomic interpolation formula consumes."""

    eps1: float
    epsinf: float
    eps1_1: float
    eps3_1: float
    epsinf_1: float
    lam: float
    source_eps1: str = "variational_1d"


@dataclass(frozen=True)
class AtomInterpolationResult:
    eps3: float
    inputs: AtomInterpolationInput


def atom_epsilon3(inputs):
    """Interpolated reduced D = 3 energy from limit energies and first-order
    coefficients."""
    correction = (inputs.eps3_1
                  - EPS1_WEIGHT * inputs.eps1_1
                  - EPSINF_WEIGHT * inputs.epsinf_1)
    eps3 = (EPS1_WEIGHT * inputs.eps1
            + EPSINF_WEIGHT * inputs.epsinf
            + correction * inputs.lam)
    return AtomInterpolationResult(eps3=eps3, inputs=inputs)


def one_dim_subformula(epsinf, eps1_1, epsinf_1, lam):
    """Estimate of the D = 1 limit energy from the infinite-dimension limit:
    eps1 ~ epsinf + (eps1' - epsinf') lam."""
    return epsinf + (eps1_1 - epsinf_1) * lam


def prepare_atom_inputs(spec, settings=OptimSettings(), source_eps1=None):
    """Assemble interpolation inputs for a built-in atom.

    source_eps1 defaults to the exact two-electron constant for He and the
    closed-form variational bound for Li and Be; "subformula" derives eps1
    from the infinite-dimension limit instead.
    """
    if source_eps1 is None:
        source_eps1 = "exact_constant" if spec.element == "He" \
            else "variational_1d"
    if source_eps1 not in EPS1_SOURCES:
        raise DomainError(f"unknown eps1 source {source_eps1!r}")
    coeffs = pertcoef.assemble_coefficients(spec)
    epsinf, _, _ = minimize_atom(spec, settings)
    if source_eps1 == "exact_constant":
        if spec.element != "He":
            raise DomainError(
                "the exact D = 1 constant is only available for He")
        eps1 = EXACT_EPS1_HE
    elif source_eps1 == "variational_1d":
        eps1 = optimize_xi(spec).epsilon1
    else:
        eps1 = one_dim_subformula(epsinf, coeffs.eps1_1, coeffs.epsinf_1,
                                  spec.lam)
    return AtomInterpolationInput(
        eps1=eps1, epsinf=epsinf,
        eps1_1=coeffs.eps1_1, eps3_1=coeffs.eps3_1,
        epsinf_1=coeffs.epsinf_1,
        lam=spec.lam, source_eps1=source_eps1)


def interpolate_atom(spec, settings=OptimSettings(), source_eps1=None):
    """End-to-end interpolated reduced D = 3 energy of a built-in atom."""
    return atom_epsilon3(prepare_atom_inputs(spec, settings, source_eps1))


def to_hartree(eps, Z, D=3.0):
    """Convert a reduced energy to hartree: E = (Z / beta)^2 eps with
    beta = (D - 1)/2."""
    if D <= 1.0:
        raise DomainError(f"conversion requires dimension > 1, got {D}")
    beta = 0.5 * (D - 1.0)
    return (Z / beta) ** 2 * eps


def h2_epsilon3(R, settings=OptimSettings(), warm_start=None):
    """Interpolated D = 3 electronic energy of H2 at internuclear distance R:
    (1/3) eps1(R/3) + (2/3) epsinf(2R/3).

    Returns (eps3, geometry) with the infinite-dimension minimizing geometry
    for warm-starting neighbouring distances.
    """
    if R <= 0.0:
        raise DomainError(f"internuclear distance must be positive, got {R}")
    e_inf, geometry, _ = minimize_h2(2.0 * R / 3.0, settings,
                                     warm_start=warm_start)
    eps3 = EPS1_WEIGHT * h2_epsilon1(R / 3.0) + EPSINF_WEIGHT * e_inf
    return eps3, geometry


def h2_epsilon3_rescaled(R, settings=OptimSettings()):
    """Verification route for h2_epsilon3 using the explicitly rescaled
    infinite-dimension form minimized at R itself."""
    if R <= 0.0:
        raise DomainError(f"internuclear distance must be positive, got {R}")
    e_resc, _, _ = minimize_h2_rescaled(R, settings)
    return EPS1_WEIGHT * h2_epsilon1(R / 3.0) + EPSINF_WEIGHT * e_resc


@dataclass(frozen=True)
class PotentialCurve:
    """H2 potential curve on a distance grid.  binding includes the nuclear
    repulsion: binding = eps3 + 1/R."""

    R: np.ndarray
    eps1_scaled: np.ndarray    # (1/3) eps1(R/3) contribution
    epsinf_scaled: np.ndarray  # (2/3) epsinf(2R/3) contribution
    eps3: np.ndarray
    binding: np.ndarray


def build_curve(r_min, r_max, n_points, settings=OptimSettings()):
    """H2 potential curve on a uniform grid, warm-starting each point from
    its left neighbour's optimal geometry."""
    if not 0.0 < r_min <= r_max:
        raise DomainError("require 0 < r_min <= r_max")
    if n_points < 1:
        raise DomainError("n_points must be >= 1")
    if n_points == 1 and r_min != r_max:
        raise DomainError("a single-point grid requires r_min == r_max")
    grid = np.linspace(r_min, r_max, n_points)
    e1 = np.empty(n_points)
    einf = np.empty(n_points)
    geometry = None
    for k, R in enumerate(grid):
        e_inf, geometry, _ = minimize_h2(2.0 * R / 3.0, settings,
                                         warm_start=geometry)
        e1[k] = EPS1_WEIGHT * h2_epsilon1(R / 3.0)
        einf[k] = EPSINF_WEIGHT * e_inf
    eps3 = e1 + einf
    return PotentialCurve(R=grid, eps1_scaled=e1, epsinf_scaled=einf,
                          eps3=eps3, binding=eps3 + 1.0 / grid)
