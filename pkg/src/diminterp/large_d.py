"""Infinite-dimension effective energy surfaces and their minimization.

In the large-dimension limit the electrons freeze into a rigid configuration
described by radii and inter-electron direction cosines (atoms) or by
cylindrical coordinates about the molecular axis (H2).  The reduced ground
state energy is the global minimum of an effective potential; centrifugal
terms carry a Gramian ratio of the cosine matrix.

Two variants of that Gramian weight are supported:

* ``"exact"`` — the minor/determinant ratio of the full cosine Gramian
  (the default), and
* ``"polynomial"`` — a truncated polynomial factor shared by all electrons,
  matching the form used in some published tables.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from . import kernels
from .delta1d import AtomSpec
from .errors import DomainError
from .optim import FREE, INTERVAL, POSITIVE, OptimProblem, minimize

_SHELL_N = {"1s": 1, "2s": 2}


@dataclass(frozen=True)
class OptimSettings:
    """Knobs for the multi-start minimizations."""

    seed: int = 0
    restarts: int = 16
    tol: float = 1e-10
    gramian: str = "exact"

    def __post_init__(self):
        if self.gramian not in ("exact", "polynomial"):
            raise DomainError(f"unknown gramian variant {self.gramian!r}")
        if self.restarts < 1:
            raise DomainError("restarts must be >= 1")


@dataclass(frozen=True)
class AtomGeometry:
    """Frozen large-dimension atomic configuration: electron radii and the
    unit-diagonal matrix of inter-electron direction cosines."""

    radii: tuple
    cosines: tuple  # flattened upper triangle, row-major

    def cosine_matrix(self):
        n = len(self.radii)
        G = np.eye(n)
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                G[i, j] = G[j, i] = self.cosines[k]
                k += 1
        return G

    def is_feasible(self):
        """True when the cosine Gramian is positive definite."""
        return bool(kernels.is_pos_def(self.cosine_matrix()))


@dataclass(frozen=True)
class H2Geometry:
    """Frozen large-dimension H2 configuration in cylindrical coordinates:
    per-electron distances from the axis, axial positions, the dihedral angle
    between the electron half-planes, and the nuclear half-separation a."""

    rho1: float
    rho2: float
    z1: float
    z2: float
    phi: float
    a: float


def gram_ratio(cosines, i):
    """Principal-minor / determinant ratio of the cosine Gramian for
    electron i (the exact centrifugal weight)."""
    G = np.asarray(cosines, dtype=float)
    if not kernels.is_pos_def(G):
        raise DomainError("cosine matrix is not positive definite")
    return float(kernels.principal_minor(G, i) / kernels.det_small(G))


def gram_factor_polynomial(cosines):
    """Shared polynomial centrifugal factor (pair squares, triangle products
    and, for four electrons, four-body corrections)."""
    return float(kernels.gram_factor_poly(np.asarray(cosines, dtype=float)))


def _shell_n2(spec):
    return np.array([float(_SHELL_N[o] ** 2) for o in spec.occupancy])


def atom_effective_energy(spec, geometry, variant="exact"):
    """Reduced effective energy of an atomic configuration; inf when the
    configuration is infeasible."""
    if variant not in ("exact", "polynomial"):
        raise DomainError(f"unknown gramian variant {variant!r}")
    r = np.asarray(geometry.radii, dtype=float)
    G = geometry.cosine_matrix()
    return float(kernels.atom_energy(r, G, _shell_n2(spec), spec.lam,
                                     variant == "polynomial"))


def _atom_geometry_from_vector(n, x):
    return AtomGeometry(radii=tuple(x[:n]), cosines=tuple(x[n:]))


def minimize_atom(spec, settings=OptimSettings()):
    """Global minimum of the effective atomic energy.

    Returns (eps_inf, AtomGeometry, OptimReport).
    """
    n = len(spec.occupancy)
    npair = n * (n - 1) // 2
    n2 = _shell_n2(spec)
    lam = spec.lam
    use_poly = settings.gramian == "polynomial"
    energy = kernels.atom_energy

    def objective(x):
        r = np.ascontiguousarray(x[:n])
        G = np.eye(n)
        k = n
        for i in range(n):
            for j in range(i + 1, n):
                G[i, j] = G[j, i] = x[k]
                k += 1
        return energy(r, G, n2, lam, use_poly)

    x0 = np.concatenate([n2.copy(), np.full(npair, -0.1)])
    problem = OptimProblem(
        dimension=n + npair,
        objective=objective,
        transforms=(POSITIVE,) * n + (INTERVAL,) * npair,
        initial_point=x0,
    )
    report = minimize(problem, seed=settings.seed, restarts=settings.restarts,
                      tol=settings.tol)
    geometry = _atom_geometry_from_vector(n, report.best_point)
    return report.best_value, geometry, report


def h2_effective_energy(geometry, symmetry="antisymmetric"):
    """Reduced electronic effective energy of an H2 configuration (no
    nuclear repulsion).  For the antisymmetric branch the axial positions
    must mirror each other (z2 = -z1)."""
    g = geometry
    if g.a < 0.0:
        raise DomainError("nuclear half-separation must be >= 0")
    if not 0.0 < g.phi < math.pi:
        raise DomainError("dihedral angle must lie strictly in (0, pi)")
    if abs(g.rho2 - g.rho1) > 1e-12:
        raise DomainError("both branches require rho1 = rho2")
    if symmetry == "antisymmetric":
        if abs(g.z2 + g.z1) > 1e-12:
            raise DomainError(
                "antisymmetric configurations require z2 = -z1")
    elif symmetry == "symmetric":
        if abs(g.z2 - g.z1) > 1e-12:
            raise DomainError("symmetric configurations require z2 = z1")
    else:
        raise DomainError(f"unknown symmetry {symmetry!r}")
    return float(kernels.h2_energy(g.rho1, g.rho2, g.z1, g.z2,
                                   math.cos(g.phi), g.a))


def minimize_h2(R, settings=OptimSettings(), symmetry="antisymmetric",
                warm_start=None):
    """Minimum reduced electronic energy of H2 at internuclear distance R.

    The antisymmetric branch (electrons mirrored through the midplane) is
    the ground configuration at every distance; the symmetric branch is kept
    for comparison.  Returns (eps_inf, H2Geometry, OptimReport).
    warm_start: an H2Geometry used as an additional starting point.
    """
    if R <= 0.0:
        raise DomainError(f"internuclear distance must be positive, got {R}")
    a = 0.5 * R
    energy = kernels.h2_energy

    if symmetry == "antisymmetric":
        # variables: rho, z, cos(phi); rho2 = rho1, z2 = -z1
        def objective(x):
            return energy(x[0], x[0], x[1], -x[1], x[2], a)

        sign = -1.0
    elif symmetry == "symmetric":
        # variables: rho, z, cos(phi); rho2 = rho1, z2 = z1
        def objective(x):
            return energy(x[0], x[0], x[1], x[1], x[2], a)

        sign = 1.0
    else:
        raise DomainError(f"unknown symmetry {symmetry!r}")

    transforms = (POSITIVE, FREE, INTERVAL)
    x0 = np.array([1.0, -min(a, 1.0), -0.2])

    def unpack(x):
        return H2Geometry(rho1=x[0], rho2=x[0], z1=x[1], z2=sign * x[1],
                          phi=math.acos(x[2]), a=a)

    def pack(g):
        return np.array([g.rho1, g.z1, math.cos(g.phi)])

    extra = ()
    if warm_start is not None:
        g = replace(warm_start, a=a)
        extra = (pack(g),)
    problem = OptimProblem(
        dimension=len(x0),
        objective=objective,
        transforms=transforms,
        initial_point=x0,
    )
    report = minimize(problem, seed=settings.seed, restarts=settings.restarts,
                      tol=settings.tol, extra_starts=extra)
    return report.best_value, unpack(report.best_point), report


def minimize_h2_rescaled(R, settings=OptimSettings()):
    """Minimum of the rescaled antisymmetric H2 form at distance R.

    This form carries explicit 9/4, 3, 3/2 prefactors; its minimum equals
    the plain antisymmetric minimum evaluated at distance 2R/3, which makes
    it an independent check of the interpolation weights.
    Returns (value, (rho, z, phi), report).
    """
    if R <= 0.0:
        raise DomainError(f"internuclear distance must be positive, got {R}")
    a = 0.5 * R
    energy = kernels.h2_energy_rescaled

    def objective(x):
        return energy(x[0], x[1], x[2], a)

    problem = OptimProblem(
        dimension=3,
        objective=objective,
        transforms=(POSITIVE, FREE, INTERVAL),
        initial_point=np.array([1.0, -min(a, 1.0), -0.2]),
    )
    report = minimize(problem, seed=settings.seed, restarts=settings.restarts,
                      tol=settings.tol)
    x = report.best_point
    return report.best_value, (x[0], x[1], math.acos(x[2])), report
