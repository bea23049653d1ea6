"""Derivative-free multi-start minimizer.

A Nelder-Mead simplex search run in unconstrained internal coordinates.
Per-coordinate transforms keep radii positive (exponential map) and direction
cosines inside (-1, 1) (tanh map).  Restarts draw their perturbations from
independent seed streams, so the best value over the first k restarts does
not depend on how many restarts follow.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonConvergenceError

POSITIVE = "positive"   # x = exp(u)
INTERVAL = "interval"   # x = tanh(u), open (-1, 1)
FREE = "free"           # x = u


def to_physical(u, transforms):
    x = np.empty_like(u)
    for i, t in enumerate(transforms):
        if t == POSITIVE:
            x[i] = math.exp(u[i])
        elif t == INTERVAL:
            x[i] = math.tanh(u[i])
        else:
            x[i] = u[i]
    return x


def to_internal(x, transforms):
    u = np.empty(len(x))
    for i, t in enumerate(transforms):
        if t == POSITIVE:
            u[i] = math.log(x[i])
        elif t == INTERVAL:
            u[i] = math.atanh(x[i])
        else:
            u[i] = x[i]
    return u


@dataclass
class OptimProblem:
    """Objective over physical coordinates plus the feasibility transforms."""

    dimension: int
    objective: callable
    transforms: tuple
    initial_point: np.ndarray          # physical coordinates
    perturbation_scale: float = 0.3    # internal-coordinate restart jitter

    def internal_objective(self):
        transforms = self.transforms
        objective = self.objective

        def g(u):
            v = objective(to_physical(u, transforms))
            if not np.isfinite(v):
                return np.inf
            return v

        return g


@dataclass
class OptimReport:
    best_point: np.ndarray
    best_value: float
    restarts_used: int
    converged: bool
    gradient_norm_fd: float = field(default=np.nan)


def _nelder_mead(g, u0, step, tol, max_iter):
    """Standard simplex search; stops when the simplex diameter drops below
    tol.  Returns (best vertex, best value, converged flag)."""
    n = len(u0)
    simplex = [np.array(u0, dtype=float)]
    for i in range(n):
        v = np.array(u0, dtype=float)
        v[i] += step
        simplex.append(v)
    fvals = [g(v) for v in simplex]

    for _ in range(max_iter):
        order = np.argsort(fvals, kind="stable")
        simplex = [simplex[k] for k in order]
        fvals = [fvals[k] for k in order]

        diameter = max(np.max(np.abs(v - simplex[0])) for v in simplex[1:])
        if diameter < tol:
            return simplex[0], fvals[0], True

        centroid = np.mean(simplex[:-1], axis=0)
        worst = simplex[-1]
        refl = centroid + (centroid - worst)
        f_refl = g(refl)
        if f_refl < fvals[0]:
            exp_p = centroid + 2.0 * (centroid - worst)
            f_exp = g(exp_p)
            if f_exp < f_refl:
                simplex[-1], fvals[-1] = exp_p, f_exp
            else:
                simplex[-1], fvals[-1] = refl, f_refl
        elif f_refl < fvals[-2]:
            simplex[-1], fvals[-1] = refl, f_refl
        else:
            if f_refl < fvals[-1]:
                contr = centroid + 0.5 * (refl - centroid)
            else:
                contr = centroid + 0.5 * (worst - centroid)
            f_contr = g(contr)
            if f_contr < min(f_refl, fvals[-1]):
                simplex[-1], fvals[-1] = contr, f_contr
            else:
                # shrink toward best
                for k in range(1, n + 1):
                    simplex[k] = simplex[0] + 0.5 * (simplex[k] - simplex[0])
                    fvals[k] = g(simplex[k])
    return simplex[0], fvals[0], False


def _fd_gradient_norm(g, u, h=1e-6):
    grad = np.empty(len(u))
    for i in range(len(u)):
        up = np.array(u)
        um = np.array(u)
        up[i] += h
        um[i] -= h
        grad[i] = (g(up) - g(um)) / (2.0 * h)
    return float(np.linalg.norm(grad))


def minimize(problem, seed=0, restarts=16, tol=1e-10, gradient_tol=1e-6,
             max_iter=20000, extra_starts=()):
    """Best point over all restarts; deterministic for fixed arguments.

    extra_starts: physical points tried before the randomized restarts
    (warm starts), sharing the restart budget accounting.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    g = problem.internal_objective()
    u_base = to_internal(np.asarray(problem.initial_point, float),
                         problem.transforms)

    starts = [to_internal(np.asarray(p, float), problem.transforms)
              for p in extra_starts]
    starts.append(u_base)
    for k in range(1, restarts):
        rng = np.random.default_rng([seed, k])
        starts.append(u_base + rng.uniform(
            -problem.perturbation_scale, problem.perturbation_scale,
            size=len(u_base)))

    best_u, best_f = None, np.inf
    any_finite = False
    for u0 in starts:
        if not np.isfinite(g(u0)):
            continue
        any_finite = True
        u, f, _ = _nelder_mead(g, u0, 0.25, tol, max_iter)
        # polish with progressively smaller fresh simplices to escape stalls
        for step in (1e-2, 1e-4):
            u, f, _ = _nelder_mead(g, u, step, tol, max_iter)
        if f < best_f:
            best_u, best_f = u, f
    if not any_finite or best_u is None:
        raise NonConvergenceError(
            "objective not finite at any restart initial point")

    gnorm = _fd_gradient_norm(g, best_u)
    return OptimReport(
        best_point=to_physical(best_u, problem.transforms),
        best_value=best_f,
        restarts_used=restarts,
        converged=bool(gnorm <= gradient_tol),
        gradient_norm_fd=gnorm,
    )
