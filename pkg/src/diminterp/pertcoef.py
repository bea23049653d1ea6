"""First-order electron-repulsion coefficients at D = 1, 3 and infinity.

The D = 3 pair coefficients come from a two-parameter Coulomb integral

    G(a, b) = ∫∫ e^{-a r1} e^{-b r2} / r12  d^3r1 d^3r2
            = (4 pi)^2 / (a b (a + b)),

whose parameter derivatives K(i, j) = (-d/da)^i (-d/db)^j G generate every
matrix element over products of r^k e^{-c r} orbitals.  The derivatives are
taken symbolically once per order and cached.  The D = 1 pair values are the
delta-model rationals; the infinite-dimension values follow from the frozen
symmetric configuration of each shell pair.

An independent nested radial quadrature oracle (1/r_> kernel over the exact
radial densities) validates the D = 3 values.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import sympy as sp
from scipy.integrate import quad

from .delta1d import pair_delta_coefficient
from .errors import DomainError
from .specfun import gauss_2f1_family, log_gamma

_FOUR_PI_SQ = (4.0 * math.pi) ** 2
_MAX_DERIV_ORDER = 3


@dataclass(frozen=True)
class PairOrbitalParams:
    """Exponential screening parameters of the two orbitals in a pair
    integral (hydrogenic 1s -> 2, 2s -> 1 in reduced units)."""

    a: float
    b: float


@dataclass(frozen=True)
class PerturbCoeffs:
    """First-order repulsion coefficients of one atom at the three anchor
    dimensionalities."""

    eps1_1: float
    eps3_1: float
    epsinf_1: float


def parent_integral_G(D, a, b):
    """Two-parameter repulsion parent integral over e^{-a r1}/r1 and
    e^{-b r2}/r2 densities with a 1/r12 kernel, in D dimensions.

    At D = 3 the closed form (4 pi)^2 / (a b (a + b)) is used; for general
    D >= 2 the Gamma-prefactor / hypergeometric representation

        G_D(a, b) = N_D F(1/2, (3-D)/2; D/2; y) / ((ab)^{D-2} (a+b)),
        y = ((a - b)/(a + b))^2.
    """
    if a <= 0.0 or b <= 0.0:
        raise DomainError("screening parameters must be positive")
    if D == 3.0:
        return _FOUR_PI_SQ / (a * b * (a + b))
    if D < 2.0:
        raise DomainError(
            f"the closed form requires dimension >= 2, got {D}")
    log_nd = ((D - 1.0) * math.log(4.0 * math.pi)
              + log_gamma(D - 1.5)
              + 3.0 * log_gamma(0.5 * (D - 1.0))
              - log_gamma(D - 1.0)
              - log_gamma(0.5 * D))
    y = ((a - b) / (a + b)) ** 2
    return math.exp(log_nd) * gauss_2f1_family(D, y) \
        / ((a * b) ** (D - 2.0) * (a + b))


@lru_cache(maxsize=None)
def _k_callable(i, j):
    a, b = sp.symbols("a b", positive=True)
    G = (4 * sp.pi) ** 2 / (a * b * (a + b))
    expr = sp.simplify((-1) ** (i + j) * sp.diff(G, a, i, b, j))
    return sp.lambdify((a, b), expr, "math")


def derivative_integral_K(D, i, j, a, b):
    """Parameter derivatives (-d/da)^i (-d/db)^j of the parent integral.

    Supported at D = 3 for derivative orders i, j <= 3; the (0, 0) case
    delegates to the parent integral for any D.
    """
    if i < 0 or j < 0:
        raise DomainError("derivative orders must be non-negative")
    if i == 0 and j == 0:
        return parent_integral_G(D, a, b)
    if D != 3.0:
        raise DomainError("parameter derivatives are implemented at D = 3")
    if i > _MAX_DERIV_ORDER or j > _MAX_DERIV_ORDER:
        raise DomainError(
            f"derivative orders above {_MAX_DERIV_ORDER} are not supported")
    if a <= 0.0 or b <= 0.0:
        raise DomainError("screening parameters must be positive")
    return float(_k_callable(i, j)(a, b))


_PAIRS = (("1s", "1s"), ("1s", "2s"), ("2s", "2s"))


def _pair_key(pair):
    key = tuple(sorted(pair))
    if key not in _PAIRS:
        raise DomainError(f"unknown orbital pair {pair!r}")
    return key


def _pair_d3(key):
    K = derivative_integral_K
    if key == ("1s", "1s"):
        # <1s 1s|1/r12|1s 1s> with both exponents 2
        return K(3.0, 1, 1, 2.0, 2.0) / math.pi ** 2
    if key == ("1s", "2s"):
        # 2s radial factor (2 - r) expands the b-derivatives: 4K11-4K12+K13
        v = (4.0 * K(3.0, 1, 1, 2.0, 1.0)
             - 4.0 * K(3.0, 1, 2, 2.0, 1.0)
             + K(3.0, 1, 3, 2.0, 1.0))
        return v / (32.0 * math.pi ** 2)
    # 2s-2s: (2 - r)^2 on both sides -> coefficients (4, -4, 1)
    c = (4.0, -4.0, 1.0)
    v = 0.0
    for m in range(3):
        for n in range(3):
            v += c[m] * c[n] * K(3.0, m + 1, n + 1, 1.0, 1.0)
    return v / (1024.0 * math.pi ** 2)


def _pair_dinf(key):
    # frozen-configuration repulsion of a symmetric shell pair: electrons at
    # radius n^2 with a 90-degree opening, scaled so same-shell 1s gives
    # 1/sqrt(2); the mixed pair averages the shell radii
    if key == ("1s", "1s"):
        return 1.0 / math.sqrt(2.0)
    if key == ("2s", "2s"):
        return 1.0 / (2.0 * math.sqrt(2.0))
    # 1s-2s: radii 1 and 4 at right angles -> 1/sqrt(1 + 16) scaled by the
    # same-shell normalization, giving (2/3)*(1/sqrt 2)*(3/sqrt 10) = 5^{-1/2}
    return 1.0 / math.sqrt(5.0)


def pair_coefficient(D, pair):
    """First-order repulsion coefficient of one orbital pair at an anchor
    dimension D in {1, 3, inf} (math.inf accepted)."""
    key = _pair_key(pair)
    if D == 1 or D == 1.0:
        return pair_delta_coefficient(key)
    if D == 3 or D == 3.0:
        return _pair_d3(key)
    if D == math.inf:
        return _pair_dinf(key)
    raise DomainError(
        f"pair coefficients are tabulated at D in {{1, 3, inf}}, got {D}")


def _multiplicities(spec):
    # counts of (1s,1s), (1s,2s), (2s,2s) pairs in the occupancy
    counts = dict.fromkeys(_PAIRS, 0)
    occ = spec.occupancy
    for i in range(len(occ)):
        for j in range(i + 1, len(occ)):
            counts[tuple(sorted((occ[i], occ[j])))] += 1
    return counts


def assemble_coefficients(spec):
    """Occupancy-weighted first-order coefficient triple of an atom."""
    counts = _multiplicities(spec)
    def total(D):
        return sum(m * pair_coefficient(D, key)
                   for key, m in counts.items() if m)
    return PerturbCoeffs(eps1_1=total(1), eps3_1=total(3),
                         epsinf_1=total(math.inf))


_RADIAL_DENSITY = {
    "1s": lambda r: 4.0 * r * r * math.exp(-2.0 * r),
    "2s": lambda r: 0.125 * (2.0 - r) ** 2 * r * r * math.exp(-r),
}


def quadrature_oracle_D3(pair, upper=100.0):
    """Independent check of the D = 3 pair values: nested radial quadrature
    of the 1/r_> Coulomb kernel over the exact hydrogenic shell densities."""
    key = _pair_key(pair)
    rho1 = _RADIAL_DENSITY[key[0]]
    rho2 = _RADIAL_DENSITY[key[1]]

    def inner(r1):
        v_in, _ = quad(rho2, 0.0, r1, epsabs=1e-11, limit=200)
        v_out, _ = quad(lambda r2: rho2(r2) / r2, r1, upper,
                        epsabs=1e-11, limit=200)
        return rho1(r1) * (v_in / r1 + v_out)

    value, _ = quad(inner, 0.0, upper, epsabs=1e-9, limit=200)
    return value
