"""One-dimensional delta-function models.

In the D=1 limit the Coulomb interactions collapse to Dirac deltas in scaled
coordinates.  With a product of exponential orbitals sharing one screening
parameter xi, the variational energy of each atom is an exact quadratic
A xi^2 - B xi, so the optimum is closed form.  The quadratic coefficients are
kept as exact rationals; every six-decimal reference value then falls out to
machine precision.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

_F = Fraction


@dataclass(frozen=True)
class AtomSpec:
    """Element identity, nuclear charge and orbital occupancy."""

    element: str
    Z: int
    occupancy: tuple

    def __post_init__(self):
        if self.element not in ("He", "Li", "Be"):
            raise DomainError(f"unsupported element {self.element!r}")
        if len(self.occupancy) != {"He": 2, "Li": 3, "Be": 4}[self.element]:
            raise DomainError("occupancy length does not match electron count")

    @property
    def lam(self):
        return 1.0 / self.Z

    @property
    def lam_exact(self):
        return _F(1, self.Z)


HE = AtomSpec("He", 2, ("1s", "1s"))
LI = AtomSpec("Li", 3, ("1s", "1s", "2s"))
BE = AtomSpec("Be", 4, ("1s", "1s", "2s", "2s"))

_BY_ELEMENT = {"He": HE, "Li": LI, "Be": BE}


def atom(element):
    """Look up the built-in AtomSpec for 'He', 'Li' or 'Be' (case-insensitive)."""
    key = element.capitalize()
    if key not in _BY_ELEMENT:
        raise DomainError(f"unknown element {element!r}")
    return _BY_ELEMENT[key]


@dataclass(frozen=True)
class VariationalResult1D:
    """Optimal screening parameter and the resulting reduced energy."""

    xi0: float
    epsilon1: float


# quadratic model H(xi) = A xi^2 - (B0 - B1*lam) xi, exact rationals:
#   He: xi^2 - 2 xi + lam xi/2
#   Li: (57/40) xi^2 - (11/5) xi + lam (19/30) xi
#   Be: (37/20) xi^2 - (12/5) xi + lam (2053/2400) xi
_QUADRATIC = {
    "He": (_F(1), _F(2), _F(1, 2)),
    "Li": (_F(57, 40), _F(11, 5), _F(19, 30)),
    "Be": (_F(37, 20), _F(12, 5), _F(2053, 2400)),
}

# per-pair delta expectation coefficients at xi = 1 (unscreened orbitals)
_PAIR_DELTA = {
    ("1s", "1s"): _F(1, 2),
    ("1s", "2s"): _F(1, 15),
    ("2s", "2s"): _F(71, 800),
}


def _coefficients(spec):
    A, B0, B1 = _QUADRATIC[spec.element]
    return A, B0 - B1 * spec.lam_exact


def energy_quadratic(spec, xi):
    """Variational energy A xi^2 - B xi of the delta-function atom."""
    if xi <= 0.0:
        raise DomainError(f"screening parameter must be positive, got {xi}")
    A, B = _coefficients(spec)
    return float(A) * xi * xi - float(B) * xi


def optimize_xi(spec):
    """Closed-form stationary point xi0 = B/(2A), energy -B^2/(4A)."""
    A, B = _coefficients(spec)
    xi0 = B / (2 * A)
    eps1 = -B * B / (4 * A)
    return VariationalResult1D(xi0=float(xi0), epsilon1=float(eps1))


def delta_pair_values(spec):
    """Delta-interaction coefficients per electron pair at xi = 1,
    keyed by 1-based electron index pairs."""
    occ = spec.occupancy
    out = {}
    for i in range(len(occ)):
        for j in range(i + 1, len(occ)):
            key = tuple(sorted((occ[i], occ[j])))
            out[(i + 1, j + 1)] = float(_PAIR_DELTA[key])
    return out


def pair_delta_coefficient(pair):
    """Delta coefficient at xi = 1 for an orbital pair such as ('1s', '2s')."""
    key = tuple(sorted(pair))
    if key not in _PAIR_DELTA:
        raise DomainError(f"unknown orbital pair {pair!r}")
    return float(_PAIR_DELTA[key])


def h2_epsilon1(R):
    """Electronic ground-state energy of the one-dimensional H2 model
    (symmetric state); the nuclear 1/R term is *not* included."""
    if R < 0.0:
        raise DomainError(f"internuclear distance must be >= 0, got {R}")
    e = math.exp(-2.0 * R)
    num = 1.0 + (4.0 + 2.0 * R + R * R) * e
    den = 1.0 + (1.0 + R) ** 2 * e
    return -num / den
