"""Gamma-function machinery and the Gauss hypergeometric family used by the
first-order electron-repulsion coefficients.
"""

import math
from dataclasses import dataclass, field

from .errors import DomainError

# beyond this the log-space Gamma ratio is numerically indistinguishable from
# its limit while lgamma cancellation starts eating digits
_F_LIMIT_SWITCH = 1.0e7
_2F1_LIMIT_SWITCH = 1.0e8
_2F1_MAX_TERMS = 10 ** 6

INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class Dimension:
    """Spatial dimension with its derived weights delta = 1/D and
    beta = (D - 1)/2."""

    D: float
    delta: float = field(init=False)
    beta: float = field(init=False)

    def __post_init__(self):
        if self.D < 1.0:
            raise DomainError(f"dimension must be >= 1, got {self.D}")
        object.__setattr__(self, "delta", 1.0 / self.D)
        object.__setattr__(self, "beta", 0.5 * (self.D - 1.0))


def log_gamma(x):
    """ln Gamma(x) for x > 0."""
    if x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def f_universal(D):
    """Universal first-order repulsion coefficient
    Gamma(D/2 + 1/2) Gamma(D + 1/2) / (Gamma(D/2) Gamma(D + 1)).

    Evaluated in log space; increases monotonically from 1/2 at D=1 toward
    2^{-1/2}, which is returned directly above the switch threshold.
    """
    if D < 1.0:
        raise DomainError(f"f_universal requires D >= 1, got {D}")
    if D > _F_LIMIT_SWITCH:
        return INV_SQRT2
    return math.exp(
        log_gamma(0.5 * D + 0.5)
        + log_gamma(D + 0.5)
        - log_gamma(0.5 * D)
        - log_gamma(D + 1.0)
    )


def gauss_2f1_family(D, y):
    """F(1/2, (3-D)/2; D/2; y) for y in [0, 1).

    Summed by forward term recurrence; the series terminates exactly for odd
    integer D.  Above the convergence threshold the analytic limit
    (1 + y)^{-1/2} is returned.
    """
    if not 0.0 <= y < 1.0:
        raise DomainError(f"gauss_2f1_family requires y in [0, 1), got {y}")
    if D < 1.0:
        raise DomainError(f"gauss_2f1_family requires D >= 1, got {D}")
    if D > _2F1_LIMIT_SWITCH:
        return 1.0 / math.sqrt(1.0 + y)
    if y == 0.0:
        return 1.0
    a = 0.5
    b = 0.5 * (3.0 - D)
    c = 0.5 * D
    total = 1.0
    term = 1.0
    for k in range(_2F1_MAX_TERMS):
        num = (a + k) * (b + k)
        if num == 0.0:
            return total  # terminating series
        term *= num / ((c + k) * (k + 1.0)) * y
        total += term
        if abs(term) <= 1e-12 * abs(total):
            return total
    raise DomainError("hypergeometric series failed to converge")
