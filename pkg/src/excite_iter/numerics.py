"""Quadrature and log-domain primitives.

The excitation iteration multiplies e^{2S(y)} (huge in the tail) by a tail
integral carrying at least e^{-2S(y)} decay.  Everything here keeps the two
factors in the log domain until a single final exponentiation, so the
product stays finite whenever the true value is.

Cumulative quadrature scheme (fixed; regression targets depend on it):
composite Simpson accumulated over panel pairs gives the running integral at
even offsets from the start; odd offsets add a single-panel trapezoid
correction on top of the preceding even offset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OverflowGuardError

# exp() overflows just above 709; leave headroom for the final product
OVERFLOW_EXPONENT = 700.0
LOG_FLOOR = -math.inf


@dataclass(frozen=True)
class LogScaledValue:
    """A real number stored as sign * exp(log_magnitude)."""

    log_magnitude: float
    sign: int

    @classmethod
    def from_value(cls, v: float) -> "LogScaledValue":
        if v == 0.0:
            return cls(LOG_FLOOR, 0)
        return cls(math.log(abs(v)), 1 if v > 0 else -1)

    def value(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)


def simpson_integral(values, h: float, a_index: int = 0,
                     b_index: int | None = None) -> float:
    """Composite Simpson integral of uniformly sampled values.

    The panel count b_index - a_index must be even (grids with an odd node
    count guarantee this for the full range).
    """
    values = np.asarray(values, dtype=float)
    if b_index is None:
        b_index = len(values) - 1
    if not 0 <= a_index < b_index <= len(values) - 1:
        raise IndexError(f"bad index range [{a_index}, {b_index}]")
    if (b_index - a_index) % 2 != 0:
        raise ValueError("panel count must be even for composite Simpson")
    y = values[a_index:b_index + 1]
    return float(h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum()
                            + 2.0 * y[2:-2:2].sum()))


def cumulative_simpson(values, h: float) -> np.ndarray:
    """Running integral from index 0 to each node.

    Even offsets: accumulated Simpson panel pairs.  Odd offsets: preceding
    even value plus a trapezoid over the last panel.
    """
    y = np.asarray(values, dtype=float)
    n = len(y)
    if n < 3 or n % 2 == 0:
        raise ValueError("need an odd number of nodes, at least 3")
    out = np.empty(n)
    out[0] = 0.0
    pairs = h / 3.0 * (y[0:-2:2] + 4.0 * y[1:-1:2] + y[2::2])
    out[2::2] = np.cumsum(pairs)
    out[1::2] = out[0:-1:2] + 0.5 * h * (y[0:-1:2] + y[1::2])
    return out


def reverse_cumulative_simpson(values, h: float) -> np.ndarray:
    """Running integral from each node to the last node."""
    y = np.asarray(values, dtype=float)
    return cumulative_simpson(y[::-1], h)[::-1]


def weighted_outer_integrand(gs, inner: LogScaledValue, y: float) -> float:
    """e^{2S(y)} * I(y) with the product formed in the log domain.

    Raises OverflowGuardError if the combined exponent would overflow; for
    the supported potentials that indicates a logic bug upstream.
    """
    if inner.sign == 0:
        return 0.0
    two_s = -gs.log_weight(y)
    exponent = two_s + inner.log_magnitude
    if exponent > OVERFLOW_EXPONENT:
        raise OverflowGuardError(
            f"outer integrand exponent {exponent:.3g} exceeds "
            f"{OVERFLOW_EXPONENT}; 2S(y)={two_s:.3g}, "
            f"log|I|={inner.log_magnitude:.3g}")
    return inner.sign * math.exp(exponent)


def weighted_outer_profile(s: np.ndarray, log_inner: np.ndarray,
                           sign_inner: np.ndarray) -> np.ndarray:
    """Vectorized weighted_outer_integrand over a whole grid."""
    with np.errstate(invalid="ignore"):   # inf - inf at zero-weight nodes
        exponent = np.where(sign_inner != 0, 2.0 * s + log_inner, -np.inf)
    bad = exponent[np.isfinite(exponent)]
    if bad.size and bad.max() > OVERFLOW_EXPONENT:
        i = int(np.nanargmax(np.where(np.isfinite(exponent), exponent,
                                      -np.inf)))
        raise OverflowGuardError(
            f"outer integrand exponent {exponent[i]:.3g} at node {i} "
            f"exceeds {OVERFLOW_EXPONENT}")
    with np.errstate(over="raise"):
        return sign_inner * np.exp(np.where(np.isfinite(exponent),
                                            exponent, -np.inf))


def cubic_extrapolate_edge(values: np.ndarray) -> float:
    """One-sided cubic extrapolation of values[-1] from the four nodes
    before it (used for the hard-wall limit of the outer integrand)."""
    if len(values) < 5:
        raise ValueError("need at least five nodes to extrapolate")
    v = values
    return float(4.0 * v[-2] - 6.0 * v[-3] + 4.0 * v[-4] - v[-5])


def tail_closure(gs, chi_prev) -> float:
    """First-order Watson estimate of the integral beyond the grid edge:
    e^{-2S(x_max)} * chi(x_max) / (2 S'(x_max)).

    Hard-wall ground states have compact support, so the tail is exactly 0.
    """
    if gs.hard_wall:
        return 0.0
    sp_end = gs.s_prime[-1]
    if not sp_end > 0.0:
        raise ValueError(
            f"tail closure needs a decaying tail, got S'(x_max)={sp_end}")
    return math.exp(-2.0 * gs.s[-1]) * chi_prev[-1] / (2.0 * sp_end)
