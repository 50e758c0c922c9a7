"""Iterative refinement of the lowest odd excited state.

Each step maps chi_{n-1} to the unnormalized profile

    chihat(x) = 2 * int_0^x e^{2S(y)} int_y^inf e^{-2S(z)} chi_{n-1}(z) dz dy

and splits off the excitation energy with the fixed-point rule
chi_n(x0) = chi_0(x0), i.e. eps_n = chi_0(x0) / chihat(x0).  All functions
are odd in x and stored on x >= 0 only; full-line integrals use the parity
factor analytically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateAnchorError
from .groundstate import GroundState
from .numerics import (cubic_extrapolate_edge, cumulative_simpson,
                       reverse_cumulative_simpson, simpson_integral,
                       weighted_outer_profile)

TRIAL_KINDS = ("linear", "saturating", "tabulated")


@dataclass(frozen=True)
class TrialFunction:
    """Odd seed function chi_0, represented on x >= 0.

    linear:     chi_0(x) = x
    saturating: chi_0(x) = x(2-x) on [0, 1), then 1
    tabulated:  grid-aligned samples (must vanish at x = 0)
    """

    kind: str
    values: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in TRIAL_KINDS:
            raise ValueError(f"unknown trial kind {self.kind!r}")
        if self.kind == "tabulated":
            if self.values is None:
                raise ValueError("tabulated trial needs samples")
            if self.values[0] != 0.0:
                raise ValueError("odd trial must vanish at x = 0")
        elif self.values is not None:
            raise ValueError(f"{self.kind} trial takes no samples")

    @classmethod
    def linear(cls):
        return cls("linear")

    @classmethod
    def saturating(cls):
        return cls("saturating")

    @classmethod
    def tabulated(cls, values):
        return cls("tabulated", np.asarray(values, dtype=float))

    def sample(self, grid) -> np.ndarray:
        x = grid.nodes()
        if self.kind == "linear":
            return x.copy()
        if self.kind == "saturating":
            return np.where(x < 1.0, x * (2.0 - x), 1.0)
        if len(self.values) != grid.n_points:
            raise ValueError(
                f"tabulated trial has {len(self.values)} samples for a "
                f"{grid.n_points}-point grid")
        return self.values.copy()


@dataclass(frozen=True)
class IterationState:
    """chi_n on x >= 0 plus the extracted eps_n.

    d_field holds the tail integral I(x) = D_n(x)/(-eps_n), kept as a
    diagnostic (it is the electrostatic displacement field up to the -eps_n
    factor and makes sign errors visible).
    """

    n: int
    chi: np.ndarray
    eps: float | None = None
    d_field: np.ndarray | None = None


@dataclass(frozen=True)
class ConvergenceReport:
    eps_sequence: list[float]
    delta_sequence: list[float]
    orth_residuals: list[float]
    status: str                      # converged | max_iters | stalled
    anchor_x0: float
    trial_kind: str
    e_gd: float
    e_odd: float
    e_mean: float
    states: list[IterationState] = field(repr=False, default_factory=list)

    @property
    def eps(self) -> float:
        return self.eps_sequence[-1]


def _scaled_inner(gs: GroundState, chi_prev: np.ndarray):
    """Reverse cumulative integral of e^{-2S} chi_prev, scaled by
    e^{-u_ref} with u_ref = max(-2S) so every sample is representable.

    Returns (i_scaled, u_ref).  The tail beyond x_max is closed with the
    first-order Watson estimate chi/(2S') * weight (exactly zero for
    hard-wall support).
    """
    u = gs.weight_log_nodes()
    finite = np.isfinite(u)
    u_ref = float(u[finite].max())
    w = np.where(finite, np.exp(np.where(finite, u, 0.0) - u_ref), 0.0)
    w = w * chi_prev
    i_scaled = reverse_cumulative_simpson(w, gs.grid.h)
    if not gs.hard_wall:
        i_scaled = i_scaled + (np.exp(u[-1] - u_ref) * chi_prev[-1]
                               / (2.0 * gs.s_prime[-1]))
    return i_scaled, u_ref


def tail_integral(gs: GroundState, chi_prev: np.ndarray, x: float) -> float:
    """I(x) = int_x^inf e^{-2S(z)} chi_prev(z) dz at a grid node."""
    i = gs.grid.index_of(x)
    i_scaled, u_ref = _scaled_inner(gs, np.asarray(chi_prev, dtype=float))
    with np.errstate(over="ignore"):
        return float(i_scaled[i] * np.exp(u_ref))


def _unnormalized_profile(gs: GroundState, chi_prev: np.ndarray):
    """chihat(x) = 2 int_0^x e^{2S(y)} I(y) dy via log-domain products.

    Returns (chihat, d_field) with d_field = I at the nodes.
    """
    i_scaled, u_ref = _scaled_inner(gs, chi_prev)
    sign = np.sign(i_scaled)
    with np.errstate(divide="ignore"):
        log_inner = np.where(sign != 0.0, np.log(np.abs(
            np.where(sign != 0.0, i_scaled, 1.0))) + u_ref, -np.inf)
    outer = weighted_outer_profile(gs.s, log_inner, sign)
    if gs.hard_wall:
        # e^{2S} is not evaluable on the wall; take the one-sided limit
        outer[-1] = cubic_extrapolate_edge(outer)
    chihat = 2.0 * cumulative_simpson(outer, gs.grid.h)
    with np.errstate(over="ignore", under="ignore"):
        d_field = i_scaled * np.exp(u_ref)
    return chihat, d_field


def iterate_once(gs: GroundState, prev: IterationState, anchor_x0: float,
                 chi0_at_anchor: float) -> IterationState:
    """One application of the iteration map plus the fixed-point split."""
    i0 = gs.grid.index_of(anchor_x0)
    chihat, d_field = _unnormalized_profile(gs, prev.chi)
    if chihat[i0] == 0.0:
        raise DegenerateAnchorError(
            f"unnormalized iterate vanishes at the anchor x0={anchor_x0}")
    eps = chi0_at_anchor / chihat[i0]
    chi = eps * chihat
    chi[i0] = chi0_at_anchor       # eq. fixed-point rule, exact by definition
    return IterationState(n=prev.n + 1, chi=chi, eps=float(eps),
                          d_field=d_field)


def orthogonality_residual(gs: GroundState, chi: np.ndarray,
                           parity: str = "odd") -> float:
    """Full-line int e^{-2S} chi, normalized by int e^{-2S} |chi|.

    The stored half-line samples are extended by the given parity; for the
    odd extension the two half-line contributions cancel structurally, so
    the value quantifies nothing but quadrature asymmetry (it is exactly
    zero by construction here).
    """
    chi = np.asarray(chi, dtype=float)
    u = gs.weight_log_nodes()
    finite = np.isfinite(u)
    u_ref = float(u[finite].max())
    w = np.where(finite, np.exp(np.where(finite, u, 0.0) - u_ref), 0.0)
    h = gs.grid.h
    half = simpson_integral(w * chi, h)
    mirror = half if parity == "even" else -half
    norm = 2.0 * simpson_integral(w * np.abs(chi), h)
    if norm == 0.0:
        return 0.0
    return (half + mirror) / norm


def excited_wavefunction(gs: GroundState, chi: np.ndarray) -> np.ndarray:
    """psi_ex = e^{-S} chi, finite everywhere including support edges."""
    with np.errstate(under="ignore"):
        weight = np.exp(-gs.s)
    return weight * np.asarray(chi, dtype=float)


def run(gs: GroundState, trial: TrialFunction, anchor_x0: float = 1.0,
        max_iters: int = 8, tol: float = 1e-9) -> ConvergenceReport:
    """Drive iterate_once to convergence of the eps sequence.

    Stops when |eps_n - eps_{n-1}| <= tol * |eps_n|, when the delta
    sequence stops decreasing for three consecutive steps (stalled), or at
    max_iters.
    """
    if max_iters < 1:
        raise ValueError("max_iters must be >= 1")
    chi0 = trial.sample(gs.grid)
    i0 = gs.grid.index_of(anchor_x0)
    if chi0[i0] == 0.0:
        raise DegenerateAnchorError(
            f"trial function vanishes at the anchor x0={anchor_x0}; the "
            "fixed-point normalization is undefined")
    chi0_at_anchor = float(chi0[i0])

    states = [IterationState(n=0, chi=chi0)]
    eps_seq: list[float] = []
    deltas: list[float] = []
    residuals: list[float] = []
    status = "max_iters"
    stall_count = 0
    for _ in range(max_iters):
        state = iterate_once(gs, states[-1], anchor_x0, chi0_at_anchor)
        states.append(state)
        eps_seq.append(state.eps)
        residuals.append(orthogonality_residual(gs, state.chi))
        if len(eps_seq) >= 2:
            delta = abs(eps_seq[-1] - eps_seq[-2])
            deltas.append(delta)
            if delta <= tol * abs(eps_seq[-1]):
                status = "converged"
                break
            if len(deltas) >= 2 and deltas[-1] >= deltas[-2]:
                stall_count += 1
                if stall_count >= 3:
                    status = "stalled"
                    break
            else:
                stall_count = 0

    e_odd = gs.e_gd + eps_seq[-1]
    return ConvergenceReport(
        eps_sequence=eps_seq, delta_sequence=deltas,
        orth_residuals=residuals, status=status, anchor_x0=anchor_x0,
        trial_kind=trial.kind, e_gd=gs.e_gd, e_odd=e_odd,
        e_mean=gs.e_gd + 0.5 * eps_seq[-1], states=states)
