"""Tests for the excitation-energy iteration engine."""

import dataclasses
import math

import numpy as np
import pytest

from excite_iter.errors import DegenerateAnchorError
from excite_iter.excite import (
    IterationState,
    TrialFunction,
    excited_wavefunction,
    iterate_once,
    orthogonality_residual,
    run,
    tail_integral,
)
from excite_iter.groundstate import Grid, soluble_groundstate, solve_groundstate_numeric
from excite_iter.potential import Quartic
from excite_iter.soluble import epsilon1_closed_form, exact_epsilon

# 30-digit quadrature of int_x^1 sin(p(1-z))^2 * z dz at delta = 0.1,
# frozen from an independent arbitrary-precision evaluation.
TAIL_ORACLE_D01_X0 = 0.2497306668710968321
TAIL_ORACLE_D01_X05 = 0.15644138847098579194

DELTA = 0.1


@pytest.fixture(scope="module")
def gs_soluble():
    return soluble_groundstate(DELTA, Grid(1.0, 16001))


@pytest.fixture(scope="module")
def gs_quartic():
    return solve_groundstate_numeric(Quartic(3.0), Grid(4.0, 16001))


class TestTrialFunction:
    def test_linear_samples(self, gs_soluble):
        x = gs_soluble.grid.nodes()
        assert np.array_equal(TrialFunction.linear().sample(gs_soluble.grid), x)

    def test_saturating_samples(self, gs_quartic):
        x = gs_quartic.grid.nodes()
        v = TrialFunction.saturating().sample(gs_quartic.grid)
        inside = x < 1.0
        assert np.allclose(v[inside], x[inside] * (2.0 - x[inside]))
        assert np.all(v[~inside] == 1.0)

    def test_tabulated_roundtrip(self, gs_soluble):
        x = gs_soluble.grid.nodes()
        values = np.sin(x)
        trial = TrialFunction.tabulated(values)
        assert np.array_equal(trial.sample(gs_soluble.grid), values)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            TrialFunction("quadratic")


class TestTailIntegral:
    def test_vanishes_at_wall(self, gs_soluble):
        x = gs_soluble.grid.nodes()
        assert tail_integral(gs_soluble, x.copy(), 1.0) == 0.0

    def test_frozen_oracle(self, gs_soluble):
        x = gs_soluble.grid.nodes()
        assert tail_integral(gs_soluble, x.copy(), 0.0) == pytest.approx(
            TAIL_ORACLE_D01_X0, rel=1e-12
        )
        assert tail_integral(gs_soluble, x.copy(), 0.5) == pytest.approx(
            TAIL_ORACLE_D01_X05, rel=1e-12
        )

    def test_monotone_decreasing(self, gs_soluble):
        # For a nonnegative integrand the tail integral decreases in x.
        x = gs_soluble.grid.nodes()
        vals = [tail_integral(gs_soluble, x.copy(), xi) for xi in (0.0, 0.25, 0.5, 0.75)]
        assert vals == sorted(vals, reverse=True)


class TestIterateOnce:
    def test_first_epsilon_matches_closed_form(self, gs_soluble):
        prev = IterationState(n=0, chi=gs_soluble.grid.nodes())
        state = iterate_once(gs_soluble, prev, anchor_x0=1.0, chi0_at_anchor=1.0)
        assert state.eps == pytest.approx(epsilon1_closed_form(DELTA), rel=1e-8)

    def test_anchor_value_is_exact(self, gs_soluble):
        prev = IterationState(n=0, chi=gs_soluble.grid.nodes())
        state = iterate_once(gs_soluble, prev, anchor_x0=1.0, chi0_at_anchor=1.0)
        i0 = gs_soluble.grid.index_of(1.0)
        assert state.chi[i0] == 1.0

    def test_degenerate_anchor_raises(self, gs_soluble):
        # The unnormalized iterate vanishes at the origin by construction.
        prev = IterationState(n=0, chi=gs_soluble.grid.nodes())
        with pytest.raises(DegenerateAnchorError):
            iterate_once(gs_soluble, prev, anchor_x0=0.0, chi0_at_anchor=0.0)

    def test_fixed_point(self, gs_soluble):
        # Applying the map to a converged iterate reproduces its eigenvalue.
        report = run(gs_soluble, TrialFunction.linear(), max_iters=8, tol=1e-9)
        last = report.states[-1]
        i0 = gs_soluble.grid.index_of(report.anchor_x0)
        again = iterate_once(gs_soluble, last, report.anchor_x0,
                             report.states[0].chi[i0])
        assert again.eps == pytest.approx(report.eps, rel=5e-9)


class TestGaugeAndAnchor:
    def test_gauge_invariance(self, gs_soluble):
        # eps is invariant under S -> S + c: the inner weight e^{-2S} and
        # the outer factor e^{+2S} cancel any constant shift.
        base = run(gs_soluble, TrialFunction.linear(), max_iters=4).eps_sequence
        for shift in (+5.0, -5.0):
            shifted = dataclasses.replace(
                gs_soluble, s=gs_soluble.s + shift,
                gauge=gs_soluble.gauge + shift)
            moved = run(shifted, TrialFunction.linear(), max_iters=4).eps_sequence
            assert np.allclose(moved, base, rtol=1e-12, atol=0.0)

    def test_anchor_covariance_converged(self, gs_soluble):
        # The converged eigenvalue does not depend on the anchor point.
        a = run(gs_soluble, TrialFunction.linear(), anchor_x0=1.0,
                max_iters=8, tol=1e-9)
        b = run(gs_soluble, TrialFunction.linear(), anchor_x0=0.6,
                max_iters=8, tol=1e-9)
        assert a.eps == pytest.approx(b.eps, rel=1e-6)


class TestRun:
    def test_converges_to_exact_soluble(self, gs_soluble):
        report = run(gs_soluble, TrialFunction.linear(), max_iters=8, tol=1e-9)
        assert report.status == "converged"
        assert report.eps == pytest.approx(exact_epsilon(DELTA), rel=1e-7)

    def test_deltas_are_cauchy(self, gs_soluble):
        report = run(gs_soluble, TrialFunction.linear(), max_iters=6, tol=0.0)
        deltas = report.delta_sequence
        assert all(deltas[i + 1] < deltas[i] for i in range(len(deltas) - 1))

    def test_energy_split(self, gs_quartic):
        report = run(gs_quartic, TrialFunction.linear(), max_iters=8, tol=1e-9)
        assert report.e_odd == pytest.approx(report.e_gd + report.eps, rel=1e-14)
        assert report.e_mean == pytest.approx(
            0.5 * (report.e_gd + report.e_odd), rel=1e-14)

    def test_invalid_arguments(self, gs_soluble):
        with pytest.raises(ValueError):
            run(gs_soluble, TrialFunction.linear(), max_iters=0)


class TestOrthogonality:
    def test_odd_extension_is_structural_zero(self, gs_soluble):
        report = run(gs_soluble, TrialFunction.linear(), max_iters=3)
        for r in report.orth_residuals:
            assert r == 0.0

    def test_even_constant_is_one(self, gs_soluble):
        chi = np.ones(gs_soluble.grid.n_points)
        assert orthogonality_residual(gs_soluble, chi, parity="even") == 1.0

    def test_converged_iterate_residual(self, gs_quartic):
        report = run(gs_quartic, TrialFunction.linear(), max_iters=4)
        chi = report.states[-1].chi
        assert abs(orthogonality_residual(gs_quartic, chi)) <= 1e-12


class TestExcitedWavefunction:
    def test_soluble_shape_is_sine(self, gs_soluble):
        # e^{-S} chi for the converged soluble iterate is proportional to
        # sin(pi x): the spike drops out of the odd state entirely.
        report = run(gs_soluble, TrialFunction.linear(), max_iters=8, tol=1e-9)
        psi = excited_wavefunction(gs_soluble, report.states[-1].chi)
        x = gs_soluble.grid.nodes()
        target = np.sin(np.pi * x)
        i = gs_soluble.grid.index_of(0.5)
        scale = psi[i] / target[i]
        assert np.max(np.abs(psi - scale * target)) < 1e-6 * abs(scale)

    def test_quartic_tail_is_negligible(self, gs_quartic):
        report = run(gs_quartic, TrialFunction.linear(), max_iters=8, tol=1e-9)
        psi = excited_wavefunction(gs_quartic, report.states[-1].chi)
        assert abs(psi[-1]) <= 1e-18 * np.max(np.abs(psi))

    def test_node_at_origin(self, gs_quartic):
        report = run(gs_quartic, TrialFunction.linear(), max_iters=4)
        psi = excited_wavefunction(gs_quartic, report.states[-1].chi)
        assert psi[0] == 0.0
