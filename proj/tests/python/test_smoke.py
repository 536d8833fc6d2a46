"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import picardop as pop


@pytest.fixture
def grid():
    return pop.GridSpec(dim=1, points_per_axis=64, time_nodes=65)


def test_grid_and_field_round_trip(grid):
    x = np.array([grid.coordinate(k) for k in range(64)])
    f = pop.TorusField.from_values(grid, np.cos(x))
    assert f.values.shape == (64,)
    spec = f.spectrum
    assert abs(spec[1] - 0.5) < 1e-13
    assert abs(spec[63] - 0.5) < 1e-13
    assert pop.sup_norm(f) == pytest.approx(1.0)
    assert pop.sobolev_norm(f, 1.0) == pytest.approx(1.0, abs=1e-12)


def test_fejer_and_heat(grid):
    assert pop.fejer_mask(3, [2]) == pytest.approx(0.5)
    assert pop.fejer_mask(1, [1, 1]) == pytest.approx(0.25)
    assert pop.heat_multiplier([2], 0.1) == pytest.approx(math.exp(-0.4))
    x = np.array([grid.coordinate(k) for k in range(64)])
    f = pop.TorusField.from_values(grid, np.cos(x))
    half = pop.apply_fejer(f, 1)
    assert np.allclose(half.values, 0.5 * np.cos(x), atol=1e-13)
    flowed = pop.apply_semigroup(pop.SemigroupKind.exact(), f, 0.5)
    assert np.allclose(flowed.values, math.exp(-0.5) * np.cos(x), atol=1e-12)


def test_catalog_and_rho():
    F = pop.catalog("sin", M=1.0, amplitude=0.5)
    assert F.lipschitz_cert == pytest.approx(0.5)
    assert F(0.0) == 0.0
    rho = pop.build_rho(F, 1.0, 0.5, 0.01)
    assert rho(0.0) == 0.0
    assert rho.max_secant_slope() <= 0.5 + 1e-12
    xs = np.linspace(-1.0, 1.0, 2001)
    err = max(abs(F(float(v)) - rho(float(v))) for v in xs)
    assert err <= 0.01


def test_picard_iteration_matches_taylor(grid):
    params = pop.PicardParams(R=0.4, M=1.0, L=0.5, T=0.5, delta=0.25, ell=3, rank=16)
    model = pop.PicardModel(params, pop.catalog("linear", M=1.0, amplitude=0.5),
                            pop.SemigroupKind.exact())
    u0 = pop.TorusField.constant(grid, 0.4)
    u3 = pop.iterate(model, u0, 3, grid)
    zero_mode = u3.slice(64).spectrum[0].real
    assert zero_mode == pytest.approx(0.4 * 1.28125, abs=1e-6)
    traj, iterations, a_post = pop.solve_fixed_point(model, u0, 1e-8, grid)
    assert iterations < 50
    assert traj.slice(64).spectrum[0].real == pytest.approx(0.4 * math.exp(0.25), abs=1e-5)


def test_sampling_and_reconstruction(grid):
    law = pop.InitialLaw(s_gp=3.0, sigma=0.12, band=8, s0=2.0, r0=1.0, sup_bound=0.4, seed=7)
    fields = pop.sample_initial(law, grid, 4)
    assert len(fields) == 4
    for f in fields:
        assert pop.sup_norm(f) <= 0.4
        assert pop.sobolev_norm(f, 2.0) <= 1.0
    sensors = pop.SensorSet.equispaced(grid, 32)
    readings = pop.observe(sensors, fields[0])
    rec = pop.reconstruct(sensors, readings, grid, 2.0, 1.0)
    assert np.max(np.abs(rec.values - fields[0].values)) < 1e-10  # band 8 < 16


def test_budget_and_losses():
    params = pop.PicardParams(R=0.4, M=1.0, L=1.0, T=0.5, delta=0.5, ell=1)
    ell_n, m_n, clamped = pop.plan_budget(params, 10000, 1.5, 0.0)
    assert ell_n == 4
    assert not clamped
    assert pop.clipped_loss(3.0, -1.0, 1.0) == pytest.approx(4.0)


def test_rollout_helpers(grid):
    params = pop.PicardParams(R=0.4, M=1.0, L=1.0, T=0.5, delta=0.5, ell=8)
    env = pop.stability_envelope(params, 3, 0.1, dissipative=False)
    assert env[2] == pytest.approx(49.0 * 0.01)
    f = pop.TorusField.constant(grid, 0.9)
    clipped = pop.clip_state(f, 0.45)
    assert np.allclose(clipped.values, 0.45)
