import cmath
import json
import math

import numpy as np
import pytest

import fracschro as fs


def test_kernel_values():
    assert fs.gamma_kernel(1.0, 5.0) == 1.0
    assert fs.gamma_kernel(2.0, 3.0) == pytest.approx(3.0, abs=1e-14)
    value, closed = fs.convolve_exponential(0.5, 1.0, 0.3)
    assert abs(value - closed) < 1e-4
    assert fs.love_identity_residual(0.5, 1.0, math.pi) < 1e-4


def test_order_is_validated():
    assert fs.FractionalOrder(0.25).value == 0.25
    with pytest.raises(fs.DomainError):
        fs.FractionalOrder(1.5)
    with pytest.raises(fs.Error):
        fs.gamma_kernel(0.5, -1.0)
    with pytest.raises(fs.SpecError):
        fs.QuadratureSpec(truncation=0.5)


def test_weak_derivative_of_exponential():
    phi = fs.TestFunction.gaussian(0.0, 1.0)
    u = fs.ExponentialSignal(1.0, 1.0)
    ratio = fs.weak_pairing(0.5, u, phi) / fs.pairing(u, phi)
    assert abs(ratio - cmath.exp(0.25j * math.pi)) < 1e-4


def test_scalar_residuals():
    prob = fs.ScalarProblem(0.5, 1.0)
    assert len(prob.test_family) == 9
    assert fs.scalar_weak_residual(prob, fs.ExponentialSignal(1j, 1.0)) <= 1e-4
    assert fs.scalar_weak_residual(prob, fs.ExponentialSignal(1.0, 2.0)) > 0.05
    rows = fs.caputo_compare(0.5, 1.0, [0.0, 1.0])
    assert rows[0] == (0.0, 1.0, 1.0)
    assert rows[1][2] == pytest.approx(2.0255412900695249, abs=1e-12)


def test_propagation_round_trip():
    grid = fs.GridSpec(64, 16 * math.pi)
    rng = np.random.default_rng(3)
    v = fs.WaveFunction(grid, rng.normal(size=64) + 1j * rng.normal(size=64))
    op = fs.build_schrodinger(grid, rng.uniform(0.0, 3.0, size=64))
    assert op.basis == fs.SpectralOperator.Basis.eigen
    assert op.symbol.min() >= 0.0
    w = fs.propagate(op, 0.5, 0.75, v)
    assert abs(w.norm() - v.norm()) <= 1e-12 * v.norm()
    back = fs.propagate(op, 0.5, -0.75, w)
    assert (back - v).norm() <= 1e-12 * v.norm()


def test_free_mode_phase():
    grid = fs.GridSpec(32, 2 * math.pi)
    op = fs.build_free_laplacian(grid)
    w = fs.propagate(op, 0.5, 0.1, fs.WaveFunction.mode(grid, 2))
    expected = np.exp(0.1j * 16.0) * fs.WaveFunction.mode(grid, 2).values
    assert np.max(np.abs(w.values - expected)) < 1e-13


def test_negative_potential_rejected():
    with pytest.raises(fs.DomainError):
        fs.build_schrodinger(fs.GridSpec(8, 1.0), [0, 0, -1, 0, 0, 0, 0, 0])


def test_suite_subset_is_reproducible():
    first = fs.run_suite(alpha=0.5, n=32, seed=11, groups=["caputo", "spectral"])
    second = fs.run_suite(alpha=0.5, n=32, seed=11, groups=["caputo", "spectral"])
    assert all(r.passed for r in first)
    assert fs.reports_to_json(first) == fs.reports_to_json(second)
    parsed = json.loads(fs.reports_to_json(first))
    assert parsed[0]["metadata"] == first[0].metadata
    with pytest.raises(fs.SpecError):
        fs.run_suite(groups=["nonsense"])
