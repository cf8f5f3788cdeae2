import math

import numpy as np
import pytest

ob = pytest.importorskip("_core")


def test_canonical_rank_and_extremality():
    c = ob.canonical_matrix(8)
    assert ob.rank(c) == 1
    cert = ob.extremality(c)
    assert cert["extreme"]
    assert cert["constraint_rank"] == 1


def test_trivial_matrix_splits():
    cert = ob.extremality(ob.trivial_matrix(3))
    assert not cert["extreme"]
    split = cert["split"]
    avg = 0.5 * (split["c_plus"] + split["c_minus"])
    assert np.max(np.abs(avg - ob.trivial_matrix(3))) < 1e-12
    valid, violations = ob.validate(split["c_plus"])
    assert valid, violations


def test_displacement_element():
    assert ob.displacement_element(0, 0, 1.0) == pytest.approx(math.exp(-0.5), abs=1e-14)
    assert ob.displacement_element(1, 0, 1.0) == pytest.approx(math.exp(-0.5), abs=1e-14)


def test_et_matrix_matches_gamma_form():
    c = ob.et_phase_matrix(np.array([1.0]), 6)
    assert c[0, 1].real == pytest.approx(math.gamma(1.5), abs=1e-6)
    assert c[0, 2].real == pytest.approx(math.gamma(2.0) / math.sqrt(2.0), abs=1e-6)
    assert ob.rank(c) == 6
    assert not ob.extremality(c)["extreme"]


def test_density_normalization():
    profile = ob.density_profile(ob.canonical_matrix(16), 1.0 + 0.5j, 512)
    assert profile["normalization"] == pytest.approx(
        profile["expected_normalization"], abs=1e-8
    )
    assert ob.density(ob.canonical_matrix(32), 1.0, 0.0) == pytest.approx(4.4288, abs=1e-3)


def test_peak_dominance():
    g, g_can, dominated = ob.peak_dominance(ob.trivial_matrix(12), 1.0)
    assert dominated
    assert g < g_can


def test_gaussian_kernel_not_extreme():
    k = ob.gaussian_kernel(-3.5, 1.0, 8, sigma=1.0)
    valid, _ = ob.validate(k)
    assert valid
    cert = ob.kernel_extremality(k, -3.5, 1.0)
    assert not cert["extreme"]
    assert "split" in cert


def test_rotated_frame_quarter_turn():
    q0, p0 = ob.rotate_frame(0.0, 8)
    q_quarter, _ = ob.rotate_frame(math.pi / 2.0, 8)
    assert np.max(np.abs(p0 - q_quarter)) < 1e-13


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError):
        ob.interval_operator(ob.canonical_matrix(4), 2.0, 1.0)
