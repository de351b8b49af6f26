import math

import numpy as np
import pytest

import nibb


def test_limit_cdf_n1_is_erf():
    for x in np.linspace(0.0, 4.0, 9):
        ref = math.erf(x / math.sqrt(2.0))
        assert abs(nibb.limit_cdf_hermite(1, x) - ref) < 1e-10
        assert abs(nibb.limit_cdf_laguerre(1, x) - ref) < 1e-10


def test_hermite_and_laguerre_curves_agree():
    grid_h, h = nibb.limit_curve(4, "hermite", list(np.linspace(0.0, 4.0, 21)))
    grid_l, lag = nibb.limit_curve(4, "laguerre", list(np.linspace(0.0, 4.0, 21)))
    assert np.array_equal(grid_h, grid_l)
    assert np.max(np.abs(h - lag)) < 1e-8


def test_default_curve_is_a_cdf():
    grid, values = nibb.restricted_max_curve(2, 0.5)
    assert len(grid) == len(values)
    assert np.all(np.diff(values) >= -1e-8)
    assert values[0] <= 1e-6 and values[-1] > 1 - 1e-6


def test_lue_m1_half_is_erf_of_sqrt():
    assert abs(nibb.lue_cdf(1, -0.5, 2.0) - math.erf(math.sqrt(2.0))) < 1e-10


def test_matrices_and_determinant():
    q = nibb.q_matrix(3, 0.5)
    f = nibb.f_matrix(3, 0.5)
    assert q.shape == (3, 3)
    assert abs(nibb.det_id_minus(q @ f) - nibb.limit_cdf_hermite(3, 0.5 * math.sqrt(2.0))) < 1e-12
    s = nibb.s_matrix(4, 0.7)
    t = nibb.t_matrix(4, 0.7)
    assert s.shape == (2, 4) and t.shape == (4, 2)
    assert np.allclose(s @ t, np.eye(2), atol=1e-10)


def test_exact_identities():
    assert nibb.check_identity("st=i", 5, "1/2")["pass"]
    report = nibb.verify(n_max=4, radii=["1/3"], lemmas=False, auxiliary=False)
    assert report and all(r["pass"] for r in report)


def test_samplers_are_reproducible():
    a = nibb.sample_restricted_max(2, 0.5, 100, steps=64, seed=3)
    b = nibb.sample_restricted_max(2, 0.5, 100, steps=64, seed=3)
    assert np.array_equal(a, b)
    w = nibb.sample_wishart_top(1, 2, 20000, seed=5)
    assert abs(w.mean() - 2.0) < 0.1


def test_ks_against_exact_cdf():
    v = np.sqrt(2.0) * nibb.sample_antige_top(3, 5000, seed=4)
    assert nibb.ks_distance(list(v), lambda x: nibb.limit_cdf_laguerre(2, x)) < 0.03


def test_compare_pairing():
    c = nibb.compare("theorem1", 2, count=4000, seed=2)
    assert c["pairing"] == "theorem1" and c["pass"]
    assert "nibm-loe" in nibb.comparison_names


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        nibb.restricted_max_cdf(2, 1.5, 1.0)
    with pytest.raises(ValueError):
        nibb.check_identity("st=i", 3, "1/0")
    with pytest.raises(ValueError):
        nibb.compare("nope", 2)
