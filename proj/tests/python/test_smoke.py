import math

import numpy as np
import pytest

import wavederiv as wd


def test_method_kinds():
    kinds = wd.method_kinds()
    assert len(kinds) == 9
    assert kinds[0] == "NaiveFD"
    assert "WaveletAdaptive" in kinds


def test_grid_and_samples():
    x0, dx, n = wd.default_grid("chirp")
    assert (x0, n) == (0.0, 1001)
    assert dx == pytest.approx(0.001)
    x, f = wd.sample("chirp", mu=0.0)
    assert x.shape == f.shape == (n,)
    assert f[0] == 0.0
    _, a = wd.sample("chirp", mu=0.3, seed=4, realization=2)
    _, b = wd.sample("chirp", mu=0.3, seed=4, realization=2)
    np.testing.assert_array_equal(a, b)
    assert np.max(np.abs(a - f)) <= 0.3 * np.max(np.abs(f))


def test_step_naive_fd():
    x0, dx, n = wd.default_grid("step")
    x, f = wd.sample("step", mu=0.0)
    g = wd.differentiate("kind=NaiveFD", f, dx, x0)
    left = (x > -0.99) & (x < -0.01)
    right = (x > 0.01) & (x < 0.99)
    np.testing.assert_allclose(g[left], -2.0, atol=1e-9)
    np.testing.assert_allclose(g[right], 1.0, atol=1e-9)
    np.testing.assert_allclose(wd.true_derivative("step", np.array([-0.5, 0.0, 0.5])), [-2.0, -2.0, 1.0])


def test_wavelet_on_noiseless_chirp():
    x0, dx, _ = wd.default_grid("chirp")
    _, f = wd.sample("chirp")
    g = wd.differentiate("kind=WaveletGlobal;a_min=0.006;a_max=0.1;voices=16", f, dx, x0)
    assert wd.rms_error(g, "chirp", dx, x0, mask="interior", margin=0.1) <= 0.05


def test_spectral_derivative_of_sine():
    n = 256
    dx = 1.0 / n
    x = np.arange(n) * dx
    d = wd.spectral_filter(np.sin(2 * math.pi * 3 * x), dx, "diff", n / 2)
    np.testing.assert_allclose(d, 2 * math.pi * 3 * np.cos(2 * math.pi * 3 * x), atol=1e-9)


def test_admissibility_and_plane():
    assert wd.admissibility_constant("gaussian-derivative") == pytest.approx(math.sqrt(math.pi) / 2, abs=1e-6)
    _, dx, _ = wd.default_grid("chirp")
    _, f = wd.sample("chirp")
    scales, w = wd.wavelet_plane(f, dx, 0.006, 0.1, voices=4)
    assert w.shape == (scales.size, f.size)
    assert scales[0] == pytest.approx(0.1)
    assert np.all(np.diff(scales) < 0)
    assert np.all(w >= 0)


def test_sweep():
    config = "kind=GaussWindowFD\nsweep=width\nvalues=0.005,0.011,0.03\nmodel=chirp\nmu=0.3\nrealizations=3\n"
    points, p_opt, s_opt = wd.run_sweep(config, jobs=1)
    assert [p["param"] for p in points] == [0.005, 0.011, 0.03]
    assert all(p["n"] == 3 for p in points)
    assert s_opt == min(p["sigma_mean"] for p in points)
    assert p_opt == 0.011
    assert wd.run_sweep(config, jobs=2) == (points, p_opt, s_opt)


def test_errors_map_to_python():
    _, dx, _ = wd.default_grid("chirp")
    _, f = wd.sample("chirp")
    with pytest.raises(wd.SpecError):
        wd.differentiate("kind=Nope", f, dx)
    with pytest.raises(wd.ParameterError):
        wd.differentiate("kind=RectWindowFD;width=5", f, dx)
    with pytest.raises(wd.SizeError):
        wd.differentiate("kind=NaiveFD", np.array([1.0]), dx)
    assert issubclass(wd.SweepCellError, wd.Error)
