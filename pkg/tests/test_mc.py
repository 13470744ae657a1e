import json
from fractions import Fraction

import numpy as np
import pytest

from hwz.mc import (
    SamplerConfig,
    estimate_cumulants,
    exact_target_value,
    report_json,
    sample_wishart,
)


def test_config_validation():
    with pytest.raises(ValueError):
        SamplerConfig(N=4, M=2, samples=10)
    with pytest.raises(ValueError):
        SamplerConfig(N=2, M=4, samples=0)
    with pytest.raises(ValueError):
        SamplerConfig(N=2, M=4, samples=1, targets=("detW",))


def test_samples_are_hermitian_and_deterministic():
    cfg = SamplerConfig(N=3, M=6, samples=5, seed=7)
    ws1 = list(sample_wishart(cfg))
    ws2 = list(sample_wishart(cfg))
    for w1, w2 in zip(ws1, ws2):
        assert np.allclose(w1, w2)
        assert np.linalg.norm(w1 - w1.conj().T) < 1e-12


def test_exact_target_values():
    # E tr W = c, E tr W^-1 = 1/(c-1), E tr W^-2 = 2N^2/(N^2-1) at c=2
    assert exact_target_value("trW", 8, Fraction(2)) == 2
    assert exact_target_value("trWinv", 8, Fraction(2)) == 1
    assert exact_target_value("trWinv2", 8, Fraction(2)) == Fraction(128, 63)


def test_divergent_moment_is_refused():
    with pytest.raises(ValueError):
        exact_target_value("trWinv2", 2, Fraction(3, 2))


def test_small_run_statistics():
    cfg = SamplerConfig(N=1, M=1, samples=20_000, seed=3, targets=("trW",))
    report = estimate_cumulants(cfg)
    est = report["estimates"][0]
    # |X|^2 is exponential with mean 1; demand 5 sigma agreement
    assert abs(est["value"] - 1.0) < 5 * est["stderr"]
    assert report["rejections"] == 0


def test_report_is_json_and_deterministic():
    cfg = SamplerConfig(N=2, M=4, samples=200, seed=11)
    a = report_json(cfg)
    b = report_json(cfg)
    assert a == b
    payload = json.loads(a)
    assert payload["config"]["rng"] == "numpy.random.Philox"
    assert payload["config"]["c"] == "2/1"
