import csv
import math

import pytest

from iscodes.codes import CodeError, make_code
from iscodes.field import make_field
from iscodes.simulate import (BENCH_HEADER, CSV_HEADER, BenchPoint, ExperimentConfig,
                              default_grid, dI_summary, failure_bound, run_complexity_benchmark,
                              run_failure_experiment)


def params(m=8, n_t=7, k=4, s=2):
    return make_code(make_field(2, m), n_t, k, s)


def test_failure_bound_examples():
    assert failure_bound(params(), 5, 0, 5) == pytest.approx(4 * 2.0**-16)
    assert failure_bound(params(), 5, 0, 5) == pytest.approx(6.1e-5, rel=0.01)
    P1 = params(s=1)
    # s = 1: d_I = n_t - k - delta - tau + 1
    assert failure_bound(P1, 0, 0, 1) == pytest.approx(4 * 2.0 ** (-8 * 3))
    with pytest.raises(CodeError):
        failure_bound(params(), 0, 3, 1)  # d_I = 0 < s


def test_failure_bound_decreases_in_m():
    vals = [failure_bound(params(m=m), 5, 0, 5) for m in range(7, 16)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_noiseless_experiment_and_determinism(tmp_path):
    out = tmp_path / "r.csv"
    cfg = ExperimentConfig(2, 8, 7, 4, 2, trials=50, seed=3, out=str(out))
    rep = run_failure_experiment(cfg)
    assert rep.failures == rep.miscorrections == 0 and rep.successes == 50
    rows = list(csv.reader(out.open()))
    assert rows[0] == CSV_HEADER
    assert len(rows) == 2 and rows[1][0:9] == ["2", "8", "7", "4", "2", "0", "0", "2", "50"]


def test_replay_is_bit_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    ra = run_failure_experiment(ExperimentConfig(2, 8, 7, 4, 2, 0, 5, trials=200, seed=42,
                                                 out=str(a), exact_kernel_dim=True))
    rb = run_failure_experiment(ExperimentConfig(2, 8, 7, 4, 2, 0, 5, trials=200, seed=42,
                                                 out=str(b), exact_kernel_dim=True))
    assert a.read_bytes() == b.read_bytes()
    assert ra.summary() == rb.summary()
    assert sum(ra.d_I_counts.values()) == 200 and min(ra.d_I_counts) >= 3
    assert dI_summary(ra.d_I_counts)["min"] >= 3
    rc = run_failure_experiment(ExperimentConfig(2, 8, 7, 4, 2, 0, 5, trials=200, seed=43))
    assert rc.mean_mult_interp != ra.mean_mult_interp


def test_gabidulin_experiment():
    rep = run_failure_experiment(ExperimentConfig(2, 8, 8, 4, 1, trials=100, seed=1,
                                                  mode="gabidulin", t=2))
    assert rep.failures == rep.miscorrections == 0
    assert (rep.config.delta, rep.config.gamma) == (2, 2)


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(2, 8, 7, 4, 2, trials=0)
    with pytest.raises(ValueError):
        ExperimentConfig(2, 8, 7, 4, 2, mode="gabidulin")
    with pytest.raises(ValueError):
        ExperimentConfig(2, 8, 7, 4, 2, mode="other")


def test_benchmark_csv(tmp_path):
    out = tmp_path / "b.csv"
    grid = [BenchPoint(8, 6, 2, 2, m=16), BenchPoint(8, 4, 2, 2, delta=2, m=16, tau=3, mode="gabidulin")]
    res = run_complexity_benchmark(grid, out=out)
    rows = list(csv.reader(out.open()))
    assert rows[0] == BENCH_HEADER and len(rows) == 3
    for r in res:
        assert r.decoded and r.mult_alg1 is not None and r.mult_rge is not None
        assert r.mult_koetter > 0 and r.mult_ge_interp > 0


def test_default_grid_respects_constraints():
    for p in default_grid():
        assert p.k < p.n_t <= p.m
        assert p.gamma <= p.s * (p.n_t - p.k)
