"""Monte Carlo failure-rate experiments and multiplication-count benchmarks."""

from __future__ import annotations

import csv
import math
import random
import statistics
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

from iscodes.channels import OperatorChannelConfig, operator_channel, rank_error_channel
from iscodes.codes import (CodeError, CodeParams, InterleavedMessage, decoding_radius,
                           encode_gabidulin, encode_subspace, kernel_dim_bound, make_code)
from iscodes.decoder import FAILURE, gabidulin_points, unique_decode
from iscodes.field import MulCounter, make_field
from iscodes.interpolation import (InterpolationInstance, check_success, interpolate_basis,
                                   interpolation_kernel, interpolation_matrix, interpolation_ncols)
from iscodes.linalg import matrix_rank
from iscodes.rootfinding import (RootFindingError, build_root_system, find_roots_detailed,
                                 select_full_rank, solve_root_system_unique)

CSV_HEADER = ["q", "m", "nt", "k", "s", "delta", "gamma", "tau", "trials", "failures",
              "miscorrections", "failure_rate", "bound", "mult_interp", "mult_rootfind", "seed"]

BENCH_HEADER = ["mode", "q", "m", "nt", "k", "s", "delta", "gamma", "n_r", "tau",
                "mult_koetter", "mult_ge_interp", "mult_alg1", "mult_rge", "decoded", "seed"]


def failure_bound(params: CodeParams, gamma: int, delta: int, tau: int) -> float:
    """4 q^(-m (d_I + 1 - s)) with d_I the kernel-dimension lower bound."""
    d_I = kernel_dim_bound(params, gamma, delta, tau)
    if d_I < params.s:
        raise CodeError(f"kernel bound d_I={d_I} below s={params.s}; the failure bound does not apply")
    return 4.0 * float(params.q) ** (-params.m * (d_I + 1 - params.s))


def trial_rng(seed: int, trial: int) -> random.Random:
    # string seeds go through sha512, so the stream is stable across runs and platforms
    return random.Random(f"{seed}/{trial}")


def code_for(q: int, m: int, n_t: int, k: int, s: int, seed: int) -> CodeParams:
    return make_code(make_field(q, m), n_t, k, s, rng=random.Random(f"{seed}/code"))


@dataclass
class ExperimentConfig:
    q: int
    m: int
    n_t: int
    k: int
    s: int
    delta: int = 0
    gamma: int = 0
    trials: int = 1000
    seed: int = 0
    tau: int | None = None
    out: str | None = None
    mode: str = "subspace"
    t: int | None = None
    exact_kernel_dim: bool = False
    backend: str | None = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.mode not in ("subspace", "gabidulin"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "gabidulin":
            if self.t is None:
                raise ValueError("gabidulin mode needs the error rank t")
            # a rank-t error acts like t deletions plus t insertions
            self.delta = self.gamma = self.t

    @property
    def n_r(self) -> int:
        return self.n_t - self.delta + self.gamma


@dataclass
class ExperimentReport:
    config: ExperimentConfig
    trials: int
    failures: int
    miscorrections: int
    failure_rate: float
    bound: float | None
    tau: int
    mean_mult_interp: float
    mean_mult_rootfind: float
    failure_reasons: dict[str, int] = field(default_factory=dict)
    d_I_counts: dict[int, int] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def successes(self) -> int:
        return self.trials - self.failures - self.miscorrections

    def csv_row(self) -> list[Any]:
        c = self.config
        return [c.q, c.m, c.n_t, c.k, c.s, c.delta, c.gamma, self.tau, self.trials,
                self.failures, self.miscorrections, repr(self.failure_rate),
                "" if self.bound is None else repr(self.bound),
                repr(self.mean_mult_interp), repr(self.mean_mult_rootfind), c.seed]

    def summary(self) -> dict[str, Any]:
        d = asdict(self)
        d.pop("config")
        d.pop("wall_time")
        return d


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def _kernel_dim(params: CodeParams, received, tau: int) -> int:
    basis = received.reduced()
    inst = InterpolationInstance(params.field, basis.rows, params.s, params.k, tau)
    if inst.y_len < 1:
        return 0
    return interpolation_ncols(inst) - matrix_rank(params.field, interpolation_matrix(inst),
                                                   interpolation_ncols(inst))


def run_failure_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    """Encode, transmit and uniquely decode ``cfg.trials`` random messages.

    A trial counts as a failure when the decoder says so and as a
    miscorrection when it returns a message other than the one sent.
    """
    start = time.perf_counter()
    params = code_for(cfg.q, cfg.m, cfg.n_t, cfg.k, cfg.s, cfg.seed)
    F = params.field
    tau = cfg.tau if cfg.tau is not None else decoding_radius(params, cfg.n_r)
    try:
        bound = failure_bound(params, cfg.gamma, cfg.delta, tau)
    except CodeError:
        bound = None
    chan = OperatorChannelConfig(cfg.delta, cfg.gamma)

    failures = mis = 0
    reasons: Counter[str] = Counter()
    d_I: Counter[int] = Counter()
    interp_total = root_total = root_runs = 0
    for trial in range(cfg.trials):
        rng = trial_rng(cfg.seed, trial)
        msg = InterleavedMessage.random(params, rng)
        if cfg.mode == "gabidulin":
            words = rank_error_channel(F, encode_gabidulin(params, msg), cfg.t, rng)
            received = gabidulin_points(params, words)
        else:
            received = operator_channel(encode_subspace(params, msg), chan, rng)
        out = unique_decode(received, params, cfg.tau, backend=cfg.backend)
        interp_total += out.diagnostics.get("mult_interp", 0)
        if "mult_rootfind" in out.diagnostics:
            root_total += out.diagnostics["mult_rootfind"]
            root_runs += 1
        if cfg.exact_kernel_dim:
            d_I[_kernel_dim(params, received, out.diagnostics.get("tau", tau))] += 1
        if out.kind == FAILURE:
            failures += 1
            reasons[out.failure_reason] += 1
        elif out.message.coefficients(params.k) != msg.coefficients(params.k):
            mis += 1

    report = ExperimentReport(
        config=cfg, trials=cfg.trials, failures=failures, miscorrections=mis,
        failure_rate=failures / cfg.trials, bound=bound, tau=tau,
        mean_mult_interp=interp_total / cfg.trials,
        mean_mult_rootfind=root_total / root_runs if root_runs else 0.0,
        failure_reasons=dict(sorted(reasons.items())),
        d_I_counts=dict(sorted(d_I.items())),
        wall_time=time.perf_counter() - start,
    )
    if cfg.out:
        write_csv(cfg.out, CSV_HEADER, [report.csv_row()])
    return report


@dataclass(frozen=True)
class BenchPoint:
    n_t: int
    k: int
    s: int
    gamma: int
    delta: int = 0
    q: int = 2
    m: int = 24
    tau: int | None = None
    mode: str = "subspace"
    seed: int = 0


def default_grid() -> list[BenchPoint]:
    """s = 1..4 at rate k = 3n_t/4 over several lengths, sweeping the insertions
    up to the decoding radius; plus Gabidulin points where n_r = n is fixed
    and only the error rank moves."""
    pts = []
    for s in (1, 2, 3, 4):
        for n_t in (8, 16, 24, 32):
            k = 3 * n_t // 4
            m = max(24, n_t)
            gmax = s * (n_t - k)
            for gamma in sorted({0, gmax // 4, gmax // 2, gmax}):
                pts.append(BenchPoint(n_t, k, s, gamma, m=m))
    for s in (1, 2, 3, 4):
        n, k = 16, 8
        tau = s * (n - k) // (s + 1)
        for t in range(0, tau + 1, max(1, tau // 3)):
            pts.append(BenchPoint(n, k, s, t, delta=t, tau=tau, mode="gabidulin"))
    return pts


@dataclass
class BenchResult:
    point: BenchPoint
    n_r: int
    tau: int
    mult_koetter: int
    mult_ge_interp: int
    mult_alg1: int | None
    mult_rge: int | None
    decoded: bool

    def csv_row(self) -> list[Any]:
        p = self.point
        return [p.mode, p.q, p.m, p.n_t, p.k, p.s, p.delta, p.gamma, self.n_r, self.tau,
                self.mult_koetter, self.mult_ge_interp,
                "" if self.mult_alg1 is None else self.mult_alg1,
                "" if self.mult_rge is None else self.mult_rge,
                int(self.decoded), p.seed]


def bench_point(p: BenchPoint, backend: str | None = None) -> BenchResult:
    params = code_for(p.q, p.m, p.n_t, p.k, p.s, p.seed)
    F = params.field
    rng = trial_rng(p.seed, 0)
    msg = InterleavedMessage.random(params, rng)
    if p.mode == "gabidulin":
        words = rank_error_channel(F, encode_gabidulin(params, msg), p.gamma, rng)
        received = gabidulin_points(params, words).reduced()
    else:
        cfg = OperatorChannelConfig(p.delta, p.gamma)
        received = operator_channel(encode_subspace(params, msg), cfg, rng).reduced()
    n_r = len(received)
    tau = p.tau if p.tau is not None else decoding_radius(params, n_r)
    inst = InterpolationInstance(F, received.rows, p.s, p.k, tau)

    res = interpolate_basis(inst, backend=backend)
    ge = MulCounter()
    kernel = interpolation_kernel(inst, counter=ge, allow_empty=True)

    alg1 = rge = None
    decoded = False
    if check_success(res, inst):
        try:
            rf = find_roots_detailed(res.polys, p.k)
            alg1 = rf.mult_count
            decoded = rf.message.coefficients(p.k) == msg.coefficients(p.k)
        except RootFindingError:
            pass
    # recursive elimination on s kernel polynomials with an invertible top block,
    # so its tally depends on (n_r, k, s, tau) only
    try:
        system = build_root_system(select_full_rank(kernel, p.k, n_r, tau), p.k, n_r, tau)
        cnt = MulCounter()
        solve_root_system_unique(system, cnt)
        rge = cnt.count
    except ArithmeticError:
        rge = None
    return BenchResult(p, n_r, tau, res.mult_count, ge.count, alg1, rge, decoded)


def run_complexity_benchmark(grid: Iterable[BenchPoint], out: str | Path | None = None,
                             backend: str | None = None) -> list[BenchResult]:
    results = [bench_point(p, backend) for p in grid]
    if out:
        write_csv(out, BENCH_HEADER, [r.csv_row() for r in results])
    return results


def interp_ratio(r: BenchResult) -> float:
    """Kötter count normalised by s^2 n_r (n_r - tau)."""
    s = r.point.s
    denom = s * s * r.n_r * max(r.n_r - r.tau, 1)
    return r.mult_koetter / denom if denom else math.inf


def dI_summary(counts: dict[int, int]) -> dict[str, float]:
    vals = [d for d, c in counts.items() for _ in range(c)]
    if not vals:
        return {}
    return {"min": min(vals), "max": max(vals), "mean": statistics.fmean(vals)}
