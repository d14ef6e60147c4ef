"""Command-line entry point: ``iscodes {params,simulate,bench,encode,decode}``."""

from __future__ import annotations

import argparse
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from iscodes import io
from iscodes.channels import ChannelError, OperatorChannelConfig, operator_channel, rank_error_channel
from iscodes.codes import (CodeError, CodeParams, InterleavedMessage, code_rate, decodable,
                           decoding_radius, encode_gabidulin, encode_subspace, kernel_dim_bound,
                           make_code, min_subspace_distance, unique_decodable,
                           unique_radius_gabidulin)
from iscodes.decoder import (FAILURE, list_decode, list_decode_gabidulin, unique_decode,
                             unique_decode_gabidulin)
from iscodes.field import FieldError, make_field
from iscodes.simulate import (BenchPoint, ExperimentConfig, default_grid, failure_bound,
                              run_complexity_benchmark, run_failure_experiment)

EXIT_DECODING_FAILURE = 3


def _default_seed() -> int:
    raw = os.environ.get("ISC_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: ISC_SEED={raw!r} is not an integer")


def _code_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--q", type=int, default=2, help="base field size")
    p.add_argument("--m", type=int, required=required, help="extension degree")
    p.add_argument("--nt", type=int, required=required, help="code dimension n_t (Gabidulin length n)")
    p.add_argument("--k", type=int, required=required, help="message length per branch")
    p.add_argument("--s", type=int, default=1, help="interleaving order")


def _channel_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", type=int, default=0, help="deletions")
    p.add_argument("--gamma", type=int, default=0, help="insertions")
    p.add_argument("--t", type=int, default=None, help="error rank (gabidulin mode)")
    p.add_argument("--mode", choices=("subspace", "gabidulin"), default="subspace")
    p.add_argument("--seed", type=int, default=None, help="master seed (falls back to ISC_SEED)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="iscodes",
                                 description="Interleaved subspace and Gabidulin code toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="print radii, rate and failure bound")
    _code_args(p)
    _channel_args(p)
    p.add_argument("--tau", type=int, default=None)

    p = sub.add_parser("simulate", help="Monte Carlo failure-rate experiment")
    _code_args(p)
    _channel_args(p)
    p.add_argument("--tau", type=int, default=None)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--kernel-dim", action="store_true", help="record exact dim ker(R) per trial")
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("bench", help="multiplication counts over a parameter grid")
    _code_args(p, required=False)
    _channel_args(p)
    p.add_argument("--tau", type=int, default=None)
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("encode", help="encode a message file, optionally through a channel")
    _code_args(p)
    _channel_args(p)
    p.add_argument("input", type=Path)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("decode", help="decode a basis file (subspace) or word file (gabidulin)")
    _code_args(p)
    _channel_args(p)
    p.add_argument("input", type=Path)
    p.add_argument("--tau", type=int, default=None)
    p.add_argument("--list", action="store_true", help="list decoding instead of unique decoding")
    p.add_argument("--cap", type=int, default=1024, help="maximum list size")
    p.add_argument("--out", type=Path, default=None)
    return ap


def standard_code(args) -> CodeParams:
    """Code locators 1, z, ..., z^(n_t-1), so encode and decode agree without a seed."""
    F = make_field(args.q, args.m)
    return make_code(F, args.nt, args.k, args.s, alpha=[args.q ** i for i in range(args.nt)])


def _fmt_bound(x: float) -> str:
    return f"{x:.4g}"


def cmd_params(args) -> int:
    params = standard_code(args)
    delta, gamma = args.delta, args.gamma
    if args.mode == "gabidulin":
        t = args.t or 0
        delta = gamma = t
    n_r = params.n_t - delta + gamma
    tau = args.tau if args.tau is not None else decoding_radius(params, n_r)
    print(f"n_r={n_r}")
    print(f"tau_max={decoding_radius(params, n_r)}")
    print(f"d_s,min={min_subspace_distance(params)}")
    rate = code_rate(params)
    print(f"rate={rate} ({float(rate):.4f})")
    if args.mode == "gabidulin":
        print(f"t_unique={unique_radius_gabidulin(params)}")
        print(f"t_list<{Fraction(params.s * (params.n - params.k + 1), params.s + 1)}")
    print(f"decodable={decodable(params, gamma, delta)}")
    print(f"unique_decodable={unique_decodable(params, gamma, delta)}")
    print(f"d_I>={kernel_dim_bound(params, gamma, delta, tau)}")
    try:
        print(f"bound={_fmt_bound(failure_bound(params, gamma, delta, tau))}")
    except CodeError as exc:
        print(f"bound=n/a ({exc})")
    return 0


def cmd_simulate(args) -> int:
    cfg = ExperimentConfig(q=args.q, m=args.m, n_t=args.nt, k=args.k, s=args.s,
                           delta=args.delta, gamma=args.gamma, trials=args.trials,
                           seed=args.seed, tau=args.tau,
                           out=str(args.out) if args.out else None, mode=args.mode, t=args.t,
                           exact_kernel_dim=args.kernel_dim)
    rep = run_failure_experiment(cfg)
    bound = "n/a" if rep.bound is None else _fmt_bound(rep.bound)
    print(f"trials={rep.trials} failures={rep.failures} miscorrections={rep.miscorrections} "
          f"failure_rate={rep.failure_rate:.3g} bound={bound} tau={rep.tau}")
    if rep.failure_reasons:
        print("reasons=" + ",".join(f"{k}:{v}" for k, v in rep.failure_reasons.items()))
    if rep.d_I_counts:
        print("d_I=" + ",".join(f"{k}:{v}" for k, v in rep.d_I_counts.items()))
    print(f"mean_mult_interp={rep.mean_mult_interp:.1f} mean_mult_rootfind={rep.mean_mult_rootfind:.1f} "
          f"wall={rep.wall_time:.1f}s")
    return 0


def cmd_bench(args) -> int:
    if args.nt is not None:
        if args.k is None or args.m is None:
            raise CodeError("a single bench point needs --m, --nt and --k")
        gamma = args.t if args.mode == "gabidulin" else args.gamma
        delta = args.t if args.mode == "gabidulin" else args.delta
        grid = [BenchPoint(args.nt, args.k, args.s, gamma or 0, delta or 0, args.q, args.m,
                           args.tau, args.mode, args.seed)]
    else:
        grid = [BenchPoint(**{**p.__dict__, "seed": args.seed}) for p in default_grid()]
    results = run_complexity_benchmark(grid, out=args.out)
    for r in results:
        p = r.point
        print(f"{p.mode} s={p.s} nt={p.n_t} k={p.k} gamma={p.gamma} delta={p.delta} tau={r.tau} "
              f"koetter={r.mult_koetter} ge={r.mult_ge_interp} alg1={r.mult_alg1} rge={r.mult_rge}")
    return 0


def cmd_encode(args) -> int:
    params = standard_code(args)
    msg = io.read_message(args.input, params.field, params.s, params.k)
    rng = random.Random(args.seed)
    if args.mode == "gabidulin":
        words = encode_gabidulin(params, msg)
        if args.t:
            words = rank_error_channel(params.field, words, args.t, rng)
        io.write_words(args.out, words)
    else:
        V = encode_subspace(params, msg)
        if args.delta or args.gamma:
            V = operator_channel(V, OperatorChannelConfig(args.delta, args.gamma), rng)
        io.write_basis(args.out, V)
    return 0


def _write_or_print(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


def _message_text(msg: InterleavedMessage, k: int) -> str:
    return "".join(" ".join(str(a) for a in row) + "\n" for row in msg.coefficients(k))


def cmd_decode(args) -> int:
    params = standard_code(args)
    F = params.field
    if args.mode == "gabidulin":
        words = io.read_words(args.input, F, params.s, params.n)
        out = (list_decode_gabidulin(words, params, args.tau, args.cap) if args.list
               else unique_decode_gabidulin(words, params, args.tau))
    else:
        basis = io.read_basis(args.input, F, params.s + 1)
        out = (list_decode(basis, params, args.tau, args.cap) if args.list
               else unique_decode(basis, params, args.tau))
    if out.kind == FAILURE:
        print(f"decoding failure: {out.failure_reason}", file=sys.stderr)
        return EXIT_DECODING_FAILURE
    if args.list:
        parts = [f"# candidate {i}\n" + _message_text(c, params.k)
                 for i, c in enumerate(out.candidates, 1)]
        _write_or_print(args.out, "\n".join(parts) if parts else "# empty list\n")
    else:
        _write_or_print(args.out, _message_text(out.message, params.k))
    return 0


COMMANDS = {"params": cmd_params, "simulate": cmd_simulate, "bench": cmd_bench,
            "encode": cmd_encode, "decode": cmd_decode}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is None:
        args.seed = _default_seed()
    try:
        return COMMANDS[args.command](args)
    except (CodeError, FieldError, ChannelError, io.FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
