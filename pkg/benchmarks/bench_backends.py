"""Wall-clock comparison of the compiled and pure-Python kernels.

    python3 benchmarks/bench_backends.py [--repeat N]

Each row times Kötter interpolation and elimination on the same received
subspace with both backends and checks that the outputs agree.
"""

import argparse
import random
import timeit

from iscodes import _backend
from iscodes.channels import OperatorChannelConfig, operator_channel
from iscodes.codes import InterleavedMessage, decoding_radius, encode_subspace
from iscodes.interpolation import interpolation_matrix, interpolation_ncols, make_instance
from iscodes.simulate import code_for

CASES = [  # (m, n_t, k, s, gamma)
    (8, 7, 4, 2, 5),
    (16, 12, 6, 2, 6),
    (24, 16, 8, 3, 12),
    (32, 24, 12, 4, 24),
]


def run(repeat: int) -> None:
    if not _backend.NATIVE_AVAILABLE:
        print("compiled kernels not built; only the Python backend is available")
        return
    print(f"{'case':<22}{'kernel':<10}{'python ms':>12}{'native ms':>12}{'speedup':>10}")
    for m, n_t, k, s, gamma in CASES:
        params = code_for(2, m, n_t, k, s, seed=1)
        F = params.field
        rng = random.Random(7)
        msg = InterleavedMessage.random(params, rng)
        U = operator_channel(encode_subspace(params, msg), OperatorChannelConfig(0, gamma), rng)
        pts = U.reduced().rows
        tau = decoding_radius(params, len(pts))
        inst = make_instance(F, pts, s, k, tau)
        R = interpolation_matrix(inst)
        ncols = interpolation_ncols(inst)
        jobs = {
            "koetter": lambda b: _backend.koetter(F, pts, s, k, b),
            "rref": lambda b: _backend.rref(F, R, ncols, b),
        }
        for name, job in jobs.items():
            assert job("python") == job("native"), f"backends disagree on {name}"
            tp = min(timeit.repeat(lambda: job("python"), number=1, repeat=repeat)) * 1e3
            tn = min(timeit.repeat(lambda: job("native"), number=1, repeat=repeat)) * 1e3
            label = f"m={m} nt={n_t} s={s} g={gamma}"
            print(f"{label:<22}{name:<10}{tp:>12.3f}{tn:>12.3f}{tp / tn:>9.1f}x")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    run(ap.parse_args().repeat)
