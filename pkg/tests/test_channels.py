import random
from collections import Counter

import pytest

from iscodes import fq
from iscodes.channels import (ChannelError, OperatorChannelConfig, error_rank, operator_channel,
                              rank_error_channel)
from iscodes.codes import (InterleavedMessage, SubspaceBasis, encode_gabidulin, encode_subspace,
                           intersection_dim, make_code)
from iscodes.field import make_field
from conftest import channel_instance


@pytest.mark.parametrize("q,m,n_t,k,s,delta,gamma", [
    (2, 8, 7, 4, 2, 0, 5), (2, 8, 7, 4, 2, 2, 3), (3, 4, 4, 2, 1, 1, 2), (2, 20, 10, 5, 3, 4, 9),
])
def test_dimensions_and_intersection(q, m, n_t, k, s, delta, gamma):
    rng = random.Random(1)
    for restrict in (False, True):
        for _ in range(20):
            P, msg, V, U = channel_instance(q, m, n_t, k, s, delta, gamma, rng, restrict)
            assert U.rank() == len(U) == n_t - delta + gamma
            assert intersection_dim(U, V) == n_t - delta


def test_noiseless_keeps_row_space():
    rng = random.Random(2)
    P, msg, V, U = channel_instance(2, 8, 7, 4, 2, 0, 0, rng)
    assert U.same_space(V)


def test_restricted_ambient_first_coordinates():
    rng = random.Random(3)
    F = make_field(2, 8)
    P = make_code(F, 4, 2, 1, rng=rng)
    V = InterleavedMessage.random(P, rng)
    V = encode_subspace(P, V)
    U = operator_channel(V, OperatorChannelConfig(0, 3, restrict_ambient=True), rng)
    span = fq.rank(list(P.alpha), 2, 8)
    assert all(fq.rank(list(P.alpha) + [r[0]], 2, 8) == span for r in U.rows)


def test_infeasible_insertions_are_reported():
    rng = random.Random(4)
    F = make_field(2, 2)
    V = SubspaceBasis(F, [(1, 0), (2, 0)], 2)
    with pytest.raises(ChannelError):
        operator_channel(V, OperatorChannelConfig(0, 3), rng)
    V1 = SubspaceBasis(F, [(1, 0)], 2)
    with pytest.raises(ChannelError):
        operator_channel(V1, OperatorChannelConfig(0, 3, restrict_ambient=True), rng)
    with pytest.raises(ChannelError):
        operator_channel(V, OperatorChannelConfig(0, 3, restrict_ambient=True), rng)
    assert len(operator_channel(V, OperatorChannelConfig(0, 2, restrict_ambient=True), rng)) == 4
    with pytest.raises(ChannelError):
        operator_channel(V, OperatorChannelConfig(3, 0), rng)


def test_determinism():
    F = make_field(2, 8)
    P = make_code(F, 7, 4, 2, rng=random.Random(0))
    V = encode_subspace(P, InterleavedMessage.random(P, random.Random(1)))
    cfg = OperatorChannelConfig(1, 4, seed=99)
    assert operator_channel(V, cfg).rows == operator_channel(V, cfg).rows
    assert operator_channel(V, cfg, random.Random(5)).rows == operator_channel(V, cfg, random.Random(5)).rows


def test_kept_subspace_is_uniform():
    # V = F_2^2 inside F_4 x F_4; keeping one dimension picks each of the 3 lines equally often
    F = make_field(2, 2)
    V = SubspaceBasis(F, [(1, 0), (2, 0)], 2)
    rng = random.Random(6)
    counts = Counter()
    N = 3000
    for _ in range(N):
        U = operator_channel(V, OperatorChannelConfig(1, 0), rng)
        counts[U.reduced().rows] += 1
    assert len(counts) == 3
    assert all(abs(c - N / 3) < 5 * (N * 2 / 9) ** 0.5 for c in counts.values())


def test_rank_error_channel():
    F = make_field(2, 8)
    P = make_code(F, 8, 4, 2, rng=random.Random(7))
    rng = random.Random(8)
    cw = encode_gabidulin(P, InterleavedMessage.random(P, rng))
    assert rank_error_channel(F, cw, 0, rng) == cw
    for t in range(0, 9):
        for _ in range(10):
            y = rank_error_channel(F, cw, t, rng)
            err = [[F.sub(a, b) for a, b in zip(yr, cr)] for yr, cr in zip(y, cw)]
            assert error_rank(F, err) == t
    with pytest.raises(ChannelError):
        rank_error_channel(F, cw, 9, rng)
    assert rank_error_channel(F, cw, 3, 11) == rank_error_channel(F, cw, 3, 11)


def test_rank_error_channel_odd_q():
    F = make_field(3, 3)
    P = make_code(F, 3, 1, 2, rng=random.Random(9))
    rng = random.Random(10)
    cw = encode_gabidulin(P, InterleavedMessage.random(P, rng))
    for t in range(4):
        y = rank_error_channel(F, cw, t, rng)
        err = [[F.sub(a, b) for a, b in zip(yr, cr)] for yr, cr in zip(y, cw)]
        assert error_rank(F, err) == t
