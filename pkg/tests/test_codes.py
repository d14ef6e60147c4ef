import math
import random
from fractions import Fraction

import pytest

from iscodes.codes import (CodeError, InterleavedMessage, SubspaceBasis, code_rate, decodable,
                           decoding_radius, encode_gabidulin, encode_subspace, intersection_dim,
                           kernel_dim_bound, make_code, min_subspace_distance, subspace_distance,
                           unique_decodable, unique_radius_gabidulin)
from iscodes.field import make_field

from conftest import construct_min_distance_pair

F8 = make_field(2, 8)


def code(n_t=7, k=4, s=2, F=F8, seed=0):
    return make_code(F, n_t, k, s, rng=random.Random(seed))


def test_make_code_validation():
    P = code()
    assert (P.q, P.m, P.n_t, P.k, P.s) == (2, 8, 7, 4, 2)
    with pytest.raises(CodeError):
        code(n_t=7, k=7)
    with pytest.raises(CodeError):
        code(n_t=9)
    with pytest.raises(CodeError):
        make_code(F8, 3, 1, 1, alpha=[1, 2, 3])
    with pytest.raises(CodeError):
        make_code(F8, 3, 1, 0)
    full = make_code(F8, 8, 4, 1, alpha=[2**i for i in range(8)])
    assert full.alpha == tuple(2**i for i in range(8))


def test_encoders_basic():
    P = code()
    rng = random.Random(1)
    V = encode_subspace(P, InterleavedMessage.zero(P))
    assert V.rows == tuple((a, 0, 0) for a in P.alpha)
    assert encode_gabidulin(P, InterleavedMessage.zero(P)) == [[0] * 7, [0] * 7]
    P1 = code(s=1)
    ident = InterleavedMessage.from_coefficients(F8, [[1]])
    assert encode_subspace(P1, ident).rows == tuple((a, a) for a in P1.alpha)
    assert encode_gabidulin(P1, ident) == [list(P1.alpha)]
    for _ in range(20):
        msg = InterleavedMessage.random(P, rng)
        V = encode_subspace(P, msg)
        assert V.rank() == P.n_t
        words = encode_gabidulin(P, msg)
        assert [list(col) for col in zip(*[r[1:] for r in V.rows])] == words


def test_message_validation():
    P = code()
    bad = InterleavedMessage.from_coefficients(F8, [[1] * 5, [1]])
    with pytest.raises(CodeError):
        encode_subspace(P, bad)
    with pytest.raises(CodeError):
        encode_subspace(P, InterleavedMessage.from_coefficients(F8, [[1]]))


def test_encoding_is_fq_linear():
    F = make_field(3, 4)
    P = make_code(F, 4, 2, 2, rng=random.Random(2))
    rng = random.Random(3)
    for _ in range(10):
        f, g = InterleavedMessage.random(P, rng), InterleavedMessage.random(P, rng)
        c = rng.randrange(3)
        combo = InterleavedMessage.from_coefficients(
            F, [[F.add(F.scale(c, a), b) for a, b in zip(fr, gr)]
                for fr, gr in zip(f.coefficients(2), g.coefficients(2))])
        Vf, Vg, Vc = (encode_subspace(P, x) for x in (f, g, combo))
        for rf, rg, rc in zip(Vf.rows, Vg.rows, Vc.rows):
            assert rc[1:] == tuple(F.add(F.scale(c, a), b) for a, b in zip(rf[1:], rg[1:]))


def test_subspace_distance_examples():
    rng = random.Random(4)
    P = code()
    V = encode_subspace(P, InterleavedMessage.random(P, rng))
    assert subspace_distance(V, V) == 0
    U = SubspaceBasis(F8, [(0, 1, 0)], 3)
    W = SubspaceBasis(F8, [(0, 0, 1), (0, 0, 2)], 3)
    assert subspace_distance(U, W) == 3
    assert intersection_dim(U, W) == 0
    with pytest.raises(CodeError):
        subspace_distance(U, SubspaceBasis(F8, [(1, 1)], 2))


def test_subspace_basis_rejects_dependent_rows():
    with pytest.raises(CodeError):
        SubspaceBasis(F8, [(1, 2), (1, 2)])
    B = SubspaceBasis(F8, [(1, 2), (1, 2), (3, 0)], check=False)
    assert B.rank() == 2 and len(B.reduced()) == 2
    assert SubspaceBasis.from_packed(F8, B.packed(), 2, check=False).rows == B.rows


def test_min_distance_formula():
    assert min_subspace_distance(code()) == 8
    assert min_subspace_distance(code(n_t=5, k=4)) == 4


def test_min_distance_random_pairs():
    F = make_field(2, 6)
    rng = random.Random(5)
    for n_t, k, s in [(4, 2, 1), (5, 3, 2), (6, 3, 2)]:
        P = make_code(F, n_t, k, s, rng=rng)
        d = min_subspace_distance(P)
        for _ in range(200):
            a, b = InterleavedMessage.random(P, rng), InterleavedMessage.random(P, rng)
            if a.coefficients(k) == b.coefficients(k):
                continue
            assert subspace_distance(encode_subspace(P, a), encode_subspace(P, b)) >= d


@pytest.mark.parametrize("n_t,k,s", [(7, 4, 2), (6, 2, 1), (8, 5, 3)])
def test_min_distance_achieved_with_equality(n_t, k, s):
    P = code(n_t, k, s)
    rng = random.Random(6)
    for _ in range(20):
        f, g = construct_min_distance_pair(P, rng)
        assert subspace_distance(encode_subspace(P, f), encode_subspace(P, g)) == min_subspace_distance(P)


def test_metric_axioms():
    rng = random.Random(7)
    F = make_field(2, 4)
    for _ in range(100):
        spaces = []
        for _ in range(3):
            n = rng.randrange(1, 5)
            spaces.append(SubspaceBasis(F, [(F.random(rng), F.random(rng)) for _ in range(n)], 2, check=False))
        a, b, c = spaces
        dab, dbc, dac = subspace_distance(a, b), subspace_distance(b, c), subspace_distance(a, c)
        assert dab >= 0 and dab == subspace_distance(b, a)
        assert dac <= dab + dbc


def test_decoding_radius():
    assert decoding_radius(code(s=2), 12) == 5
    assert decoding_radius(code(s=1), 10) == 3
    assert decoding_radius(code(s=1000, n_t=7, k=4), 10) == 6
    with pytest.raises(CodeError):
        decoding_radius(code(), 3)
    # strict bound: tau < s(n_r - k + 1)/(s + 1)
    for s in range(1, 6):
        for n_r in range(4, 20):
            tau = decoding_radius(code(s=s), n_r)
            assert Fraction(tau) < Fraction(s * (n_r - 3), s + 1) <= tau + 1


def test_decoding_radius_s1_matches_kk_degree_constraint():
    P = code(n_t=7, k=3, s=1)
    for n_r in range(3, 20):
        assert n_r - decoding_radius(P, n_r) == math.ceil((n_r + 3) / 2)


def test_decodable_and_unique():
    P = code()
    assert decodable(P, 0, 0)
    assert decodable(P, 5, 0)
    assert not decodable(P, 8, 0)
    assert decodable(P, 7, 0)
    assert unique_decodable(P, 5, 0)
    assert unique_decodable(P, 6, 0)
    assert not unique_decodable(P, 7, 0)


def test_unique_radius_and_rate_and_bound():
    assert unique_radius_gabidulin(code(n_t=10, k=4, s=1, F=make_field(2, 10))) == 3
    assert unique_radius_gabidulin(code(n_t=7, k=4, s=2)) == 2
    for s in (1, 2, 5):
        assert unique_radius_gabidulin(code(n_t=7, k=6, s=s)) == 0
    assert code_rate(code(n_t=7, k=4, s=2)) == Fraction(64, 161)
    rates = [code_rate(code(k=k)) for k in range(1, 7)]
    assert rates == sorted(rates) and len(set(rates)) == 6
    assert kernel_dim_bound(code(), 5, 0, 5) == 3


def test_rate_trivial_instance():
    # s=1, k=1, m=n_t=1 is excluded by k < n_t; evaluate the formula directly
    from iscodes.codes import CodeParams
    P = CodeParams(make_field(2, 1), 1, 1, 1, (1,))
    assert code_rate(P) == Fraction(1, 2)
