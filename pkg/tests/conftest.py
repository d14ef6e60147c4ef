import random

import pytest

from iscodes.channels import OperatorChannelConfig, operator_channel
from iscodes.codes import InterleavedMessage, encode_subspace, make_code
from iscodes.field import make_field
from iscodes.linalg import matrix_kernel
from iscodes.linearized import LinearizedPoly, moore_matrix

# (q, m): table-driven, carry-less, odd with tables, odd without tables
FIELD_PARAMS = [(2, 4), (2, 8), (2, 20), (3, 4), (5, 3), (3, 11)]


@pytest.fixture(params=FIELD_PARAMS, ids=lambda p: f"GF{p[0]}^{p[1]}")
def field(request):
    return make_field(*request.param)


@pytest.fixture
def rng():
    return random.Random(12345)


def schoolbook_mul(F, a, b):
    """Independent oracle: digit-list product reduced by the modulus."""
    q, m = F.q, F.m
    da, db = F.coords(a), F.coords(b)
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % q
    mod = F.modulus
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            for i in range(m + 1):
                prod[d - m + i] = (prod[d - m + i] - c * mod[i]) % q
    return F.from_coords(prod[:m])


def channel_instance(q, m, n_t, k, s, delta, gamma, rng, restrict=False):
    F = make_field(q, m)
    params = make_code(F, n_t, k, s, rng=rng)
    msg = InterleavedMessage.random(params, rng)
    V = encode_subspace(params, msg)
    U = operator_channel(V, OperatorChannelConfig(delta, gamma, restrict_ambient=restrict), rng)
    return params, msg, V, U


def suite_instances(count, seed, ms=(4, 6, 8), ss=(1, 2, 3), nts=range(4, 8)):
    """Random channel outputs at small parameters inside the guaranteed regime
    (gamma <= tau, gamma/s + delta < n_t - k + 1)."""
    from iscodes.codes import decodable, decoding_radius
    from iscodes.interpolation import make_instance

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = rng.choice(ms)
        s = rng.choice(ss)
        n_t = rng.choice([n for n in nts if n <= m])
        k = rng.randrange(1, n_t)
        delta = rng.randrange(0, n_t - k + 1)
        gamma = rng.randrange(0, s * (n_t - k + 1 - delta))
        params, msg, V, U = channel_instance(2, m, n_t, k, s, delta, gamma, rng)
        n_r = n_t - delta + gamma
        if n_r < k:
            continue
        tau = decoding_radius(params, n_r)
        if gamma > tau or not decodable(params, gamma, delta) or n_r - tau - k + 1 < 1:
            continue
        inst = make_instance(params.field, U.reduced().rows, s, k, tau)
        out.append((params, msg, V, U, inst, delta, gamma))
    return out


def column_keys(inst):
    """MonomialKey of each column of the interpolation matrix."""
    from iscodes.linearized import MonomialKey
    keys = [MonomialKey(0, i, inst.k) for i in range(inst.x_len)]
    for j in range(1, inst.s + 1):
        keys.extend(MonomialKey(j, i, inst.k) for i in range(inst.y_len))
    return keys


def minimal_leading_terms(inst):
    """For each variable, the smallest monomial that is the leading term of some
    element of ker(R): the first column, in monomial order, that lies in the
    span of all smaller columns."""
    from iscodes.interpolation import interpolation_matrix
    from iscodes.linalg import matrix_rank

    F = inst.field
    R = interpolation_matrix(inst)
    keys = column_keys(inst)
    order = sorted(range(len(keys)), key=lambda c: keys[c])
    best = {}
    cols: list[int] = []
    rank = 0
    for c in order:
        cols.append(c)
        sub = [[row[i] for i in cols] for row in R]
        r = matrix_rank(F, sub, len(cols)) if R else 0
        if r == rank:
            best.setdefault(keys[c].variable, keys[c])
        rank = r
    return best


def annihilator(F, pts, k):
    """Nonzero linearized polynomial of q-degree k-1 vanishing on k-1 independent points."""
    M = moore_matrix(F, pts, k)              # k x (k-1), entry (i, j) = pts_j^[i]
    rows = [list(col) for col in zip(*M)]    # (k-1) x k: h(pts_j) = sum_i h_i pts_j^[i]
    ker = matrix_kernel(F, rows, k)
    assert len(ker) == 1
    return LinearizedPoly(F, ker[0])


def construct_min_distance_pair(P, rng):
    F = P.field
    f = InterleavedMessage.random(P, rng)
    h = annihilator(F, list(P.alpha[:P.k - 1]), P.k)
    assert h.degree == P.k - 1
    g_first = f.polys[0] + h
    g = InterleavedMessage((g_first,) + f.polys[1:])
    return f, g


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
