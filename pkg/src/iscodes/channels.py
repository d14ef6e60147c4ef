"""Operator channel for subspace codewords, rank-error channel for
Gabidulin codewords."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from iscodes import fq
from iscodes.codes import SubspaceBasis

MAX_TRIES = 10**6


class ChannelError(ValueError):
    pass


@dataclass(frozen=True)
class OperatorChannelConfig:
    delta: int
    gamma: int
    seed: int | None = None
    restrict_ambient: bool = False


def _random_error_vector(V: SubspaceBasis, span_first: list[int], restrict: bool,
                         rng: random.Random) -> int:
    F = V.field
    order = F.order
    if not restrict:
        return rng.randrange(order ** V.arity)
    # first coordinate from the F_q-span of the evaluation points
    coeffs = [rng.randrange(F.q) for _ in span_first]
    first = fq.combine(coeffs, span_first, F.q, F.m)
    rest = rng.randrange(order ** (V.arity - 1))
    return first + rest * order


def operator_channel(V: SubspaceBasis, cfg: OperatorChannelConfig,
                     rng: random.Random | None = None) -> SubspaceBasis:
    """U = H ⊕ E: a uniform (n_t - delta)-subspace of V plus gamma insertions."""
    F = V.field
    q, width = F.q, V.width
    n_t = len(V)
    delta, gamma = cfg.delta, cfg.gamma
    if not 0 <= delta <= n_t:
        raise ChannelError(f"delta={delta} outside [0, {n_t}]")
    if gamma < 0:
        raise ChannelError(f"gamma={gamma} is negative")
    span_first = fq.rref([r[0] for r in V.rows], q, F.m)
    ambient = (len(span_first) + (V.arity - 1) * F.m) if cfg.restrict_ambient else width
    if n_t + gamma > ambient:
        raise ChannelError(
            f"no {gamma}-dimensional insertion space avoids V inside an ambient space "
            f"of dimension {ambient}")
    rng = rng if rng is not None else random.Random(cfg.seed)
    packed = V.packed()

    H = fq.random_full_rank(n_t - delta, n_t, q, rng, MAX_TRIES)
    kept = [fq.combine(row, packed, q, width) for row in H]

    # grow E one vector at a time; each accepted vector is uniform among the
    # vectors outside the current span, so the tuple is uniform over valid ones
    basis = list(packed)
    cur_rank = n_t
    errors = []
    tries = 0
    while len(errors) < gamma:
        tries += 1
        if tries > MAX_TRIES:
            raise ChannelError("rejection sampling of the insertion space did not terminate")
        e = _random_error_vector(V, span_first, cfg.restrict_ambient, rng)
        if fq.rank(basis + [e], q, width) == cur_rank + 1:
            basis.append(e)
            cur_rank += 1
            errors.append(e)

    stacked = kept + errors
    n_r = len(stacked)
    if n_r:
        S = fq.random_full_rank(n_r, n_r, q, rng, MAX_TRIES)
        stacked = [fq.combine(row, stacked, q, width) for row in S]
    return SubspaceBasis.from_packed(F, stacked, V.arity)


def error_rank(F, errors: Sequence[Sequence[int]]) -> int:
    """F_q-rank of the stacked (s*m) x n expansion of s error words."""
    if not errors or not errors[0]:
        return 0
    order = F.order
    cols = []
    for i in range(len(errors[0])):
        v = 0
        for e in reversed(errors):
            v = v * order + e[i]
        cols.append(v)
    return fq.rank(cols, F.q, F.m * len(errors))


def rank_error_channel(F, codeword: Sequence[Sequence[int]], t: int,
                       rng: random.Random | int | None = None) -> list[list[int]]:
    """Add an interleaved error whose stacked F_q-expansion has rank exactly t."""
    s = len(codeword)
    n = len(codeword[0]) if s else 0
    if not 0 <= t <= n:
        raise ChannelError(f"error rank t={t} outside [0, {n}]")
    if t > s * F.m:
        raise ChannelError(f"error rank t={t} exceeds s*m={s * F.m}")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    if t == 0:
        return [list(c) for c in codeword]
    q = F.q
    B = fq.random_full_rank(t, n, q, rng, MAX_TRIES)
    # column coefficients (a_l^(1..s)) packed into F_q^(s*m); independent <=> rank t
    width = s * F.m
    A: list[int] = []
    tries = 0
    while len(A) < t:
        tries += 1
        if tries > MAX_TRIES:
            raise ChannelError("rejection sampling of error coefficients did not terminate")
        a = rng.randrange(F.order ** s)
        if fq.rank(A + [a], q, width) == len(A) + 1:
            A.append(a)
    coeff = [[(a // F.order**j) % F.order for a in A] for j in range(s)]
    out = []
    for j in range(s):
        row = []
        for i in range(n):
            e = 0
            for l in range(t):
                if B[l][i]:
                    e = F.add(e, F.scale(B[l][i], coeff[j][l]))
            row.append(F.add(codeword[j][i], e))
        out.append(row)
    return out
