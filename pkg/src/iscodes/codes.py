"""Interleaved subspace (KK) and interleaved Gabidulin codes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from iscodes import fq
from iscodes.field import FieldContext, random_independent_set, rank_over_base
from iscodes.linearized import LinearizedPoly


class CodeError(ValueError):
    pass


@dataclass(frozen=True)
class CodeParams:
    field: FieldContext
    n_t: int
    k: int
    s: int
    alpha: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def n(self) -> int:
        """Gabidulin length; the code locators are ``alpha``."""
        return self.n_t


def make_code(field: FieldContext, n_t: int, k: int, s: int,
              alpha: Sequence[int] | None = None,
              rng: random.Random | None = None) -> CodeParams:
    if s < 1:
        raise CodeError(f"interleaving order s={s} must be at least 1")
    if k < 1:
        raise CodeError(f"k={k} must be at least 1")
    if n_t > field.m:
        raise CodeError(f"n_t={n_t} exceeds m={field.m}")
    if k >= n_t:
        raise CodeError(f"k={k} must be smaller than n_t={n_t}")
    if alpha is None:
        alpha = random_independent_set(field, n_t, rng or random.Random(0))
    alpha = tuple(field.check(a) for a in alpha)
    if len(alpha) != n_t:
        raise CodeError(f"expected {n_t} evaluation points, got {len(alpha)}")
    if rank_over_base(field, alpha) != n_t:
        raise CodeError("evaluation points are not linearly independent over F_q")
    return CodeParams(field, n_t, k, s, alpha)


@dataclass(frozen=True)
class InterleavedMessage:
    polys: tuple[LinearizedPoly, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "polys", tuple(self.polys))

    @classmethod
    def from_coefficients(cls, field: FieldContext, rows: Iterable[Sequence[int]]) -> "InterleavedMessage":
        return cls(tuple(LinearizedPoly(field, r) for r in rows))

    @classmethod
    def zero(cls, params: CodeParams) -> "InterleavedMessage":
        return cls(tuple(LinearizedPoly(params.field) for _ in range(params.s)))

    @classmethod
    def random(cls, params: CodeParams, rng: random.Random) -> "InterleavedMessage":
        F = params.field
        return cls(tuple(LinearizedPoly(F, [F.random(rng) for _ in range(params.k)])
                         for _ in range(params.s)))

    def coefficients(self, k: int) -> list[list[int]]:
        return [[p.coeff(i) for i in range(k)] for p in self.polys]

    def validate(self, params: CodeParams) -> None:
        if len(self.polys) != params.s:
            raise CodeError(f"message has {len(self.polys)} branches, code has s={params.s}")
        for j, p in enumerate(self.polys, 1):
            if p.field != params.field:
                raise CodeError("message polynomial over a different field")
            if p.degree >= params.k:
                raise CodeError(f"branch {j} has q-degree {p.degree} >= k={params.k}")


class SubspaceBasis:
    """Rows in F_{q^m}^(s+1) spanning a subspace over F_q.

    Each row also has a packed form: the F_q-coordinates of all s+1 entries
    as one integer ``sum(row[c] * (q^m)^c)``, which is what every F_q
    rank computation runs on.
    """

    __slots__ = ("field", "rows", "arity")

    def __init__(self, field: FieldContext, rows: Iterable[Sequence[int]],
                 arity: int | None = None, check: bool = True):
        self.field = field
        self.rows = tuple(tuple(field.check(a) for a in r) for r in rows)
        if arity is None:
            if not self.rows:
                raise CodeError("empty basis needs an explicit arity")
            arity = len(self.rows[0])
        self.arity = arity
        if any(len(r) != arity for r in self.rows):
            raise CodeError("rows of unequal length")
        if check and self.rank() != len(self.rows):
            raise CodeError("basis rows are linearly dependent over F_q")

    @property
    def width(self) -> int:
        return self.arity * self.field.m

    def packed(self) -> list[int]:
        order = self.field.order
        out = []
        for r in self.rows:
            v = 0
            for a in reversed(r):
                v = v * order + a
            out.append(v)
        return out

    @classmethod
    def from_packed(cls, field: FieldContext, vectors: Iterable[int], arity: int,
                    check: bool = False) -> "SubspaceBasis":
        order = field.order
        rows = []
        for v in vectors:
            r = []
            for _ in range(arity):
                v, a = divmod(v, order)
                r.append(a)
            rows.append(r)
        return cls(field, rows, arity, check=check)

    def rank(self) -> int:
        return fq.rank(self.packed(), self.field.q, self.width)

    def __len__(self) -> int:
        return len(self.rows)

    def reduced(self) -> "SubspaceBasis":
        """Canonical basis: reduced echelon form over F_q."""
        vecs = fq.rref(self.packed(), self.field.q, self.width)
        return SubspaceBasis.from_packed(self.field, vecs, self.arity)

    def same_space(self, other: "SubspaceBasis") -> bool:
        return self.reduced().rows == other.reduced().rows

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim={len(self.rows)}, arity={self.arity})"


def encode_subspace(params: CodeParams, msg: InterleavedMessage) -> SubspaceBasis:
    msg.validate(params)
    rows = [(a,) + tuple(f(a) for f in msg.polys) for a in params.alpha]
    return SubspaceBasis(params.field, rows, params.s + 1, check=False)


def encode_gabidulin(params: CodeParams, msg: InterleavedMessage) -> list[list[int]]:
    msg.validate(params)
    return [[f(g) for g in params.alpha] for f in msg.polys]


def _check_compatible(U: SubspaceBasis, V: SubspaceBasis) -> None:
    if U.field != V.field or U.arity != V.arity:
        raise CodeError("subspaces live in different ambient spaces")


def subspace_distance(U: SubspaceBasis, V: SubspaceBasis) -> int:
    _check_compatible(U, V)
    q, w = U.field.q, U.width
    pu, pv = U.packed(), V.packed()
    du, dv = fq.rank(pu, q, w), fq.rank(pv, q, w)
    return 2 * fq.rank(pu + pv, q, w) - du - dv


def intersection_dim(U: SubspaceBasis, V: SubspaceBasis) -> int:
    _check_compatible(U, V)
    return fq.intersection_dim(U.packed(), V.packed(), U.field.q, U.width)


def min_subspace_distance(params: CodeParams) -> int:
    return 2 * (params.n_t - params.k + 1)


def decoding_radius(params: CodeParams, n_r: int) -> int:
    """Largest tau with tau < s(n_r - k + 1)/(s + 1)."""
    if n_r < params.k:
        raise CodeError(f"n_r={n_r} is below k={params.k}")
    s = params.s
    return (s * (n_r - params.k + 1) - 1) // (s + 1)


def decodable(params: CodeParams, gamma: int, delta: int) -> bool:
    return Fraction(gamma, params.s) + delta < params.n_t - params.k + 1


def unique_radius_gabidulin(params: CodeParams) -> int:
    s = params.s
    return s * (params.n - params.k) // (s + 1)


def unique_decodable(params: CodeParams, gamma: int, delta: int) -> bool:
    """gamma <= s(n_t - k - delta): the kernel bound still allows d_I >= s at tau = gamma."""
    return gamma <= params.s * (params.n_t - params.k - delta)


def code_rate(params: CodeParams) -> Fraction:
    s, k, m, n = params.s, params.k, params.m, params.n_t
    return Fraction(s * k * m, n * (n + s * m))


def kernel_dim_bound(params: CodeParams, gamma: int, delta: int, tau: int) -> int:
    """Lower bound on dim ker(R) when gamma <= tau."""
    s = params.s
    return s * (params.n_t - params.k - delta - tau + 1) + (s - 1) * gamma
