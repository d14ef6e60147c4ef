"""Linearized polynomials, their multivariate interpolation form, and the
monomial order used by the interpolation and root-finding steps."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

from iscodes.field import FieldContext, MulCounter, tally

NEG_INF = -math.inf


def _trimmed(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class LinearizedPoly:
    """p(x) = sum_i p_i x^[i] over F_{q^m}; coefficient i multiplies x^(q^i)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldContext, coeffs: Iterable[int] = ()):
        self.field = field
        self.coeffs = _trimmed(coeffs)

    @classmethod
    def zero(cls, field: FieldContext) -> "LinearizedPoly":
        return cls(field)

    @classmethod
    def monomial(cls, field: FieldContext, coeff: int, degree: int) -> "LinearizedPoly":
        return cls(field, [0] * degree + [coeff])

    @property
    def degree(self) -> int | float:
        """q-degree; ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading_coeff(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, a: int, counter: MulCounter | None = None) -> int:
        F = self.field
        acc = 0
        pw = a
        for i, c in enumerate(self.coeffs):
            if i:
                pw = F.frob(pw, 1)
            acc = F.add(acc, F.mul(c, pw))
        tally(counter, len(self.coeffs))
        return acc

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return LinearizedPoly(F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
                                  for i in range(n)])

    def __neg__(self) -> "LinearizedPoly":
        F = self.field
        return LinearizedPoly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        return self + (-other)

    def scale(self, c: int, counter: MulCounter | None = None) -> "LinearizedPoly":
        """Left scalar multiple c * p(x)."""
        F = self.field
        tally(counter, len(self.coeffs))
        return LinearizedPoly(F, [F.mul(c, x) for x in self.coeffs])

    def compose(self, other: "LinearizedPoly", counter: MulCounter | None = None) -> "LinearizedPoly":
        """self ⊗ other, i.e. the map x -> self(other(x))."""
        F = self.field
        p, r = self.coeffs, other.coeffs
        if not p or not r:
            return LinearizedPoly(F)
        out = [0] * (len(p) + len(r) - 1)
        for i, pi in enumerate(p):
            for j, rj in enumerate(r):
                out[i + j] = F.add(out[i + j], F.mul(pi, F.frob(rj, i)))
        tally(counter, len(p) * len(r))
        return LinearizedPoly(F, out)

    def frobenius_shift(self) -> "LinearizedPoly":
        """x^[1] ⊗ self: every coefficient to the q-th power, degrees + 1."""
        if not self.coeffs:
            return self
        F = self.field
        return LinearizedPoly(F, [0] + [F.frob(c, 1) for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LinearizedPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*x^[{i}]" for i, c in enumerate(self.coeffs) if c)


def identity(field: FieldContext) -> LinearizedPoly:
    return LinearizedPoly(field, [1])


@total_ordering
@dataclass(frozen=True)
class MonomialKey:
    """A monomial x^[l] (variable 0) or y_j^[l] (variable j) under the
    (1, k-1, ..., k-1)-weighted order; ties go to the larger variable index."""

    variable: int
    q_degree: int
    k: int

    @property
    def weighted_degree(self) -> int:
        return self.q_degree + (self.k - 1 if self.variable else 0)

    def sort_key(self) -> tuple[int, int]:
        return (self.weighted_degree, self.variable)

    def __lt__(self, other: "MonomialKey") -> bool:
        if self.k != other.k:
            raise ValueError("monomial keys with different k are not comparable")
        return self.sort_key() < other.sort_key()


@dataclass(frozen=True)
class InterpPoly:
    """Q(x, y_1..y_s) = Q_0(x) + Q_1(y_1) + ... + Q_s(y_s)."""

    x_part: LinearizedPoly
    y_parts: tuple[LinearizedPoly, ...]

    def __post_init__(self) -> None:
        F = self.x_part.field
        if any(p.field != F for p in self.y_parts):
            raise ValueError("all parts must share one field")
        object.__setattr__(self, "y_parts", tuple(self.y_parts))

    @classmethod
    def from_parts(cls, field: FieldContext, parts: Sequence[Sequence[int]]) -> "InterpPoly":
        polys = [LinearizedPoly(field, p) for p in parts]
        return cls(polys[0], tuple(polys[1:]))

    @property
    def field(self) -> FieldContext:
        return self.x_part.field

    @property
    def s(self) -> int:
        return len(self.y_parts)

    @property
    def parts(self) -> tuple[LinearizedPoly, ...]:
        return (self.x_part,) + self.y_parts

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def __call__(self, point: Sequence[int], counter: MulCounter | None = None) -> int:
        if len(point) != self.s + 1:
            raise ValueError(f"point of arity {len(point)} for an {self.s + 1}-variate polynomial")
        F = self.field
        acc = 0
        for p, a in zip(self.parts, point):
            acc = F.add(acc, p(a, counter))
        return acc

    def substitute(self, msgs: Sequence[LinearizedPoly],
                   counter: MulCounter | None = None) -> LinearizedPoly:
        """The univariate Q(x, f_1(x), ..., f_s(x)) = Q_0 + sum_j Q_j ⊗ f_j."""
        if len(msgs) != self.s:
            raise ValueError("need one message polynomial per y-variable")
        acc = self.x_part
        for qj, fj in zip(self.y_parts, msgs):
            acc = acc + qj.compose(fj, counter)
        return acc

    def coefficient_vector(self, x_len: int, y_len: int) -> list[int]:
        """Coefficients laid out as (q_0,0..q_0,x_len-1 | q_1,0.. | ... | q_s,..)."""
        if self.x_part.degree >= x_len or any(p.degree >= y_len for p in self.y_parts):
            raise ValueError("polynomial exceeds the requested degree budget")
        vec = [self.x_part.coeff(i) for i in range(x_len)]
        for p in self.y_parts:
            vec.extend(p.coeff(i) for i in range(y_len))
        return vec

    @classmethod
    def from_vector(cls, field: FieldContext, vec: Sequence[int], s: int,
                    x_len: int, y_len: int) -> "InterpPoly":
        if len(vec) != x_len + s * y_len:
            raise ValueError("coefficient vector has the wrong length")
        parts = [vec[:x_len]]
        for j in range(s):
            parts.append(vec[x_len + j * y_len: x_len + (j + 1) * y_len])
        return cls.from_parts(field, parts)


def weighted_degree(Q: InterpPoly, k: int) -> int | float:
    degs = [Q.x_part.degree] + [p.degree + (k - 1) for p in Q.y_parts]
    return max(degs)


def leading_term(Q: InterpPoly, k: int) -> MonomialKey:
    keys = [MonomialKey(v, int(p.degree), k) for v, p in enumerate(Q.parts) if not p.is_zero()]
    if not keys:
        raise ValueError("the zero polynomial has no leading term")
    return max(keys)


def moore_matrix(field: FieldContext, a: Sequence[int], rows: int) -> list[list[int]]:
    """rows x n q-Vandermonde matrix with entry (i, j) = a_j^[i]."""
    if rows < 1:
        raise ValueError("a Moore matrix needs at least one row")
    out = [list(a)]
    for _ in range(1, rows):
        out.append([field.frob(x, 1) for x in out[-1]])
    return out
