"""Gaussian elimination over F_{q^m}: rank, right kernel, and solving."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from iscodes import _backend
from iscodes.field import FieldContext, MulCounter, tally

Matrix = list[list[int]]


def _shape(M: Sequence[Sequence[int]], ncols: int | None) -> int:
    if ncols is None:
        if not M:
            raise ValueError("empty matrix needs an explicit column count")
        ncols = len(M[0])
    if any(len(r) != ncols for r in M):
        raise ValueError("ragged matrix")
    return ncols


def rref(F: FieldContext, M: Sequence[Sequence[int]], ncols: int | None = None,
         counter: MulCounter | None = None, backend: str | None = None) -> tuple[Matrix, list[int]]:
    ncols = _shape(M, ncols)
    R, pivots, count = _backend.rref(F, M, ncols, backend)
    tally(counter, count)
    return R, pivots


def matrix_rank(F: FieldContext, M: Sequence[Sequence[int]], ncols: int | None = None,
                counter: MulCounter | None = None) -> int:
    if not M:
        return 0
    return len(rref(F, M, ncols, counter)[1])


def _kernel_from_rref(F: FieldContext, R: Matrix, pivots: list[int], ncols: int) -> Matrix:
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(v)
    return basis


def matrix_kernel(F: FieldContext, M: Sequence[Sequence[int]], ncols: int | None = None,
                  counter: MulCounter | None = None) -> Matrix:
    """Right-kernel basis, returned in reduced row echelon form."""
    ncols = _shape(M, ncols)
    if M:
        R, pivots = rref(F, M, ncols, counter)
    else:
        R, pivots = [], []
    basis = _kernel_from_rref(F, R, pivots, ncols)
    if not basis:
        return []
    # canonical form; not part of the elimination being measured
    return rref(F, basis, ncols)[0]


@dataclass
class SolutionSet:
    particular: list[int] | None
    kernel: Matrix

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def matrix_solve(F: FieldContext, M: Sequence[Sequence[int]], b: Sequence[int],
                 ncols: int | None = None, counter: MulCounter | None = None) -> SolutionSet:
    """All x with M x = b, as one particular solution plus a kernel basis."""
    ncols = _shape(M, ncols)
    if len(b) != len(M):
        raise ValueError("right-hand side length does not match the row count")
    aug = [list(r) + [bi] for r, bi in zip(M, b)]
    R, pivots = rref(F, aug, ncols + 1, counter) if aug else ([], [])
    if ncols in pivots:
        return SolutionSet(None, [])
    x = [0] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    coef = [r[:ncols] for r in R]
    basis = _kernel_from_rref(F, coef, pivots, ncols)
    if basis:
        basis = rref(F, basis, ncols)[0]
    return SolutionSet(x, basis)


def matvec(F: FieldContext, M: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    out = []
    for row in M:
        acc = 0
        for a, x in zip(row, v):
            if a and x:
                acc = F.add(acc, F.mul(a, x))
        out.append(acc)
    return out


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
