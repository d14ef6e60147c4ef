"""Interpolation step: a basis of vanishing (s+1)-variate linearized
polynomials, either by the Kötter-style module iteration or by Gaussian
elimination on the interpolation matrix R."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from iscodes import _backend
from iscodes.field import FieldContext, MulCounter, tally
from iscodes.linalg import matrix_kernel
from iscodes.linearized import InterpPoly, moore_matrix, weighted_degree


class InterpolationError(ValueError):
    pass


@dataclass(frozen=True)
class InterpolationInstance:
    field: FieldContext
    points: tuple[tuple[int, ...], ...]
    s: int
    k: int
    tau: int

    def __post_init__(self) -> None:
        pts = tuple(tuple(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if any(len(p) != self.s + 1 for p in pts):
            raise InterpolationError(f"every point needs {self.s + 1} coordinates")

    @property
    def n_r(self) -> int:
        return len(self.points)

    @property
    def x_len(self) -> int:
        """Number of x-coefficients allowed: deg Q_0 < n_r - tau."""
        return self.n_r - self.tau

    @property
    def y_len(self) -> int:
        """Number of y_j-coefficients allowed: deg Q_j < n_r - tau - k + 1."""
        return self.n_r - self.tau - self.k + 1

    def validate(self) -> None:
        if self.y_len < 1:
            raise InterpolationError(
                f"degree budget n_r - tau - (k-1) = {self.y_len} must be positive")


@dataclass
class InterpolationBasisResult:
    polys: tuple[InterpPoly, ...]
    x_minimal: InterpPoly | None
    mult_count: int


def interpolate_basis(inst: InterpolationInstance, *, with_x_minimal: bool = False,
                      counter: MulCounter | None = None,
                      backend: str | None = None) -> InterpolationBasisResult:
    """Kötter iteration; output j is the y_j-minimal element of the module
    of polynomials vanishing on all points."""
    F = inst.field
    g, count = _backend.koetter(F, inst.points, inst.s, inst.k, backend)
    tally(counter, count)
    polys = tuple(InterpPoly.from_parts(F, g[j]) for j in range(1, inst.s + 1))
    x_min = InterpPoly.from_parts(F, g[0]) if with_x_minimal else None
    return InterpolationBasisResult(polys, x_min, count)


def interpolation_matrix(inst: InterpolationInstance) -> list[list[int]]:
    """n_r x ((s+1)(n_r-tau) - s(k-1)) matrix; row i evaluates at point i."""
    inst.validate()
    F = inst.field
    cols = list(zip(*inst.points)) if inst.points else [()] * (inst.s + 1)
    blocks = [moore_matrix(F, cols[0], inst.x_len)]
    for j in range(1, inst.s + 1):
        blocks.append(moore_matrix(F, cols[j], inst.y_len))
    R = []
    for i in range(inst.n_r):
        row = []
        for b in blocks:
            row.extend(b[t][i] for t in range(len(b)))
        R.append(row)
    return R


def interpolation_ncols(inst: InterpolationInstance) -> int:
    return inst.x_len + inst.s * inst.y_len


def interpolation_kernel(inst: InterpolationInstance, counter: MulCounter | None = None,
                         allow_empty: bool = False) -> list[InterpPoly]:
    """Reduced-echelon basis of ker(R) as polynomials."""
    R = interpolation_matrix(inst)
    basis = matrix_kernel(inst.field, R, interpolation_ncols(inst), counter)
    if not basis and not allow_empty:
        raise InterpolationError("interpolation matrix has a trivial kernel")
    return [InterpPoly.from_vector(inst.field, v, inst.s, inst.x_len, inst.y_len) for v in basis]


def check_success(result: InterpolationBasisResult, inst: InterpolationInstance) -> bool:
    bound = inst.n_r - inst.tau
    return all(weighted_degree(Q, inst.k) < bound for Q in result.polys)


def passes_degree_check(Q: InterpPoly, inst: InterpolationInstance) -> bool:
    return weighted_degree(Q, inst.k) < inst.n_r - inst.tau


def coefficient_vector(Q: InterpPoly, inst: InterpolationInstance) -> list[int]:
    return Q.coefficient_vector(inst.x_len, inst.y_len)


def make_instance(field: FieldContext, points: Sequence[Sequence[int]], s: int, k: int,
                  tau: int) -> InterpolationInstance:
    return InterpolationInstance(field, tuple(tuple(p) for p in points), s, k, tau)
