"""Root-finding step: recover the message polynomials f^(1..s) from
interpolation polynomials Q with Q(x, f^(1)(x), ..., f^(s)(x)) = 0."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from iscodes.codes import InterleavedMessage
from iscodes.field import FieldContext, MulCounter, tally
from iscodes.linalg import matrix_rank, matrix_solve
from iscodes.linearized import InterpPoly

DEFAULT_CAP = 1024


class RootFindingError(ValueError):
    """Input polynomials violate the structure the solver relies on."""


class RankDeficient(ArithmeticError):
    pass


class InconsistentSystem(ArithmeticError):
    pass


class ListOverflow(OverflowError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"solution list of size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class MemoryTracker:
    """Counts live F_{q^m} elements held in working buffers."""

    def __init__(self) -> None:
        self.live = 0
        self.peak = 0

    def alloc(self, n: int) -> None:
        self.live += n
        if self.live > self.peak:
            self.peak = self.live

    def free(self, n: int) -> None:
        self.live -= n


def _top(buf: list[int]) -> int:
    for i in range(len(buf) - 1, -1, -1):
        if buf[i]:
            return i
    return -1


@dataclass
class RootFindingResult:
    message: InterleavedMessage
    residual_zero: bool
    mult_count: int


def find_roots_detailed(polys: Sequence[InterpPoly], k: int,
                        tracker: MemoryTracker | None = None) -> RootFindingResult:
    """Coefficient-by-coefficient elimination for y_j-minimal inputs.

    For i = 1..k and j = 1..s the leading x-coefficient of Q^(j) fixes the
    monomial f^(j)_{k-i} x^[k-i], after which Q^(j) ⊗ t is folded into every
    x-part.  ``residual_zero`` reports whether all x-parts vanished, i.e.
    whether the output is an actual common root.
    """
    s = len(polys)
    if s == 0:
        raise RootFindingError("need at least one polynomial")
    F = polys[0].field
    if any(Q.s != s for Q in polys):
        raise RootFindingError(f"each polynomial must have exactly {s} y-parts")
    add, mul, frob = F.add, F.mul, F.frob

    Y = [[list(p.coeffs) for p in Q.y_parts] for Q in polys]
    Q0 = []
    for l, Q in enumerate(polys):
        size = max([len(Q.x_part.coeffs)] + [len(y) + k - 1 for y in Y[l] if y])
        buf = list(Q.x_part.coeffs) + [0] * (size - len(Q.x_part.coeffs))
        Q0.append(buf)
    f = [[0] * k for _ in range(s)]
    storage = sum(len(b) for b in Q0) + sum(len(y) for row in Y for y in row) + s * k
    if tracker is not None:
        tracker.alloc(storage)

    count = 0
    for i in range(1, k + 1):
        target = k - i
        for j in range(s):
            yj = Y[j][j]
            e = len(yj) - 1
            if e < 0:
                raise RootFindingError(f"polynomial {j + 1} has no y_{j + 1} part")
            d = _top(Q0[j])
            if d < 0 or d - e < target:
                continue
            if d - e > target:
                raise RootFindingError(
                    f"polynomial {j + 1} is not y_{j + 1}-minimal within the degree budget "
                    f"(d - e = {d - e} > {target})")
            c = frob(F.neg(mul(Q0[j][d], F.inv(yj[e]))), -e)
            count += 2
            f[j][target] = c
            for l in range(s):
                ypoly = Y[l][j]
                buf = Q0[l]
                cp = c
                for u, yc in enumerate(ypoly):
                    if u:
                        cp = frob(cp, 1)
                    if l == j and u == e:
                        # cancels the leading term by construction
                        buf[u + target] = 0
                        continue
                    buf[u + target] = add(buf[u + target], mul(yc, cp))
                count += len(ypoly) - (1 if l == j else 0)
    residual_zero = all(_top(b) < 0 for b in Q0)
    if tracker is not None:
        tracker.free(storage)
    msg = InterleavedMessage.from_coefficients(F, f)
    return RootFindingResult(msg, residual_zero, count)


def find_roots(polys: Sequence[InterpPoly], k: int, counter: MulCounter | None = None,
               tracker: MemoryTracker | None = None) -> InterleavedMessage:
    res = find_roots_detailed(polys, k, tracker)
    tally(counter, res.mult_count)
    return res.message


@dataclass
class RootSystem:
    """Root-finding system Q u = rhs with u = (f_0, f_1^[-1], ..., f_{k-1}^[-(k-1)]).

    ``blocks[j]`` is the d_I x s matrix of (unconjugated) y-coefficients of
    degree j; ``x_coeffs[h]`` the x-part of polynomial h.  Block (r, c) of
    ``Q_matrix`` is ``blocks[r - c]`` conjugated by [-r].
    """

    field: FieldContext
    s: int
    k: int
    d_I: int
    x_len: int
    blocks: list[list[list[int]]]
    x_coeffs: list[list[int]]
    Q_matrix: list[list[int]]
    rhs: list[int]

    @property
    def top(self) -> int:
        return self.x_len - self.k

    def block(self, j: int, shift: int) -> list[list[int]]:
        F = self.field
        return [[F.frob(a, shift) for a in row] for row in self.blocks[j]]


def build_root_system(kernel: Sequence[InterpPoly], k: int, n_r: int, tau: int,
                      field: FieldContext | None = None, s: int | None = None) -> RootSystem:
    if kernel:
        field = kernel[0].field
        s = kernel[0].s
    if field is None or s is None:
        raise RootFindingError("an empty kernel needs explicit field and s")
    x_len = n_r - tau
    top = x_len - k
    if top < 0:
        raise RootFindingError(f"degree budget n_r - tau - k = {top} is negative")
    for Q in kernel:
        if Q.x_part.degree >= x_len or any(p.degree > top for p in Q.y_parts):
            raise RootFindingError("kernel polynomial exceeds the interpolation degree budget")
    F = field
    d_I = len(kernel)
    blocks = [[[Q.y_parts[l].coeff(j) for l in range(s)] for Q in kernel] for j in range(top + 1)]
    x_coeffs = [[Q.x_part.coeff(r) for r in range(x_len)] for Q in kernel]
    rows: list[list[int]] = []
    rhs: list[int] = []
    for r in range(x_len):
        for h in range(d_I):
            row = [0] * (s * k)
            for c in range(k):
                j = r - c
                if 0 <= j <= top:
                    for l in range(s):
                        row[c * s + l] = F.frob(blocks[j][h][l], -r)
            rows.append(row)
            rhs.append(F.neg(F.frob(x_coeffs[h][r], -r)))
    return RootSystem(F, s, k, d_I, x_len, blocks, x_coeffs, rows, rhs)


def rank_condition(sys: RootSystem) -> bool:
    """Top coefficient block has rank s (sufficient for rank(Q) = sk)."""
    if sys.d_I < sys.s:
        return False
    return matrix_rank(sys.field, sys.blocks[sys.top], sys.s) == sys.s


def select_full_rank(kernel: Sequence[InterpPoly], k: int, n_r: int, tau: int) -> list[InterpPoly]:
    """Greedily pick s kernel polynomials whose top y-coefficient rows are
    independent; ``RankDeficient`` if the kernel's top block has rank < s."""
    if not kernel:
        raise RankDeficient("empty kernel")
    F, s = kernel[0].field, kernel[0].s
    top = n_r - tau - k
    chosen: list[InterpPoly] = []
    rows: list[list[int]] = []
    for Q in kernel:
        row = [Q.y_parts[l].coeff(top) for l in range(s)]
        if matrix_rank(F, rows + [row], s) == len(rows) + 1:
            rows.append(row)
            chosen.append(Q)
            if len(chosen) == s:
                return chosen
    raise RankDeficient(f"top block has rank {len(chosen)} < s={s}")


def _solve_block(F: FieldContext, A: list[list[int]], b: list[int]) -> tuple[list[int], int]:
    """Solve the d x s system A u = b; every row operation is carried out
    in full so the tally depends only on the shape."""
    d = len(A)
    s = len(A[0]) if A else 0
    M = [list(A[h]) + [b[h]] for h in range(d)]
    count = 0
    for col in range(s):
        sel = next((h for h in range(col, d) if M[h][col]), None)
        if sel is None:
            raise RankDeficient(f"block is rank deficient at column {col}")
        M[col], M[sel] = M[sel], M[col]
        piv = M[col]
        inv = F.inv(piv[col])
        for t in range(col, s + 1):
            piv[t] = F.mul(piv[t], inv)
        count += 1 + (s - col)
        for h in range(d):
            if h == col:
                continue
            fac = M[h][col]
            row = M[h]
            for t in range(col, s + 1):
                row[t] = F.sub(row[t], F.mul(fac, piv[t]))
            count += s - col
    if any(M[h][s] for h in range(s, d)):
        raise InconsistentSystem("overdetermined block has no solution")
    return [M[c][s] for c in range(s)], count


def solve_root_system_unique(sys: RootSystem, counter: MulCounter | None = None) -> InterleavedMessage:
    """Block back-substitution down the lower block triangle.

    Raises ``RankDeficient`` if a diagonal block has rank < s and
    ``InconsistentSystem`` if the remaining equations are violated.
    """
    F, s, k, top = sys.field, sys.s, sys.k, sys.top
    if sys.d_I < s:
        raise RankDeficient(f"only {sys.d_I} polynomials for {s} unknowns per block")
    d = sys.d_I
    u: list[list[int]] = [[] for _ in range(k)]
    count = 0
    for c in range(k - 1, -1, -1):
        r = c + top
        b = [sys.rhs[r * d + h] for h in range(d)]
        for c2 in range(c + 1, min(r, k - 1) + 1):
            blk = sys.block(r - c2, -r)
            for h in range(d):
                acc = b[h]
                for l in range(s):
                    acc = F.sub(acc, F.mul(blk[h][l], u[c2][l]))
                b[h] = acc
            count += d * s
        u[c], n = _solve_block(F, sys.block(top, -r), b)
        count += n
    # equations of the rows above the triangle; all are checked so the
    # tally stays shape-only
    violated = None
    for r in range(top):
        for h in range(d):
            acc = sys.rhs[r * d + h]
            for c in range(0, min(r, k - 1) + 1):
                row = sys.blocks[r - c][h]
                for l in range(s):
                    acc = F.sub(acc, F.mul(F.frob(row[l], -r), u[c][l]))
            count += (min(r, k - 1) + 1) * s
            if acc and violated is None:
                violated = (r, h)
    tally(counter, count)
    if violated is not None:
        raise InconsistentSystem(f"equation {violated} is violated")
    coeffs = [[F.frob(u[c][l], c) for c in range(k)] for l in range(s)]
    return InterleavedMessage.from_coefficients(F, coeffs)


def _vector_to_message(F: FieldContext, x: Sequence[int], s: int, k: int) -> InterleavedMessage:
    return InterleavedMessage.from_coefficients(
        F, [[F.frob(x[c * s + l], c) for c in range(k)] for l in range(s)])


def message_to_vector(msg: InterleavedMessage, k: int) -> list[int]:
    """Conjugated unknown vector (f_0, f_1^[-1], ..., f_{k-1}^[-(k-1)])."""
    s = len(msg.polys)
    F = msg.polys[0].field
    out = [0] * (s * k)
    for l, p in enumerate(msg.polys):
        for c in range(k):
            out[c * s + l] = F.frob(p.coeff(c), -c)
    return out


def root_space(sys: RootSystem, counter: MulCounter | None = None):
    return matrix_solve(sys.field, sys.Q_matrix, sys.rhs, sys.s * sys.k, counter)


def enumerate_root_space(sys: RootSystem, k: int | None = None, cap: int = DEFAULT_CAP,
                         counter: MulCounter | None = None) -> list[InterleavedMessage]:
    """Every solution of the full system; ``ListOverflow`` beyond ``cap``."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    k = sys.k if k is None else k
    F, s = sys.field, sys.s
    sol = root_space(sys, counter)
    if not sol.consistent:
        return []
    dim = len(sol.kernel)
    size = F.order ** dim
    if size > cap:
        raise ListOverflow(size, cap)
    out = []
    for combo in itertools.product(range(F.order), repeat=dim):
        x = list(sol.particular)
        for a, v in zip(combo, sol.kernel):
            if a:
                x = [F.add(xi, F.mul(a, vi)) for xi, vi in zip(x, v)]
        out.append(_vector_to_message(F, x, s, k))
    return out


def substitution_is_zero(polys: Sequence[InterpPoly], msg: InterleavedMessage) -> bool:
    return all(Q.substitute(msg.polys).is_zero() for Q in polys)


def message_equal(a: InterleavedMessage, b: InterleavedMessage) -> bool:
    return all(p == r for p, r in zip(a.polys, b.polys)) and len(a.polys) == len(b.polys)

