"""Pure-Python hot kernels.

Mirrors ``_ckernels.pyx`` operation for operation, including the
multiplication tally, so both backends return bit-identical results.
This module is also the only path for odd characteristic.
"""

from __future__ import annotations

from typing import Sequence

from iscodes.field import FieldContext

Parts = list[list[int]]


def _trim(c: list[int]) -> None:
    while c and c[-1] == 0:
        c.pop()


def _lt_key(poly: Parts, k: int) -> tuple[int, int]:
    best = (-1, -1)
    for v, c in enumerate(poly):
        if c:
            key = (len(c) - 1 + (k - 1 if v else 0), v)
            if key > best:
                best = key
    return best


def koetter(F: FieldContext, points: Sequence[Sequence[int]], s: int, k: int) -> tuple[list[Parts], int]:
    """Kötter-style interpolation over an (s+1)-variate linearized module.

    Returns the s+1 module-minimal polynomials (index 0 has an x leading
    term, index j a y_j leading term) as coefficient lists per part, and
    the number of F_{q^m} multiplications spent.
    """
    add, sub, mul, frob = F.add, F.sub, F.mul, F.frob
    g: list[Parts] = [[[1] if p == j else [] for p in range(s + 1)] for j in range(s + 1)]
    count = 0
    for pt in points:
        maxlen = max(len(c) for poly in g for c in poly)
        pw = []
        for a in pt:
            row = [a]
            for _ in range(1, maxlen):
                a = frob(a, 1)
                row.append(a)
            pw.append(row)
        deltas = []
        for poly in g:
            d = 0
            for p, c in enumerate(poly):
                w = pw[p]
                for i, x in enumerate(c):
                    d = add(d, mul(x, w[i]))
                count += len(c)
            deltas.append(d)
        J = [j for j in range(s + 1) if deltas[j]]
        if not J:
            continue
        jstar = min(J, key=lambda j: _lt_key(g[j], k))
        dstar = deltas[jstar]
        inv = F.inv(dstar)
        count += 1
        gs = g[jstar]
        for j in J:
            if j == jstar:
                continue
            f = mul(deltas[j], inv)
            count += 1
            poly = g[j]
            for p in range(s + 1):
                src = poly[p]
                other = gs[p]
                if len(src) < len(other):
                    src.extend([0] * (len(other) - len(src)))
                for i, x in enumerate(other):
                    src[i] = sub(src[i], mul(f, x))
                count += len(other)
                _trim(src)
        # x^[1] ⊗ g - Δ^(q-1) g: zero discrepancy here, leading variable kept
        if F.q == 2:
            lam = dstar
        else:
            lam = mul(frob(dstar, 1), inv)
            count += 1
        new = []
        for c in gs:
            if not c:
                new.append([])
                continue
            nc = [0] + [frob(x, 1) for x in c]
            for i, x in enumerate(c):
                nc[i] = sub(nc[i], mul(lam, x))
            count += len(c)
            _trim(nc)
            new.append(nc)
        g[jstar] = new
    return g, count


def rref(F: FieldContext, rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int], int]:
    """Reduced row echelon form over F_{q^m}; returns (matrix, pivot columns, mults)."""
    M = [list(r) for r in rows]
    nrows = len(M)
    mul, sub = F.mul, F.sub
    count = 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        sel = -1
        for i in range(r, nrows):
            if M[i][c]:
                sel = i
                break
        if sel < 0:
            continue
        M[r], M[sel] = M[sel], M[r]
        row = M[r]
        inv = F.inv(row[c])
        count += 1
        for t in range(c + 1, ncols):
            row[t] = mul(row[t], inv)
        row[c] = 1
        width = ncols - c - 1
        count += width
        for i in range(nrows):
            if i == r:
                continue
            ri = M[i]
            f = ri[c]
            if not f:
                continue
            for t in range(c + 1, ncols):
                ri[t] = sub(ri[t], mul(f, row[t]))
            ri[c] = 0
            count += width
        pivots.append(c)
        r += 1
    return M, pivots, count
