"""Linear algebra over the prime field F_q on packed vectors.

A vector over F_q of length ``width`` is stored as the integer
``sum(v[i] * q**i)``.  For q = 2 this is a plain bitset and every row
operation is a single XOR, which keeps the channel simulators and the
decoder front-end cheap.  Other primes go through digit lists.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence


def to_digits(v: int, q: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        v, d = divmod(v, q)
        out.append(d)
    return out


def from_digits(digits: Sequence[int], q: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * q + d
    return v


def _rref_digits(rows: list[list[int]], q: int, width: int) -> list[list[int]]:
    rows = [list(r) for r in rows]
    pivot_row = 0
    # pivot on the most significant digit first so the result matches the
    # bitset path for q = 2
    for col in range(width - 1, -1, -1):
        sel = None
        for i in range(pivot_row, len(rows)):
            if rows[i][col] % q:
                sel = i
                break
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        piv = rows[pivot_row]
        inv = pow(piv[col], q - 2, q)
        for t in range(width):
            piv[t] = piv[t] * inv % q
        for i in range(len(rows)):
            if i != pivot_row and rows[i][col]:
                c = rows[i][col]
                ri = rows[i]
                for t in range(width):
                    ri[t] = (ri[t] - c * piv[t]) % q
        pivot_row += 1
    return rows[:pivot_row]


def rref(vectors: Iterable[int], q: int, width: int) -> list[int]:
    """Reduced row echelon basis of the span, sorted by descending pivot."""
    if q == 2:
        basis: dict[int, int] = {}
        for v in vectors:
            while v:
                h = v.bit_length() - 1
                b = basis.get(h)
                if b is None:
                    basis[h] = v
                    break
                v ^= b
        pivots = sorted(basis)
        # ascending sweep: basis[p] is already clear of lower pivots when used
        for i, p in enumerate(pivots):
            v = basis[p]
            for p2 in pivots[i + 1:]:
                if (basis[p2] >> p) & 1:
                    basis[p2] ^= v
        return [basis[p] for p in reversed(pivots)]
    rows = _rref_digits([to_digits(v, q, width) for v in vectors], q, width)
    return [from_digits(r, q) for r in rows]


def rank(vectors: Iterable[int], q: int, width: int) -> int:
    if q == 2:
        basis: dict[int, int] = {}
        n = 0
        for v in vectors:
            while v:
                h = v.bit_length() - 1
                b = basis.get(h)
                if b is None:
                    basis[h] = v
                    n += 1
                    break
                v ^= b
        return n
    return len(_rref_digits([to_digits(v, q, width) for v in vectors], q, width))


def combine(coeffs: Sequence[int], vectors: Sequence[int], q: int, width: int) -> int:
    """F_q-linear combination ``sum(c_i * v_i)``."""
    if q == 2:
        acc = 0
        for c, v in zip(coeffs, vectors):
            if c & 1:
                acc ^= v
        return acc
    acc = [0] * width
    for c, v in zip(coeffs, vectors):
        c %= q
        if not c:
            continue
        for t, d in enumerate(to_digits(v, q, width)):
            acc[t] = (acc[t] + c * d) % q
    return from_digits(acc, q)


def random_matrix(rows: int, cols: int, q: int, rng: random.Random) -> list[list[int]]:
    return [[rng.randrange(q) for _ in range(cols)] for _ in range(rows)]


def matrix_rank(mat: Sequence[Sequence[int]], q: int) -> int:
    if not mat:
        return 0
    width = len(mat[0])
    return rank((from_digits(r, q) for r in mat), q, width)


def random_full_rank(rows: int, cols: int, q: int, rng: random.Random,
                     max_tries: int = 10**6) -> list[list[int]]:
    """Uniformly random ``rows x cols`` matrix of rank ``rows`` (rejection)."""
    if rows > cols:
        raise ValueError(f"cannot have rank {rows} with {cols} columns")
    for _ in range(max_tries):
        mat = random_matrix(rows, cols, q, rng)
        if matrix_rank(mat, q) == rows:
            return mat
    raise RuntimeError("rejection sampling of a full-rank matrix did not terminate")


def intersection_dim(a: Sequence[int], b: Sequence[int], q: int, width: int) -> int:
    ra = rank(a, q, width)
    rb = rank(b, q, width)
    return ra + rb - rank(list(a) + list(b), q, width)
