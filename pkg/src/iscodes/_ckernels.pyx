# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for characteristic 2 (m <= 62).

Same algorithms and the same multiplication tally as ``_pykernels``.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

ctypedef long long i64


cdef class NativeField:
    cdef public int m
    cdef i64 N
    cdef i64 mod
    cdef i64 top
    cdef int use_table
    cdef i64* exp
    cdef i64* log

    def __cinit__(self, int m, i64 mod, exp, log):
        cdef Py_ssize_t i
        if m < 1 or m > 62:
            raise ValueError("native kernels need 1 <= m <= 62")
        self.m = m
        self.mod = mod
        self.top = (<i64>1) << m
        self.N = self.top - 1
        self.exp = NULL
        self.log = NULL
        self.use_table = len(exp) > 0
        if self.use_table:
            self.exp = <i64*>malloc(len(exp) * sizeof(i64))
            self.log = <i64*>malloc(len(log) * sizeof(i64))
            if self.exp == NULL or self.log == NULL:
                raise MemoryError()
            for i in range(len(exp)):
                self.exp[i] = exp[i]
            for i in range(len(log)):
                self.log[i] = log[i]

    def __dealloc__(self):
        free(self.exp)
        free(self.log)

    def mul(self, i64 a, i64 b):
        return fmul(self, a, b)

    def inv(self, i64 a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q^m")
        return finv(self, a)

    def frob(self, i64 a):
        return fsq(self, a)


cdef inline i64 fmul(NativeField F, i64 a, i64 b):
    cdef i64 r = 0
    if a == 0 or b == 0:
        return 0
    if F.use_table:
        return F.exp[F.log[a] + F.log[b]]
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & F.top:
            a ^= F.mod
    return r


cdef inline i64 fsq(NativeField F, i64 a):
    if a == 0:
        return 0
    if F.use_table:
        return F.exp[2 * F.log[a]]
    return fmul(F, a, a)


cdef i64 finv(NativeField F, i64 a):
    cdef i64 e, r, base
    if F.use_table:
        return F.exp[(F.N - F.log[a]) % F.N]
    e = F.top - 2
    r = 1
    base = a
    while e:
        if e & 1:
            r = fmul(F, r, base)
        base = fmul(F, base, base)
        e >>= 1
    return r


def koetter(NativeField F, list points, int s, int k):
    cdef int S = s + 1
    cdef Py_ssize_t nr = len(points)
    cdef int cap = <int>nr + 2
    cdef i64* g = <i64*>calloc(S * S * cap, sizeof(i64))
    cdef int* lens = <int*>calloc(S * S, sizeof(int))
    cdef i64* pw = <i64*>calloc(S * cap, sizeof(i64))
    cdef i64* pt = <i64*>calloc(S, sizeof(i64))
    cdef i64* deltas = <i64*>calloc(S, sizeof(i64))
    cdef i64* tmp = <i64*>calloc(cap, sizeof(i64))
    cdef i64 count = 0
    cdef int j, p, i, maxlen, jstar, L, idx, oidx, ln
    cdef i64 d, a, dstar, inv, f, lam, key, best_key
    cdef i64* src
    cdef i64* oth
    if g == NULL or lens == NULL or pw == NULL or pt == NULL or deltas == NULL or tmp == NULL:
        free(g); free(lens); free(pw); free(pt); free(deltas); free(tmp)
        raise MemoryError()
    try:
        for j in range(S):
            g[(j * S + j) * cap] = 1
            lens[j * S + j] = 1
        for point in points:
            for p in range(S):
                pt[p] = point[p]
            maxlen = 0
            for idx in range(S * S):
                if lens[idx] > maxlen:
                    maxlen = lens[idx]
            for p in range(S):
                a = pt[p]
                pw[p * cap] = a
                for i in range(1, maxlen):
                    a = fsq(F, a)
                    pw[p * cap + i] = a
            for j in range(S):
                d = 0
                for p in range(S):
                    idx = j * S + p
                    ln = lens[idx]
                    src = g + idx * cap
                    for i in range(ln):
                        d ^= fmul(F, src[i], pw[p * cap + i])
                    count += ln
                deltas[j] = d
            jstar = -1
            best_key = -1
            for j in range(S):
                if deltas[j] == 0:
                    continue
                key = -1
                for p in range(S):
                    ln = lens[j * S + p]
                    if ln:
                        oidx = ln - 1 + (k - 1 if p else 0)
                        if <i64>oidx * S + p > key:
                            key = <i64>oidx * S + p
                if jstar < 0 or key < best_key:
                    jstar = j
                    best_key = key
            if jstar < 0:
                continue
            dstar = deltas[jstar]
            inv = finv(F, dstar)
            count += 1
            for j in range(S):
                if j == jstar or deltas[j] == 0:
                    continue
                f = fmul(F, deltas[j], inv)
                count += 1
                for p in range(S):
                    idx = j * S + p
                    oidx = jstar * S + p
                    L = lens[oidx]
                    src = g + idx * cap
                    oth = g + oidx * cap
                    for i in range(L):
                        src[i] ^= fmul(F, f, oth[i])
                    count += L
                    ln = lens[idx] if lens[idx] > L else L
                    while ln > 0 and src[ln - 1] == 0:
                        ln -= 1
                    lens[idx] = ln
            lam = dstar
            for p in range(S):
                idx = jstar * S + p
                L = lens[idx]
                if L == 0:
                    continue
                src = g + idx * cap
                tmp[0] = 0
                for i in range(L):
                    tmp[i + 1] = fsq(F, src[i])
                for i in range(L):
                    tmp[i] ^= fmul(F, lam, src[i])
                count += L
                ln = L + 1
                while ln > 0 and tmp[ln - 1] == 0:
                    ln -= 1
                memcpy(src, tmp, (L + 1) * sizeof(i64))
                for i in range(ln, L + 1):
                    src[i] = 0
                lens[idx] = ln
        out = []
        for j in range(S):
            poly = []
            for p in range(S):
                idx = j * S + p
                poly.append([g[idx * cap + i] for i in range(lens[idx])])
            out.append(poly)
        return out, count
    finally:
        free(g); free(lens); free(pw); free(pt); free(deltas); free(tmp)


def rref(NativeField F, list rows, int ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef i64* M = <i64*>calloc(nrows * ncols + 1, sizeof(i64))
    cdef i64* swap = <i64*>calloc(ncols + 1, sizeof(i64))
    cdef Py_ssize_t r = 0, i, c, t, sel
    cdef i64 count = 0, inv, f
    cdef i64* row
    cdef i64* ri
    cdef Py_ssize_t width
    if M == NULL or swap == NULL:
        free(M); free(swap)
        raise MemoryError()
    try:
        for i in range(nrows):
            rw = rows[i]
            for t in range(ncols):
                M[i * ncols + t] = rw[t]
        pivots = []
        for c in range(ncols):
            if r == nrows:
                break
            sel = -1
            for i in range(r, nrows):
                if M[i * ncols + c]:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != r:
                memcpy(swap, M + r * ncols, ncols * sizeof(i64))
                memcpy(M + r * ncols, M + sel * ncols, ncols * sizeof(i64))
                memcpy(M + sel * ncols, swap, ncols * sizeof(i64))
            row = M + r * ncols
            inv = finv(F, row[c])
            count += 1
            for t in range(c + 1, ncols):
                row[t] = fmul(F, row[t], inv)
            row[c] = 1
            width = ncols - c - 1
            count += width
            for i in range(nrows):
                if i == r:
                    continue
                ri = M + i * ncols
                f = ri[c]
                if f == 0:
                    continue
                for t in range(c + 1, ncols):
                    ri[t] ^= fmul(F, f, row[t])
                ri[c] = 0
                count += width
            pivots.append(c)
            r += 1
        out = [[M[i * ncols + t] for t in range(ncols)] for i in range(nrows)]
        return out, pivots, count
    finally:
        free(M); free(swap)
