# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``; same signatures and results."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t


cdef inline int64_t _inv_mod(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_modp(rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, k, r, rank = 0, col, piv
    cdef int64_t f, inv, v, P = p
    if nrows == 0 or ncols == 0:
        return [], []
    cdef int64_t* a = <int64_t*> malloc(nrows * ncols * sizeof(int64_t))
    if a == NULL:
        raise MemoryError()
    pivots = []
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                v = row[j] % p
                a[i * ncols + j] = v
        for col in range(ncols):
            if rank == nrows:
                break
            piv = -1
            for r in range(rank, nrows):
                if a[r * ncols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(col, ncols):
                    v = a[piv * ncols + j]
                    a[piv * ncols + j] = a[rank * ncols + j]
                    a[rank * ncols + j] = v
            inv = _inv_mod(a[rank * ncols + col], P)
            for j in range(col, ncols):
                a[rank * ncols + j] = (a[rank * ncols + j] * inv) % P
            for r in range(nrows):
                if r == rank:
                    continue
                f = a[r * ncols + col]
                if f == 0:
                    continue
                for j in range(col, ncols):
                    v = (a[r * ncols + j] - f * a[rank * ncols + j]) % P
                    if v < 0:
                        v += P
                    a[r * ncols + j] = v
            pivots.append(col)
            rank += 1
        out = []
        for i in range(rank):
            out.append([a[i * ncols + j] for j in range(ncols)])
        return out, pivots
    finally:
        free(a)


def match_pairs(left_keys, right_keys):
    cdef Py_ssize_t nl = len(left_keys), nr = len(right_keys), i, j
    if nl == 0 or nr == 0:
        return []
    # keys that do not fit 64 bits take the generic path
    try:
        lk = [int(x) for x in left_keys]
        rk = [int(x) for x in right_keys]
        if any(x < 0 or x >= 2**64 for x in lk) or any(x < 0 or x >= 2**64 for x in rk):
            raise TypeError
    except TypeError:
        out = []
        for i in range(nl):
            for j in range(nr):
                if left_keys[i] == right_keys[j]:
                    out.append((i, j))
        return out
    cdef uint64_t* L = <uint64_t*> malloc(nl * sizeof(uint64_t))
    cdef uint64_t* R = <uint64_t*> malloc(nr * sizeof(uint64_t))
    if L == NULL or R == NULL:
        free(L)
        free(R)
        raise MemoryError()
    out = []
    try:
        for i in range(nl):
            L[i] = lk[i]
        for j in range(nr):
            R[j] = rk[j]
        for i in range(nl):
            for j in range(nr):
                if L[i] == R[j]:
                    out.append((i, j))
        return out
    finally:
        free(L)
        free(R)
