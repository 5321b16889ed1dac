# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction over GF(p).

Mirrors ``_kernel_py``: rows come in as a list of lists of ints in [0, p)
and are rewritten in place.  Work happens on a C buffer; p must be below
2**31 so that products fit in 64 bits.
"""
from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a, q, tmp
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


cdef i64* _load(list rows, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef i64* buf = <i64*> malloc(nrows * ncols * sizeof(i64) + 1)
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef list row
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            buf[i * ncols + j] = row[j]
    return buf


cdef Py_ssize_t _eliminate(i64* a, Py_ssize_t nrows, Py_ssize_t ncols, i64 p, bint full, list pivots):
    cdef Py_ssize_t r = 0, c, i, k, piv, start
    cdef i64 f, inv, tmp
    cdef i64* prow
    cdef i64* row
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if a[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(c, ncols):
                tmp = a[piv * ncols + k]
                a[piv * ncols + k] = a[r * ncols + k]
                a[r * ncols + k] = tmp
        prow = a + r * ncols
        inv = _inv(prow[c], p)
        if full and inv != 1:
            for k in range(c, ncols):
                prow[k] = prow[k] * inv % p
            inv = 1
        start = 0 if full else r + 1
        for i in range(start, nrows):
            if i == r:
                continue
            row = a + i * ncols
            f = row[c]
            if f == 0:
                continue
            f = (p - f * inv % p) % p
            for k in range(c, ncols):
                if prow[k] != 0:
                    row[k] = (row[k] + f * prow[k]) % p
        if pivots is not None:
            pivots.append(c)
        r += 1
    return r


def rref_modp(list rows, Py_ssize_t ncols, i64 p):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return []
    cdef i64* a = _load(rows, nrows, ncols)
    cdef list pivots = []
    cdef Py_ssize_t i, j
    cdef list row
    try:
        _eliminate(a, nrows, ncols, p, True, pivots)
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                row[j] = a[i * ncols + j]
    finally:
        free(a)
    return pivots


def rank_modp(list rows, Py_ssize_t ncols, i64 p):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef i64* a = _load(rows, nrows, ncols)
    cdef Py_ssize_t r
    try:
        r = _eliminate(a, nrows, ncols, p, False, None)
    finally:
        free(a)
    return r
