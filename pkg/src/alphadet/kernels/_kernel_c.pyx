# cython: language_level=3
"""Compiled kernel: same API and semantics as `_kernel_py`.

Coefficients stay arbitrary-precision Python ints / Fractions; the speedup
comes from typed loop counters and tighter list handling.
"""

from fractions import Fraction
from math import gcd

BACKEND_NAME = "c"


cpdef list zp_trim(list c):
    while c and c[-1] == 0:
        c.pop()
    return c


cpdef list zp_add(list a, list b):
    cdef Py_ssize_t n = len(a), m = len(b), i
    if n < m:
        a, b = b, a
        n, m = m, n
    cdef list out = list(a)
    for i in range(m):
        out[i] = out[i] + b[i]
    return zp_trim(out)


cpdef list zp_sub(list a, list b):
    cdef Py_ssize_t n = len(a), m = len(b), i
    cdef Py_ssize_t k = n if n > m else m
    cdef list out = [0] * k
    for i in range(n):
        out[i] = a[i]
    for i in range(m):
        out[i] = out[i] - b[i]
    return zp_trim(out)


cpdef list zp_mul(list a, list b):
    cdef Py_ssize_t n = len(a), m = len(b), i, j
    if n == 0 or m == 0:
        return []
    cdef list out = [0] * (n + m - 1)
    cdef object x
    for i in range(n):
        x = a[i]
        if x:
            for j in range(m):
                if b[j]:
                    out[i + j] = out[i + j] + x * b[j]
    return zp_trim(out)


cpdef list zp_divexact(list a, list b):
    cdef Py_ssize_t db, k, j
    cdef object c, q, r, lead
    if not b:
        raise ZeroDivisionError("zp_divexact by zero polynomial")
    if not a:
        return []
    if len(a) < len(b):
        raise ValueError("inexact polynomial division")
    cdef list rem = list(a)
    db = len(b) - 1
    lead = b[db]
    cdef list out = [0] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = rem[k + db]
        if c:
            q, r = divmod(c, lead)
            if r:
                raise ValueError("inexact polynomial division")
            out[k] = q
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - q * b[j]
    for j in range(len(rem)):
        if rem[j]:
            raise ValueError("inexact polynomial division")
    return zp_trim(out)


cpdef list zp_row_combine(list row_a, list row_b, list ca, list cb):
    cdef Py_ssize_t n = len(row_a), i
    cdef list out = [None] * n
    for i in range(n):
        out[i] = zp_sub(zp_mul(ca, row_a[i]), zp_mul(cb, row_b[i]))
    return out


cpdef list zp_row_strip(list row):
    cdef object g = 0
    cdef Py_ssize_t val = -1, v, i
    cdef list p
    for p in row:
        if p:
            v = 0
            while p[v] == 0:
                v += 1
            if val < 0 or v < val:
                val = v
            for i in range(len(p)):
                if p[i]:
                    g = gcd(g, p[i])
    if g == 0:
        return [list(p) for p in row]
    cdef list first = None
    for p in row:
        if p:
            first = p
            break
    v = 0
    while first[v] == 0:
        v += 1
    if first[v] < 0:
        g = -g
    cdef list out = []
    for p in row:
        if p:
            out.append([c // g for c in p[val:]])
        else:
            out.append([])
    return out


cpdef tuple zpm_rank(list rows):
    cdef list mat = [[list(p) for p in row] for row in rows]
    cdef Py_ssize_t nrows = len(mat)
    cdef Py_ssize_t ncols = len(mat[0]) if nrows else 0
    cdef list prev = [1]
    cdef Py_ssize_t rank = 0, col, i, j, best, best_deg, d
    cdef list pivots = []
    cdef list piv, coef, num, rowi, rowr
    for col in range(ncols):
        best = -1
        best_deg = -1
        for i in range(rank, nrows):
            piv = mat[i][col]
            if piv:
                d = len(piv) - 1
                if best < 0 or d < best_deg:
                    best = i
                    best_deg = d
        if best < 0:
            continue
        if best != rank:
            mat[rank], mat[best] = mat[best], mat[rank]
        rowr = mat[rank]
        piv = rowr[col]
        for i in range(rank + 1, nrows):
            rowi = mat[i]
            coef = rowi[col]
            for j in range(col + 1, ncols):
                num = zp_sub(zp_mul(piv, rowi[j]), zp_mul(coef, rowr[j]))
                rowi[j] = zp_divexact(num, prev)
            rowi[col] = []
        pivots.append(list(piv))
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank, pivots


cpdef list q_row_axpy(list row_a, list row_b, object c):
    cdef Py_ssize_t n = len(row_a), i
    cdef list out = [None] * n
    for i in range(n):
        out[i] = row_a[i] - c * row_b[i]
    return out


cpdef tuple qm_rref(list rows):
    cdef list mat = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(mat)
    cdef Py_ssize_t ncols = len(mat[0]) if nrows else 0
    cdef list pivcols = []
    cdef Py_ssize_t r = 0, col, i, piv, j
    cdef object inv, c
    cdef list rowr, rowi
    for col in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if mat[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            mat[r], mat[piv] = mat[piv], mat[r]
        inv = Fraction(1) / mat[r][col]
        rowr = mat[r]
        for j in range(ncols):
            rowr[j] = rowr[j] * inv
        for i in range(nrows):
            if i != r and mat[i][col]:
                rowi = mat[i]
                c = rowi[col]
                for j in range(ncols):
                    rowi[j] = rowi[j] - c * rowr[j]
        pivcols.append(col)
        r += 1
        if r == nrows:
            break
    return mat, pivcols
