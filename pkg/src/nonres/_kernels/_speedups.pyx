# cython: language_level=3
"""Compiled twins of the elimination kernels in ``_pure``.

Arithmetic stays on Python objects (arbitrary-precision ints / Fractions);
the win comes from compiling the loop and indexing overhead away.  Keep the
two implementations in lockstep: the test suite asserts they agree.
"""


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    cdef Py_ssize_t m, n, rank, col, r, c, piv
    M = [list(row) for row in rows]
    m = len(M)
    n = len(M[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for r in range(rank, m):
            if M[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            M[rank], M[piv] = M[piv], M[rank]
        top = M[rank]
        p = top[col]
        for r in range(rank + 1, m):
            row = M[r]
            f = row[col]
            for c in range(col + 1, n):
                num = p * row[c] - f * top[c]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("inexact division in Bareiss step")
                row[c] = q
            row[col] = 0
        prev = p
        rank += 1
    return rank


def poly_mul_reduce(a, b, red_rows, deg_):
    """Multiply coefficient lists and reduce modulo a monic polynomial."""
    cdef Py_ssize_t la, lb, i, j, k, c, deg
    deg = deg_
    la = len(a)
    lb = len(b)
    prod = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    prod[i + j] = prod[i + j] + ai * bj
    for k in range(len(prod) - 1, deg - 1, -1):
        ck = prod[k]
        if ck:
            rr = red_rows[k - deg]
            for c in range(deg):
                rc = rr[c]
                if rc:
                    prod[c] = prod[c] + ck * rc
    out = prod[:deg]
    if len(out) < deg:
        out.extend([0] * (deg - len(out)))
    return out
