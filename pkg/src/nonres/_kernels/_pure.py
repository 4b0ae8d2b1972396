"""Pure-Python elimination kernels.

These are the hot inner loops of the whole engine: every lattice closure,
certificate LP and cohomology rank reduces to one of them.  The compiled
module ``_speedups`` implements the same two functions with identical
semantics; callers go through ``nonres._kernels`` which picks one at import.
"""


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    ``rows`` is a sequence of equal-length sequences of ints.  Pivots are the
    first nonzero entry in column order; intermediate entries stay integral
    (each is a minor of the input), which bounds coefficient growth.
    """
    M = [list(r) for r in rows]
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
        p = M[rank][col]
        top = M[rank]
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


def poly_mul_reduce(a, b, red_rows, deg):
    """Multiply two coefficient lists and reduce modulo a monic polynomial.

    ``red_rows[k - deg]`` holds the coefficients (length ``deg``) of
    ``x**k`` modulo the polynomial, for ``deg <= k <= 2*deg - 2``.  Entries
    may be ints or Fractions; arithmetic is exact either way.
    """
    la = len(a)
    lb = len(b)
    prod = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    prod[i + j] += ai * bj
    for k in range(len(prod) - 1, deg - 1, -1):
        ck = prod[k]
        if ck:
            rr = red_rows[k - deg]
            for c in range(deg):
                rc = rr[c]
                if rc:
                    prod[c] += ck * rc
    out = prod[:deg]
    if len(out) < deg:
        out.extend([0] * (deg - len(out)))
    return out
