"""Pure-Python row reduction over GF(p).

Same contract as the compiled ``_kernel`` module: rows are lists of ints
already reduced into [0, p), modified in place.
"""


def rref_modp(rows, ncols, p):
    """Reduced row echelon form in place; returns the pivot columns.

    After the call the first ``len(pivots)`` rows are the reduced basis and
    the remaining rows are zero.
    """
    nrows = len(rows)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            prow[c:] = [v * inv % p for v in prow[c:]]
        tail = prow[c:]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                row[c:] = [(a - f * b) % p for a, b in zip(row[c:], tail)]
        pivots.append(c)
        r += 1
    return pivots


def rank_modp(rows, ncols, p):
    """Rank by forward elimination only; destroys ``rows``."""
    nrows = len(rows)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[c], p - 2, p)
        tail = prow[c:]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            if f:
                f = f * inv % p
                row[c:] = [(a - f * b) % p for a, b in zip(row[c:], tail)]
        r += 1
    return r
