"""Small independent oracles shared by several test modules."""

from fractions import Fraction


def naive_rank(rows, p=None):
    """Plain Gaussian elimination, over Q (p None) or integers mod p."""
    m = [list(r) for r in rows]
    if p is not None:
        m = [[int(x) % p for x in r] for r in m]
    else:
        m = [[Fraction(x) for x in r] for r in m]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p) if p else 1 / m[rank][c]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [(a - f * b) % p if p else a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def as_ints(vec):
    return [int(x) for x in vec]
