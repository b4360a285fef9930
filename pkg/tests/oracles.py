"""Brute-force reference computations, written from the definitions only.

Nothing here imports wreathstats.  Letters are (value, color) pairs and the
zero letter is (0, 0).
"""

import itertools
from collections import Counter


def l_less(x, y, L):
    """x <_L y by case analysis of the order's defining rules (ascending-color ties)."""
    if x == y:
        return False
    (i, u), (j, v) = x, y
    if i == 0:
        return v not in L
    if j == 0:
        return u in L
    if (u in L) != (v in L):
        return u in L
    if i != j:
        return i > j if u in L else i < j
    return u < v


def group(a, n):
    for values in itertools.permutations(range(1, n + 1)):
        for colors in itertools.product(range(a), repeat=n):
            yield tuple(zip(values, colors))


def des_rmaj(w, L):
    n = len(w)
    full = ((0, 0),) + tuple(w)
    D = [i for i in range(n) if l_less(full[i + 1], full[i], L)]
    return len(D), sum(n - i for i in D)


def maj_poly(a, L, n):
    """{(des, rmaj): count} over C_a wr S_n."""
    return dict(Counter(des_rmaj(w, L) for w in group(a, n)))


def classical_des_maj(p):
    D = [i for i in range(1, len(p)) if p[i - 1] > p[i]]
    return len(D), sum(D)
