"""Pure-Python versions of the compiled kernels (same signatures, same results).

Python integers are unbounded, so these accept any coordinate magnitude.  The
``threads`` argument is accepted for signature parity and ignored.
"""

import math


def profile_counts(xs, ys, ta, tb, threads=1):
    n = len(xs)
    ca = [0] * n
    cb = [0] * n
    for i in range(n):
        xi, yi = xs[i], ys[i]
        a = b = 0
        for j in range(n):
            d = xi * xs[j] + yi * ys[j]
            if d == ta:
                a += 1
            if d == tb:
                b += 1
        ca[i] = a
        cb[i] = b
    return ca, cb


def brute_triples(xs, ys, ta, tb, threads=1):
    if ta is None or tb is None:
        return 0
    n = len(xs)
    total = 0
    for p in range(n):
        xp, yp = xs[p], ys[p]
        for q in range(n):
            if xp * xs[q] + yp * ys[q] != ta:
                continue
            for r in range(n):
                if xp * xs[r] + yp * ys[r] == tb:
                    total += 1
    return total


def min_sep_sq(xs, ys, threads=1):
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two points")
    best = None
    bi = bj = -1
    for i in range(n - 1):
        xi, yi = xs[i], ys[i]
        for j in range(i + 1, n):
            dx = xi - xs[j]
            dy = yi - ys[j]
            d = dx * dx + dy * dy
            if best is None or d < best:
                best, bi, bj = d, i, j
    return best, bi, bj


def energy_row_sums(xs, ys, log_scale_sq, half_s, threads=1):
    n = len(xs)
    rows = []
    for i in range(n):
        xi, yi = xs[i], ys[i]
        terms = []
        for j in range(n):
            if j == i:
                continue
            dx = xi - xs[j]
            dy = yi - ys[j]
            terms.append(math.exp(-half_s * (math.log(dx * dx + dy * dy) - log_scale_sq)))
        rows.append(math.fsum(terms))
    return rows
