"""Log-log power-law fits."""

import math
from statistics import linear_regression


class InsufficientData(ValueError):
    pass


def fit_exponent(rows):
    """Least-squares slope of ln(count) on ln(n), and the RMS fit residual.

    ``rows`` is an iterable of ``(n, count)``; rows with count < 1 are dropped.
    """
    pts = [(math.log(n), math.log(c)) for n, c in rows if c >= 1]
    if len(pts) < 3:
        raise InsufficientData("insufficient data: need >= 3 rows with positive counts")
    xs, ys = zip(*pts)
    slope, intercept = linear_regression(xs, ys)
    resid = math.sqrt(sum((y - (slope * x + intercept)) ** 2 for x, y in pts) / len(pts))
    return slope, resid
