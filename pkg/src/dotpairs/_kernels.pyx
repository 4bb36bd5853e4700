# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled quadratic/cubic loops over integer-scaled coordinates.

Coordinates arrive as int64 buffers with magnitude below 2**61, so every dot
product and squared distance fits in a signed 128-bit accumulator.  Targets
are passed split into (hi, lo) words.  Outer loops run under OpenMP; each
output slot is written by exactly one iteration, so results do not depend on
the thread count.
"""

from cython.parallel cimport prange
from libc.math cimport exp, log
from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef long long i128 "__int128"

ctypedef long long i64
ctypedef unsigned long long u64

cdef u64 _MASK = 0xFFFFFFFFFFFFFFFF


cdef inline i128 _join(i64 hi, u64 lo) nogil:
    return ((<i128>hi) << 64) | (<i128>lo)


cdef i128 _to128(object v):
    cdef i64 hi = v >> 64
    cdef u64 lo = v & _MASK
    return _join(hi, lo)


cdef object _unjoin(i128 v):
    cdef i64 hi = <i64>(v >> 64)
    cdef u64 lo = <u64>(v & (<i128>_MASK))
    return ((<object>hi) << 64) | (<object>lo)


cdef inline i128 _dot(const i64[::1] xs, const i64[::1] ys, Py_ssize_t i,
                      Py_ssize_t j) nogil:
    return (<i128>xs[i]) * xs[j] + (<i128>ys[i]) * ys[j]


cdef inline i128 _sqdist(const i64[::1] xs, const i64[::1] ys, Py_ssize_t i,
                         Py_ssize_t j) nogil:
    cdef i128 dx = (<i128>xs[i]) - xs[j]
    cdef i128 dy = (<i128>ys[i]) - ys[j]
    return dx * dx + dy * dy


def profile_counts(const i64[::1] xs, const i64[::1] ys, ta, tb, int threads=1):
    """Per-point counts of partners whose dot product hits each target."""
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, j
    cdef bint a_ok = ta is not None
    cdef bint b_ok = tb is not None
    cdef i128 a = 0, b = 0, d
    cdef i64 ca_i, cb_i
    if a_ok:
        a = _to128(ta)
    if b_ok:
        b = _to128(tb)
    ca = bytearray(8 * n)
    cb = bytearray(8 * n)
    cdef i64[::1] ca_v = memoryview(ca).cast("q")
    cdef i64[::1] cb_v = memoryview(cb).cast("q")
    for i in prange(n, nogil=True, num_threads=threads, schedule="static"):
        ca_i = 0
        cb_i = 0
        for j in range(n):
            d = _dot(xs, ys, i, j)
            if a_ok and d == a:
                ca_i = ca_i + 1
            if b_ok and d == b:
                cb_i = cb_i + 1
        ca_v[i] = ca_i
        cb_v[i] = cb_i
    return memoryview(ca).cast("q").tolist(), memoryview(cb).cast("q").tolist()


cdef i64 _triples_at(const i64[::1] xs, const i64[::1] ys, Py_ssize_t p,
                     i128 a, i128 b) nogil:
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t q, r
    cdef i64 count = 0
    for q in range(n):
        if _dot(xs, ys, p, q) != a:
            continue
        for r in range(n):
            if _dot(xs, ys, p, r) == b:
                count += 1
    return count


def brute_triples(const i64[::1] xs, const i64[::1] ys, ta, tb, int threads=1):
    """Enumerate ordered triples (p, q, r) with p.q == ta and p.r == tb."""
    if ta is None or tb is None:
        return 0
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t p
    cdef i128 a = _to128(ta)
    cdef i128 b = _to128(tb)
    cdef i64 total = 0
    for p in prange(n, nogil=True, num_threads=threads, schedule="static"):
        total += _triples_at(xs, ys, p, a, b)
    return total


def min_sep_sq(const i64[::1] xs, const i64[::1] ys, int threads=1):
    """Minimum squared distance over i < j, with the first minimizing pair."""
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, j, best_j, bi
    cdef i128 d, best
    if n < 2:
        raise ValueError("need at least two points")
    cdef i128* row_min = <i128*> malloc(sizeof(i128) * n)
    cdef Py_ssize_t* row_arg = <Py_ssize_t*> malloc(sizeof(Py_ssize_t) * n)
    if row_min == NULL or row_arg == NULL:
        free(row_min)
        free(row_arg)
        raise MemoryError()
    try:
        for i in prange(n - 1, nogil=True, num_threads=threads,
                        schedule="dynamic"):
            best = _sqdist(xs, ys, i, i + 1)
            best_j = i + 1
            for j in range(i + 2, n):
                d = _sqdist(xs, ys, i, j)
                if d < best:
                    best = d
                    best_j = j
            row_min[i] = best
            row_arg[i] = best_j
        bi = 0
        for i in range(1, n - 1):
            if row_min[i] < row_min[bi]:
                bi = i
        return _unjoin(row_min[bi]), bi, row_arg[bi]
    finally:
        free(row_min)
        free(row_arg)


def energy_row_sums(const i64[::1] xs, const i64[::1] ys, double log_scale_sq,
                    double half_s, int threads=1):
    """Row sums of |p_i - p_j|**(-s) over j != i, Neumaier-compensated.

    Each term is exp(-(s/2) * ln(squared distance)); squared distances are
    exact integers over scale**2 until the final conversion to double.
    """
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, j
    cdef double acc, comp, term, t
    cdef i128 d
    out = bytearray(8 * n)
    cdef double[::1] rows = memoryview(out).cast("d")
    for i in prange(n, nogil=True, num_threads=threads, schedule="static"):
        acc = 0.0
        comp = 0.0
        for j in range(n):
            if j == i:
                continue
            d = _sqdist(xs, ys, i, j)
            term = exp(-half_s * (log(<double>d) - log_scale_sq))
            t = acc + term
            if (acc if acc >= 0 else -acc) >= (term if term >= 0 else -term):
                comp = comp + ((acc - t) + term)
            else:
                comp = comp + ((term - t) + acc)
            acc = t
        rows[i] = acc + comp
    return memoryview(out).cast("d").tolist()
