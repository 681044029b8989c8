# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops. ``_pykernels`` is the numpy twin used when this
extension is not built."""

from libc.math cimport atan2, cos, fabs, ldexp, log1p, sin, M_PI


cdef inline void _neumaier(double x, double* s, double* comp) noexcept nogil:
    cdef double t = s[0] + x
    if fabs(s[0]) >= fabs(x):
        comp[0] += (s[0] - t) + x
    else:
        comp[0] += (x - t) + s[0]
    s[0] = t


cdef inline void _root(long long j, long long n, double step, double* c, double* s) noexcept nogil:
    # exp(2 pi i j / n), exact on the axes
    if j == 0:
        c[0] = 1.0; s[0] = 0.0
    elif 2 * j == n:
        c[0] = -1.0; s[0] = 0.0
    elif 4 * j == n:
        c[0] = 0.0; s[0] = 1.0
    elif 4 * j == 3 * n:
        c[0] = 0.0; s[0] = -1.0
    else:
        if 2 * j > n:
            j -= n
        c[0] = cos(step * j)
        s[0] = sin(step * j)


cdef void _direct_sum(double zr, double zi, double d, double w2, int log2_count,
                      double* out_re, double* out_im) noexcept nogil:
    cdef long long n = (<long long> 1) << log2_count
    cdef double step = ldexp(2.0 * M_PI, -log2_count)
    cdef long long k
    cdef double c, s, dr, di, nr, ni, den2, cr, ci
    cdef double sr = 0.0, er = 0.0, si = 0.0, ei = 0.0
    for k in range(1, n + 1):
        _root(k % n, n, step, &c, &s)
        dr = zr - c * w2
        di = zi - s * w2
        nr = -c * d
        ni = -s * d
        den2 = dr * dr + di * di
        cr = (nr * dr + ni * di) / den2
        ci = (ni * dr - nr * di) / den2
        _neumaier(0.5 * log1p(2.0 * cr + cr * cr + ci * ci), &sr, &er)
        _neumaier(atan2(ci, 1.0 + cr), &si, &ei)
    out_re[0] = sr + er
    out_im[0] = si + ei


def direct_log_sum(double zr, double zi, double d, double w2, int log2_count):
    """Sum of Log(1 + c_j), c_j = -w_j d / (z - w_j w2), over all
    2**log2_count roots of unity w_j (j = 1 .. 2**log2_count)."""
    cdef double re = 0.0, im = 0.0
    if log2_count < 0 or log2_count > 40:
        raise ValueError("log2_count out of range")
    with nogil:
        _direct_sum(zr, zi, d, w2, log2_count, &re, &im)
    return re, im


def hasse_inner(double[::1] pr, double[::1] pi, int n):
    """sum_k (-1)^k C(n,k)/2^(n+1) * p_k for k = 0..n, with the scaled
    binomial weights built multiplicatively so nothing overflows."""
    cdef int k
    cdef double w = ldexp(1.0, -(n + 1))
    cdef double sr = 0.0, er = 0.0, si = 0.0, ei = 0.0
    cdef double pair_r, pair_i, w_next
    if pr.shape[0] < n + 1 or pi.shape[0] < n + 1:
        raise ValueError("not enough powers")
    with nogil:
        k = 0
        while k <= n:
            if k + 1 <= n:
                w_next = w * (n - k) / (k + 1)
                pair_r = w * pr[k] - w_next * pr[k + 1]
                pair_i = w * pi[k] - w_next * pi[k + 1]
                if k + 2 <= n:
                    w = w_next * (n - k - 1) / (k + 2)
            else:
                pair_r = w * pr[k]
                pair_i = w * pi[k]
            _neumaier(pair_r, &sr, &er)
            _neumaier(pair_i, &si, &ei)
            k += 2
    return complex(sr + er, si + ei)
