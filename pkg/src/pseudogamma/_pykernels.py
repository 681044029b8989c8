"""Pure-Python (numpy) twins of the compiled kernels in ``_ckernels.pyx``.

Same signatures and the same per-element formulas; only the summation
order differs (pairwise per chunk, then ``math.fsum``).
"""

from __future__ import annotations

import math

import numpy as np

_CHUNK = 1 << 18


def _roots(j: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    step = math.ldexp(2.0 * math.pi, -int(round(math.log2(n)))) if n > 0 else 0.0
    jj = np.where(2 * j > n, j - n, j)
    c = np.cos(step * jj)
    s = np.sin(step * jj)
    c[j == 0], s[j == 0] = 1.0, 0.0
    half = 2 * j == n
    c[half], s[half] = -1.0, 0.0
    quarter = 4 * j == n
    c[quarter], s[quarter] = 0.0, 1.0
    three = 4 * j == 3 * n
    c[three], s[three] = 0.0, -1.0
    return c, s


def direct_log_sum(zr: float, zi: float, d: float, w2: float, log2_count: int) -> tuple[float, float]:
    if not 0 <= log2_count <= 40:
        raise ValueError("log2_count out of range")
    n = 1 << log2_count
    parts_re: list[float] = []
    parts_im: list[float] = []
    for start in range(1, n + 1, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, n + 1), dtype=np.int64)
        c, s = _roots(k % n, n)
        dr = zr - c * w2
        di = zi - s * w2
        nr = -c * d
        ni = -s * d
        den2 = dr * dr + di * di
        cr = (nr * dr + ni * di) / den2
        ci = (ni * dr - nr * di) / den2
        parts_re.append(float(np.sum(0.5 * np.log1p(2.0 * cr + cr * cr + ci * ci))))
        parts_im.append(float(np.sum(np.arctan2(ci, 1.0 + cr))))
    return math.fsum(parts_re), math.fsum(parts_im)


def hasse_inner(pr: np.ndarray, pi: np.ndarray, n: int) -> complex:
    if len(pr) < n + 1 or len(pi) < n + 1:
        raise ValueError("not enough powers")
    k = np.arange(n + 1)
    # C(n,k)/2^(n+1) built as a running product, never overflowing
    ratios = np.empty(n + 1)
    ratios[0] = math.ldexp(1.0, -(n + 1))
    ratios[1:] = (n - k[:-1]) / (k[1:])
    w = np.cumprod(ratios)
    w[1::2] *= -1.0
    terms_r = w * pr[: n + 1]
    terms_i = w * pi[: n + 1]
    return complex(math.fsum(terms_r), math.fsum(terms_i))
