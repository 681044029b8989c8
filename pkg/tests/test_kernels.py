import math
import subprocess
import sys

import mpmath as mp
import numpy as np
import pytest

from pseudogamma import kernels


def _powers(s: complex, count: int):
    k = np.arange(1, count + 1, dtype=float)
    p = np.exp(-s * np.log(k))
    return np.ascontiguousarray(p.real), np.ascontiguousarray(p.imag)


@pytest.mark.parametrize("backend", kernels.available_backends())
@pytest.mark.parametrize("n", [0, 1, 7, 40])
def test_hasse_inner_against_mpmath(backend, n):
    s = complex(0.5, 14.0)
    pr, pi = _powers(s, n + 1)
    got = kernels.backend(backend).hasse_inner(pr, pi, n)
    with mp.workdps(40):
        want = mp.fsum(
            (-1) ** k * mp.binomial(n, k) * mp.power(k + 1, -mp.mpc(s)) for k in range(n + 1)
        ) / mp.mpf(2) ** (n + 1)
    assert abs(got - complex(want)) <= 1e-15 * max(1e-300, float(mp.fsum(
        mp.binomial(n, k) for k in range(n + 1)) / 2 ** (n + 1)))


@pytest.mark.parametrize("backend", kernels.available_backends())
@pytest.mark.parametrize("zr,zi", [(0.7, 0.3), (-1.2, 1.9), (0.0, 2.0)])
def test_direct_log_sum_against_mpmath(backend, zr, zi):
    d, w2, log2 = 3.0, 20.0, 6
    re, im = kernels.backend(backend).direct_log_sum(zr, zi, d, w2, log2)
    n = 1 << log2
    with mp.workdps(40):
        z = mp.mpc(zr, zi)
        tot = mp.mpc(0)
        for k in range(1, n + 1):
            w = mp.expjpi(mp.mpf(2 * k) / n)
            tot += mp.log(1 - w * d / (z - w * w2))
    assert re == pytest.approx(float(tot.real), abs=1e-13)
    assert im == pytest.approx(float(tot.imag), abs=1e-13)


@pytest.mark.skipif(len(kernels.available_backends()) < 2, reason="compiled kernels not built")
def test_backends_agree():
    c, p = kernels.backend("cython"), kernels.backend("python")
    a = c.direct_log_sum(1.1, -0.4, 3.16, 300.0, 16)
    b = p.direct_log_sum(1.1, -0.4, 3.16, 300.0, 16)
    assert math.isclose(a[0], b[0], rel_tol=1e-13) and abs(a[1] - b[1]) < 1e-12
    pr, pi = _powers(complex(-3.5, 2.0), 301)
    # the alternating sum cancels heavily; compare on the scale of its terms
    scale = sum(math.comb(300, k) * math.hypot(pr[k], pi[k]) for k in range(301)) / 2**301
    assert abs(c.hasse_inner(pr, pi, 300) - p.hasse_inner(pr, pi, 300)) < 1e-14 * scale


def test_fallback_selected_by_environment():
    code = "from pseudogamma import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"PSEUDOGAMMA_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"


def test_range_checks():
    with pytest.raises(ValueError):
        kernels.backend("python").direct_log_sum(0.1, 0.1, 1.0, 10.0, 41)
    with pytest.raises(ValueError):
        kernels.backend("fortran")
