import random

import pytest

from cubictrace import _kernels
from cubictrace.algebra import ZpCubicAlgebra, disc_cubic


def random_cubic(rng, p):
    while True:
        f = tuple(rng.randrange(p) for _ in range(3))
        if disc_cubic(f[2], f[1], f[0]) % p:
            return f


@pytest.mark.skipif(not _kernels.HAVE_SPEEDUPS, reason="compiled kernels not built")
def test_sweep_kernel_matches_pure():
    rng = random.Random(0)
    for p, k in [(5, 3), (7, 4), (11, 2)]:
        f = random_cubic(rng, p)
        A = ZpCubicAlgebra(p, k, f)
        m = A.modulus
        for _ in range(5):
            eta = tuple(rng.randrange(m) for _ in range(3))
            if not A.is_unit(eta):
                continue
            gamma = tuple(rng.randrange(m) for _ in range(3))
            c = rng.randrange(m)
            total = 500
            fast = _kernels.zero_class_sweep(p, k, total, eta, gamma, f, c)
            slow = _kernels.zero_class_sweep(
                p, k, total, eta, gamma, f, c, force_pure=True
            )
            assert fast == slow


@pytest.mark.skipif(not _kernels.HAVE_SPEEDUPS, reason="compiled kernels not built")
def test_histogram_kernel_matches_pure():
    rng = random.Random(1)
    for p in (5, 13, 31):
        f = random_cubic(rng, p)
        assert _kernels.trace_norm_histogram(p, f) == _kernels.trace_norm_histogram(
            p, f, force_pure=True
        )


def test_sweep_dispatcher_falls_back_above_int64():
    # p^k >= 2^30 routes to the pure path transparently and stays correct
    p, k = 101, 5  # 101^5 = 1.05e10 > 2^30
    f = (1, 3, 0)
    A = ZpCubicAlgebra(p, k, f)
    eta = (1, 1, 0)
    assert A.is_unit(eta)
    gamma = (1, 2, 3)
    got = _kernels.zero_class_sweep(p, k, 50, eta, gamma, f, A.trace(gamma))
    assert 0 in got  # n = 0 satisfies Tr(gamma) = c by construction
    # values are genuine congruence solutions
    m = p**k
    for n in got:
        assert (A.trace(A.mul(gamma, A.pow(eta, n))) - A.trace(gamma)) % m == 0
