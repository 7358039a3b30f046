"""Kernel dispatch: compiled _speedups when importable and safe, else pure Python.

The compiled sweep works in signed 64-bit arithmetic, so it is only used
when the working modulus p^k stays below 2^30 (sums of three products must
fit in an int64).  Larger moduli transparently fall back to the pure
implementation, which uses Python integers.
"""

from . import _kernels_py

try:
    from . import _speedups
except ImportError:  # extension not built
    _speedups = None

HAVE_SPEEDUPS = _speedups is not None

_MAX_C_MODULUS = 1 << 30


def trace_norm_histogram(p, f, force_pure=False):
    """Flat (trace, norm) tally of the units of F_p[T]/(f); see _kernels_py."""
    f0, f1, f2 = (x % p for x in f)
    if _speedups is not None and not force_pure and p < (1 << 20):
        return _speedups.trace_norm_histogram(p, f0, f1, f2)
    return _kernels_py.trace_norm_histogram(p, f0, f1, f2)


def zero_class_sweep(p, k, total, eta, gamma, f, c, force_pure=False):
    """All n in [0, total) with Tr(gamma*eta^n) = c mod p^k; see _kernels_py."""
    m = p**k
    eta = tuple(x % m for x in eta)
    gamma = tuple(x % m for x in gamma)
    f = tuple(x % m for x in f)
    c %= m
    if _speedups is not None and not force_pure and m < _MAX_C_MODULUS:
        return _speedups.zero_class_sweep(p, k, total, eta, gamma, f, c)
    return _kernels_py.zero_class_sweep(p, k, total, eta, gamma, f, c)
