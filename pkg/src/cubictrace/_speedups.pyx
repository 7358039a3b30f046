# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels; mirror of _kernels_py with C integers.

Callers must keep the working modulus below 2^30 so that three-term sums of
products fit in a signed 64-bit integer; the dispatcher in _kernels enforces
this.  Python '%' semantics (cdivision off) keep every residue non-negative.
"""


def trace_norm_histogram(long long p, long long f0, long long f1, long long f2):
    cdef long long tr1 = (-f2) % p
    cdef long long tr2 = (f2 * f2 - 2 * f1) % p
    cdef long long x0, x1, x2, w0, w1, w2, v0, v1, v2, ws1, w2base, v2base
    cdef long long tr_part, norm, tr
    hist = [0] * (p * p)
    cdef list h = hist
    for x2 in range(p):
        w0 = (-f0 * x2) % p
        ws1 = (f1 * x2) % p
        w2base = (-f2 * x2) % p
        for x1 in range(p):
            w2 = (x1 + w2base) % p
            v0 = (-f0 * w2) % p
            v1 = (w0 - f1 * w2) % p
            v2base = (-f2 * w2) % p
            tr_part = (tr1 * x1 + tr2 * x2) % p
            for x0 in range(p):
                w1 = (x0 - ws1) % p
                v2 = (w1 + v2base) % p
                norm = (x0 * (w1 * v2 - w2 * v1)
                        - w0 * (x1 * v2 - x2 * v1)
                        + v0 * (x1 * w2 - x2 * w1)) % p
                if norm != 0:
                    tr = (3 * x0 + tr_part) % p
                    h[tr * p + norm] = <long long> h[tr * p + norm] + 1
    return hist


def zero_class_sweep(long long p, long long k, long long total,
                     eta, gamma, f, long long c):
    cdef long long m = 1
    cdef long long i
    for i in range(k):
        m *= p
    cdef long long f0 = f[0] % m, f1 = f[1] % m, f2 = f[2] % m
    cdef long long e0 = eta[0] % m, e1 = eta[1] % m, e2 = eta[2] % m
    cdef long long g0 = gamma[0] % m, g1 = gamma[1] % m, g2 = gamma[2] % m
    cdef long long tr1 = (-f2) % m
    cdef long long tr2 = (f2 * f2 - 2 * f1) % m
    cdef long long r40 = (f2 * f0) % m
    cdef long long r41 = (f2 * f1 - f0) % m
    cdef long long r42 = (f2 * f2 - f1) % m
    cdef long long h0, h1, h2, h3, h4, n
    c = c % m
    hits = []
    for n in range(total):
        if (3 * g0 + tr1 * g1 + tr2 * g2) % m == c:
            hits.append(n)
        h0 = g0 * e0 % m
        h1 = (g0 * e1 + g1 * e0) % m
        h2 = (g0 * e2 + g1 * e1 + g2 * e0) % m
        h3 = (g1 * e2 + g2 * e1) % m
        h4 = g2 * e2 % m
        g0 = (h0 - h3 * f0 + h4 * r40) % m
        g1 = (h1 - h3 * f1 + h4 * r41) % m
        g2 = (h2 - h3 * f2 + h4 * r42) % m
    return hits
