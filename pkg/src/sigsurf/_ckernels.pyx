# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counterparts of the kernels in ``_pykernels``.

All arithmetic is on 64-bit integers; the Python wrappers only route here
when ``3 * c1 * c2 * c3`` fits comfortably in that range.
"""

BACKEND = "cython"


cdef inline long long _floordiv(long long a, long long b) nogil:
    cdef long long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long long _clamp(long long v, long long hi) nogil:
    if v < 0:
        return 0
    if v > hi:
        return hi
    return v


def s_counts_naive_rows(long long c1, long long c2, long long c3,
                        long long lo, long long hi):
    cdef long long d = c1 * c2 * c3
    cdef long long w1 = c2 * c3, w2 = c1 * c3, w3 = c1 * c2
    cdef long long s0 = 0, s1 = 0, s2 = 0, z = 0
    cdef long long k1, k2, k3, total, t
    with nogil:
        for k1 in range(lo, hi):
            for k2 in range(1, c2):
                for k3 in range(1, c3):
                    total = k1 * w1 + k2 * w2 + k3 * w3
                    if total % d == 0:
                        z += 1
                    else:
                        t = total / d
                        if t == 0:
                            s0 += 1
                        elif t == 1:
                            s1 += 1
                        else:
                            s2 += 1
    return s0, s1, s2, z


def s_counts_fast_rows(long long c1, long long c2, long long c3,
                       long long lo, long long hi):
    cdef long long d = c1 * c2 * c3
    cdef long long w1 = c2 * c3, w2 = c1 * c3, step = c1 * c2
    cdef long long n = c3 - 1
    cdef long long s0 = 0, s1 = 0, s2 = 0, z = 0
    cdef long long k1, k2, a, le1, lt1, le2, lt2
    with nogil:
        for k1 in range(lo, hi):
            for k2 in range(1, c2):
                a = k1 * w1 + k2 * w2
                le1 = _clamp(_floordiv(d - a, step), n)
                lt1 = _clamp(_floordiv(d - a - 1, step), n)
                le2 = _clamp(_floordiv(2 * d - a, step), n)
                lt2 = _clamp(_floordiv(2 * d - a - 1, step), n)
                s0 += lt1
                s1 += lt2 - le1
                s2 += n - le2
                z += (le1 - lt1) + (le2 - lt2)
    return s0, s1, s2, z


def sawtooth_cross_numerator(long long a, long long b, long long m):
    cdef long long k, r, s
    cdef long long total = 0
    a %= m
    b %= m
    with nogil:
        for k in range(1, m + 1):
            r = (k * a) % m
            s = (k * b) % m
            if r != 0 and s != 0:
                total += (2 * r - m) * (2 * s - m)
    return total
