"""Pure-Python kernels; loaded when the compiled ``_ckernels`` is unavailable.

The counting kernels work on a band of rows ``lo <= k1 < hi`` so callers can
split work across threads and poll for cancellation between bands.  They
return ``(s0, s1, s2, z)``: lattice points with exponent sum in (0,1), (1,2),
(2,3) and at an exact integer.
"""

BACKEND = "python"


def s_counts_naive_rows(c1, c2, c3, lo, hi):
    d = c1 * c2 * c3
    w1, w2, w3 = c2 * c3, c1 * c3, c1 * c2
    counts = [0, 0, 0]
    z = 0
    for k1 in range(lo, hi):
        for k2 in range(1, c2):
            base = k1 * w1 + k2 * w2
            for k3 in range(1, c3):
                t, r = divmod(base + k3 * w3, d)
                if r == 0:
                    z += 1
                else:
                    counts[t] += 1
    return counts[0], counts[1], counts[2], z


def s_counts_fast_rows(c1, c2, c3, lo, hi):
    d = c1 * c2 * c3
    w1, w2, step = c2 * c3, c1 * c3, c1 * c2
    n = c3 - 1
    s0 = s1 = s2 = z = 0
    for k1 in range(lo, hi):
        for k2 in range(1, c2):
            a = k1 * w1 + k2 * w2
            # k3 <= (X - a) / step  <=>  a + k3*step <= X
            le1 = min(max((d - a) // step, 0), n)
            lt1 = min(max((d - a - 1) // step, 0), n)
            le2 = min(max((2 * d - a) // step, 0), n)
            lt2 = min(max((2 * d - a - 1) // step, 0), n)
            s0 += lt1
            s1 += lt2 - le1
            s2 += n - le2
            z += (le1 - lt1) + (le2 - lt2)
    return s0, s1, s2, z


def sawtooth_cross_numerator(a, b, m):
    """``4 m^2 * sum_{k=1}^{m} ((k a / m)) ((k b / m))`` as an exact integer."""
    total = 0
    for k in range(1, m + 1):
        r = k * a % m
        s = k * b % m
        if r and s:
            total += (2 * r - m) * (2 * s - m)
    return total
