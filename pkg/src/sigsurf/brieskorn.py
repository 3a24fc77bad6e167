"""Signature of the Brieskorn polynomial x^c1 + y^c2 + z^c3 by lattice counting.

For ``1 <= k_j <= c_j - 1`` the point ``(k1, k2, k3)`` is sorted by the band
``t < k1/c1 + k2/c2 + k3/c3 < t + 1`` its exponent sum falls into; the
signature is ``S_0 - S_1 + S_2``.  Points whose sum is an integer belong to
no band.  Every comparison is done on integers over the common denominator
``c1*c2*c3``.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from sigsurf import kernels
from sigsurf.cancel import check
from sigsurf.errors import InputError

__all__ = ["BrieskornExponents", "SCounts", "s_counts_naive", "s_counts_fast",
           "brieskorn_signature"]

# inner iterations per cancellation poll
_BLOCK_WORK = 1 << 17


@dataclass(frozen=True)
class BrieskornExponents:
    c1: int
    c2: int
    c3: int

    def __post_init__(self):
        for c in self.as_tuple():
            if isinstance(c, bool) or not isinstance(c, int) or c < 1:
                raise InputError(f"Brieskorn exponents must be integers >= 1, got {self.as_tuple()}")

    def as_tuple(self):
        return (self.c1, self.c2, self.c3)

    @property
    def milnor_number(self):
        return (self.c1 - 1) * (self.c2 - 1) * (self.c3 - 1)


@dataclass(frozen=True)
class SCounts:
    s0: int
    s1: int
    s2: int
    z_integer: int

    @property
    def signature(self):
        return self.s0 - self.s1 + self.s2

    def __add__(self, other):
        return SCounts(self.s0 + other.s0, self.s1 + other.s1,
                       self.s2 + other.s2, self.z_integer + other.z_integer)


def _coerce(c):
    if isinstance(c, BrieskornExponents):
        return c
    return BrieskornExponents(*c)


def _row_blocks(first, last, row_cost):
    step = max(1, _BLOCK_WORK // max(row_cost, 1))
    return [(lo, min(lo + step, last)) for lo in range(first, last, step)]


def s_counts_naive(c, cancel=None, backend=None) -> SCounts:
    """Exhaustive enumeration of all lattice points; the reference counter."""
    c = _coerce(c)
    c1, c2, c3 = c.as_tuple()
    total = SCounts(0, 0, 0, 0)
    for lo, hi in _row_blocks(1, c1, (c2 - 1) * (c3 - 1)):
        check(cancel)
        total += SCounts(*kernels.s_counts_naive_rows(c1, c2, c3, lo, hi, backend=backend))
    return total


def s_counts_fast(c, workers=1, cancel=None, backend=None) -> SCounts:
    """Same counts as :func:`s_counts_naive` in O(c1*c2) after sorting.

    The innermost coordinate is resolved in closed form with floor
    divisions, so the largest exponent is placed there.  ``workers > 1``
    splits the rows over threads; the compiled kernel releases the GIL.
    """
    c1, c2, c3 = sorted(_coerce(c).as_tuple())
    blocks = _row_blocks(1, c1, c2 - 1)

    def run(block):
        check(cancel)
        return SCounts(*kernels.s_counts_fast_rows(c1, c2, c3, *block, backend=backend))

    total = SCounts(0, 0, 0, 0)
    if workers <= 1 or len(blocks) < 2:
        for block in blocks:
            total += run(block)
        return total
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(run, blocks):
            total += part
    return total


def brieskorn_signature(c, cancel=None, backend=None) -> int:
    return s_counts_fast(c, cancel=cancel, backend=backend).signature
