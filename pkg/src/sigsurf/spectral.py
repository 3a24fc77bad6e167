"""Eta invariant and signature from the spectral pairs of a curve singularity.

A spectral pair is a spectral number ``alpha`` in (-1, 1) with a weight
``w`` in {0, 1, 2} and a multiplicity ``h``.  For ``K >= 1``::

    eta(g, K) = sum of h over (alpha, 2) with alpha != 0 and K*alpha integral
              + 2 * sum over alpha > 0 with K*alpha not integral
                    of h * (1 - 2 {K alpha})

The second sum carries the sign that makes the result agree with the
resolution and Puiseux routes (on the cusp: eta(1) = 4/3, eta(2) = 2/3,
sigma(z^2 + y^2 - x^3) = -2).  Because the spectrum is symmetric, this is the
same as summing ``-2 h (1 - 2 {K alpha})`` over ``alpha <= 0``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sigsurf.algebra import frac
from sigsurf.cancel import check
from sigsurf.errors import InvalidSpectralPairs, NonIntegerSignature, NotCoprime

__all__ = ["SpectralPairs", "eta_spectral", "signature_spectral",
           "brieskorn_curve_spectral_pairs"]


@dataclass(frozen=True)
class SpectralPairs:
    """Multiset of spectral pairs, stored as sorted ``(alpha, w, h)`` triples."""

    entries: tuple = ()

    def __post_init__(self):
        merged = Counter()
        for alpha, w, h in self.entries:
            alpha = Fraction(alpha)
            w, h = int(w), int(h)
            if not -1 < alpha < 1:
                raise InvalidSpectralPairs(f"spectral number {alpha} is outside (-1, 1)")
            if w not in (0, 1, 2):
                raise InvalidSpectralPairs(f"weight {w} is not in {{0, 1, 2}}")
            if h < 1:
                raise InvalidSpectralPairs(f"multiplicity {h} must be positive")
            merged[(alpha, w)] += h
        spectrum = Counter()
        for (alpha, _), h in merged.items():
            spectrum[alpha] += h
        for alpha, h in spectrum.items():
            if spectrum.get(-alpha, 0) != h:
                raise InvalidSpectralPairs(
                    f"spectrum is not symmetric: {alpha} has multiplicity {h}, "
                    f"{-alpha} has {spectrum.get(-alpha, 0)}")
        entries = tuple(sorted((a, w, h) for (a, w), h in merged.items()))
        object.__setattr__(self, "entries", entries)

    @classmethod
    def _trusted(cls, entries):
        # caller guarantees merged, sorted, symmetric entries
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", tuple(entries))
        return obj

    def __len__(self):
        return len(self.entries)

    @property
    def total_multiplicity(self):
        return sum(h for _, _, h in self.entries)

    @property
    def has_weight_two(self):
        return any(w == 2 for _, w, _ in self.entries)


def eta_spectral(S: SpectralPairs, K: int, cancel=None) -> Fraction:
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    first = 0
    second = Fraction(0)
    for alpha, w, h in S.entries:
        check(cancel)
        k_alpha = K * alpha
        if k_alpha.denominator == 1:
            if w == 2 and alpha != 0:
                first += h
        elif alpha > 0:
            second += h * (1 - 2 * frac(k_alpha))
    return first + 2 * second


def signature_spectral(S: SpectralPairs, N: int, cancel=None, details=False):
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    eta_n = eta_spectral(S, N, cancel=cancel)
    eta_1 = eta_spectral(S, 1, cancel=cancel)
    sigma = eta_n - N * eta_1
    if sigma.denominator != 1:
        raise NonIntegerSignature(f"eta(N) - N*eta(1) = {sigma} is not an integer")
    if details:
        return int(sigma), eta_n, eta_1
    return int(sigma)


def brieskorn_curve_spectral_pairs(a: int, b: int, cancel=None) -> SpectralPairs:
    """Spectral pairs of ``x^a + y^b`` for coprime ``a, b >= 2``: all of weight 1,
    at ``i/a + j/b - 1`` for ``1 <= i < a``, ``1 <= j < b``."""
    if a < 2 or b < 2:
        raise ValueError(f"exponents must be >= 2, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}: the curve is reducible")
    ab = a * b
    # numerators over the common denominator a*b
    counts = Counter()
    for i in range(1, a):
        check(cancel)
        for j in range(1, b):
            counts[i * b + j * a - ab] += 1
    entries = []
    for k, num in enumerate(sorted(counts)):
        if k % 4096 == 0:
            check(cancel)
        entries.append((Fraction(num, ab), 1, counts[num]))
    return SpectralPairs._trusted(entries)
