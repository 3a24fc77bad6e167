"""Invariants of an irreducible plane curve branch and conversions between them.

Puiseux pairs, characteristic exponents and the multiplicity sequence are
equivalent descriptions of the topology of a branch; the multiplicity
sequence in turn determines the dual graph of its minimal embedded
resolution.  :func:`puiseux_pairs_lite` reads the pairs off a polynomial
when every Newton polygon step has a rational solution.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from sigsurf.errors import (ComputationError, FieldExtensionRequired, InputError,
                            InvalidExponents, InvalidPairs, InvalidSequence,
                            ReducibleCurve)
from sigsurf.polynomial import BivariatePoly
from sigsurf.resolution import ResolutionGraph

__all__ = [
    "PuiseuxPairs", "CharExponents", "MultiplicitySequence",
    "pairs_to_char_exponents", "char_exponents_to_pairs",
    "char_exponents_to_mult_sequence", "proximity_runs",
    "mult_sequence_to_resolution_graph", "pairs_to_resolution_graph",
    "puiseux_pairs_lite",
]

MAX_NEWTON_STEPS = 500


@dataclass(frozen=True)
class PuiseuxPairs:
    """Ordered pairs ``(m_i, n_i)``; the i-th characteristic exponent of the
    branch, measured in ``x``, is ``m_i / (n_1 ... n_i)``."""

    pairs: tuple = ()

    def __post_init__(self):
        pairs = tuple((int(m), int(n)) for m, n in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for k, (m, n) in enumerate(pairs):
            if n < 2 or m < 1:
                raise InvalidPairs(f"pair {k + 1} {(m, n)}: need m >= 1 and n >= 2")
            if gcd(m, n) != 1:
                raise InvalidPairs(f"pair {k + 1} {(m, n)} is not coprime")
            if k == 0 and m <= n:
                raise InvalidPairs(f"first pair {(m, n)} needs m > n")
            if k > 0 and m <= n * pairs[k - 1][0]:
                raise InvalidPairs(
                    f"pair {k + 1} {(m, n)} needs m > n * {pairs[k - 1][0]}")

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    @property
    def m(self):
        return [m for m, _ in self.pairs]

    @property
    def n(self):
        return [n for _, n in self.pairs]


@dataclass(frozen=True)
class CharExponents:
    beta: tuple

    def __post_init__(self):
        beta = tuple(int(b) for b in self.beta)
        object.__setattr__(self, "beta", beta)
        if not beta or beta[0] < 1:
            raise InvalidExponents(f"characteristic exponents {beta} must start with a positive multiplicity")
        if any(b >= c for b, c in zip(beta, beta[1:])):
            raise InvalidExponents(f"characteristic exponents {beta} must strictly increase")
        if gcd(*beta) != 1:
            raise InvalidExponents(f"characteristic exponents {beta} are not coprime")


@dataclass(frozen=True)
class MultiplicitySequence:
    e: tuple

    def __post_init__(self):
        e = tuple(int(v) for v in self.e)
        object.__setattr__(self, "e", e)
        if not e or any(v < 1 for v in e):
            raise InvalidSequence(f"multiplicity sequence {e} must be nonempty and positive")
        if any(a < b for a, b in zip(e, e[1:])):
            raise InvalidSequence(f"multiplicity sequence {e} must be non-increasing")
        if e[-1] != 1:
            raise InvalidSequence(f"multiplicity sequence {e} must end with 1")
        proximity_runs(e)


def pairs_to_char_exponents(p: PuiseuxPairs) -> CharExponents:
    n = p.n
    beta = []
    for i in range(len(n) + 1):
        tail = 1
        for v in n[i:]:
            tail *= v
        beta.append(tail if i == 0 else p.pairs[i - 1][0] * tail)
    return CharExponents(tuple(beta))


def char_exponents_to_pairs(c: CharExponents) -> PuiseuxPairs:
    beta = c.beta
    pairs = []
    prev = beta[0]
    for b in beta[1:]:
        cur = gcd(prev, b)
        n_i, m_i = prev // cur, b // cur
        if n_i < 2 or gcd(m_i, n_i) != 1:
            raise InvalidExponents(f"{beta} is not a characteristic sequence")
        pairs.append((m_i, n_i))
        prev = cur
    try:
        return PuiseuxPairs(tuple(pairs))
    except InvalidPairs as exc:
        raise InvalidExponents(str(exc)) from None


def char_exponents_to_mult_sequence(c: CharExponents) -> MultiplicitySequence:
    """Euclidean cascade: ``(beta_1, beta_0)`` first, then each
    ``(beta_i - beta_{i-1}, e_{i-1})``; a quotient ``h`` against divisor
    ``r`` contributes ``h`` points of multiplicity ``r``.
    """
    beta = c.beta
    if len(beta) < 2:
        raise InvalidExponents("a smooth branch has no characteristic exponents to resolve")
    seq = []
    a, b = beta[1], beta[0]
    for i in range(1, len(beta)):
        if i > 1:
            a = beta[i] - beta[i - 1]
        while b:
            h, r = divmod(a, b)
            seq.extend([b] * h)
            a, b = b, r
        # a is now e_i = gcd(beta_0 .. beta_i)
        b = a
    return MultiplicitySequence(tuple(seq))


def proximity_runs(e):
    """For each point, the indices of the later points proximate to it.

    The proximate points of point ``i`` are ``i+1, ..., i+k`` with
    ``e[i+1] + ... + e[i+k] == e[i]``; positivity makes the run unique.  The
    last point has none.  Raises :class:`InvalidSequence` when the run
    overshoots, the sequence stops before the run closes, or a point would
    be proximate to more than two others.
    """
    runs = []
    for i, ei in enumerate(e):
        run = []
        if i < len(e) - 1:
            total = 0
            j = i + 1
            while total < ei and j < len(e):
                total += e[j]
                run.append(j)
                j += 1
            if total != ei:
                raise InvalidSequence(
                    f"Enriques law fails at point {i} of {tuple(e)}: "
                    f"proximate multiplicities sum to {total}, expected {ei}")
        runs.append(run)
    hits = [0] * len(e)
    for run in runs:
        for j in run:
            hits[j] += 1
    for j, h in enumerate(hits):
        if h > 2:
            raise InvalidSequence(f"point {j} of {tuple(e)} would be proximate to {h} points")
    return runs


def mult_sequence_to_resolution_graph(e: MultiplicitySequence) -> ResolutionGraph:
    """Blow up the points one at a time and track the dual graph.

    Divisor ``j`` has total multiplicity ``e_j`` plus the total
    multiplicities of the earlier divisors through its center.  A new
    divisor meets every divisor through its center; when the center is a
    crossing of two divisors, those two stop meeting.
    """
    if not isinstance(e, MultiplicitySequence):
        e = MultiplicitySequence(tuple(e))
    runs = proximity_runs(e.e)
    through = [[] for _ in e.e]
    for i, run in enumerate(runs):
        for j in run:
            through[j].append(i)
    mult = []
    edges = set()
    for j, ej in enumerate(e.e):
        centers = through[j]
        if len(centers) > 2:
            raise InvalidSequence(f"point {j} would lie on {len(centers)} divisors")
        if len(centers) == 2:
            pair = frozenset(centers)
            if pair not in edges:
                raise InvalidSequence(f"point {j} sits on divisors {centers} that do not meet")
            edges.discard(pair)
        mult.append(ej + sum(mult[i] for i in centers))
        for i in centers:
            edges.add(frozenset((i, j)))
    arrow = len(mult)
    edges.add(frozenset((len(mult) - 1, arrow)))
    return ResolutionGraph(
        exceptional=tuple(enumerate(mult)),
        arrowheads=(arrow,),
        edges=tuple(sorted(tuple(sorted(pair)) for pair in edges)),
    )


def pairs_to_resolution_graph(p: PuiseuxPairs) -> ResolutionGraph:
    if len(p) == 0:
        raise InputError("a smooth branch has an empty resolution")
    exps = pairs_to_char_exponents(p)
    return mult_sequence_to_resolution_graph(char_exponents_to_mult_sequence(exps))


def _iroot(n, k):
    """Exact integer k-th root of n >= 0, or None."""
    if n < 2:
        return n
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid ** k
        if v == n:
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def _rational_root(lam: Fraction, q: int):
    if lam < 0 and q % 2 == 0:
        return None
    num = _iroot(abs(lam.numerator), q)
    den = _iroot(lam.denominator, q)
    if num is None or den is None:
        return None
    root = Fraction(num, den)
    return -root if lam < 0 else root


def _edge(g: BivariatePoly, b: int):
    """The Newton polygon edge leaving ``(0, b)``, as ``(a, p, q, coefficients)``."""
    best = None
    for (i, j), _ in g.items():
        if j >= b:
            continue
        slope = Fraction(i, b - j)
        key = (slope, j)
        if best is None or key < best:
            best = key
    if best is None:
        raise ReducibleCurve("y divides the curve equation after substitution: repeated component")
    slope, j_end = best
    if j_end != 0:
        raise ReducibleCurve("the Newton polygon has more than one edge: several branches")
    a = slope * b
    assert a.denominator == 1
    a = int(a)
    d = gcd(a, b)
    p, q = a // d, b // d
    coeffs = [g.coefficient(p * s, b - q * s) for s in range(d + 1)]
    return a, p, q, coeffs


def puiseux_pairs_lite(g: BivariatePoly) -> PuiseuxPairs:
    """Puiseux pairs of the single branch of ``g`` at the origin.

    Runs Newton polygon steps, substituting ``x = s^q``, ``y = s^p (c + t)``
    each time, and gives up with :class:`FieldExtensionRequired` as soon as
    the root ``c`` is not rational.  A smooth germ gives empty pairs.
    """
    if g.is_zero():
        raise InputError("the zero polynomial does not define a curve")
    if g.coefficient(0, 0) != 0:
        raise InputError("the curve does not pass through the origin")
    if g.order() == 1:
        return PuiseuxPairs(())
    if all(i > 0 for i, _ in g.terms) or all(j > 0 for _, j in g.terms):
        raise ReducibleCurve("a coordinate axis is a component of the curve")

    ord_y = min(j for i, j in g.terms if i == 0)
    ord_x = min(i for i, j in g.terms if j == 0)
    if ord_x < ord_y:
        g = g.swap_variables()
        ord_y = ord_x

    b = ord_y
    gamma = Fraction(0)
    ramification = 1
    pairs = []
    steps = 0
    while b > 1:
        steps += 1
        if steps > MAX_NEWTON_STEPS:
            raise ComputationError(f"no characteristic exponent found after {MAX_NEWTON_STEPS} Newton steps")
        _, p, q, coeffs = _edge(g, b)
        d = len(coeffs) - 1
        lam = -coeffs[1] / (d * coeffs[0])
        expected = [coeffs[0] * comb(d, s) * (-lam) ** s for s in range(d + 1)]
        if coeffs != expected:
            raise ReducibleCurve("the edge polynomial has distinct roots: several branches")
        c = _rational_root(lam, q)
        if c is None:
            raise FieldExtensionRequired(
                f"the edge equation c^{q} = {lam} has no rational solution; "
                "supply Puiseux pairs, a resolution graph or spectral pairs from a file instead")
        gamma += Fraction(p, ramification * q)
        ramification *= q
        if q > 1:
            pairs.append((int(gamma * ramification), q))
        g = g.substitute_branch(p, q, c)
        b = d
    return PuiseuxPairs(tuple(pairs))
