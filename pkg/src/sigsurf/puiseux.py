"""Signature of z^N + g for an irreducible branch g, from its Puiseux pairs.

With ``a_1 = m_1``, ``a_{i+1} = m_{i+1} - n_{i+1} (m_i - n_i a_i)``,
``d_l = 1`` and ``d_i = gcd(N, n_{i+1} ... n_l)``, the signature splits as
``sum_i d_i * sigma(x^{a_i} + y^{n_i} + z^{N/d_i})``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from sigsurf.brieskorn import BrieskornExponents, brieskorn_signature
from sigsurf.cancel import check
from sigsurf.curves import PuiseuxPairs
from sigsurf.errors import SmoothBranch

__all__ = ["ReductionPlan", "reduction_plan", "signature_puiseux"]


@dataclass(frozen=True)
class ReductionPlan:
    a: tuple
    d: tuple
    summands: tuple  # BrieskornExponents per pair


def reduction_plan(p: PuiseuxPairs, N: int) -> ReductionPlan:
    if not isinstance(p, PuiseuxPairs):
        p = PuiseuxPairs(tuple(p))
    if len(p) == 0:
        raise SmoothBranch("a smooth branch has no Puiseux pairs to reduce")
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    m, n = p.m, p.n
    a = [m[0]]
    for i in range(1, len(p)):
        a.append(m[i] - n[i] * (m[i - 1] - n[i - 1] * a[i - 1]))
    d = [gcd(N, prod(n[i + 1:])) for i in range(len(p) - 1)] + [1]
    summands = tuple(BrieskornExponents(a[i], n[i], N // d[i]) for i in range(len(p)))
    return ReductionPlan(tuple(a), tuple(d), summands)


def signature_puiseux(p: PuiseuxPairs, N: int, cancel=None) -> int:
    plan = reduction_plan(p, N)
    total = 0
    for d_i, exps in zip(plan.d, plan.summands):
        check(cancel)
        total += d_i * brieskorn_signature(exps, cancel=cancel)
    return total
