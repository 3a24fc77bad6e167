"""Eta invariant and signature from an embedded resolution graph.

Vertices are exceptional divisors (with their total multiplicities) and
arrowheads (one per branch, multiplicity 1).  For ``K >= 1``::

    eta(g, K) = #arrowheads - 1
              + sum over edges e of (gcd(K, m_e) - 1)
              - sum over divisors w of (gcd(K, M_w) - 1)
              + 4 * sum over divisors w of degree >= 3,
                    neighbours v of w,
                    k = 1..m_w  of  ((k m_v / m_w)) ((k K / m_w))

where ``m_e`` is the gcd of the endpoint multiplicities and ``M_w`` the gcd
over ``w`` and its neighbours.  The signature of ``z^N + g`` is
``eta(g, N) - N * eta(g, 1)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from sigsurf import kernels
from sigsurf.cancel import check
from sigsurf.errors import InvalidGraph, NonIntegerSignature

__all__ = ["ResolutionGraph", "eta_resolution", "signature_resolution",
           "irreducible_identity_check", "edge_gcd_sum", "vertex_gcd_sum",
           "dedekind_term", "ordinary_point_graph"]


@dataclass(frozen=True)
class ResolutionGraph:
    exceptional: tuple  # ((id, m), ...)
    arrowheads: tuple   # (id, ...)
    edges: tuple        # ((id, id), ...)

    def __post_init__(self):
        exc = tuple((int(v), int(m)) for v, m in self.exceptional)
        arrows = tuple(int(a) for a in self.arrowheads)
        edges = tuple(tuple(sorted((int(a), int(b)))) for a, b in self.edges)
        object.__setattr__(self, "exceptional", exc)
        object.__setattr__(self, "arrowheads", arrows)
        object.__setattr__(self, "edges", edges)
        self._validate()

    def _validate(self):
        if not self.exceptional:
            raise InvalidGraph("the graph needs at least one exceptional vertex")
        if not self.arrowheads:
            raise InvalidGraph("the graph needs at least one arrowhead")
        ids = [v for v, _ in self.exceptional] + list(self.arrowheads)
        if len(set(ids)) != len(ids):
            raise InvalidGraph("vertex ids must be unique")
        for v, m in self.exceptional:
            if m < 1:
                raise InvalidGraph(f"vertex {v} has multiplicity {m} < 1")
        known = set(ids)
        seen = set()
        for a, b in self.edges:
            if a == b:
                raise InvalidGraph(f"loop at vertex {a}")
            if a not in known or b not in known:
                raise InvalidGraph(f"edge {(a, b)} references an unknown vertex")
            if (a, b) in seen:
                raise InvalidGraph(f"duplicate edge {(a, b)}")
            seen.add((a, b))
        if len(self.edges) != len(ids) - 1:
            raise InvalidGraph(f"a tree on {len(ids)} vertices has {len(ids) - 1} edges, got {len(self.edges)}")
        adj = self.adjacency()
        stack, reached = [ids[0]], {ids[0]}
        while stack:
            for u in adj[stack.pop()]:
                if u not in reached:
                    reached.add(u)
                    stack.append(u)
        if len(reached) != len(ids):
            raise InvalidGraph("the graph is not connected")
        arrows = set(self.arrowheads)
        for a in self.arrowheads:
            if len(adj[a]) != 1:
                raise InvalidGraph(f"arrowhead {a} has degree {len(adj[a])}, expected 1")
            if adj[a][0] in arrows:
                raise InvalidGraph(f"arrowhead {a} is attached to another arrowhead")

    def adjacency(self):
        adj = {v: [] for v, _ in self.exceptional}
        adj.update({a: [] for a in self.arrowheads})
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def multiplicities(self):
        mult = dict(self.exceptional)
        mult.update({a: 1 for a in self.arrowheads})
        return mult

    def relabeled(self, mapping):
        return ResolutionGraph(
            exceptional=tuple((mapping[v], m) for v, m in self.exceptional),
            arrowheads=tuple(mapping[a] for a in self.arrowheads),
            edges=tuple((mapping[a], mapping[b]) for a, b in self.edges),
        )

    def shuffled(self, rng=None):
        """Copy with vertex ids randomly permuted (used to test invariance)."""
        rng = rng or random.Random()
        ids = [v for v, _ in self.exceptional] + list(self.arrowheads)
        image = list(range(len(ids)))
        rng.shuffle(image)
        return self.relabeled(dict(zip(ids, image)))


def ordinary_point_graph(r: int) -> ResolutionGraph:
    """One blowup resolves ``r`` transverse lines: a vertex of multiplicity ``r``
    carrying ``r`` arrowheads."""
    if r < 1:
        raise InvalidGraph("need at least one line")
    return ResolutionGraph(
        exceptional=((0, r),),
        arrowheads=tuple(range(1, r + 1)),
        edges=tuple((0, a) for a in range(1, r + 1)),
    )


def edge_gcd_sum(G: ResolutionGraph, K: int) -> int:
    mult = G.multiplicities()
    return sum(gcd(K, gcd(mult[a], mult[b])) - 1 for a, b in G.edges)


def vertex_gcd_sum(G: ResolutionGraph, K: int) -> int:
    mult = G.multiplicities()
    adj = G.adjacency()
    total = 0
    for w, m in G.exceptional:
        big_m = gcd(m, *(mult[v] for v in adj[w]))
        total += gcd(K, big_m) - 1
    return total


@lru_cache(maxsize=4096)
def _cross_sum(a: int, b: int, m: int) -> Fraction:
    return Fraction(kernels.sawtooth_cross_numerator(a, b, m), 4 * m * m)


def dedekind_term(G: ResolutionGraph, K: int, cancel=None) -> Fraction:
    """``4 * sum_{w rupture} sum_{v ~ w} sum_{k=1}^{m_w} ((k m_v/m_w))((k K/m_w))``."""
    mult = G.multiplicities()
    adj = G.adjacency()
    total = Fraction(0)
    for w, m_w in G.exceptional:
        if len(adj[w]) < 3:
            continue
        check(cancel)
        for v in adj[w]:
            total += _cross_sum(mult[v] % m_w, K % m_w, m_w)
    return 4 * total


def eta_resolution(G: ResolutionGraph, K: int, cancel=None) -> Fraction:
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    return (len(G.arrowheads) - 1
            + edge_gcd_sum(G, K) - vertex_gcd_sum(G, K)
            + dedekind_term(G, K, cancel=cancel))


def irreducible_identity_check(G: ResolutionGraph, K: int) -> bool:
    """Whether the edge and vertex gcd sums agree (always so for one branch)."""
    return edge_gcd_sum(G, K) == vertex_gcd_sum(G, K)


def signature_resolution(G: ResolutionGraph, N: int, cancel=None, details=False):
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    eta_n = eta_resolution(G, N, cancel=cancel)
    eta_1 = eta_resolution(G, 1, cancel=cancel)
    sigma = eta_n - N * eta_1
    if sigma.denominator != 1:
        raise NonIntegerSignature(f"eta(N) - N*eta(1) = {sigma} is not an integer; the graph data is inconsistent")
    if details:
        return int(sigma), eta_n, eta_1
    return int(sigma)
