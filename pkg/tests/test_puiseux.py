import pytest
from hypothesis import given, settings, strategies as st

from sigsurf.brieskorn import BrieskornExponents, brieskorn_signature
from sigsurf.curves import PuiseuxPairs
from sigsurf.errors import SmoothBranch
from sigsurf.puiseux import reduction_plan, signature_puiseux

from conftest import random_pairs


def test_plan_three_pairs():
    plan = reduction_plan(PuiseuxPairs(((3, 2), (7, 2), (15, 2))), 5)
    assert plan.a == (3, 13, 53)
    assert plan.d == (1, 1, 1)
    assert plan.summands == (BrieskornExponents(3, 2, 5), BrieskornExponents(13, 2, 5),
                             BrieskornExponents(53, 2, 5))


def test_plan_divisors_split_n():
    plan = reduction_plan(PuiseuxPairs(((3, 2), (7, 2))), 4)
    assert plan.a == (3, 13)
    assert plan.d == (2, 1)
    assert plan.summands == (BrieskornExponents(3, 2, 2), BrieskornExponents(13, 2, 4))


def test_single_pair_is_brieskorn():
    for (m, n) in ((3, 2), (5, 3), (7, 4)):
        for N in range(2, 7):
            assert signature_puiseux(PuiseuxPairs(((m, n),)), N) == brieskorn_signature((m, n, N))


def test_accepts_plain_tuples():
    assert reduction_plan(((3, 2),), 2).a == (3,)


def test_smooth_branch():
    with pytest.raises(SmoothBranch):
        reduction_plan(PuiseuxPairs(()), 3)


def test_small_n_rejected():
    with pytest.raises(ValueError):
        reduction_plan(PuiseuxPairs(((3, 2),)), 1)


@pytest.mark.parametrize("pairs, N, sigma", [
    (((3, 2), (7, 2), (15, 2)), 5, -168),
    (((3, 2), (7, 2), (15, 2), (67, 3)), 5, -1620),
    (((3, 2), (7, 2), (113, 3)), 6, -940),
])
def test_known_values(pairs, N, sigma):
    assert signature_puiseux(PuiseuxPairs(pairs), N) == sigma


@given(st.randoms(use_true_random=False), st.integers(2, 12))
@settings(max_examples=60, deadline=None)
def test_plan_invariants(rnd, N):
    p = random_pairs(rnd)
    plan = reduction_plan(p, N)
    for a_i, m_i in zip(plan.a, p.m):
        assert a_i >= m_i
    for d_i in plan.d:
        assert N % d_i == 0
    assert plan.d[-1] == 1
