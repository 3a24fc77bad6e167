import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sigsurf.brieskorn import (BrieskornExponents, SCounts, brieskorn_signature,
                               s_counts_fast, s_counts_naive)
from sigsurf.cancel import CancelToken
from sigsurf.errors import Cancelled, InputError


def oracle_counts(c):
    """Literal enumeration with Fraction sums, independent of the kernels."""
    bands = [0, 0, 0]
    z = 0
    for ks in itertools.product(*(range(1, cj) for cj in c)):
        total = sum(Fraction(k, cj) for k, cj in zip(ks, c))
        if total.denominator == 1:
            z += 1
        else:
            bands[int(total)] += 1
    return SCounts(*bands, z)


def test_oracle_values():
    assert oracle_counts((2, 3, 5)) == SCounts(0, 8, 0, 0)
    assert oracle_counts((2, 2, 2)) == SCounts(0, 1, 0, 0)


@pytest.mark.parametrize("c, expected", [
    ((2, 3, 5), SCounts(0, 8, 0, 0)),
    ((1, 4, 6), SCounts(0, 0, 0, 0)),
    ((2, 2, 2), SCounts(0, 1, 0, 0)),
])
def test_counts(c, expected, backend):
    assert s_counts_naive(c, backend=backend) == expected
    assert s_counts_fast(c, backend=backend) == expected


def test_integer_sum_counted_separately(backend):
    assert s_counts_naive((3, 3, 3), backend=backend).z_integer >= 1


@pytest.mark.parametrize("c, sigma", [((2, 3, 5), -8), ((2, 2, 2), -1), ((3, 2, 2), -2), ((1, 7, 9), 0)])
def test_signature(c, sigma):
    assert brieskorn_signature(c) == sigma


@pytest.mark.parametrize("c", list(itertools.product(range(1, 7), repeat=3))[::7])
def test_against_oracle(c, backend):
    expected = oracle_counts(c)
    assert s_counts_naive(c, backend=backend) == expected
    assert s_counts_fast(c, backend=backend) == expected


def test_backends_agree_on_random_triples(backend):
    rng = random.Random(7)
    for _ in range(40):
        c = tuple(rng.randint(1, 40) for _ in range(3))
        assert s_counts_fast(c, backend=backend) == s_counts_naive(c, backend=backend)


@given(st.tuples(*[st.integers(1, 30)] * 3))
@settings(max_examples=150, deadline=None)
def test_partition_and_symmetry(c):
    counts = s_counts_fast(c)
    assert counts.s0 + counts.s1 + counts.s2 + counts.z_integer == BrieskornExponents(*c).milnor_number
    sigma = counts.signature
    for perm in itertools.permutations(c):
        assert brieskorn_signature(perm) == sigma


def test_threaded_partition_matches():
    c = (150, 151, 152)
    assert s_counts_fast(c, workers=4) == s_counts_fast(c, workers=1)


def test_large_exponents_use_exact_python_path():
    # 3*c1*c2*c3 exceeds the 64-bit guard, so the Python kernel runs
    c = (3, 2, 10 ** 18 + 1)
    counts = s_counts_fast(c)
    assert counts.s0 + counts.s1 + counts.s2 + counts.z_integer == 2 * 1 * 10 ** 18


def test_cancellation():
    token = CancelToken()
    token.cancel()
    with pytest.raises(Cancelled):
        s_counts_fast((50, 50, 50), cancel=token)


@pytest.mark.parametrize("c", [(0, 2, 3), (2, -1, 3), (2.0, 3, 5)])
def test_rejects_bad_exponents(c):
    with pytest.raises(InputError):
        BrieskornExponents(*c)
