from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sigsurf import _pykernels, kernels
from sigsurf.algebra import sawtooth


def oracle_cross(a, b, m):
    return sum(sawtooth(Fraction(k * a, m)) * sawtooth(Fraction(k * b, m)) for k in range(1, m + 1))


@given(st.integers(0, 200), st.integers(0, 200), st.integers(1, 60))
def test_cross_numerator_matches_sawtooth(a, b, m):
    num = kernels.sawtooth_cross_numerator(a, b, m)
    assert Fraction(num, 4 * m * m) == oracle_cross(a, b, m)


@pytest.mark.parametrize("a, b, m", [(1, 1, 10), (2, 1, 6), (3, 6, 6), (7, 5, 13)])
def test_cross_numerator_backends(a, b, m, backend):
    assert kernels.sawtooth_cross_numerator(a, b, m, backend=backend) == \
        _pykernels.sawtooth_cross_numerator(a, b, m)


def test_rows_are_additive(backend):
    c = (9, 11, 13)
    whole = kernels.s_counts_fast_rows(*c, 1, 9, backend=backend)
    parts = [kernels.s_counts_fast_rows(*c, lo, lo + 1, backend=backend) for lo in range(1, 9)]
    assert tuple(map(sum, zip(*parts))) == tuple(whole)


def test_backend_selection_reports_name():
    assert kernels.BACKEND in kernels.backends()
    assert "python" in kernels.backends()
