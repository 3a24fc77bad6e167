"""Backend selection for the hot loops.

The compiled extension is preferred; set ``SIGSURF_PURE_PYTHON=1`` to force
the pure-Python fallback.  Both backends expose the same three functions and
wrappers here route oversized inputs to Python, whose integers do not
overflow.
"""
import os

from sigsurf import _pykernels

_native = None
if not os.environ.get("SIGSURF_PURE_PYTHON"):
    try:
        from sigsurf import _ckernels as _native
    except ImportError:
        _native = None

BACKEND = _native.BACKEND if _native is not None else _pykernels.BACKEND

# stay well inside signed 64-bit: 3*c1*c2*c3 and (2m)^2 * m terms
_INT64_SAFE = 1 << 60


def backends():
    """Map backend name to kernel module, native first when present."""
    found = {}
    if _native is not None:
        found[_native.BACKEND] = _native
    found[_pykernels.BACKEND] = _pykernels
    return found


def _pick(bound, backend):
    if backend is not None:
        return backends()[backend]
    if _native is not None and bound < _INT64_SAFE:
        return _native
    return _pykernels


def s_counts_naive_rows(c1, c2, c3, lo, hi, backend=None):
    return _pick(3 * c1 * c2 * c3, backend).s_counts_naive_rows(c1, c2, c3, lo, hi)


def s_counts_fast_rows(c1, c2, c3, lo, hi, backend=None):
    return _pick(3 * c1 * c2 * c3, backend).s_counts_fast_rows(c1, c2, c3, lo, hi)


def sawtooth_cross_numerator(a, b, m, backend=None):
    return _pick(8 * m ** 3, backend).sawtooth_cross_numerator(a % m, b % m, m)
