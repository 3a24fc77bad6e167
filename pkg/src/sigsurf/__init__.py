"""Signature of the surface singularity z^N + g(x, y) = 0.

Three independent routes: Puiseux pairs reduced to Brieskorn signatures,
the eta invariant of an embedded resolution graph, and the eta invariant of
the spectral pairs.  ``sigsurf.portfolio`` races or cross-checks them.
"""
from importlib import resources

from sigsurf.brieskorn import brieskorn_signature, s_counts_fast, s_counts_naive
from sigsurf.curves import PuiseuxPairs, pairs_to_resolution_graph, puiseux_pairs_lite
from sigsurf.kernels import BACKEND
from sigsurf.polynomial import parse_polynomial
from sigsurf.puiseux import signature_puiseux
from sigsurf.resolution import ResolutionGraph, eta_resolution, signature_resolution
from sigsurf.spectral import (SpectralPairs, brieskorn_curve_spectral_pairs,
                              eta_spectral, signature_spectral)

__version__ = "0.1.0"


def fixture_path(name):
    """Path of a bundled fixture file, e.g. ``fixture_path("g1_pairs.json")``."""
    return resources.files("sigsurf") / "fixtures" / name
