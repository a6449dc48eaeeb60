"""Exact computations for the four-parameter lattice family L1, L2.

Rational inputs may be ints, strings such as "7/2", or fractions.Fraction;
rational outputs are fractions.Fraction.
"""

from ._core import (
    certify,
    codes,
    delta,
    exp_cmp,
    intersection_graph,
    orbits,
    psi,
    spectrum,
    verify,
)

__all__ = [
    "certify",
    "codes",
    "delta",
    "exp_cmp",
    "intersection_graph",
    "orbits",
    "psi",
    "spectrum",
    "verify",
]
