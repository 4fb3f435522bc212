"""Exact modular vertex-algebra toolkit.

Thin Python face of the C++ core: divided-power Hopf arithmetic, truncated
vacuum-module carriers, the invariant bilinear form with its Gram radicals,
and the verification suites.  Everything exact, over an odd prime modulus.
"""

from ._core import (
    Carrier,
    Hopf,
    Vector,
    annihilation_radical,
    binom_mod,
    cli,
    form_pair,
    form_space_dim,
    gram_row,
    make_carrier,
    quotient_dims,
    run_all,
    run_suite,
    suites,
)

__version__ = "0.1.0"

__all__ = [
    "Carrier",
    "Hopf",
    "Vector",
    "annihilation_radical",
    "binom_mod",
    "cli",
    "form_pair",
    "form_space_dim",
    "gram_row",
    "make_carrier",
    "quotient_dims",
    "run_all",
    "run_suite",
    "suites",
]
