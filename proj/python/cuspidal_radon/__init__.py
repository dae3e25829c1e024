"""Radon transforms of discrete-series generating functions on X_{p,q}.

Parameters such as lambda are passed as strings ("1/2", "3") so they stay exact.
"""

from ._core import (
    DecayViolation,
    QuadratureFailure,
    classify,
    profile,
    radon,
    space,
    suite_names,
    verify,
)

__all__ = [
    "DecayViolation",
    "QuadratureFailure",
    "classify",
    "profile",
    "radon",
    "space",
    "suite_names",
    "verify",
]
