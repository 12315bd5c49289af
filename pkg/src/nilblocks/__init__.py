"""Exact evaluation of nilpotent orbital integrals for regular-by-blocks orbits of GL(n)
over function fields, with executable checks of the supporting combinatorics."""

from .curvezeta import CurveZeta, vol_gl, z_dD, ztilde_dD
from .evaluator import (
    GenericDirection,
    IntegralQuery,
    IntegralResult,
    integral_value,
    prime_r_oracle,
    psi_at_one,
    series_vs_closed_check,
    siegel_value,
)
from .orbits import Partition, richardson
from .rootdata import Parabolic

__all__ = [
    "CurveZeta",
    "GenericDirection",
    "IntegralQuery",
    "IntegralResult",
    "Parabolic",
    "Partition",
    "integral_value",
    "prime_r_oracle",
    "psi_at_one",
    "richardson",
    "series_vs_closed_check",
    "siegel_value",
    "vol_gl",
    "z_dD",
    "ztilde_dD",
]
