"""Salie sums, half-integral theta bases and first-moment averages."""

from ._core import (
    BasisElement,
    basis,
    coeff_sigma,
    coeff_tau,
    constant,
    corollary_constant,
    corollary_series,
    decompose,
    gauss,
    kloosterman,
    linear_checkpoints,
    moment_series,
    normalization,
    norm_squared,
    presets,
    ramanujan,
    root_sum,
    salie,
    spectral_sum,
    t_kernel,
    zeta_constant,
)

__all__ = [
    "BasisElement",
    "basis",
    "coeff_sigma",
    "coeff_tau",
    "constant",
    "corollary_constant",
    "corollary_series",
    "decompose",
    "gauss",
    "kloosterman",
    "linear_checkpoints",
    "moment_series",
    "normalization",
    "norm_squared",
    "presets",
    "ramanujan",
    "root_sum",
    "salie",
    "spectral_sum",
    "t_kernel",
    "zeta_constant",
]
