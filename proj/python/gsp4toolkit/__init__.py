"""Exact arithmetic checks for Sp4 constants, lattices and modular forms."""

from ._core import (
    c_closed,
    c_level,
    cprime,
    delta_coefficients,
    dual_index,
    gram_discriminant,
    main1_constant,
    pairing_coefficient,
    projection_onto_31,
    run_cli,
    run_suite,
    siegel_volume,
    suite_names,
    weyl_dimension,
)

__all__ = [
    "c_closed",
    "c_level",
    "cprime",
    "delta_coefficients",
    "dual_index",
    "gram_discriminant",
    "main1_constant",
    "pairing_coefficient",
    "projection_onto_31",
    "run_cli",
    "run_suite",
    "siegel_volume",
    "suite_names",
    "weyl_dimension",
]
