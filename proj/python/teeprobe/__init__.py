"""Exact entanglement-entropy probes on planar geometries.

Coefficients and symbolic values are returned as :class:`fractions.Fraction`;
a symbolic entropy is a pair ``(c_logD, c_K)`` meaning ``c_logD*log D + c_K*K``.
"""

from ._core import (
    AnyonModel,
    Arrangement,
    InputError,
    Quantity,
    UnsupportedGeometry,
    arrangement_from_json,
    balance_profile,
    brute_force_entropy,
    classify,
    closed_form_entropy,
    cyclic,
    derived_scalars,
    eval_area_law,
    eval_tqft,
    evaluate_numeric,
    geometry,
    ghz_value,
    model,
    model_from_json,
    multi_information,
    named,
    parse,
    parse_with_parties,
    partial_multi_information,
    quantity,
    quantity_from_json,
    scan,
    sphere_entropy,
    starter_catalog,
    sum_coeffs,
    tally,
    tripartite_expand,
    validate_model,
)

__all__ = [
    "AnyonModel",
    "Arrangement",
    "InputError",
    "Quantity",
    "UnsupportedGeometry",
    "arrangement_from_json",
    "balance_profile",
    "brute_force_entropy",
    "classify",
    "closed_form_entropy",
    "cyclic",
    "derived_scalars",
    "eval_area_law",
    "eval_tqft",
    "evaluate_numeric",
    "geometry",
    "ghz_value",
    "model",
    "model_from_json",
    "multi_information",
    "named",
    "parse",
    "parse_with_parties",
    "partial_multi_information",
    "quantity",
    "quantity_from_json",
    "scan",
    "sphere_entropy",
    "starter_catalog",
    "sum_coeffs",
    "tally",
    "tripartite_expand",
    "validate_model",
]

__version__ = "0.1.0"
