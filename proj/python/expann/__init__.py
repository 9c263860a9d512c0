"""Annihilation operators and frequency detection for bivariate exponential spaces.

Frequencies are pairs of complex numbers, each component either real or purely
imaginary with imaginary part in (-pi, pi). Sums are lists of
``(coefficient, (g1, g2))`` terms.
"""

from ._expann import (
    DetectionReport,
    ExpannError,
    Grid,
    auto_refine,
    chain_residual,
    delta_apply,
    detect,
    evaluate,
    exhaustive_annihilation_check,
    random_instance,
    reduced_residual,
    refine,
    sample,
    symmetric_set,
    synthesize_rule,
)

__all__ = [
    "DetectionReport",
    "ExpannError",
    "Grid",
    "auto_refine",
    "chain_residual",
    "delta_apply",
    "detect",
    "evaluate",
    "exhaustive_annihilation_check",
    "random_instance",
    "reduced_residual",
    "refine",
    "sample",
    "symmetric_set",
    "synthesize_rule",
]
