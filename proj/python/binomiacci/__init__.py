"""Exact Binomiacci numbers, their generating functions, residues and asymptotics."""

from ._core import (
    AlgebraicSingularity,
    algebraic_estimate,
    binomiacci,
    bivariate_gf,
    central,
    central_gf,
    central_sequence,
    coarse_estimate,
    decompose_C,
    eval_C,
    eval_F,
    eval_G,
    fibonacci,
    fibonacci_gf,
    gamma_positive,
    numeric_residues,
    poles,
    ratio_table,
    residue_identity_check,
    residues,
    row_gf,
    series_inverse,
    series_mul,
    series_sqrt,
    table,
    triangle_row,
    verify,
)

__all__ = [
    "AlgebraicSingularity",
    "algebraic_estimate",
    "binomiacci",
    "bivariate_gf",
    "central",
    "central_gf",
    "central_sequence",
    "coarse_estimate",
    "decompose_C",
    "eval_C",
    "eval_F",
    "eval_G",
    "fibonacci",
    "fibonacci_gf",
    "gamma_positive",
    "numeric_residues",
    "poles",
    "ratio_table",
    "residue_identity_check",
    "residues",
    "row_gf",
    "series_inverse",
    "series_mul",
    "series_sqrt",
    "table",
    "triangle_row",
    "verify",
]
