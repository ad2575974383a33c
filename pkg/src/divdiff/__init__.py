from src.divdiff.divided import (
    divided_diff_1,
    divided_diff_2,
    first_divided_difference_table,
    second_divided_difference_table,
    torus_divided_diff_1,
    torus_divided_diff_2,
)
from src.divdiff.hilbert import hilbert_commutator_split, hilbert_matrix, hilbert_norm
from src.divdiff.representations import (
    build_besov_summed_rep_D1,
    build_besov_summed_rep_D2,
    build_haagerup_like_rep_D1,
    build_haagerup_like_rep_D2,
    build_torus_rep_D1,
    build_torus_rep_D2,
    declared_bound,
)
from src.divdiff.sinc import DividedDiffMatrix, SincGrid, divdiff_matrix, sinc_expand_D1, sinc_weights
from src.divdiff.torus import TorusKernel, roots_of_unity, torus_divdiff_matrix, xi_kernel

__all__ = [
    "DividedDiffMatrix",
    "SincGrid",
    "TorusKernel",
    "build_besov_summed_rep_D1",
    "build_besov_summed_rep_D2",
    "build_haagerup_like_rep_D1",
    "build_haagerup_like_rep_D2",
    "build_torus_rep_D1",
    "build_torus_rep_D2",
    "declared_bound",
    "divdiff_matrix",
    "divided_diff_1",
    "divided_diff_2",
    "first_divided_difference_table",
    "hilbert_commutator_split",
    "hilbert_matrix",
    "hilbert_norm",
    "roots_of_unity",
    "second_divided_difference_table",
    "sinc_expand_D1",
    "sinc_weights",
    "torus_divdiff_matrix",
    "torus_divided_diff_1",
    "torus_divided_diff_2",
    "xi_kernel",
]
