"""Exact inverse and conditioning of the factorial Hankel matrix ``1/(i+j-1)!``."""
from .bigcombinatorics import binom, check_chu_vandermonde, check_reflection, factorial
from .exact_matrix import (IntegerMatrix, RationalMatrix, SingularMatrixError,
                           gauss_inverse, inf_norm, is_identity, mat_mul)
from .hankel_inverse import (hankel, inverse_closed_form, inverse_gover_binomial,
                             inverse_gover_factorial, lemma1_check, lemma2_sum,
                             verify_inverse)

__all__ = [
    "binom", "check_chu_vandermonde", "check_reflection", "factorial",
    "IntegerMatrix", "RationalMatrix", "SingularMatrixError",
    "gauss_inverse", "inf_norm", "is_identity", "mat_mul",
    "hankel", "inverse_closed_form", "inverse_gover_binomial",
    "inverse_gover_factorial", "lemma1_check", "lemma2_sum", "verify_inverse",
]
