from .bareiss import cofactor_det, det_bareiss, is_singular
from .hermite import InvertiblePair, TrackedReduction, column_hnf, unimodular_complete, unimodular_inverse
from .idempotent import (
    CanonicalForm,
    conjugate_all,
    idempotent_canonical_form,
    is_idempotent,
    squeeze_idempotents,
)
from .matrix import ExactMatrix, block_matrix, diag_blocks, mat_mul, mat_product, permutation_matrix
from .models import MatrixModel
from .nullspace import left_null_row

__all__ = [
    "ExactMatrix",
    "mat_mul",
    "mat_product",
    "diag_blocks",
    "block_matrix",
    "permutation_matrix",
    "det_bareiss",
    "cofactor_det",
    "is_singular",
    "is_idempotent",
    "left_null_row",
    "column_hnf",
    "unimodular_complete",
    "unimodular_inverse",
    "idempotent_canonical_form",
    "squeeze_idempotents",
    "conjugate_all",
    "TrackedReduction",
    "InvertiblePair",
    "CanonicalForm",
    "MatrixModel",
]
