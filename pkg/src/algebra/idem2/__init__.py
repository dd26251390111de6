from .chain import (
    chain_from_quads,
    chain_to_idempotents,
    chain_to_rseq,
    continuant_matrix,
    coprime_factors,
    euclid_rseq,
    idempotent_from_bezout,
    normalize_chain,
    rseq_matrix,
    rseq_to_chain,
)
from .constants import TableCase
from .service import bottom_zero_factors, factor_singular_2x2
from .table import factor_unit_shift, scalar_factors, table_factor_2x2
from .types import BezoutQuad, IdemChain2, RSeq

__all__ = [
    "TableCase",
    "BezoutQuad",
    "IdemChain2",
    "RSeq",
    "table_factor_2x2",
    "scalar_factors",
    "factor_unit_shift",
    "idempotent_from_bezout",
    "chain_from_quads",
    "chain_to_idempotents",
    "normalize_chain",
    "chain_to_rseq",
    "rseq_to_chain",
    "continuant_matrix",
    "rseq_matrix",
    "euclid_rseq",
    "coprime_factors",
    "bottom_zero_factors",
    "factor_singular_2x2",
]
