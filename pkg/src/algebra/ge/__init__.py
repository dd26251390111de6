from .constants import FactorKind, Strategy
from .embed import embed_ge_as_idempotents
from .models import GEDecompositionModel
from .service import continuant_factors, ge2_decompose, realize, triangularize
from .types import DiagUnits, Elementary, GEFactor, Swap

__all__ = [
    "FactorKind",
    "Strategy",
    "Elementary",
    "DiagUnits",
    "Swap",
    "GEFactor",
    "GEDecompositionModel",
    "realize",
    "continuant_factors",
    "triangularize",
    "ge2_decompose",
    "embed_ge_as_idempotents",
]
