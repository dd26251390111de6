from .service import bordered_form, factor_singular, reduce_bordered
from .types import BorderedForm

__all__ = [
    "BorderedForm",
    "bordered_form",
    "factor_singular",
    "reduce_bordered",
]
