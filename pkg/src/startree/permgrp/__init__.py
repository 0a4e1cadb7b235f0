"""Permutation-group engine: chains, fields, builders and measurements."""

from .builders import (BuilderError, alternating, cyclic, load_generators,
                       matrix_projective_action, pgl2_action, psl2_action,
                       representation, symmetric)
from .chain import BudgetExceeded, PermGroup, TrivialGroupError
from .field import GF, FieldElem, field
from .ops import (PPartSearch, Search, centralizer_order, cyclic_subgroup_normalizer_order,
                  element_of_full_p_part, involution_class_count, measure_sylow)

__all__ = [
    "BuilderError", "BudgetExceeded", "FieldElem", "GF", "PPartSearch", "PermGroup",
    "Search", "TrivialGroupError", "alternating", "centralizer_order", "cyclic",
    "cyclic_subgroup_normalizer_order", "element_of_full_p_part", "field",
    "involution_class_count", "load_generators", "matrix_projective_action",
    "measure_sylow", "pgl2_action", "psl2_action", "representation", "symmetric",
]
