"""Binary linear complementary-dual codes: exact GF(2) linear algebra,
parametric families with symbolic verification, Griesmer bounds,
isomorph-free classification, and heuristic witness search."""

from .bounds import DTableEntry, closed_form_bound, griesmer_dmax, known_lcd_d
from .canonical import canonical_counts, canonical_key
from .classify import (CodeDB, classify, classify_by_columns,
                       extend_by_inverse_shortening, lcd_census)
from .code import LinearCode, TypeMultiplicity, WeightEnumerator, make_code
from .families import (AffineForm, AffineVec, FamilyVerdict, build_generator,
                       family_a_vector, family_code, symbolic_gram_det,
                       symbolic_weight_enumerator)
from .gf2 import BitMatrix, IntMatrix, det_f2, gram, matmul, rref
from .search import SearchBudget, search_lcd

__version__ = "0.1.0"

__all__ = [
    "AffineForm", "AffineVec", "BitMatrix", "CodeDB", "DTableEntry",
    "FamilyVerdict", "IntMatrix", "LinearCode", "SearchBudget",
    "TypeMultiplicity", "WeightEnumerator", "build_generator",
    "canonical_counts", "canonical_key", "classify", "classify_by_columns",
    "closed_form_bound", "det_f2", "extend_by_inverse_shortening",
    "family_a_vector", "family_code", "gram", "griesmer_dmax", "known_lcd_d",
    "lcd_census", "make_code", "matmul", "rref", "search_lcd",
    "symbolic_gram_det", "symbolic_weight_enumerator",
]
