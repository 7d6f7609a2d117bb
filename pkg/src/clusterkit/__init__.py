"""clusterkit: exact computation with cluster-algebra seed patterns.

Construct seeds (quiver plus extended cluster), mutate them, enumerate
mutation classes to closure, bind seeds to concrete coordinate-ring
models (minors of generic matrices), and study the ideals generated by
exchange relations.
"""

__version__ = "0.1.0"

from .arith import (
    BACKEND,
    LaurentPolynomial,
    SparsePolynomial,
    VariableTable,
    poly_arith,
    poly_det,
    poly_exact_div,
)
from .errors import (
    BudgetExceeded,
    ExactDivisionFailed,
    InexactDivision,
    NotBipartite,
    StructureError,
)

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "ExactDivisionFailed",
    "InexactDivision",
    "LaurentPolynomial",
    "NotBipartite",
    "SparsePolynomial",
    "StructureError",
    "VariableTable",
    "__version__",
    "poly_arith",
    "poly_det",
    "poly_exact_div",
]
