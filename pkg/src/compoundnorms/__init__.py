"""Compound matrices, their operator norms, and eigenvalue-product bounds.

The numerical kernels (minors, Hessenberg QR, Jacobi) come from a compiled
Cython extension when available and from a numpy fallback otherwise;
``compoundnorms.BACKEND`` names the one in use.
"""

__version__ = "0.1.0"

from ._backend import BACKEND, available_backends
from .bounds import (
    BoundReport,
    Side,
    ThetaKind,
    ThetaValue,
    column_compound_l1_bound,
    compound_norm_bound,
    eig_coefficient,
    eig_product_lower,
    eig_product_upper,
    h,
    max_subset_norm_product,
    theta,
    theta_dominance_check,
)
from .compound import (
    CompoundMatrix,
    SubsetLex,
    adjugate,
    compound,
    compound_l2_norm_fast,
    subsets_lex,
    submatrix,
)
from .config import DEFAULTS, Tolerances
from .errors import (
    CompoundNormsError,
    DimensionError,
    DomainError,
    NumericalFailure,
    ParseError,
    ResourceError,
)
from .extremal import (
    MonomialSpec,
    disjoint_support_example,
    first_row_ones,
    fourier,
    hadamard_sylvester,
    monomial,
    random_monomial,
    theta2_extremal,
    unit_diag_psd,
)
from .linalg import (
    NormKind,
    determinant,
    eigenvalues,
    eigh,
    op_norm,
    psd_sqrt,
    singular_values,
    spectral_radius,
    vec_norm,
)
from .matrixio import format_matrix, parse_complex, parse_matrix, read_matrix, write_matrix
