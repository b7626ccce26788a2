"""K-theory invariants of higher-rank graph C*-algebras from vertex matrices."""

from .construct import FiniteAbelianGroup, bouquet, product, skew_product
from .errors import (
    InvalidFamily,
    InvalidInput,
    KGraphError,
    LabelOutOfRange,
    RankMismatch,
    RankNotOne,
    SubgroupNotContained,
    Unsupported,
    UnsupportedGroup,
    UnsupportedRank,
)
from .intlinalg import (
    AbelianGroupPresentation,
    IntMatrix,
    SmithDecomposition,
    cokernel_invariants,
    det,
    kernel_basis,
    quotient_presentation,
    snf,
)
from .koszul import ChainComplex, build_complex, index_tuples, verify_complex
from .ktheory import (
    ComparisonReport,
    Constraint,
    CrosscheckResult,
    E2Page,
    K3RankCheck,
    KGroupReport,
    UnitClass,
    compare,
    e2_page,
    k3_unital_rank_check,
    kgroups,
    rank_torsion_crosscheck,
    unit_class,
)
from .model import (
    Edge,
    SkeletonGraph,
    ValidationFailure,
    ValidationReport,
    VertexMatrixFamily,
    matrices_from_skeleton,
    validate_family,
)

__version__ = "0.1.0"
