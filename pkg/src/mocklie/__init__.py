"""Exact verification and construction kernel for mock-Lie superalgebras."""

from .document import AlgebraDocument, DocumentError, parse, render
from .extensions import (
    AdmissiblePair,
    DoubleExtensionInput,
    GdextData,
    IsometryWitness,
    build_isometry,
    check_isometry_conditions,
    decompose,
    double_extension,
    gdext,
    generalized_semidirect,
    iterate_decompose,
    verify_isometry,
)
from .forms import BilinearForm, PseudoEuclidean, check_form, flat_intertwiner, tstar_extension
from .kernel import GradedDimension, GradedLinearMap, Matrix, parse_rational, render_rational
from .report import CheckReport, Verdict
from .representation import (
    Cocycle,
    Representation,
    adjoint,
    central_extension,
    check_cocycle,
    check_representation,
    coadjoint,
    semidirect_product,
)
from .superalgebra import (
    ALL_AXIOMS,
    MOCK_LIE,
    PreconditionError,
    SuperAlgebra,
    check_axioms,
    direct_sum,
    tensor_assoc,
)

__all__ = [name for name in dir() if not name.startswith("_")]
