"""quatroots: root finding for standard polynomials over quaternion
division algebras.

The pipeline: build the companion matrix of a monic left-coefficient
polynomial, double it into a matrix over the quadratic subfield F(i),
take the characteristic polynomial (central coefficients, degree 2n),
root-find it over the complex numbers, group the roots into conjugacy
classes, and recover the quaternionic root of each class from the
linear remainder of the polynomial modulo the class's characteristic
quadratic.
"""

from .algebra import AlgebraParams, ExtElem, Quaternion, unsplit
from .companion import (
    ExtMatrix,
    QuatMatrix,
    char_poly,
    companion_matrix,
    companion_polynomial,
    embed,
    vector_embed,
    vector_unembed,
)
from .eigen import (
    LEFT,
    RIGHT,
    EigenPair,
    is_right_eigenvalue,
    left_companion_eigenvector,
    right_eigenvector,
    root_from_right_pair,
)
from .polynomials import (
    CentralPoly,
    ReducedPair,
    StandardPoly,
    evaluate_central,
    from_left_factors,
    monic_normalize,
    reduce_mod_central_quadratic,
)
from .recovery import (
    KIND_CENTRAL,
    KIND_INCONSISTENT,
    KIND_ISOLATED,
    KIND_SPHERICAL,
    RootReport,
    SolveResult,
    class_representative,
    classify_class,
    solve,
)
from .rootfind import ComplexRoot, ConjClass, ConvergenceError, cluster_classes, complex_roots
from .scalars import DEFAULT_TOL, Scalar, Tolerance

__version__ = "0.1.0"

__all__ = [
    "AlgebraParams",
    "CentralPoly",
    "ComplexRoot",
    "ConjClass",
    "ConvergenceError",
    "DEFAULT_TOL",
    "EigenPair",
    "ExtElem",
    "ExtMatrix",
    "KIND_CENTRAL",
    "KIND_INCONSISTENT",
    "KIND_ISOLATED",
    "KIND_SPHERICAL",
    "LEFT",
    "Quaternion",
    "QuatMatrix",
    "ReducedPair",
    "RIGHT",
    "RootReport",
    "Scalar",
    "SolveResult",
    "StandardPoly",
    "Tolerance",
    "char_poly",
    "class_representative",
    "classify_class",
    "cluster_classes",
    "companion_matrix",
    "companion_polynomial",
    "complex_roots",
    "embed",
    "evaluate_central",
    "from_left_factors",
    "is_right_eigenvalue",
    "left_companion_eigenvector",
    "monic_normalize",
    "reduce_mod_central_quadratic",
    "right_eigenvector",
    "root_from_right_pair",
    "solve",
    "unsplit",
    "vector_embed",
    "vector_unembed",
]
