"""Exact quiver presentations of descent algebras of finite Coxeter groups."""

from .coxeter import (
    CoxeterDatum,
    CoxeterType,
    GateExceededError,
    GroupElement,
    SubsetClass,
    UnsupportedTypeError,
    build_datum,
    enumerate_X,
    enumerate_X_sharp,
    enumerate_Y,
    is_min_coset_rep,
    is_prefix,
    longest_element,
    subset_classes,
    transporter,
)
from .descent_algebra import (
    DescentVector,
    MMatrix,
    StructureConstants,
    descent_class_sizes,
    e_to_x,
    oracle_multiply,
    unit_vector,
    verify_lemma_ysharp,
    w0_vector,
    x_to_e,
    x_to_y,
    y_to_x,
)
from .exact_linalg import GoldenInt, Rational, RowSpace, SparseMatrix, golden_sign
from .presentation import QuiverPresentation, quiver_presentation
from .streets import (
    SigmaAlgebra,
    SubsetPath,
    act_path,
    delta,
    enumerate_streets,
    sigma_algebra,
    sigma_product,
)

__all__ = [
    "CoxeterDatum",
    "CoxeterType",
    "DescentVector",
    "GateExceededError",
    "GoldenInt",
    "GroupElement",
    "MMatrix",
    "QuiverPresentation",
    "Rational",
    "RowSpace",
    "SigmaAlgebra",
    "SparseMatrix",
    "StructureConstants",
    "SubsetClass",
    "SubsetPath",
    "UnsupportedTypeError",
    "act_path",
    "build_datum",
    "delta",
    "descent_class_sizes",
    "e_to_x",
    "enumerate_X",
    "enumerate_X_sharp",
    "enumerate_Y",
    "enumerate_streets",
    "golden_sign",
    "is_min_coset_rep",
    "is_prefix",
    "longest_element",
    "oracle_multiply",
    "quiver_presentation",
    "sigma_algebra",
    "sigma_product",
    "subset_classes",
    "transporter",
    "unit_vector",
    "verify_lemma_ysharp",
    "w0_vector",
    "x_to_e",
    "x_to_y",
    "y_to_x",
]
