"""Exact Cramer solving and LGV verification over weighted acyclic digraphs.

The library solves linear systems A·x = b in exact rational arithmetic by
Cramer's rule, realizes each component identity x_i·det(A) = det(A_i) as a
bijection between vertex-disjoint path systems of a three-layer gadget
graph, and verifies the Lindstrom-Gessel-Viennot determinant identity by
exhaustive enumeration on small instances.
"""

from .cramer import (
    CERTIFY_MAX_N,
    Certificate,
    CramerGadget,
    build_gadget,
    certify,
    column_identity_check,
    extend_system,
    gadget_without_sink,
    row_sum_identity_check,
    solve_cramer,
    validate_certificate,
)
from .graph import (
    DEFAULT_CAP,
    Path,
    WeightedDigraph,
    build_digraph,
    concat,
    path_weight,
    topological_order,
)
from .lgv import (
    LgvReport,
    PathMatrix,
    PathSystem,
    Permutation,
    count_path_systems,
    enumerate_path_systems,
    is_vertex_disjoint,
    path_matrix,
    signed_sum,
    verify_lgv,
)
from .linalg import (
    LinearSystem,
    Matrix,
    det_bareiss,
    det_leibniz,
    permutation_sign,
    replace_column,
    solve_gauss,
)
from .rational import format_scalar, parse_scalar

__all__ = [
    "CERTIFY_MAX_N",
    "Certificate",
    "CramerGadget",
    "DEFAULT_CAP",
    "LgvReport",
    "LinearSystem",
    "Matrix",
    "Path",
    "PathMatrix",
    "PathSystem",
    "Permutation",
    "WeightedDigraph",
    "build_digraph",
    "build_gadget",
    "certify",
    "column_identity_check",
    "concat",
    "count_path_systems",
    "det_bareiss",
    "det_leibniz",
    "enumerate_path_systems",
    "extend_system",
    "format_scalar",
    "gadget_without_sink",
    "is_vertex_disjoint",
    "parse_scalar",
    "path_matrix",
    "path_weight",
    "permutation_sign",
    "replace_column",
    "row_sum_identity_check",
    "signed_sum",
    "solve_cramer",
    "solve_gauss",
    "topological_order",
    "validate_certificate",
    "verify_lgv",
]
