"""Cramer's rule through vertex-disjoint path systems, with certificates.

The gadget graph for an n x n system A·x = b has three layers: row
vertices A_1..A_n, column vertices B_1..B_n with an edge A_i -> B_j of
weight a_ij for EVERY i, j (zero weights included), and a sink X with an
edge B_i -> X of weight x_i.  Its key features:

* every path A_j -> X has weight a_jk * x_k for some k, so the weight sum
  over paths A_j -> X is the j-th entry of A·x, i.e. b_j;
* the path matrix from (A_1..A_n) to (B_1..B_{i-1}, X, B_{i+1}..B_n) is
  therefore exactly A with column i replaced by b;
* appending the edge B_i -> X to the unique member path that terminates at
  B_i maps vertex-disjoint systems of the gadget-minus-X bijectively onto
  vertex-disjoint systems of the full gadget, preserving the sign and
  scaling the weight by x_i.

That bijection, materialized as paired system lists, is the combinatorial
certificate for x_i * det(A) = det(A_i).  Placing X at position i of the
sink list keeps the permutation data literally unchanged under extension,
so sign preservation is an identity of the data rather than an argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    CertificateInvalid,
    IndexOutOfRange,
    InputError,
    SingularMatrix,
    SizeMismatch,
    SizeTooLarge,
    ValidationError,
)
from .graph import DEFAULT_CAP, VertexId, WeightedDigraph
from .lgv import (
    PathSystem,
    enumerate_path_systems,
    is_vertex_disjoint,
    path_matrix,
)
from .linalg import (
    LEIBNIZ_MAX_N,
    LinearSystem,
    Matrix,
    Vector,
    det_bareiss,
    det_leibniz,
    permutation_sign,
    replace_column,
)
from .rational import as_fraction

#: Certificates are exhaustive enumeration objects; refuse them above this
#: size by default.  Plain solving has no such limit.
CERTIFY_MAX_N = 6


@dataclass(frozen=True)
class CramerGadget:
    """The three-layer gadget graph plus the data it was built from."""

    graph: WeightedDigraph
    row_vertices: tuple[VertexId, ...]
    col_vertices: tuple[VertexId, ...]
    sink: VertexId
    coeff: Matrix
    x_weights: Vector

    @property
    def n(self) -> int:
        return self.coeff.n

    def extended_sinks(self, i: int) -> tuple[VertexId, ...]:
        """Ordered sink list (B_1..B_{i-1}, X, B_{i+1}..B_n), 1-based i."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"index {i} out of range 1..{self.n}")
        cols = self.col_vertices
        return cols[: i - 1] + (self.sink,) + cols[i:]


@dataclass(frozen=True)
class Certificate:
    """Checkable witness of x_i * det(A) = det(A_i).

    ``base_systems`` are the vertex-disjoint path systems of the gadget
    without X (sinks B_1..B_n), ``extended_systems`` those of the full
    gadget (sinks with X at position ``index``), and ``pairing`` matches
    each base system with its extension by the edge B_i -> X.
    """

    index: int
    solution: Vector
    det_a: Fraction
    det_ai: Fraction
    base_systems: tuple[PathSystem, ...]
    extended_systems: tuple[PathSystem, ...]
    pairing: tuple[tuple[int, int], ...]


def build_gadget(a: Matrix, x: Sequence[Fraction | int]) -> CramerGadget:
    """Build the gadget for coefficient matrix ``a`` and sink weights ``x``."""
    n = a.n
    if len(x) != n:
        raise SizeMismatch(f"x length {len(x)} != matrix size {n}")
    x_weights = tuple(as_fraction(v) for v in x)
    rows = tuple(f"A{i + 1}" for i in range(n))
    cols = tuple(f"B{j + 1}" for j in range(n))
    sink = "X"
    edges = [
        (rows[i], cols[j], a.rows[i][j]) for i in range(n) for j in range(n)
    ]
    edges += [(cols[i], sink, x_weights[i]) for i in range(n)]
    graph = WeightedDigraph(rows + cols + (sink,), edges)
    return CramerGadget(graph, rows, cols, sink, a, x_weights)


def gadget_without_sink(gad: CramerGadget) -> WeightedDigraph:
    """Induced subgraph with X deleted: the bipartite layer A -> B."""
    return gad.graph.without_vertex(gad.sink)


def row_sum_identity_check(gad: CramerGadget) -> bool:
    """Enumerated weight sum of paths A_j -> X vs the dot product row_j · x.

    Uses path enumeration, not the DP, so it checks the gadget's defining
    identity by an independent route.
    """
    for j in range(gad.n):
        enumerated = sum(
            (p.weight for p in gad.graph.enumerate_paths(gad.row_vertices[j], gad.sink)),
            Fraction(0),
        )
        dot = sum(
            (gad.coeff.rows[j][k] * gad.x_weights[k] for k in range(gad.n)),
            Fraction(0),
        )
        if enumerated != dot:
            return False
    return True


def column_identity_check(gad: CramerGadget, i: int) -> bool:
    """Path matrix with X at sink position i vs A with column i set to A·x."""
    sinks = gad.extended_sinks(i)  # validates i
    pm = path_matrix(gad.graph, gad.row_vertices, sinks)
    expected = replace_column(gad.coeff, i, gad.coeff.mul_vector(gad.x_weights))
    return pm.entries == expected


def solve_cramer(sys: LinearSystem) -> Vector:
    """x_i = det(A with column i replaced by b) / det(A), all exact."""
    det_a = det_bareiss(sys.matrix)
    if det_a == 0:
        raise SingularMatrix()
    return tuple(
        det_bareiss(replace_column(sys.matrix, i, sys.rhs)) / det_a
        for i in range(1, sys.n + 1)
    )


def extend_system(base: PathSystem, gad: CramerGadget, i: int) -> PathSystem:
    """Extend the unique member path terminating at B_i by the edge B_i -> X.

    The sink list index of X equals that of B_i, so the permutation and its
    sign carry over unchanged; the weight picks up the factor x_i.
    """
    if not 1 <= i <= gad.n:
        raise IndexOutOfRange(f"index {i} out of range 1..{gad.n}")
    target = gad.col_vertices[i - 1]
    hits = [k for k, p in enumerate(base.paths) if p.end == target]
    if len(hits) != 1:
        raise InputError(
            f"expected exactly one member path ending at {target!r}, "
            f"found {len(hits)}"
        )
    k = hits[0]
    extended = base.paths[k].concat(gad.graph.path((target, gad.sink)))
    paths = base.paths[:k] + (extended,) + base.paths[k + 1 :]
    weight = Fraction(1)
    for p in paths:
        weight *= p.weight
    return PathSystem(
        sigma=base.sigma,
        paths=paths,
        weight=weight,
        sign=base.sign,
        vertex_disjoint=_paths_disjoint(paths),
    )


def _paths_disjoint(paths: Sequence) -> bool:
    seen: set[VertexId] = set()
    for p in paths:
        vs = set(p.vertices)
        if seen & vs:
            return False
        seen |= vs
    return True


def certify(
    sys: LinearSystem,
    i: int,
    cap: int = DEFAULT_CAP,
    max_size: int = CERTIFY_MAX_N,
) -> Certificate:
    """Solve A·x = b and emit the paired-system certificate for x_i.

    Every certificate invariant is re-verified before returning; a failure
    raises :class:`CertificateInvalid` and is never suppressed.
    """
    n = sys.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"index {i} out of range 1..{n}")
    if n > max_size:
        raise SizeTooLarge(
            f"certificate enumeration budget: n = {n} > {max_size}"
        )
    solution = solve_cramer(sys)  # raises SingularMatrix when det(A) = 0
    det_a = det_bareiss(sys.matrix)
    det_ai = det_bareiss(replace_column(sys.matrix, i, sys.rhs))
    if n <= LEIBNIZ_MAX_N:
        if det_leibniz(sys.matrix) != det_a:
            raise CertificateInvalid("determinant oracles disagree on det(A)")

    gad = build_gadget(sys.matrix, solution)
    base = [
        ps
        for ps in enumerate_path_systems(
            gadget_without_sink(gad), gad.row_vertices, gad.col_vertices, cap
        )
        if ps.vertex_disjoint
    ]
    extended = [
        ps
        for ps in enumerate_path_systems(
            gad.graph, gad.row_vertices, gad.extended_sinks(i), cap
        )
        if ps.vertex_disjoint
    ]
    position = {ps: k for k, ps in enumerate(extended)}
    pairing = []
    for k, ps in enumerate(base):
        image = extend_system(ps, gad, i)
        if image not in position:
            raise CertificateInvalid(
                "extension of a base system is not a vertex-disjoint system "
                "of the full gadget"
            )
        pairing.append((k, position[image]))

    cert = Certificate(
        index=i,
        solution=solution,
        det_a=det_a,
        det_ai=det_ai,
        base_systems=tuple(base),
        extended_systems=tuple(extended),
        pairing=tuple(pairing),
    )
    validate_certificate(sys, cert, cap=cap)
    return cert


def validate_certificate(
    sys: LinearSystem, cert: Certificate, cap: int = DEFAULT_CAP
) -> None:
    """Re-derive and check every certificate invariant from scratch.

    Usable both on freshly built certificates and on certificates re-read
    from JSON; raises :class:`CertificateInvalid` with the first violated
    invariant.
    """
    n = sys.n
    i = cert.index

    def fail(reason: str) -> CertificateInvalid:
        return CertificateInvalid(f"certificate invalid: {reason}")

    if not 1 <= i <= n:
        raise fail(f"index {i} out of range 1..{n}")
    if len(cert.solution) != n:
        raise fail("solution length mismatch")
    if sys.matrix.mul_vector(cert.solution) != sys.rhs:
        raise fail("A * solution != b")
    if cert.det_a != det_bareiss(sys.matrix):
        raise fail("det_A mismatch")
    if cert.det_ai != det_bareiss(replace_column(sys.matrix, i, sys.rhs)):
        raise fail("det_Ai mismatch")
    if n <= LEIBNIZ_MAX_N and cert.det_a != det_leibniz(sys.matrix):
        raise fail("det_A disagrees with the permutation-sum oracle")
    if cert.det_ai != cert.solution[i - 1] * cert.det_a:
        raise fail("det_Ai != x_i * det_A")

    if not (
        len(cert.base_systems) == len(cert.extended_systems) == len(cert.pairing)
    ):
        raise fail("base/extended/pairing lengths differ")
    m = len(cert.pairing)
    if sorted(p[0] for p in cert.pairing) != list(range(m)):
        raise fail("pairing is not defined on every base system exactly once")
    if sorted(p[1] for p in cert.pairing) != list(range(m)):
        raise fail("pairing is not a bijection onto the extended systems")

    gad = build_gadget(sys.matrix, cert.solution)
    base_graph = gadget_without_sink(gad)
    _check_systems(
        base_graph, gad.row_vertices, gad.col_vertices, cert.base_systems, fail
    )
    _check_systems(
        gad.graph, gad.row_vertices, gad.extended_sinks(i),
        cert.extended_systems, fail,
    )

    for b_idx, e_idx in cert.pairing:
        base = cert.base_systems[b_idx]
        ext = cert.extended_systems[e_idx]
        if ext != extend_system(base, gad, i):
            raise fail(f"pair ({b_idx}, {e_idx}) is not an extension by B_{i} -> X")
        if ext.sign != base.sign:
            raise fail(f"pair ({b_idx}, {e_idx}) changes the sign")
        if ext.weight != cert.solution[i - 1] * base.weight:
            raise fail(f"pair ({b_idx}, {e_idx}) breaks weight scaling by x_{i}")

    base_sum = sum((ps.sign * ps.weight for ps in cert.base_systems), Fraction(0))
    ext_sum = sum(
        (ps.sign * ps.weight for ps in cert.extended_systems), Fraction(0)
    )
    if base_sum != cert.det_a:
        raise fail("signed sum over base systems != det_A")
    if ext_sum != cert.det_ai:
        raise fail("signed sum over extended systems != det_Ai")

    # Completeness: the certificate must list ALL vertex-disjoint systems on
    # both sides; together with the pairing bijection this is surjectivity
    # of the extension map.
    expected_base = {
        ps
        for ps in enumerate_path_systems(
            base_graph, gad.row_vertices, gad.col_vertices, cap
        )
        if ps.vertex_disjoint
    }
    expected_ext = {
        ps
        for ps in enumerate_path_systems(
            gad.graph, gad.row_vertices, gad.extended_sinks(i), cap
        )
        if ps.vertex_disjoint
    }
    if set(cert.base_systems) != expected_base:
        raise fail("base systems are not exactly the VD systems without X")
    if set(cert.extended_systems) != expected_ext:
        raise fail("extended systems are not exactly the VD systems of the gadget")


def _check_systems(
    graph: WeightedDigraph,
    sources: tuple[VertexId, ...],
    sinks: tuple[VertexId, ...],
    systems: Sequence[PathSystem],
    fail,
) -> None:
    n = len(sources)
    if len(set(systems)) != len(systems):
        raise fail("duplicate systems listed")
    for ps in systems:
        if sorted(ps.sigma.images) != list(range(n)):
            raise fail(f"not a permutation: {ps.sigma.images}")
        if ps.sign != ps.sigma.sign or ps.sign != permutation_sign(ps.sigma.images):
            raise fail("stored sign differs from the permutation parity")
        if len(ps.paths) != n:
            raise fail("wrong number of member paths")
        weight = Fraction(1)
        for k, p in enumerate(ps.paths):
            try:
                rebuilt = graph.path(p.vertices)
            except ValidationError as exc:
                raise fail(f"member path {p.vertices} invalid: {exc}") from exc
            if rebuilt.weight != p.weight:
                raise fail(f"member path {p.vertices} carries the wrong weight")
            if p.start != sources[k] or p.end != sinks[ps.sigma.images[k]]:
                raise fail(
                    f"member path {p.vertices} does not join source {k + 1} "
                    "to its permuted sink"
                )
            weight *= p.weight
        if weight != ps.weight:
            raise fail("system weight is not the product of member weights")
        if not ps.vertex_disjoint or not is_vertex_disjoint(ps):
            raise fail("listed system is not vertex-disjoint")
