"""Path matrices, signed path systems, and instance-wise LGV verification.

Given ordered source vertices A_1..A_n and sink vertices B_1..B_n of an
acyclic digraph, the path matrix M has entries m_ij = sum of w(P) over all
paths A_i -> B_j.  A path system is a permutation sigma plus one path
A_i -> B_sigma(i) per i; its sign is sgn(sigma) and its weight the product
of the member path weights.  Two classical identities are checked here by
exhaustive enumeration:

* det(M) equals the signed weight sum over ALL path systems (pure algebra);
* det(M) equals the signed sum over vertex-disjoint systems only, i.e. the
  contributions of systems with a shared vertex cancel (the
  Lindstrom-Gessel-Viennot lemma).

``verify_lgv`` computes all three quantities independently and reports
whether they agree; a "fail" verdict can only mean an implementation bug.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapExceeded, DuplicateInRole, SizeMismatch, UnknownVertex
from .graph import DEFAULT_CAP, Path, VertexId, WeightedDigraph
from .linalg import Matrix, det_bareiss, permutation_sign


@dataclass(frozen=True)
class Permutation:
    """Permutation of 0..n-1 as an image tuple, with its sign."""

    images: tuple[int, ...]
    sign: int

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        return cls(tuple(images), permutation_sign(images))


@dataclass(frozen=True)
class PathSystem:
    """A permutation together with one source-to-sink path per index.

    ``paths[i]`` runs from the i-th source to the ``sigma.images[i]``-th
    sink.  ``weight`` is the product of member path weights, ``sign`` is
    the permutation sign, and ``vertex_disjoint`` records whether no two
    member paths share any vertex (endpoints included).
    """

    sigma: Permutation
    paths: tuple[Path, ...]
    weight: Fraction
    sign: int
    vertex_disjoint: bool


@dataclass(frozen=True)
class PathMatrix:
    """n x n matrix of all-paths weight sums between ordered vertex lists."""

    sources: tuple[VertexId, ...]
    sinks: tuple[VertexId, ...]
    entries: Matrix


@dataclass(frozen=True)
class LgvReport:
    """Outcome of one LGV verification instance."""

    n: int
    det_path_matrix: Fraction
    all_systems_sum: Fraction
    vd_systems_sum: Fraction
    total_count: int
    vd_count: int
    verdict: str  # "pass" | "fail"


def _check_roles(
    g: WeightedDigraph,
    sources: Sequence[VertexId],
    sinks: Sequence[VertexId],
) -> None:
    if len(sources) != len(sinks):
        raise SizeMismatch(
            f"{len(sources)} sources vs {len(sinks)} sinks"
        )
    if not sources:
        raise SizeMismatch("need at least one source/sink pair")
    for role, vs in (("sources", sources), ("sinks", sinks)):
        if len(set(vs)) != len(vs):
            raise DuplicateInRole(f"duplicate vertex among {role}: {tuple(vs)}")
        for v in vs:
            if not g.has_vertex(v):
                raise UnknownVertex(f"unknown vertex {v!r} among {role}")


def path_matrix(
    g: WeightedDigraph,
    sources: Sequence[VertexId],
    sinks: Sequence[VertexId],
) -> PathMatrix:
    """Exact path matrix via memoized backward DP along the topological order."""
    _check_roles(g, sources, sinks)
    columns = [g.path_weight_sums(t) for t in sinks]
    rows = tuple(
        tuple(columns[j][s] for j in range(len(sinks))) for s in sources
    )
    return PathMatrix(tuple(sources), tuple(sinks), Matrix(rows))


def _disjoint(vertex_sets: Iterable[frozenset[VertexId]]) -> bool:
    seen: set[VertexId] = set()
    for vs in vertex_sets:
        if seen & vs:
            return False
        seen |= vs
    return True


def is_vertex_disjoint(ps: PathSystem) -> bool:
    """True iff no vertex occurs in two distinct member paths.

    Recomputed from the paths, independently of the stored flag.
    """
    return _disjoint(frozenset(p.vertices) for p in ps.paths)


def count_path_systems(
    g: WeightedDigraph,
    sources: Sequence[VertexId],
    sinks: Sequence[VertexId],
) -> int:
    """Total number of path systems: sum over sigma of products of path counts."""
    _check_roles(g, sources, sinks)
    n = len(sources)
    counts_per_sink = [g.path_counts(t) for t in sinks]
    counts = [
        [counts_per_sink[j][s] for j in range(n)] for s in sources
    ]
    total = 0
    for images in itertools.permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= counts[i][images[i]]
            if prod == 0:
                break
        total += prod
    return total


def enumerate_path_systems(
    g: WeightedDigraph,
    sources: Sequence[VertexId],
    sinks: Sequence[VertexId],
    cap: int = DEFAULT_CAP,
) -> list[PathSystem]:
    """Every path system between the ordered source and sink lists.

    Deterministic order: permutations lexicographically, then member path
    tuples lexicographically.  The cap bounds the TOTAL number of systems
    (checked up front by counting, so oversize instances fail before any
    enumeration work).
    """
    total = count_path_systems(g, sources, sinks)
    if total > cap:
        raise CapExceeded("path systems", cap)
    n = len(sources)

    # Pair lists are only materialized for permutations with a nonzero
    # product, so each enumerated pair holds at most `total` <= cap paths.
    pair_cache: dict[tuple[int, int], list[tuple[Path, frozenset[VertexId]]]] = {}

    def pair_paths(i: int, j: int) -> list[tuple[Path, frozenset[VertexId]]]:
        if (i, j) not in pair_cache:
            paths = g.enumerate_paths(sources[i], sinks[j], cap)
            pair_cache[(i, j)] = [(p, frozenset(p.vertices)) for p in paths]
        return pair_cache[(i, j)]

    counts_per_sink = [g.path_counts(t) for t in sinks]
    systems: list[PathSystem] = []
    for images in itertools.permutations(range(n)):
        if any(counts_per_sink[images[i]][sources[i]] == 0 for i in range(n)):
            continue
        sigma = Permutation.from_images(images)
        choices = [pair_paths(i, images[i]) for i in range(n)]
        for combo in itertools.product(*choices):
            paths = tuple(p for p, _ in combo)
            weight = Fraction(1)
            for p in paths:
                weight *= p.weight
            systems.append(
                PathSystem(
                    sigma=sigma,
                    paths=paths,
                    weight=weight,
                    sign=sigma.sign,
                    vertex_disjoint=_disjoint(vs for _, vs in combo),
                )
            )
    return systems


def signed_sum(systems: Iterable[PathSystem], vd_only: bool = False) -> Fraction:
    """Sum of sgn * weight, optionally over vertex-disjoint systems only."""
    total = Fraction(0)
    for ps in systems:
        if vd_only and not ps.vertex_disjoint:
            continue
        total += ps.sign * ps.weight
    return total


def verify_lgv(
    g: WeightedDigraph,
    sources: Sequence[VertexId],
    sinks: Sequence[VertexId],
    cap: int = DEFAULT_CAP,
) -> LgvReport:
    """Check det(path matrix) = signed sum over all systems = VD-only sum.

    All three values are computed by independent routes (determinant of the
    DP matrix vs exhaustive enumeration).  If no path system exists, all
    three are 0 and the verdict is "pass".
    """
    pm = path_matrix(g, sources, sinks)
    systems = enumerate_path_systems(g, sources, sinks, cap)
    det = det_bareiss(pm.entries)
    all_sum = signed_sum(systems, vd_only=False)
    vd_sum = signed_sum(systems, vd_only=True)
    vd_count = sum(1 for ps in systems if ps.vertex_disjoint)
    verdict = "pass" if det == all_sum == vd_sum else "fail"
    return LgvReport(
        n=len(pm.sources),
        det_path_matrix=det,
        all_systems_sum=all_sum,
        vd_systems_sum=vd_sum,
        total_count=len(systems),
        vd_count=vd_count,
        verdict=verdict,
    )
