"""Weighted acyclic digraphs, directed paths, and path enumeration.

A :class:`WeightedDigraph` is a finite simple digraph whose edges carry
exact :class:`~fractions.Fraction` weights.  Acyclicity is enforced at
construction (a topological order is computed and cached), so every path
is finite and repeats no vertex.  Graphs are immutable after construction
and all operations are pure; values may be shared freely across threads.

Vertices are identified by nonempty string labels, unique within a graph.
Deterministic orderings are used throughout: topological ties break by
vertex insertion order, and path enumeration yields paths in lexicographic
order of their label sequences (plain string comparison, so e.g. "B10"
sorts before "B2").
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    CycleDetected,
    DuplicateEdge,
    DuplicateVertex,
    InputError,
    JunctionMismatch,
    MissingEdge,
    SelfLoop,
    UnknownEndpoint,
    UnknownVertex,
    VertexRepeated,
)
from .rational import as_fraction, parse_scalar

#: Default ceiling for path and path-system enumeration.  DAG path counts
#: grow exponentially; enumeration fails loudly instead of hanging.
DEFAULT_CAP = 10**6

VertexId = str

EdgeSpec = tuple[VertexId, VertexId, "Fraction | int"]


@dataclass(frozen=True)
class Path:
    """A directed path as its vertex sequence plus multiplicative weight.

    A single-vertex path is the empty path at that vertex and has weight 1.
    Instances produced by :class:`WeightedDigraph` factories are always
    valid in their host graph; the constructor itself does not revalidate.
    """

    vertices: tuple[VertexId, ...]
    weight: Fraction

    @property
    def start(self) -> VertexId:
        return self.vertices[0]

    @property
    def end(self) -> VertexId:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def concat(self, other: Path) -> Path:
        """Join ``self`` (ending at Y) with ``other`` (starting at Y).

        The junction vertex appears once in the result; the weight is the
        product of the two weights.
        """
        if self.end != other.start:
            raise JunctionMismatch(
                f"cannot concatenate: path ends at {self.end!r}, "
                f"next starts at {other.start!r}"
            )
        joined = self.vertices + other.vertices[1:]
        if len(set(joined)) != len(joined):
            raise VertexRepeated(f"concatenation repeats a vertex: {joined}")
        return Path(joined, self.weight * other.weight)


def concat(p1: Path, p2: Path) -> Path:
    """Functional alias for :meth:`Path.concat`."""
    return p1.concat(p2)


def path_weight(p: Path) -> Fraction:
    """Weight of a path: the product of its edge weights (1 if empty)."""
    return p.weight


class WeightedDigraph:
    """Simple weighted digraph, validated acyclic at construction.

    ``vertices`` fixes the insertion order used for deterministic
    tie-breaking; ``edges`` are (from, to, weight) triples with int or
    Fraction weights (floats are rejected).  Zero-weight edges are kept:
    structural path counts must not depend on weight values.
    """

    def __init__(self, vertices: Sequence[VertexId], edges: Iterable[EdgeSpec]):
        verts: list[VertexId] = []
        seen: set[VertexId] = set()
        for v in vertices:
            if not isinstance(v, str) or not v:
                raise InputError(f"vertex label must be a nonempty string: {v!r}")
            if v in seen:
                raise DuplicateVertex(f"duplicate vertex {v!r}")
            seen.add(v)
            verts.append(v)

        edge_list: list[tuple[VertexId, VertexId, Fraction]] = []
        weights: dict[tuple[VertexId, VertexId], Fraction] = {}
        for u, v, w in edges:
            if u not in seen or v not in seen:
                missing = u if u not in seen else v
                raise UnknownEndpoint(f"edge endpoint {missing!r} is not a vertex")
            if u == v:
                raise SelfLoop(f"self-loop at {u!r}")
            if (u, v) in weights:
                raise DuplicateEdge(f"duplicate edge {u!r} -> {v!r}")
            weights[(u, v)] = as_fraction(w)
            edge_list.append((u, v, weights[(u, v)]))

        self._vertices = tuple(verts)
        self._edges = tuple(edge_list)
        self._weights = weights
        succ: dict[VertexId, list[tuple[VertexId, Fraction]]] = {v: [] for v in verts}
        pred: dict[VertexId, list[VertexId]] = {v: [] for v in verts}
        for u, v, w in edge_list:
            succ[u].append((v, w))
            pred[v].append(u)
        self._succ = {v: tuple(sorted(lst)) for v, lst in succ.items()}
        self._pred = pred
        self._topo = self._compute_topological_order()

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[VertexId, VertexId, Fraction], ...]:
        return self._edges

    def has_vertex(self, v: VertexId) -> bool:
        return v in self._succ

    def successors(self, v: VertexId) -> tuple[tuple[VertexId, Fraction], ...]:
        """Outgoing (target, weight) pairs of ``v``, sorted by target label."""
        self._require_vertex(v)
        return self._succ[v]

    def edge_weight(self, u: VertexId, v: VertexId) -> Fraction:
        self._require_vertex(u)
        self._require_vertex(v)
        try:
            return self._weights[(u, v)]
        except KeyError:
            raise MissingEdge(f"no edge {u!r} -> {v!r}") from None

    def _require_vertex(self, v: VertexId) -> None:
        if v not in self._succ:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __repr__(self) -> str:
        return (
            f"WeightedDigraph({len(self._vertices)} vertices, "
            f"{len(self._edges)} edges)"
        )

    # -- orderings and validation -------------------------------------------

    def _compute_topological_order(self) -> tuple[VertexId, ...]:
        index = {v: k for k, v in enumerate(self._vertices)}
        indeg = {v: len(self._pred[v]) for v in self._vertices}
        ready = [index[v] for v in self._vertices if indeg[v] == 0]
        heapq.heapify(ready)
        order: list[VertexId] = []
        while ready:
            v = self._vertices[heapq.heappop(ready)]
            order.append(v)
            for u, _ in self._succ[v]:
                indeg[u] -= 1
                if indeg[u] == 0:
                    heapq.heappush(ready, index[u])
        if len(order) < len(self._vertices):
            raise CycleDetected(self._find_cycle(set(order)))
        return tuple(order)

    def _find_cycle(self, placed: set[VertexId]) -> list[VertexId]:
        # Every vertex Kahn's algorithm could not place keeps a predecessor
        # among the leftovers, so walking predecessors must revisit one.
        left = [v for v in self._vertices if v not in placed]
        leftset = set(left)
        index = {v: k for k, v in enumerate(self._vertices)}
        walk = [left[0]]
        pos = {left[0]: 0}
        while True:
            preds = [u for u in self._pred[walk[-1]] if u in leftset]
            nxt = min(preds, key=index.__getitem__)
            if nxt in pos:
                return list(reversed(walk[pos[nxt]:]))
            pos[nxt] = len(walk)
            walk.append(nxt)

    def topological_order(self) -> tuple[VertexId, ...]:
        """All edges point forward in this sequence; ties follow insertion order."""
        return self._topo

    # -- paths ---------------------------------------------------------------

    def path(self, vertices: Sequence[VertexId]) -> Path:
        """Build the path along ``vertices``, validating edges and computing weight."""
        if not vertices:
            raise InputError("a path needs at least one vertex")
        for v in vertices:
            self._require_vertex(v)
        if len(set(vertices)) != len(vertices):
            raise VertexRepeated(f"path repeats a vertex: {tuple(vertices)}")
        weight = Fraction(1)
        for u, v in zip(vertices, vertices[1:]):
            weight *= self.edge_weight(u, v)
        return Path(tuple(vertices), weight)

    def enumerate_paths(
        self, s: VertexId, t: VertexId, cap: int = DEFAULT_CAP
    ) -> list[Path]:
        """All directed paths s -> t, in lexicographic label order.

        Includes the empty (single-vertex) path exactly when s = t.  Raises
        :class:`CapExceeded` as soon as more than ``cap`` paths are found.
        """
        self._require_vertex(s)
        self._require_vertex(t)
        reaches = self._vertices_reaching(t)
        if s not in reaches:
            return []
        out: list[Path] = []
        seq: list[VertexId] = [s]

        def walk(v: VertexId, weight: Fraction) -> None:
            if v == t:
                # acyclicity: no path continues through its own endpoint
                out.append(Path(tuple(seq), weight))
                if len(out) > cap:
                    raise CapExceeded("paths", cap)
                return
            for u, w in self._succ[v]:
                if u in reaches:
                    seq.append(u)
                    walk(u, weight * w)
                    seq.pop()

        walk(s, Fraction(1))
        return out

    def _vertices_reaching(self, t: VertexId) -> set[VertexId]:
        seen = {t}
        stack = [t]
        while stack:
            v = stack.pop()
            for u in self._pred[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen

    def path_weight_sums(self, t: VertexId) -> dict[VertexId, Fraction]:
        """For every vertex v, the exact sum of w(P) over all paths v -> t.

        Backward dynamic programming along the topological order; the empty
        path contributes 1 at v = t.
        """
        self._require_vertex(t)
        sums = {v: Fraction(0) for v in self._vertices}
        sums[t] = Fraction(1)
        for v in reversed(self._topo):
            if v == t:
                continue
            acc = Fraction(0)
            for u, w in self._succ[v]:
                acc += w * sums[u]
            sums[v] = acc
        return sums

    def path_counts(self, t: VertexId) -> dict[VertexId, int]:
        """Number of directed paths from every vertex to ``t``."""
        self._require_vertex(t)
        counts = {v: 0 for v in self._vertices}
        counts[t] = 1
        for v in reversed(self._topo):
            if v == t:
                continue
            counts[v] = sum(counts[u] for u, _ in self._succ[v])
        return counts

    # -- derived graphs and parsing -------------------------------------------

    def without_vertex(self, v: VertexId) -> WeightedDigraph:
        """Induced subgraph with ``v`` and its incident edges deleted."""
        self._require_vertex(v)
        verts = tuple(u for u in self._vertices if u != v)
        edges = tuple(e for e in self._edges if v not in e[:2])
        return WeightedDigraph(verts, edges)

    @classmethod
    def from_json_dict(cls, obj: object) -> WeightedDigraph:
        """Parse the graph wire format.

        ``{"vertices": ["A1", ...],
           "edges": [{"from": "A1", "to": "B1", "weight": "3"}, ...]}``

        Weights are decimal integer strings or "p/q" fraction strings (bare
        JSON integers are also accepted); floats are rejected.
        """
        if not isinstance(obj, dict):
            raise InputError("graph JSON must be an object")
        vertices = obj.get("vertices")
        edges = obj.get("edges")
        if not isinstance(vertices, list) or not all(
            isinstance(v, str) for v in vertices
        ):
            raise InputError('"vertices" must be an array of strings')
        if not isinstance(edges, list):
            raise InputError('"edges" must be an array')
        triples: list[EdgeSpec] = []
        for e in edges:
            if not isinstance(e, dict) or not {"from", "to", "weight"} <= e.keys():
                raise InputError(
                    'each edge must be an object with "from", "to", "weight"'
                )
            u, v = e["from"], e["to"]
            if not isinstance(u, str) or not isinstance(v, str):
                raise InputError("edge endpoints must be strings")
            triples.append((u, v, parse_scalar(e["weight"])))
        return cls(vertices, triples)


def build_digraph(
    vertices: Sequence[VertexId], edges: Iterable[EdgeSpec]
) -> WeightedDigraph:
    """Construct and validate a weighted acyclic digraph."""
    return WeightedDigraph(vertices, edges)


def topological_order(g: WeightedDigraph) -> tuple[VertexId, ...]:
    """Functional alias for :meth:`WeightedDigraph.topological_order`."""
    return g.topological_order()
