"""Simple undirected graphs, the family generators, and the join /
vertex-deletion / component operators the graph families are built from.

Vertices are always 0..order-1.  Edges are stored once, as (low, high)
tuples.  All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..order-1."""

    order: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.order < 0:
            raise ParameterError(f"order must be non-negative, got {self.order}")
        for u, v in self.edges:
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if not (u < v):
                raise ParameterError(f"edge ({u},{v}) not in canonical (low, high) form")
            if v >= self.order:
                raise ParameterError(f"edge ({u},{v}) endpoint out of range for order {self.order}")

    @classmethod
    def build(cls, order: int, edges) -> "Graph":
        """Canonicalize an edge iterable (reorder endpoints, drop duplicates)."""
        canon = set()
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        return cls(order, frozenset(canon))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def neighbor_masks(self) -> list[int]:
        """Adjacency as one bitset per vertex (bit v of masks[u] set iff uv is an edge)."""
        masks = [0] * self.order
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a graph of the given order."""

    order: int
    members: tuple[int, ...]

    def __post_init__(self):
        if list(self.members) != sorted(set(self.members)):
            raise ParameterError("members must be sorted and duplicate-free")
        if self.members and not (0 <= self.members[0] and self.members[-1] < self.order):
            raise ParameterError(f"member out of range for order {self.order}")

    @classmethod
    def of(cls, order: int, members) -> "VertexSet":
        return cls(order, tuple(sorted(set(members))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members


# ---------------------------------------------------------------------------
# Family specifications
# ---------------------------------------------------------------------------

_FAMILY_KINDS = frozenset({
    "path", "cycle", "empty", "complete", "path_union",
    "fan", "wheel", "split", "complete_bipartite", "join",
})


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic description of one graph-family instance.

    Exactly the fields relevant to ``kind`` are set:
      path/cycle/empty/complete  -> m
      fan/wheel/split/complete_bipartite -> n, m
      path_union -> parts
      join -> operands
    """

    kind: str
    n: int | None = None
    m: int | None = None
    parts: tuple[int, ...] | None = None
    operands: tuple["FamilySpec", "FamilySpec"] | None = None

    def __post_init__(self):
        if self.kind not in _FAMILY_KINDS:
            raise ParameterError(f"unknown family kind {self.kind!r}")

    def label(self) -> str:
        if self.kind == "path_union":
            return f"path_union({','.join(map(str, self.parts))})"
        if self.kind == "join":
            a, b = self.operands
            return f"join({a.label()},{b.label()})"
        if self.n is not None:
            return f"{self.kind}(n={self.n},m={self.m})"
        return f"{self.kind}(m={self.m})"


def path(m: int) -> FamilySpec:
    if m < 1:
        raise ParameterError(f"path requires m >= 1, got {m}")
    return FamilySpec("path", m=m)


def cycle(m: int) -> FamilySpec:
    if m < 3:
        raise ParameterError(f"cycle requires m >= 3, got {m}")
    return FamilySpec("cycle", m=m)


def empty(n: int) -> FamilySpec:
    if n < 1:
        raise ParameterError(f"empty requires n >= 1, got {n}")
    return FamilySpec("empty", m=n)


def complete(n: int) -> FamilySpec:
    if n < 1:
        raise ParameterError(f"complete requires n >= 1, got {n}")
    return FamilySpec("complete", m=n)


def path_union(parts) -> FamilySpec:
    parts = tuple(parts)
    if not parts:
        raise ParameterError("path_union requires at least one part")
    if any(p < 1 for p in parts):
        raise ParameterError(f"path_union parts must all be >= 1, got {parts}")
    return FamilySpec("path_union", parts=parts)


def fan(n: int, m: int) -> FamilySpec:
    if n < 1 or m < 1:
        raise ParameterError(f"fan requires n, m >= 1, got n={n}, m={m}")
    return FamilySpec("fan", n=n, m=m)


def wheel(n: int, m: int) -> FamilySpec:
    # E_n + C_m only exists for m >= 3; smaller m is rejected at generation too.
    if n < 1:
        raise ParameterError(f"wheel requires n >= 1, got {n}")
    if m < 3:
        raise ParameterError(f"wheel requires m >= 3 (C_m undefined below), got {m}")
    return FamilySpec("wheel", n=n, m=m)


def split(n: int, m: int) -> FamilySpec:
    if n < 1 or m < 1:
        raise ParameterError(f"split requires n, m >= 1, got n={n}, m={m}")
    return FamilySpec("split", n=n, m=m)


def complete_bipartite(n: int, m: int) -> FamilySpec:
    if n < 1 or m < 1:
        raise ParameterError(f"complete_bipartite requires n, m >= 1, got n={n}, m={m}")
    return FamilySpec("complete_bipartite", n=n, m=m)


def join_spec(a: FamilySpec, b: FamilySpec) -> FamilySpec:
    return FamilySpec("join", operands=(a, b))


# ---------------------------------------------------------------------------
# Generators and operators
# ---------------------------------------------------------------------------

def _path_graph(m: int) -> Graph:
    return Graph.build(m, [(i, i + 1) for i in range(m - 1)])


def _cycle_graph(m: int) -> Graph:
    return Graph.build(m, [(i, (i + 1) % m) for i in range(m)])


def generate(spec: FamilySpec) -> Graph:
    """Materialize a family spec as a concrete graph.

    Join labeling convention: the first operand's vertices come first
    (so E_n + H places the E_n side at 0..n-1).  Paths and cycles are
    numbered consecutively along the path/cycle.
    """
    kind = spec.kind
    if kind == "path":
        return _path_graph(spec.m)
    if kind == "cycle":
        return _cycle_graph(spec.m)
    if kind == "empty":
        return Graph.build(spec.m, [])
    if kind == "complete":
        return Graph.build(spec.m, itertools.combinations(range(spec.m), 2))
    if kind == "path_union":
        return disjoint_union([_path_graph(p) for p in spec.parts])
    if kind == "fan":
        return join(Graph.build(spec.n, []), _path_graph(spec.m))
    if kind == "wheel":
        return join(Graph.build(spec.n, []), _cycle_graph(spec.m))
    if kind == "split":
        return join(Graph.build(spec.n, []),
                    Graph.build(spec.m, itertools.combinations(range(spec.m), 2)))
    if kind == "complete_bipartite":
        return join(Graph.build(spec.n, []), Graph.build(spec.m, []))
    if kind == "join":
        a, b = spec.operands
        return join(generate(a), generate(b))
    raise ParameterError(f"unknown family kind {kind!r}")


def join(g1: Graph, g2: Graph) -> Graph:
    """Join of two graphs: g2 shifted past g1, plus every cross edge."""
    shift = g1.order
    edges = list(g1.edges)
    edges += [(u + shift, v + shift) for u, v in g2.edges]
    edges += [(u, v + shift) for u in range(g1.order) for v in range(g2.order)]
    return Graph.build(g1.order + g2.order, edges)


def disjoint_union(graphs: list[Graph]) -> Graph:
    edges = []
    shift = 0
    for g in graphs:
        edges += [(u + shift, v + shift) for u, v in g.edges]
        shift += g.order
    return Graph.build(shift, edges)


def delete_vertices(g: Graph, a: VertexSet) -> tuple[Graph, list[int]]:
    """Induced subgraph on V(g) minus a, vertices renumbered to 0..k-1.

    Returns the subgraph together with the relabeling map: a list whose
    i-th entry is the original label of new vertex i (relative order of
    the surviving vertices is preserved).
    """
    if a.order != g.order or any(v >= g.order for v in a):
        raise ParameterError(f"deletion set not within a graph of order {g.order}")
    removed = set(a)
    kept = [v for v in range(g.order) if v not in removed]
    new_index = {old: new for new, old in enumerate(kept)}
    edges = [(new_index[u], new_index[v]) for u, v in g.edges
             if u not in removed and v not in removed]
    return Graph.build(len(kept), edges), kept


def components(g: Graph) -> list[VertexSet]:
    """Connected components, each sorted, ordered by smallest member."""
    masks = g.neighbor_masks()
    seen = [False] * g.order
    out = []
    for start in range(g.order):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            nbrs = masks[v]
            while nbrs:
                low = nbrs & -nbrs
                u = low.bit_length() - 1
                nbrs ^= low
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(VertexSet.of(g.order, comp))
    return out


def odd_component_count(g: Graph) -> int:
    return sum(1 for c in components(g) if len(c) % 2 == 1)
