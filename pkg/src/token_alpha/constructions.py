"""Explicit independent-set builders for token graphs.

Three constructions: the parity set for disjoint unions of paths, the
associated set I_R ∪ I_B for join graphs E_n + H, and the (S1, S2)
extraction that turns an arbitrary independent set with a cross pair
into associated-set inputs at least as large.

All functions work on token *pairs* (2-subsets of base vertices), not
token-graph indices, so they stay independent of any particular token
graph object.  Under the join labeling the E_n side occupies 0..n-1 and
H occupies n..n+|H|-1; H-side inputs are given in H's own labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ContractError, ParameterError
from .graphs import Graph, VertexSet
from .tokens import TokenPair


@dataclass(frozen=True)
class PathUnionLayout:
    """Parts of a disjoint union of paths, odd sizes first, with the table
    mapping (component, 1-indexed position along the path) to a base vertex."""

    parts: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.parts:
            raise ParameterError("layout requires at least one part")
        if any(p < 1 for p in self.parts):
            raise ParameterError(f"layout parts must all be >= 1, got {self.parts}")
        first_even = next((i for i, p in enumerate(self.parts) if p % 2 == 0),
                          len(self.parts))
        if any(p % 2 == 1 for p in self.parts[first_even:]):
            raise ParameterError("layout parts must list all odd sizes before even sizes")
        if len(self.table) != len(self.parts) or any(
                len(row) != p for row, p in zip(self.table, self.parts)):
            raise ParameterError("vertex table shape does not match parts")
        flat = [v for row in self.table for v in row]
        if len(set(flat)) != len(flat):
            raise ParameterError("vertex table entries must be distinct")

    @property
    def order(self) -> int:
        return sum(self.parts)

    @property
    def odd_part_count(self) -> int:
        return sum(1 for p in self.parts if p % 2 == 1)

    def base_graph(self) -> Graph:
        """The disjoint union of paths this layout describes, in its own labels."""
        edges = [(row[j], row[j + 1]) for row in self.table for j in range(len(row) - 1)]
        return Graph.build(max(v for row in self.table for v in row) + 1, edges)


def path_union_layout(parts) -> PathUnionLayout:
    """Canonical layout: odd parts first (stable), vertices numbered consecutively."""
    parts = tuple(parts)
    if not parts:
        raise ParameterError("path_union_layout requires at least one part")
    if any(p < 1 for p in parts):
        raise ParameterError(f"parts must all be >= 1, got {parts}")
    ordered = tuple(sorted(parts, key=lambda p: p % 2 == 0))
    table = []
    next_vertex = 0
    for p in ordered:
        table.append(tuple(range(next_vertex, next_vertex + p)))
        next_vertex += p
    return PathUnionLayout(ordered, tuple(table))


def _pair(a: int, b: int) -> TokenPair:
    return (a, b) if a < b else (b, a)


def path_union_independent_set(layout: PathUnionLayout) -> frozenset[TokenPair]:
    """Parity construction for a disjoint union of paths.

    Takes within-component pairs whose positions have different parity and
    cross-component pairs whose positions share a parity.  The result has
    exactly (m^2 + t^2 - 2t)/4 elements for total order m and t odd parts,
    and is independent in the token graph of the union.
    """
    table = layout.table
    out: set[TokenPair] = set()
    for row in table:
        for l, k in itertools.combinations(range(1, len(row) + 1), 2):
            if l % 2 != k % 2:
                out.add(_pair(row[l - 1], row[k - 1]))
    for i, j in itertools.combinations(range(len(table)), 2):
        for l in range(1, len(table[i]) + 1):
            for k in range(1, len(table[j]) + 1):
                if l % 2 == k % 2:
                    out.add(_pair(table[i][l - 1], table[j][k - 1]))
    return frozenset(out)


def _token_pairs_independent(h: Graph, pairs) -> bool:
    """Token-level independence: no two pairs whose symmetric difference is an edge of h."""
    plist = list(pairs)
    for x, y in itertools.combinations(plist, 2):
        diff = set(x) ^ set(y)
        if len(diff) == 2:
            a, b = diff
            if h.has_edge(a, b):
                return False
    return True


@dataclass(frozen=True)
class AssociatedSetInput:
    """Inputs for the associated set of E_n + H.

    s1 lives on the E_n side, s2 and mis_h_minus_s2 in H's own labels;
    mis_h_minus_s2 is a maximum independent set of F2(H - s2) supplied by
    the caller (exact solver or parity construction).
    """

    n: int
    h: Graph
    s1: VertexSet
    s2: VertexSet
    mis_h_minus_s2: frozenset[TokenPair]

    def __post_init__(self):
        if self.n < 1:
            raise ContractError(f"n must be >= 1, got {self.n}")
        if self.s1.order != self.n:
            raise ContractError("s1 must be a vertex set over the E_n side")
        if self.s2.order != self.h.order:
            raise ContractError("s2 must be a vertex set over h")
        s2 = set(self.s2)
        if any(u in s2 and v in s2 for u, v in self.h.edges):
            raise ContractError("s2 is not independent in h")
        for a, b in self.mis_h_minus_s2:
            if not (0 <= a < b < self.h.order):
                raise ContractError(f"mis pair ({a},{b}) is not a 2-subset of V(h)")
            if a in s2 or b in s2:
                raise ContractError(f"mis pair ({a},{b}) touches s2")
        if not _token_pairs_independent(self.h, self.mis_h_minus_s2):
            raise ContractError("mis_h_minus_s2 is not independent in F2(h - s2)")


def associated_independent_set(inp: AssociatedSetInput) -> frozenset[TokenPair]:
    """Associated set I_R ∪ I_B of E_n + H, as pairs under the join labeling.

    I_R pairs every s1 vertex with every s2 vertex; I_B takes all 2-subsets
    of the E_n side outside s1 (the token graph of an edgeless graph has no
    edges, so everything is independent there) plus the supplied maximum
    independent set of F2(H - s2), shifted onto the H side.
    """
    n = inp.n
    s1 = set(inp.s1)
    out: set[TokenPair] = set()
    for u in s1:
        for v in inp.s2:
            out.add((u, n + v))
    rest = [u for u in range(n) if u not in s1]
    out.update(itertools.combinations(rest, 2))
    out.update((n + a, n + b) for a, b in inp.mis_h_minus_s2)
    return frozenset(out)


def associated_set_size(inp: AssociatedSetInput) -> int:
    """|s1||s2| + C(n-|s1|, 2) + |mis|, the cardinality the set always attains."""
    r, s = len(inp.s1), len(inp.s2)
    rest = inp.n - r
    return r * s + rest * (rest - 1) // 2 + len(inp.mis_h_minus_s2)


def extract_s1_s2(i, n: int, h: Graph) -> tuple[VertexSet, VertexSet]:
    """Recover (S1, S2) from an independent set of F2(E_n + H) meeting R.

    S1 collects the E_n vertices paired with anything on the H side; S2 is
    the H-neighborhood of a vertex maximizing that neighborhood (ties to
    the lowest index).  The associated set built from the result is always
    at least as large as the input set.
    """
    order = n + h.order
    neighborhoods: dict[int, set[int]] = {u: set() for u in range(n)}
    for a, b in i:
        x, y = _pair(a, b)
        if not (0 <= x < y < order):
            raise ParameterError(f"pair ({x},{y}) out of range for E_{n} + H")
        if x < n <= y:
            neighborhoods[x].add(y - n)
    s1 = [u for u in range(n) if neighborhoods[u]]
    if not s1:
        raise ContractError("independent set contains no cross pair (i ∩ R is empty)")
    best = max(s1, key=lambda u: (len(neighborhoods[u]), -u))
    return VertexSet.of(n, s1), VertexSet.of(h.order, neighborhoods[best])
