"""Exact maximum independent set solvers.

Two routes: a subset-enumeration oracle for small graphs (deterministic,
lexicographically least witness) and a bitset branch-and-bound solver for
the token graphs the harness actually verifies.  Their sizes agree on the
overlapping domain; the test suite enforces that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, CapacityError, ParameterError
from .graphs import Graph, VertexSet

EXHAUSTIVE_CAP = 30


@dataclass(frozen=True)
class MisResult:
    size: int
    witness: VertexSet
    method: str  # "exhaustive" or "branch-and-bound"
    nodes_explored: int


def is_independent(g: Graph, s: VertexSet) -> bool:
    """True iff no edge of g has both endpoints in s."""
    if s.order != g.order or any(v >= g.order for v in s):
        raise ParameterError(f"vertex set not within a graph of order {g.order}")
    members = set(s)
    return not any(u in members and v in members for u, v in g.edges)


def _bits_to_sorted(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def max_independent_set_exhaustive(g: Graph) -> MisResult:
    """Enumerate independent sets in include-first vertex order.

    The first maximum-size set met in that order is the lexicographically
    least one, so the witness is canonical.  Hard-capped at order 30;
    larger graphs belong to max_independent_set.
    """
    n = g.order
    if n > EXHAUSTIVE_CAP:
        raise CapacityError(
            f"order {n} exceeds the exhaustive cap of {EXHAUSTIVE_CAP}; "
            "use max_independent_set instead")
    adj = g.neighbor_masks()
    best_size = -1
    best_bits = 0
    nodes = 0

    def dfs(cand: int, size: int, chosen: int):
        nonlocal best_size, best_bits, nodes
        nodes += 1
        if size + cand.bit_count() <= best_size:
            return
        if cand == 0:
            best_size, best_bits = size, chosen
            return
        low = cand & -cand
        v = low.bit_length() - 1
        dfs(cand & ~(adj[v] | low), size + 1, chosen | low)
        dfs(cand ^ low, size, chosen)

    dfs((1 << n) - 1, 0, 0)
    witness = VertexSet.of(n, _bits_to_sorted(best_bits))
    return MisResult(best_size, witness, "exhaustive", nodes)


def _greedy_lower_bound(n: int, adj: list[int]) -> int:
    """Greedy maximal independent set, lowest degree first; returns its bitmask."""
    order = sorted(range(n), key=lambda v: (adj[v].bit_count(), v))
    chosen = 0
    blocked = 0
    for v in order:
        bit = 1 << v
        if not blocked & bit:
            chosen |= bit
            blocked |= adj[v] | bit
    return chosen


def _clique_cover_size(cand: int, adj: list[int]) -> int:
    """Number of cliques in a greedy cover of cand; an upper bound on its
    independence number since an independent set meets each clique at most once."""
    count = 0
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        common = adj[v] & rest
        while common:
            ulow = common & -common
            u = ulow.bit_length() - 1
            rest ^= ulow
            common = (common ^ ulow) & adj[u]
        count += 1
    return count


def max_independent_set(g: Graph, node_budget: int | None = None) -> MisResult:
    """Exact branch and bound over adjacency bitsets.

    Branches include/exclude on a maximum-degree vertex of the residual
    (ties to the lowest index) after folding in degree-0/1 vertices, with
    a greedy lower bound at the root and a greedy clique-cover upper bound
    at every node.  Raises BudgetExceededError if node_budget runs out.
    """
    n = g.order
    adj = g.neighbor_masks()
    if n == 0:
        return MisResult(0, VertexSet.of(0, []), "branch-and-bound", 0)

    best_bits = _greedy_lower_bound(n, adj)
    best_size = best_bits.bit_count()
    nodes = 0

    def dfs(cand: int, size: int, chosen: int):
        nonlocal best_size, best_bits, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise BudgetExceededError(nodes)

        # Fold forced vertices: degree 0 always joins; a degree-1 vertex can
        # always replace its neighbor, so including it never loses optimality.
        while cand:
            rest = cand
            forced = 0
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                nbrs = adj[v] & cand
                k = nbrs.bit_count()
                if k == 0:
                    forced = low
                    break
                if k == 1:
                    forced = low
                    cand ^= nbrs
                    break
            if not forced:
                break
            chosen |= forced
            size += 1
            cand ^= forced

        if cand == 0:
            if size > best_size:
                best_size, best_bits = size, chosen
            return
        if size + cand.bit_count() <= best_size:
            return
        if size + _clique_cover_size(cand, adj) <= best_size:
            return

        rest = cand
        branch = -1
        branch_deg = -1
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            d = (adj[v] & cand).bit_count()
            if d > branch_deg:
                branch_deg = d
                branch = v
        bit = 1 << branch
        dfs(cand & ~(adj[branch] | bit), size + 1, chosen | bit)
        dfs(cand ^ bit, size, chosen)

    dfs((1 << n) - 1, 0, 0)
    witness = VertexSet.of(n, _bits_to_sorted(best_bits))
    return MisResult(best_size, witness, "branch-and-bound", nodes)
