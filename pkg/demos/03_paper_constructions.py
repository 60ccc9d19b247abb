"""The explicit independent-set constructions, checked against the solver."""

from token_alpha import graphs
from token_alpha.constructions import (
    AssociatedSetInput,
    associated_independent_set,
    path_union_independent_set,
    path_union_layout,
)
from token_alpha.graphs import VertexSet, generate
from token_alpha.mis import is_independent, max_independent_set
from token_alpha.tokens import build_f2

# Parity construction for P3 ⊔ P2: cross-component pairs with matching
# position parity plus within-component pairs with mixed parity.
layout = path_union_layout([3, 2])
chosen = path_union_independent_set(layout)
print("parts (odd first):", layout.parts)
print("construction:", sorted(chosen))

base = layout.base_graph()
tg = build_f2(base)
print("independent:", is_independent(tg.graph, tg.indices_of(chosen)))
print("size:", len(chosen), " solver:", max_independent_set(tg.graph).size,
      " formula (m^2+t^2-2t)/4:", (25 + 1 - 2) // 4)

# Associated set for the fan E3 + P5 (n = (m+1)/2, the exceptional case):
# pair all hub vertices with an alternating path set, then fill the
# leftover path vertices with the parity construction of what remains.
n, m = 3, 5
h = generate(graphs.path(m))
inp = AssociatedSetInput(
    n=n, h=h,
    s1=VertexSet.of(n, range(n)),
    s2=VertexSet.of(m, [0, 2, 4]),
    mis_h_minus_s2=frozenset([(1, 3)]),
)
assoc = associated_independent_set(inp)
tg = build_f2(generate(graphs.fan(n, m)))
print()
print("fan(3,5) associated set:", sorted(assoc))
print("independent:", is_independent(tg.graph, tg.indices_of(assoc)))
print("size:", len(assoc), " solver:", max_independent_set(tg.graph).size)
