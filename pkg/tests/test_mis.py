import random

import pytest
from hypothesis import given, settings, strategies as st

from token_alpha import graphs
from token_alpha.errors import BudgetExceededError, CapacityError, ParameterError
from token_alpha.graphs import Graph, VertexSet, generate, join
from token_alpha.mis import (
    is_independent,
    max_independent_set,
    max_independent_set_exhaustive,
)
from token_alpha.tokens import build_f2


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.build(n, edges)


def test_is_independent():
    g = generate(graphs.path(3))
    assert is_independent(g, VertexSet.of(3, [0, 2]))
    assert not is_independent(g, VertexSet.of(3, [0, 1]))
    assert is_independent(g, VertexSet.of(3, []))
    with pytest.raises(ParameterError):
        is_independent(g, VertexSet.of(4, [3]))


def test_exhaustive_on_trivial_graphs():
    assert max_independent_set_exhaustive(generate(graphs.empty(4))).size == 4
    assert max_independent_set_exhaustive(generate(graphs.complete(5))).size == 1


def test_exhaustive_on_f2_of_p4():
    # floor(16/4) = 4
    tg = build_f2(generate(graphs.path(4)))
    assert max_independent_set_exhaustive(tg.graph).size == 4


def test_exhaustive_witness_is_lexicographically_least():
    res = max_independent_set_exhaustive(generate(graphs.cycle(5)))
    assert res.size == 2
    assert list(res.witness) == [0, 2]
    res = max_independent_set_exhaustive(generate(graphs.empty(3)))
    assert list(res.witness) == [0, 1, 2]


def test_exhaustive_cap():
    with pytest.raises(CapacityError):
        max_independent_set_exhaustive(generate(graphs.empty(31)))


def test_solver_on_f2_of_c5():
    # floor(5 * floor(5/2) / 2) = 5
    tg = build_f2(generate(graphs.cycle(5)))
    assert max_independent_set(tg.graph).size == 5


def test_solver_on_f2_of_fan_2_3():
    # frozen from the exhaustive oracle over the 10-vertex token graph
    tg = build_f2(generate(graphs.fan(2, 3)))
    assert max_independent_set(tg.graph).size == 4


def test_solver_on_f2_of_e3_plus_k4():
    # frozen from the exhaustive oracle over the 21-vertex token graph;
    # equals floor(4/2) + C(3,2)
    tg = build_f2(generate(graphs.join_spec(graphs.empty(3), graphs.complete(4))))
    assert max_independent_set(tg.graph).size == 5


def test_solver_witness_is_always_independent():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 14), rng.choice([0.2, 0.5, 0.8]))
        res = max_independent_set(g)
        assert is_independent(g, res.witness)
        assert len(res.witness) == res.size


def test_solver_matches_exhaustive_on_random_graphs():
    rng = random.Random(5)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 12), rng.choice([0.1, 0.3, 0.5, 0.8]))
        assert max_independent_set(g).size == max_independent_set_exhaustive(g).size


def test_adding_edges_never_increases_alpha():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(4, 10)
        g = Graph.build(n, [])
        previous = n
        missing = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(missing)
        for u, v in missing[:10]:
            g = Graph.build(n, list(g.edges) + [(u, v)])
            size = max_independent_set(g).size
            assert size <= previous
            previous = size


def test_join_lower_bound_on_random_pairs():
    rng = random.Random(31)
    for _ in range(25):
        g1 = random_graph(rng, rng.randint(2, 5), rng.random())
        g2 = random_graph(rng, rng.randint(2, 5), rng.random())
        whole = max_independent_set(build_f2(join(g1, g2)).graph).size
        split_sum = (max_independent_set(build_f2(g1).graph).size
                     + max_independent_set(build_f2(g2).graph).size)
        assert whole >= split_sum


def test_budget_abort_is_distinct():
    tg = build_f2(generate(graphs.fan(4, 6)))
    with pytest.raises(BudgetExceededError) as err:
        max_independent_set(tg.graph, node_budget=1)
    assert err.value.nodes_explored > 1
    # and without a budget the same instance solves fine
    assert max_independent_set(tg.graph).size == 15


def test_zero_order_graph():
    res = max_independent_set(Graph.build(0, []))
    assert res.size == 0


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 10))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    return Graph.build(n, edges)


@given(small_graphs())
@settings(max_examples=60)
def test_two_solvers_agree_and_witnesses_hold(g):
    a = max_independent_set_exhaustive(g)
    b = max_independent_set(g)
    assert a.size == b.size
    assert is_independent(g, a.witness)
    assert is_independent(g, b.witness)
