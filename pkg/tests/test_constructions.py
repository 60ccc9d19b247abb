import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from token_alpha import graphs
from token_alpha.constructions import (
    AssociatedSetInput,
    PathUnionLayout,
    associated_independent_set,
    associated_set_size,
    extract_s1_s2,
    path_union_independent_set,
    path_union_layout,
)
from token_alpha.errors import ContractError, ParameterError
from token_alpha.formulas import alpha_path_union
from token_alpha.graphs import VertexSet, delete_vertices, generate, odd_component_count
from token_alpha.harness import random_independent_set_with_cross
from token_alpha.mis import is_independent, max_independent_set, max_independent_set_exhaustive
from token_alpha.tokens import build_f2


def compositions(total):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def test_layout_orders_odd_parts_first():
    layout = path_union_layout([2, 3, 1])
    assert layout.parts == (3, 1, 2)
    assert layout.odd_part_count == 2
    assert layout.table == ((0, 1, 2), (3,), (4, 5))


def test_layout_with_no_odd_parts():
    layout = path_union_layout([4])
    assert layout.parts == (4,)
    assert layout.odd_part_count == 0


def test_layout_of_isolated_vertices():
    assert path_union_layout([1, 1, 1]).odd_part_count == 3


def test_layout_rejects_bad_parts():
    with pytest.raises(ParameterError):
        path_union_layout([])
    with pytest.raises(ParameterError):
        path_union_layout([2, 0])
    with pytest.raises(ParameterError):
        PathUnionLayout((2, 3), ((0, 1), (2, 3, 4)))  # even before odd


def test_parity_set_of_single_p3():
    layout = path_union_layout([3])
    assert path_union_independent_set(layout) == {(0, 1), (1, 2)}


def test_parity_set_of_two_isolated_vertices():
    layout = path_union_layout([1, 1])
    assert path_union_independent_set(layout) == {(0, 1)}


def test_parity_set_of_p3_and_p2_is_maximum():
    # frozen from the exhaustive oracle on the 10-vertex token graph
    layout = path_union_layout([3, 2])
    chosen = path_union_independent_set(layout)
    assert len(chosen) == 6
    tg = build_f2(layout.base_graph())
    assert is_independent(tg.graph, tg.indices_of(chosen))
    assert max_independent_set_exhaustive(tg.graph).size == 6


@pytest.mark.parametrize("total", range(2, 15))
def test_parity_set_size_and_independence_for_all_compositions(total):
    for parts in compositions(total):
        layout = path_union_layout(parts)
        chosen = path_union_independent_set(layout)
        assert len(chosen) == alpha_path_union(parts)
        tg = build_f2(layout.base_graph())
        assert is_independent(tg.graph, tg.indices_of(chosen))


def test_associated_set_example_with_full_s1():
    # n=2, H=P3, S1 = both hub vertices, S2 = the middle path vertex
    h = generate(graphs.path(3))
    inp = AssociatedSetInput(
        n=2, h=h,
        s1=VertexSet.of(2, [0, 1]),
        s2=VertexSet.of(3, [1]),
        mis_h_minus_s2=frozenset([(0, 2)]),
    )
    out = associated_independent_set(inp)
    assert out == {(0, 3), (1, 3), (2, 4)}
    assert len(out) == associated_set_size(inp) == 3
    tg = build_f2(generate(graphs.fan(2, 3)))
    assert is_independent(tg.graph, tg.indices_of(out))


def test_associated_set_example_with_singleton_s1():
    # n=3, H=P3, S1 a singleton, S2 an end vertex: 1*1 + C(2,2) + 1 = 3
    h = generate(graphs.path(3))
    inp = AssociatedSetInput(
        n=3, h=h,
        s1=VertexSet.of(3, [0]),
        s2=VertexSet.of(3, [0]),
        mis_h_minus_s2=frozenset([(1, 2)]),
    )
    out = associated_independent_set(inp)
    assert out == {(0, 3), (1, 2), (4, 5)}
    assert len(out) == 3
    tg = build_f2(generate(graphs.fan(3, 3)))
    assert is_independent(tg.graph, tg.indices_of(out))


def test_associated_set_attains_exceptional_fan_value():
    # S1 = all of E_n, S2 = alternating vertices of P_m, m odd, n = (m+1)/2
    m, n = 5, 3
    h = generate(graphs.path(m))
    s2 = VertexSet.of(m, [0, 2, 4])
    inp = AssociatedSetInput(
        n=n, h=h,
        s1=VertexSet.of(n, range(n)),
        s2=s2,
        mis_h_minus_s2=frozenset([(1, 3)]),
    )
    out = associated_independent_set(inp)
    assert len(out) == n * ((m + 1) // 2) + 1  # n*ceil(m/2) + C(floor(m/2), 2)
    tg = build_f2(generate(graphs.fan(n, m)))
    assert is_independent(tg.graph, tg.indices_of(out))


def test_associated_input_contract_errors():
    h = generate(graphs.path(3))
    with pytest.raises(ContractError, match="not independent in h"):
        AssociatedSetInput(n=2, h=h, s1=VertexSet.of(2, []),
                           s2=VertexSet.of(3, [0, 1]), mis_h_minus_s2=frozenset())
    with pytest.raises(ContractError, match="touches s2"):
        AssociatedSetInput(n=2, h=h, s1=VertexSet.of(2, []),
                           s2=VertexSet.of(3, [1]), mis_h_minus_s2=frozenset([(1, 2)]))
    with pytest.raises(ContractError, match="not independent in F2"):
        AssociatedSetInput(n=2, h=h, s1=VertexSet.of(2, []),
                           s2=VertexSet.of(3, []),
                           mis_h_minus_s2=frozenset([(0, 1), (0, 2)]))
    with pytest.raises(ContractError, match="E_n side"):
        AssociatedSetInput(n=2, h=h, s1=VertexSet.of(3, [2]),
                           s2=VertexSet.of(3, []), mis_h_minus_s2=frozenset())


def test_extract_from_single_cross_pair():
    h = generate(graphs.path(3))
    s1, s2 = extract_s1_s2(frozenset([(0, 2)]), 2, h)
    assert list(s1) == [0]
    assert list(s2) == [0]


def test_extract_picks_largest_neighborhood():
    # E2 + P3: cross pairs around hub 0 dominate
    h = generate(graphs.path(3))
    i = frozenset([(0, 2), (0, 4), (1, 2)])
    s1, s2 = extract_s1_s2(i, 2, h)
    assert list(s1) == [0, 1]
    assert list(s2) == [0, 2]


def test_extract_requires_a_cross_pair():
    h = generate(graphs.path(3))
    with pytest.raises(ContractError):
        extract_s1_s2(frozenset([(0, 1)]), 2, h)


def _solver_mis_pairs(h, s2):
    sub, kept = delete_vertices(h, s2)
    if sub.order < 2:
        return frozenset()
    tg = build_f2(sub)
    res = max_independent_set(tg.graph)
    return frozenset((kept[a], kept[b]) for a, b in (tg.pair_of(i) for i in res.witness))


@pytest.mark.parametrize("h_spec,n", [
    (graphs.path(4), 3),
    (graphs.cycle(5), 2),
    (graphs.complete(3), 2),
])
def test_improvement_lemma_on_random_independent_sets(h_spec, n):
    h = generate(h_spec)
    base = generate(graphs.join_spec(graphs.empty(n), h_spec))
    tg = build_f2(base)
    rng = random.Random(97)
    for _ in range(60):
        indices = random_independent_set_with_cross(tg, n, rng)
        pairs = frozenset(tg.pair_of(i) for i in indices)
        s1, s2 = extract_s1_s2(pairs, n, h)
        mis2 = _solver_mis_pairs(h, s2)
        improved = associated_independent_set(AssociatedSetInput(
            n=n, h=h, s1=s1, s2=s2, mis_h_minus_s2=mis2))
        assert is_independent(tg.graph, tg.indices_of(improved))
        assert len(improved) >= len(pairs)


@given(st.integers(2, 4), st.integers(2, 5), st.data())
@settings(max_examples=40, deadline=None)
def test_cardinality_identity(n, m, data):
    h = generate(graphs.path(m))
    s1 = VertexSet.of(n, data.draw(st.sets(st.integers(0, n - 1))))
    odds = list(range(0, m, 2))
    s2_members = data.draw(st.sets(st.sampled_from(odds)) if odds else st.just(set()))
    s2 = VertexSet.of(m, s2_members)
    mis2 = _solver_mis_pairs(h, s2)
    inp = AssociatedSetInput(n=n, h=h, s1=s1, s2=s2, mis_h_minus_s2=mis2)
    out = associated_independent_set(inp)
    r, s = len(s1), len(s2)
    assert len(out) == r * s + (n - r) * (n - r - 1) // 2 + len(mis2)


@pytest.mark.parametrize("m", range(3, 9))
def test_deleted_path_alpha_matches_odd_component_formula(m):
    # every independent S2 of P_m: alpha(F2(P_m - S2)) = ((m-s)^2 + t^2 - 2t)/4
    h = generate(graphs.path(m))
    for size in range(1, (m + 1) // 2 + 1):
        for s2_members in itertools.combinations(range(m), size):
            if any(b - a == 1 for a, b in zip(s2_members, s2_members[1:])):
                continue
            s2 = VertexSet.of(m, s2_members)
            sub, _ = delete_vertices(h, s2)
            if sub.order < 2:
                continue
            t = odd_component_count(sub)
            s = len(s2)
            expected = ((m - s) ** 2 + t * t - 2 * t) // 4
            assert max_independent_set(build_f2(sub).graph).size == expected
