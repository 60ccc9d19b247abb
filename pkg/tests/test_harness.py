import pytest

from token_alpha import graphs, harness
from token_alpha.errors import ParameterError
from token_alpha.formulas import AlphaFormulaResult, alpha_closed_form
from token_alpha.graphs import generate
from token_alpha.harness import (
    SweepConfig,
    compositions,
    construction_pairs,
    evaluate_graph_row,
    evaluate_row,
    run_lemma_trials,
    run_sweep,
    sweep_specs,
    thread_count,
)
from token_alpha.mis import is_independent
from token_alpha.tokens import build_f2


def test_evaluate_row_fan_agrees():
    row = evaluate_row(graphs.fan(2, 3), ("formula", "solver"))
    assert row.formula.value == 4
    assert row.solver.size == 4
    assert row.verdict == "AGREE"


def test_evaluate_row_path_union_all_methods():
    row = evaluate_row(graphs.path_union([3, 2]))
    assert row.formula.value == row.construction_size == row.solver.size == 6
    assert row.construction_valid
    assert row.verdict == "AGREE"


def test_evaluate_row_wheel_exceptional():
    row = evaluate_row(graphs.wheel(2, 3))
    assert row.formula.exceptional
    assert row.formula.value == row.solver.size == 3
    assert row.verdict == "AGREE"


def test_construction_matches_formula_across_join_families():
    specs = []
    specs += [graphs.fan(n, m) for n in range(1, 5) for m in range(1, 7)]
    specs += [graphs.wheel(n, m) for n in range(1, 4) for m in range(3, 7)]
    specs += [graphs.split(n, m) for n in range(1, 5) for m in range(1, 6)]
    specs += [graphs.complete_bipartite(n, m) for n in range(1, 5) for m in range(1, 5)]
    for spec in specs:
        if generate(spec).order < 2:
            continue
        pairs = construction_pairs(spec)
        expected = alpha_closed_form(spec).value
        assert len(pairs) == expected, spec.label()
        tg = build_f2(generate(spec))
        assert is_independent(tg.graph, tg.indices_of(pairs)), spec.label()


def test_construction_unavailable_for_cycles():
    row = evaluate_row(graphs.cycle(5))
    assert row.construction_size is None
    assert row.verdict == "AGREE"


def test_row_without_token_graph_is_rejected():
    with pytest.raises(ParameterError):
        evaluate_row(graphs.path(1), ("solver",))


def test_formula_only_row_for_uncovered_family_has_no_values():
    row = evaluate_row(graphs.join_spec(graphs.path(3), graphs.path(3)), ("formula",))
    assert row.formula is None
    assert row.verdict == "AGREE"


def test_solver_row_for_arbitrary_join():
    spec = graphs.join_spec(graphs.path(3), graphs.path(3))
    row = evaluate_row(spec, ("solver",))
    assert row.solver.size >= 2 * alpha_closed_form(graphs.path(3)).value


def test_disagree_verdict_when_methods_differ(monkeypatch):
    def wrong_formula(spec):
        return AlphaFormulaResult(999, spec, False, "bogus")

    monkeypatch.setattr(harness, "alpha_closed_form", wrong_formula)
    row = evaluate_row(graphs.fan(2, 3), ("formula", "solver"))
    assert row.verdict == "DISAGREE"


def test_aborted_verdict_on_tiny_budget():
    row = evaluate_row(graphs.fan(4, 6), ("formula", "solver"), node_budget=1)
    assert row.aborted
    assert row.verdict == "ABORTED"


def test_evaluate_graph_row():
    row = evaluate_graph_row("file:c5", generate(graphs.cycle(5)))
    assert row.solver.size == 5
    assert row.label == "file:c5"


def test_compositions_are_lexicographic():
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(list(compositions(6))) == 32


def test_sweep_specs_order_and_counts():
    config = SweepConfig(family="fan", n_range=(1, 2), m_range=(2, 4))
    specs = sweep_specs(config)
    assert [(s.n, s.m) for s in specs] == [
        (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4)]
    config = SweepConfig(family="path_union", m_range=(2, 4))
    specs = sweep_specs(config)
    assert [s.parts for s in specs][:4] == [(1, 1), (2,), (1, 1, 1), (1, 2)]
    assert len(specs) == 2 + 4 + 8


def test_sweep_rejects_empty_range():
    with pytest.raises(ParameterError):
        SweepConfig(family="fan", n_range=(3, 1), m_range=(2, 4))


def test_sweep_runs_and_counts():
    report = run_sweep(SweepConfig(family="wheel", n_range=(1, 2), m_range=(3, 5),
                                   methods=("formula", "solver")))
    assert len(report.rows) == 6
    assert report.counts == {"AGREE": 6, "DISAGREE": 0, "ABORTED": 0}
    assert report.exit_code == 0


def test_sweep_exit_code_for_aborts():
    report = run_sweep(SweepConfig(family="fan", n_range=(4, 4), m_range=(6, 6),
                                   methods=("solver",), node_budget=1))
    assert report.counts["ABORTED"] == 1
    assert report.exit_code == 3


def test_parallel_sweep_matches_sequential(monkeypatch):
    config = SweepConfig(family="split", n_range=(1, 3), m_range=(1, 4))
    sequential = run_sweep(config)
    monkeypatch.setenv("TOKEN_ALPHA_THREADS", "4")
    parallel = run_sweep(config)
    assert [r.values for r in parallel.rows] == [r.values for r in sequential.rows]
    assert [r.verdict for r in parallel.rows] == [r.verdict for r in sequential.rows]


def test_thread_count_parsing(monkeypatch):
    monkeypatch.delenv("TOKEN_ALPHA_THREADS", raising=False)
    assert thread_count() == 1
    monkeypatch.setenv("TOKEN_ALPHA_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("TOKEN_ALPHA_THREADS", "zero")
    with pytest.raises(ParameterError):
        thread_count()


def test_lemma_trials_report():
    report = run_lemma_trials(3, graphs.path(4), trials=25, seed=3)
    assert len(report.trials) == 25
    assert not report.failures
    assert report.min_margin >= 0
    assert report.mean_margin >= 0.0


def test_lemma_trials_require_positive_count():
    with pytest.raises(ParameterError):
        run_lemma_trials(2, graphs.path(3), trials=0, seed=1)
