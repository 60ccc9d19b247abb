"""Verification harness: evaluate formula / construction / exact solver on
family instances, sweep parameter grids, and exercise the improvement lemma
on random independent sets.

The solver is the ground truth; a row whose methods disagree is a DISAGREE
row and fails the run.  Construction witnesses are always re-checked for
independence before their size is trusted.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .constructions import (
    AssociatedSetInput,
    PathUnionLayout,
    associated_independent_set,
    extract_s1_s2,
    path_union_independent_set,
    path_union_layout,
)
from .errors import BudgetExceededError, ParameterError
from .formulas import AlphaFormulaResult, alpha_closed_form
from .graphs import FamilySpec, Graph, VertexSet, delete_vertices, generate, components
from .mis import MisResult, is_independent, max_independent_set
from .tokens import TokenGraph, TokenPair, build_f2

METHODS = ("formula", "construction", "solver")

CONSTRUCTION_FAMILIES = frozenset(
    {"path", "path_union", "fan", "wheel", "split", "complete_bipartite"})

_JOIN_H_KIND = {"fan": "path", "wheel": "cycle", "split": "complete",
                "complete_bipartite": "empty"}


def thread_count() -> int:
    """Worker cap for sweep rows, from TOKEN_ALPHA_THREADS (default 1)."""
    raw = os.environ.get("TOKEN_ALPHA_THREADS", "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"TOKEN_ALPHA_THREADS must be an integer, got {raw!r}") from None
    return max(1, value)


# ---------------------------------------------------------------------------
# Construction recipes
# ---------------------------------------------------------------------------

def _h_graph(spec: FamilySpec) -> Graph:
    return generate(FamilySpec(_JOIN_H_KIND[spec.kind], m=spec.m))


def _canonical_max_independent_set_of_h(kind: str, m: int) -> VertexSet:
    """A fixed maximum independent set of the H side (path, cycle, clique, or
    edgeless graph), used as the S2 of the cross-heavy candidate."""
    if kind == "path":
        return VertexSet.of(m, range(0, m, 2))
    if kind == "cycle":
        return VertexSet.of(m, range(0, 2 * (m // 2), 2))
    if kind == "complete":
        return VertexSet.of(m, [0])
    if kind == "empty":
        return VertexSet.of(m, range(m))
    raise ParameterError(f"no canonical independent set for kind {kind!r}")


def _walk_path_component(sub: Graph, comp: VertexSet) -> list[int]:
    """Order a component known to be a path from its lowest endpoint."""
    members = list(comp)
    if len(members) == 1:
        return members
    masks = sub.neighbor_masks()
    inside = 0
    for v in members:
        inside |= 1 << v
    endpoints = [v for v in members if (masks[v] & inside).bit_count() == 1]
    walk = [min(endpoints)]
    seen = 1 << walk[0]
    while len(walk) < len(members):
        nbrs = masks[walk[-1]] & inside & ~seen
        v = (nbrs & -nbrs).bit_length() - 1
        walk.append(v)
        seen |= 1 << v
    return walk


def _layout_of_path_components(h: Graph, removed: VertexSet) -> PathUnionLayout | None:
    """Layout of h - removed in h's labels, when every component is a path.
    Returns None when fewer than two vertices survive."""
    sub, kept = delete_vertices(h, removed)
    if sub.order < 2:
        return None
    rows = []
    for comp in components(sub):
        walk = _walk_path_component(sub, comp)
        rows.append(tuple(kept[v] for v in walk))
    rows.sort(key=lambda row: (len(row) % 2 == 0, row))
    return PathUnionLayout(tuple(len(r) for r in rows), tuple(rows))


def _max_ind_pairs_of_f2(kind: str, h: Graph, removed: VertexSet) -> frozenset[TokenPair]:
    """A maximum independent set of F2(h - removed) as pairs in h's labels.

    Paths, cycles and edgeless graphs leave path unions behind, covered by
    the parity construction; cliques leave a clique, covered by a matching.
    """
    survivors = [v for v in range(h.order) if v not in removed]
    if len(survivors) < 2:
        return frozenset()
    if kind == "complete":
        return frozenset(zip(survivors[0::2], survivors[1::2]))
    layout = _layout_of_path_components(h, removed)
    return path_union_independent_set(layout)


def _solver_max_ind_pairs(h: Graph, removed: VertexSet,
                          node_budget: int | None) -> frozenset[TokenPair]:
    """Exact-solver route to a maximum independent set of F2(h - removed)."""
    sub, kept = delete_vertices(h, removed)
    if sub.order < 2:
        return frozenset()
    tg = build_f2(sub)
    result = max_independent_set(tg.graph, node_budget=node_budget)
    return frozenset((kept[a], kept[b]) for a, b in
                     (tg.pair_of(i) for i in result.witness))


def construction_pairs(spec: FamilySpec,
                       node_budget: int | None = None) -> frozenset[TokenPair] | None:
    """Explicit independent set for the family instance, or None when no
    construction is defined for the family.

    Path unions get the parity set.  Join families E_n + H get the larger
    of two candidates: the side set (all E_n pairs plus a maximum set of
    F2(H)) and the cross-heavy associated set built from S1 = V(E_n) and a
    maximum independent set S2 of H.  The cycle side set is the only piece
    without a paper construction; the exact solver supplies its witness.
    """
    kind = spec.kind
    if kind not in CONSTRUCTION_FAMILIES:
        return None
    if kind == "path":
        return path_union_independent_set(path_union_layout([spec.m])) if spec.m >= 2 \
            else frozenset()
    if kind == "path_union":
        return path_union_independent_set(path_union_layout(spec.parts))

    n, m = spec.n, spec.m
    h_kind = _JOIN_H_KIND[kind]
    h = _h_graph(spec)
    nothing = VertexSet.of(m, [])

    if h_kind == "cycle":
        side_mis = _solver_max_ind_pairs(h, nothing, node_budget)
    else:
        side_mis = _max_ind_pairs_of_f2(h_kind, h, nothing)
    side = associated_independent_set(AssociatedSetInput(
        n=n, h=h, s1=VertexSet.of(n, []), s2=nothing, mis_h_minus_s2=side_mis))

    s2 = _canonical_max_independent_set_of_h(h_kind, m)
    cross_mis = _max_ind_pairs_of_f2(h_kind, h, s2)
    cross = associated_independent_set(AssociatedSetInput(
        n=n, h=h, s1=VertexSet.of(n, range(n)), s2=s2, mis_h_minus_s2=cross_mis))

    return cross if len(cross) > len(side) else side


def base_graph_for(spec: FamilySpec) -> Graph:
    """Graph whose token graph the harness verifies.  Path unions use the
    odd-parts-first layout ordering so the parity construction's labels match."""
    if spec.kind == "path_union":
        return path_union_layout(spec.parts).base_graph()
    return generate(spec)


# ---------------------------------------------------------------------------
# Row evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RowResult:
    label: str
    spec: FamilySpec | None
    formula: AlphaFormulaResult | None
    construction_size: int | None
    construction_pairs: frozenset[TokenPair] | None
    construction_valid: bool | None
    solver: MisResult | None
    solver_witness_pairs: tuple[TokenPair, ...] | None
    solver_millis: int | None
    aborted: bool
    verdict: str  # AGREE | DISAGREE | ABORTED

    @property
    def values(self) -> list[int]:
        out = []
        if self.formula is not None:
            out.append(self.formula.value)
        if self.construction_size is not None:
            out.append(self.construction_size)
        if self.solver is not None:
            out.append(self.solver.size)
        return out


def evaluate_row(spec: FamilySpec, methods=METHODS,
                 node_budget: int | None = None) -> RowResult:
    """Run the requested methods on one family instance and compare."""
    methods = tuple(methods)
    for name in methods:
        if name not in METHODS:
            raise ParameterError(f"unknown method {name!r}; choose from {METHODS}")
    if not methods:
        raise ParameterError("at least one method is required")

    need_token_graph = "solver" in methods or "construction" in methods
    base = base_graph_for(spec)
    if need_token_graph and base.order < 2:
        raise ParameterError(
            f"{spec.label()} has order {base.order}; no token graph exists below order 2")
    tg = build_f2(base) if need_token_graph else None

    formula = alpha_closed_form(spec) if "formula" in methods else None

    construction_size = None
    construction = None
    construction_valid = None
    aborted = False
    if "construction" in methods:
        try:
            construction = construction_pairs(spec, node_budget=node_budget)
        except BudgetExceededError:
            aborted = True
        if construction is not None:
            construction_size = len(construction)
            construction_valid = is_independent(tg.graph, tg.indices_of(construction))

    solver_result = None
    witness_pairs = None
    millis = None
    if "solver" in methods and not aborted:
        start = time.perf_counter()
        try:
            solver_result = max_independent_set(tg.graph, node_budget=node_budget)
        except BudgetExceededError:
            aborted = True
        millis = int((time.perf_counter() - start) * 1000)
        if solver_result is not None:
            witness_pairs = tuple(tg.pair_of(i) for i in solver_result.witness)

    if aborted:
        verdict = "ABORTED"
    else:
        values = []
        if formula is not None:
            values.append(formula.value)
        if construction_size is not None:
            values.append(construction_size)
        if solver_result is not None:
            values.append(solver_result.size)
        disagree = (construction_valid is False) or (len(set(values)) > 1)
        verdict = "DISAGREE" if disagree else "AGREE"

    return RowResult(
        label=spec.label(),
        spec=spec,
        formula=formula,
        construction_size=construction_size,
        construction_pairs=construction,
        construction_valid=construction_valid,
        solver=solver_result,
        solver_witness_pairs=witness_pairs,
        solver_millis=millis,
        aborted=aborted,
        verdict=verdict,
    )


def evaluate_graph_row(label: str, base: Graph,
                       node_budget: int | None = None) -> RowResult:
    """Solver-only row for an imported base graph: alpha of its token graph."""
    if base.order < 2:
        raise ParameterError(f"{label} has order {base.order}; no token graph exists")
    tg = build_f2(base)
    aborted = False
    solver_result = None
    witness_pairs = None
    start = time.perf_counter()
    try:
        solver_result = max_independent_set(tg.graph, node_budget=node_budget)
    except BudgetExceededError:
        aborted = True
    millis = int((time.perf_counter() - start) * 1000)
    if solver_result is not None:
        witness_pairs = tuple(tg.pair_of(i) for i in solver_result.witness)
    return RowResult(
        label=label, spec=None, formula=None,
        construction_size=None, construction_pairs=None, construction_valid=None,
        solver=solver_result, solver_witness_pairs=witness_pairs,
        solver_millis=millis, aborted=aborted,
        verdict="ABORTED" if aborted else "AGREE",
    )


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

def compositions(total: int):
    """All compositions of total into positive parts, lexicographically."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


@dataclass(frozen=True)
class SweepConfig:
    family: str
    n_range: tuple[int, int] | None = None
    m_range: tuple[int, int] | None = None
    methods: tuple[str, ...] = METHODS
    node_budget: int | None = None
    seed: int = 0

    def __post_init__(self):
        for label, rng in (("n", self.n_range), ("m", self.m_range)):
            if rng is not None and rng[0] > rng[1]:
                raise ParameterError(f"empty {label} range {rng[0]}..{rng[1]}")


def sweep_specs(config: SweepConfig) -> list[FamilySpec]:
    """Family instances for a sweep, in deterministic lexicographic order."""
    family = config.family
    if family in ("path", "cycle", "empty", "complete"):
        if config.m_range is None:
            raise ParameterError(f"{family} sweep requires an m range")
        lo, hi = config.m_range
        return [FamilySpec(family, m=m) for m in range(lo, hi + 1)]
    if family in ("fan", "wheel", "split", "complete_bipartite"):
        if config.n_range is None or config.m_range is None:
            raise ParameterError(f"{family} sweep requires n and m ranges")
        return [FamilySpec(family, n=n, m=m)
                for n in range(config.n_range[0], config.n_range[1] + 1)
                for m in range(config.m_range[0], config.m_range[1] + 1)]
    if family == "path_union":
        if config.m_range is None:
            raise ParameterError("path_union sweep requires an m range of totals")
        return [FamilySpec("path_union", parts=parts)
                for total in range(config.m_range[0], config.m_range[1] + 1)
                for parts in compositions(total)]
    raise ParameterError(f"family {family!r} cannot be swept")


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[RowResult, ...]

    @property
    def counts(self) -> dict[str, int]:
        out = {"AGREE": 0, "DISAGREE": 0, "ABORTED": 0}
        for row in self.rows:
            out[row.verdict] += 1
        return out

    @property
    def exit_code(self) -> int:
        counts = self.counts
        if counts["DISAGREE"]:
            return 1
        if counts["ABORTED"]:
            return 3
        return 0


def run_sweep(config: SweepConfig) -> SweepReport:
    specs = sweep_specs(config)
    workers = thread_count()
    if workers == 1:
        rows = [evaluate_row(s, config.methods, config.node_budget) for s in specs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(
                lambda s: evaluate_row(s, config.methods, config.node_budget), specs))
    return SweepReport(tuple(rows))


# ---------------------------------------------------------------------------
# Improvement-lemma trials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaTrial:
    start_size: int
    improved_size: int
    independent: bool
    seed_pair: TokenPair

    @property
    def ok(self) -> bool:
        return self.independent and self.improved_size >= self.start_size


@dataclass(frozen=True)
class LemmaReport:
    n: int
    h_spec: FamilySpec
    trials: tuple[LemmaTrial, ...]

    @property
    def failures(self) -> list[int]:
        return [i for i, t in enumerate(self.trials) if not t.ok]

    @property
    def min_margin(self) -> int:
        return min(t.improved_size - t.start_size for t in self.trials)

    @property
    def mean_margin(self) -> float:
        return sum(t.improved_size - t.start_size for t in self.trials) / len(self.trials)


def random_independent_set_with_cross(tg: TokenGraph, split: int,
                                      rng: random.Random) -> list[int]:
    """Greedy closure of a shuffled vertex order around a forced cross pair,
    yielding a maximal independent set that meets the mixed region."""
    cross = [i for i, (a, b) in enumerate(tg.pairs) if a < split <= b]
    seed = rng.choice(cross)
    masks = tg.graph.neighbor_masks()
    order = list(range(tg.graph.order))
    rng.shuffle(order)
    chosen = [seed]
    blocked = masks[seed] | (1 << seed)
    for v in order:
        if not blocked >> v & 1:
            chosen.append(v)
            blocked |= masks[v] | (1 << v)
    return sorted(chosen)


def run_lemma_trials(n: int, h_spec: FamilySpec, trials: int, seed: int,
                     node_budget: int | None = None) -> LemmaReport:
    """Check the improvement property on random independent sets of
    F2(E_n + H): the associated set built from the extracted (S1, S2) must
    be independent and at least as large."""
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    h = generate(h_spec)
    base = generate(FamilySpec("join", operands=(FamilySpec("empty", m=n), h_spec)))
    tg = build_f2(base)
    rng = random.Random(seed)
    results = []
    for _ in range(trials):
        indices = random_independent_set_with_cross(tg, n, rng)
        pairs = frozenset(tg.pair_of(i) for i in indices)
        s1, s2 = extract_s1_s2(pairs, n, h)
        mis2 = _solver_max_ind_pairs(h, s2, node_budget)
        improved = associated_independent_set(AssociatedSetInput(
            n=n, h=h, s1=s1, s2=s2, mis_h_minus_s2=mis2))
        ok_ind = is_independent(tg.graph, tg.indices_of(improved))
        first_cross = next(p for p in sorted(pairs) if p[0] < n <= p[1])
        results.append(LemmaTrial(
            start_size=len(pairs), improved_size=len(improved),
            independent=ok_ind, seed_pair=first_cross))
    return LemmaReport(n=n, h_spec=h_spec, trials=tuple(results))
