import itertools
import random

import pytest

from folioselect import (
    ActionKind,
    BenefitNetwork,
    BenefitObjectiveEdge,
    EnumerationCapError,
    EvaluationResult,
    ImpactCoefficients,
    InteractionProfile,
    InvalidInputError,
    NotFoundError,
    Objective,
    PortfolioAlternative,
    Project,
    ProjectBenefitEdge,
    Status,
    ValidationError,
    Workspace,
    dominates,
    enumerate_alternatives,
    evaluate_alternative,
    global_cost_delta,
    global_duration_delta,
    pareto_frontier,
    preference_score,
    strategic_value,
)
from helpers import random_workspace
from test_model import make_project


def simple_workspace():
    projects = (
        make_project("P1", cost=100.0, duration=10.0),
        make_project("P2", cost=50.0, duration=20.0),
        make_project("C1", status=Status.CANDIDATE, cost=30.0, duration=6.0),
        make_project("C2", status=Status.CANDIDATE, cost=40.0, duration=8.0),
    )
    network = BenefitNetwork(
        objectives=(Objective("O1", 2.0), Objective("O2", 1.0)),
        benefits=("B1", "B2"),
        project_benefit_edges=(
            ProjectBenefitEdge("C1", "B1", 0.5),
            ProjectBenefitEdge("C2", "B2", 0.25),
            ProjectBenefitEdge("P1", "B1", 0.8),
        ),
        benefit_objective_edges=(
            BenefitObjectiveEdge("B1", "O1", 0.4),
            BenefitObjectiveEdge("B2", "O2", 0.6),
        ),
    )
    return Workspace(projects=projects, benefit_network=network)


def alternative(actions, alt_id="A1", base=("P1", "P2")):
    return PortfolioAlternative(
        id=alt_id, label=alt_id, base_portfolio=frozenset(base), actions=tuple(actions)
    )


def add(pid, impacts=None):
    return InteractionProfile(ActionKind.ADD, pid, impacts or {})


def remove(pid, impacts=None):
    return InteractionProfile(ActionKind.REMOVE, pid, impacts or {})


def result(v, c, d):
    return EvaluationResult(strategic_value=v, global_cost_delta=c, global_duration_delta=d)


def evaluated(alt_id, v, c, d):
    return PortfolioAlternative(
        id=alt_id, label=alt_id, base_portfolio=frozenset()
    ).with_result(result(v, c, d))


def test_identity_alternative_is_all_zero():
    ws = simple_workspace()
    got = evaluate_alternative(ws, alternative([]))
    assert got.strategic_value == 0.0
    assert got.global_cost_delta == 0.0
    assert got.global_duration_delta == 0.0
    assert got.per_project == ()
    assert got.action_order == ()


def test_neutral_add_keeps_deltas_zero_and_reports_strategic_value():
    ws = simple_workspace()
    got = evaluate_alternative(ws, alternative([add("C1")]))
    assert got.global_cost_delta == 0.0
    assert got.global_duration_delta == 0.0
    assert got.strategic_value == strategic_value("C1", ws.benefit_network)
    assert got.action_order == (("add", "C1"),)


def test_remove_forgoes_the_projects_strategic_value():
    ws = simple_workspace()
    got = evaluate_alternative(ws, alternative([remove("P1")]))
    assert got.strategic_value == -strategic_value("P1", ws.benefit_network)


def test_two_sequential_adds_compose_factors():
    ws = simple_workspace()
    alt = alternative(
        [
            add("C1", {"P1": ImpactCoefficients(cost_factor=1.2)}),
            add("C2", {"P1": ImpactCoefficients(cost_factor=1.5)}),
        ]
    )
    got = evaluate_alternative(ws, alt)
    # independent sequential recomputation
    expected_cost = 100.0
    expected_cost = 1.2 * expected_cost
    expected_cost = 1.5 * expected_cost
    row = next(r for r in got.per_project if r.project_id == "P1")
    assert row.projected_cost == expected_cost
    assert row.projected_cost == pytest.approx(180.0)
    assert row.cost_delta == expected_cost - 100.0
    assert row.cost_delta == pytest.approx(80.0)
    assert got.global_cost_delta == pytest.approx(80.0)


def test_single_action_matches_profile_level_functions_bit_for_bit():
    ws = simple_workspace()
    prof = add(
        "C1",
        {
            "P1": ImpactCoefficients(cost_factor=1.7, cost_sensitivity=2.5, duration_factor=0.5),
            "P2": ImpactCoefficients(duration_factor=1.25, duration_sensitivity=3.0),
        },
    )
    got = evaluate_alternative(ws, alternative([prof]))
    base = [ws.project("P1"), ws.project("P2")]
    assert got.global_cost_delta == global_cost_delta(base, prof)
    assert got.global_duration_delta == global_duration_delta(base, prof)


def test_aggregates_equal_sum_of_breakdown_rows():
    rng = random.Random(41)
    for seed in range(60):
        ws = random_workspace(random.Random(seed), n_ongoing=4, n_candidates=3)
        for alt in ws.alternatives:
            got = evaluate_alternative(ws, alt)
            assert got.global_cost_delta == sum(r.weighted_cost_delta for r in got.per_project)
            assert got.global_duration_delta == sum(
                r.weighted_duration_delta for r in got.per_project
            )
            assert [r.project_id for r in got.per_project] == sorted(
                r.project_id for r in got.per_project
            )


def test_action_order_can_matter_when_sensitivities_differ():
    ws = simple_workspace()
    gentle = add("C1", {"P1": ImpactCoefficients(cost_factor=2.0, cost_sensitivity=1.0)})
    harsh = add("C2", {"P1": ImpactCoefficients(cost_factor=3.0, cost_sensitivity=5.0)})
    first = evaluate_alternative(ws, alternative([gentle, harsh]))
    second = evaluate_alternative(ws, alternative([harsh, gentle]))
    # gentle then harsh: 1*(200-100) + 5*(600-200) = 2100
    assert first.global_cost_delta == pytest.approx(2100.0)
    # harsh then gentle: 5*(300-100) + 1*(600-300) = 1300
    assert second.global_cost_delta == pytest.approx(1300.0)
    assert first.per_project[0].projected_cost == second.per_project[0].projected_cost == 600.0
    assert first.action_order != second.action_order


def test_absorbed_and_halted_projects_are_flagged():
    ws = simple_workspace()
    alt = alternative(
        [
            add(
                "C1",
                {
                    "P1": ImpactCoefficients(cost_factor=0),
                    "P2": ImpactCoefficients(duration_factor=0),
                },
            )
        ]
    )
    rows = {r.project_id: r for r in evaluate_alternative(ws, alt).per_project}
    assert rows["P1"].absorbed and not rows["P1"].halted
    assert rows["P2"].halted and not rows["P2"].absorbed
    assert rows["P1"].projected_cost == 0.0
    assert rows["P2"].projected_duration == 0.0


def test_evaluation_is_deterministic():
    ws = simple_workspace()
    alt = alternative([add("C1", {"P1": ImpactCoefficients(cost_factor=1.1)}), remove("P2")])
    assert evaluate_alternative(ws, alt) == evaluate_alternative(ws, alt)


def test_invalid_alternatives_are_rejected():
    ws = simple_workspace()
    with pytest.raises(ValidationError):
        evaluate_alternative(ws, alternative([add("P1")]))  # add must target a candidate
    with pytest.raises(ValidationError):
        evaluate_alternative(ws, alternative([remove("C1")]))  # remove must target a member
    with pytest.raises(ValidationError):
        evaluate_alternative(
            ws, alternative([add("C1", {"ghost": ImpactCoefficients(cost_factor=2)})])
        )
    with pytest.raises(ValidationError):
        evaluate_alternative(ws, alternative([add("C1"), add("C1")]))


# --- dominance and frontier --------------------------------------------------


def test_dominance_needs_one_strict_edge():
    assert dominates(result(10, 5, 5), result(8, 6, 6))
    assert not dominates(result(8, 6, 6), result(10, 5, 5))
    assert not dominates(result(10, 5, 5), result(10, 5, 5))
    assert dominates(result(10, 5, 4), result(10, 5, 5))


def test_single_alternative_is_its_own_frontier():
    a = evaluated("A", 1, 2, 3)
    frontier, relation = pareto_frontier([a])
    assert frontier == (a,)
    assert relation.pairs == ()


def test_strictly_better_dominates():
    a = evaluated("A", 10, 5, 5)
    b = evaluated("B", 8, 6, 6)
    frontier, relation = pareto_frontier([a, b])
    assert [x.id for x in frontier] == ["A"]
    assert relation.pairs == (("A", "B"),)


def test_unevaluated_or_duplicate_input_is_rejected():
    bare = PortfolioAlternative(id="X", label="", base_portfolio=frozenset())
    with pytest.raises(InvalidInputError):
        pareto_frontier([bare])
    a = evaluated("A", 1, 1, 1)
    with pytest.raises(InvalidInputError):
        pareto_frontier([a, a])


def pairwise_frontier_oracle(alts):
    """Literal reading of the definition, written independently."""
    keep = []
    for mine in alts:
        beaten = False
        for other in alts:
            if other.id == mine.id:
                continue
            at_least = (
                other.derived.strategic_value >= mine.derived.strategic_value
                and other.derived.global_cost_delta <= mine.derived.global_cost_delta
                and other.derived.global_duration_delta <= mine.derived.global_duration_delta
            )
            strict = (
                other.derived.strategic_value > mine.derived.strategic_value
                or other.derived.global_cost_delta < mine.derived.global_cost_delta
                or other.derived.global_duration_delta < mine.derived.global_duration_delta
            )
            if at_least and strict:
                beaten = True
                break
        if not beaten:
            keep.append(mine.id)
    return sorted(keep)


def random_evaluated_set(rng, n):
    # coarse grid to provoke ties on some axes
    return [
        evaluated(
            f"A{i:02d}",
            rng.randint(0, 6),
            rng.randint(-3, 3),
            rng.randint(-3, 3),
        )
        for i in range(n)
    ]


def test_frontier_matches_pairwise_oracle_on_random_sets():
    rng = random.Random(59)
    for _ in range(100):
        alts = random_evaluated_set(rng, rng.randint(1, 12))
        frontier, relation = pareto_frontier(alts)
        assert [a.id for a in frontier] == pairwise_frontier_oracle(alts)
        ids = {a.id for a in alts}
        for a, b in relation.pairs:
            assert a in ids and b in ids and a != b
        # transitivity of the computed relation
        pairs = set(relation.pairs)
        for (a, b), (c, d) in itertools.product(pairs, pairs):
            if b == c:
                assert (a, d) in pairs


def test_adding_a_dominated_alternative_keeps_the_frontier():
    rng = random.Random(61)
    for _ in range(30):
        alts = random_evaluated_set(rng, 8)
        frontier, _ = pareto_frontier(alts)
        champion = frontier[0]
        worse = PortfolioAlternative(
            id="ZZworse", label="", base_portfolio=frozenset()
        ).with_result(
            result(
                champion.derived.strategic_value - 1,
                champion.derived.global_cost_delta + 1,
                champion.derived.global_duration_delta + 1,
            )
        )
        bigger, _ = pareto_frontier(alts + [worse])
        assert {a.id for a in bigger} == {a.id for a in frontier}


def test_preference_score_is_display_only():
    r = result(10, 4, 2)
    assert preference_score(r) == 10 - 4 - 2
    assert preference_score(r, value_weight=2, cost_weight=0.5, duration_weight=0) == 20 - 2


# --- enumeration ---------------------------------------------------------------


def test_enumerate_zero_candidates_gives_the_identity():
    ws = simple_workspace()
    out = enumerate_alternatives(ws, [])
    assert len(out) == 1
    assert out[0].actions == ()
    assert out[0].derived == result(0.0, 0.0, 0.0)


def test_enumerate_three_candidates_gives_eight():
    ws = Workspace(
        projects=(
            make_project("P1"),
            make_project("C1", status=Status.CANDIDATE),
            make_project("C2", status=Status.CANDIDATE),
            make_project("C3", status=Status.CANDIDATE),
        )
    )
    out = enumerate_alternatives(ws, ["C1", "C2", "C3"])
    assert len(out) == 8
    assert len({alt.id for alt in out}) == 8
    sizes = sorted(len(alt.actions) for alt in out)
    assert sizes == [0, 1, 1, 1, 2, 2, 2, 3]


def test_enumerated_singletons_match_interactive_evaluation():
    ws = Workspace(
        projects=(
            make_project("P1", cost=100.0, duration=10.0),
            make_project("P2", cost=60.0, duration=14.0),
            make_project("C1", status=Status.CANDIDATE),
            make_project("C2", status=Status.CANDIDATE),
        ),
        benefit_network=simple_workspace().benefit_network,
        interaction_profiles={
            "C1": add("C1", {"P1": ImpactCoefficients(cost_factor=1.3, cost_sensitivity=2)}),
            "C2": add("C2", {"P2": ImpactCoefficients(duration_factor=0.5)}),
        },
    )
    out = {alt.id: alt for alt in enumerate_alternatives(ws, ["C1", "C2"])}
    base = frozenset(ws.ongoing_ids())
    for pid, mask_id in (("C1", "enum:10"), ("C2", "enum:01")):
        manual = PortfolioAlternative(
            id="manual",
            label="",
            base_portfolio=base,
            actions=(ws.interaction_profiles[pid],),
        )
        assert out[mask_id].derived == evaluate_alternative(ws, manual)


def test_enumerate_validates_candidates():
    ws = simple_workspace()
    with pytest.raises(NotFoundError):
        enumerate_alternatives(ws, ["ghost"])
    with pytest.raises(InvalidInputError):
        enumerate_alternatives(ws, ["P1"])


def test_enumeration_cap():
    projects = tuple(
        make_project(f"C{i:02d}", status=Status.CANDIDATE) for i in range(18)
    )
    ws = Workspace(projects=projects)
    with pytest.raises(EnumerationCapError) as err:
        enumerate_alternatives(ws, [p.id for p in projects])
    assert err.value.cap == 16
    # an explicit cap overrides
    out = enumerate_alternatives(ws, [p.id for p in projects[:5]], cap=5)
    assert len(out) == 32
