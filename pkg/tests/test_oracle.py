import pytest

from patrolsim.engine import SimConfig, run
from patrolsim.generators import (cycle, four_cycle_chain, grid_triangulation,
                                  path_dual)
from patrolsim.metrics import vertex_peak_refresh
from patrolsim.oracle import (exhaustive_tiebreak_search, hamiltonian_cycle,
                              reference_run)
from patrolsim.policies import PolicyKind, TieBreakSpec


def test_cycle4_worst_case_is_tour():
    res = exhaustive_tiebreak_search(cycle(4), PolicyKind.LRV_V, 0, 40)
    assert res.complete
    assert res.peak == 4


def test_path3_worst_peaks_by_policy():
    expected = {PolicyKind.LRV_V: 4, PolicyKind.LRV_E: 4,
                PolicyKind.LFV_V: 6, PolicyKind.LFV_E: 4}
    for pol, peak in expected.items():
        res = exhaustive_tiebreak_search(path_dual(3), pol, 0, 60)
        assert res.complete
        assert res.peak == peak, pol


def test_witness_replays_through_engine():
    g = four_cycle_chain(2)
    res = exhaustive_tiebreak_search(g, PolicyKind.LRV_V, 0, 80)
    assert res.complete
    trace = run(SimConfig(graph=g, policy=PolicyKind.LRV_V, starts=(0,),
                          horizon=80,
                          tiebreak=TieBreakSpec.scripted(res.witness)))
    assert max(vertex_peak_refresh(trace)) == res.peak


def test_worst_at_least_lowest_id():
    g = four_cycle_chain(2)
    res = exhaustive_tiebreak_search(g, PolicyKind.LRV_V, 0, 200,
                                     node_budget=5_000_000)
    default = run(SimConfig(graph=g, policy=PolicyKind.LRV_V, starts=(0,),
                            horizon=200))
    assert res.peak >= max(vertex_peak_refresh(default))


def test_budget_exhaustion_is_lower_bound():
    g = four_cycle_chain(3)
    small = exhaustive_tiebreak_search(g, PolicyKind.LRV_V, 0, 120,
                                       node_budget=500)
    assert not small.complete
    full = exhaustive_tiebreak_search(g, PolicyKind.LRV_V, 0, 120)
    assert full.complete
    assert small.peak <= full.peak


def test_search_input_validation():
    with pytest.raises(ValueError, match="out of range"):
        exhaustive_tiebreak_search(cycle(4), PolicyKind.LRV_V, 9, 10)


def test_hamiltonian_cycle():
    assert hamiltonian_cycle(cycle(6)) == 6
    assert hamiltonian_cycle(path_dual(5)) is None
    assert hamiltonian_cycle(four_cycle_chain(2)) is None
    # grid duals have degree-1 corner triangles, so no Hamiltonian cycle
    assert hamiltonian_cycle(grid_triangulation(2, 2).dual) is None
    with pytest.raises(ValueError, match="exceeds"):
        hamiltonian_cycle(grid_triangulation(5, 5).dual)


def test_reference_matches_engine_spot_check():
    cfg = SimConfig(graph=four_cycle_chain(3), policy=PolicyKind.LFV_E,
                    starts=(0, 7), horizon=150,
                    tiebreak=TieBreakSpec.seeded_random(5),
                    arrivals=((10, 3),))
    trace = run(cfg)
    ref = reference_run(cfg)
    assert trace.events == ref.events
    assert trace.marks == ref.marks
    assert tuple(s.visit_count
                 for s in trace.vertex_states) == ref.vertex_visit_counts
    assert tuple(s.traversal_count
                 for s in trace.edge_states) == ref.edge_traversal_counts
