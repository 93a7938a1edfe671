"""Property-based invariants over randomized graphs and configurations."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from patrolsim.engine import SimConfig, run
from patrolsim.graph import (EdgeState, Graph, VertexState, dumps_graph,
                             make_local_view, parse_graph)
from patrolsim.policies import PolicyKind, TieBreakSpec, tied_candidates

ALL_POLICIES = tuple(PolicyKind)


def random_connected_graph(seed):
    rng = random.Random(seed)
    n = rng.randrange(2, 13)
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for _ in range(rng.randrange(0, n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


@given(st.integers(0, 10**9))
@settings(max_examples=60, deadline=None)
def test_degree_sum_and_roundtrip(seed):
    g = random_connected_graph(seed)
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
    assert parse_graph(dumps_graph(g)) == g


@given(st.integers(0, 10**9))
@settings(max_examples=60, deadline=None)
def test_adjacency_symmetry(seed):
    g = random_connected_graph(seed)
    for u in range(g.n):
        for v, eid in g.neighbors(u):
            lo, hi = min(u, v), max(u, v)
            assert g.edges[eid] == (lo, hi)
            assert (u, eid) in g.neighbors(v)


@given(st.integers(0, 10**9), st.integers(0, 4), st.integers(1, 40))
@settings(max_examples=40, deadline=None)
def test_run_deterministic_and_visit_conserving(seed, pol_idx, horizon):
    g = random_connected_graph(seed)
    rng = random.Random(seed ^ 0xABCD)
    starts = tuple(rng.randrange(g.n) for _ in range(rng.randrange(1, 3)))
    cfg = SimConfig(graph=g, policy=ALL_POLICIES[pol_idx], starts=starts,
                    horizon=horizon,
                    tiebreak=TieBreakSpec.seeded_random(seed % 97))
    a, b = run(cfg), run(cfg)
    assert a.events == b.events and a.marks == b.marks
    total = sum(s.visit_count for s in a.vertex_states)
    assert total == len(a.events) + len(a.marks)
    assert len(a.events) == horizon * len(starts)
    # every move follows an actual edge
    for _, _, u, eid, v in a.events:
        assert g.edges[eid] == (min(u, v), max(u, v))


def _views_with_histories(seed, shift=0, repeat=1):
    """Two LocalViews over the same random graph whose visit histories
    differ only by a time shift (for LRV) or a count multiplier (for LFV)."""
    g = random_connected_graph(seed)
    rng = random.Random(seed ^ 0x55AA)
    base_v = [VertexState() for _ in range(g.n)]
    base_e = [EdgeState() for _ in range(g.m)]
    mod_v = [VertexState() for _ in range(g.n)]
    mod_e = [EdgeState() for _ in range(g.m)]
    t = 1
    for v in range(g.n):
        if rng.random() < 0.7:
            base_v[v].mark(t)
            for r in range(repeat):
                mod_v[v].mark(t + shift + r)
            t += 1
    for e in range(g.m):
        if rng.random() < 0.7:
            base_e[e].mark(t)
            for r in range(repeat):
                mod_e[e].mark(t + shift + r)
            t += 1
    at = rng.randrange(g.n)
    return (make_local_view(g, base_v, base_e, at, t + shift + repeat),
            make_local_view(g, mod_v, mod_e, at, t + shift + repeat))


@given(st.integers(0, 10**9), st.integers(1, 50))
@settings(max_examples=60, deadline=None)
def test_lrv_translation_invariance(seed, shift):
    base, shifted = _views_with_histories(seed, shift=shift)
    for pol in (PolicyKind.LRV_V, PolicyKind.LRV_E):
        assert tied_candidates(pol, base) == tied_candidates(pol, shifted)


@given(st.integers(0, 10**9), st.integers(2, 5))
@settings(max_examples=60, deadline=None)
def test_lfv_scaling_invariance(seed, factor):
    base, scaled = _views_with_histories(seed, repeat=factor)
    for pol in (PolicyKind.LFV_V, PolicyKind.LFV_E):
        assert tied_candidates(pol, base) == tied_candidates(pol, scaled)


@given(st.integers(0, 10**9))
@settings(max_examples=60, deadline=None)
def test_decide_pure_and_repeatable(seed):
    base, _ = _views_with_histories(seed)
    for pol in ALL_POLICIES:
        first = tied_candidates(pol, base)
        assert tied_candidates(pol, base) == first
