"""Brute-force verifiers: adversarial tie-break search, Hamiltonian cycle
enumeration, and a naive reference simulator for differential testing."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .engine import SimConfig
from .graph import Graph
from .policies import PolicyKind


@dataclass(frozen=True)
class WorstCaseResult:
    policy: PolicyKind
    start: int
    horizon: int
    peak: int                      # worst per-vertex peak refresh found
    witness: tuple[int, ...]       # SCRIPTED choice indices reproducing it
    complete: bool                 # False: budget hit, peak is a lower bound
    nodes_explored: int


def exhaustive_tiebreak_search(g: Graph, policy: PolicyKind, start: int,
                               horizon: int,
                               node_budget: int = 2_000_000) -> WorstCaseResult:
    """Depth-first enumeration of every SCRIPTED tie choice for one robot.

    Returns the maximum per-vertex peak refresh over all tie-break
    schedules, with the lexicographically smallest witness among maxima
    (choices are only recorded for genuinely tied sets, matching the
    engine's script consumption).  If the node budget is exhausted the
    result is flagged as a lower bound.
    """
    if not (0 <= start < g.n):
        raise ValueError(f"start vertex {start} out of range")
    adj = g.adj
    vlast = [-1] * g.n
    vcount = [0] * g.n
    elast = [-1] * g.m
    ecount = [0] * g.m
    vlast[start] = 0
    vcount[start] = 1

    is_edge_policy = policy in (PolicyKind.LRV_E, PolicyKind.LFV_E)
    choices: list[int] = []
    state = {"nodes": 0, "complete": True,
             "best_peak": -1, "best_witness": ()}

    def tied_at(pos: int) -> list[tuple[int, int]]:
        entries = adj[pos]
        if policy is PolicyKind.RANDOM:
            return list(entries)
        if policy is PolicyKind.LRV_V:
            keys = [vlast[w] for w, _ in entries]
        elif policy is PolicyKind.LFV_V:
            keys = [vcount[w] for w, _ in entries]
        elif policy is PolicyKind.LRV_E:
            keys = [elast[e] for _, e in entries]
        else:
            keys = [ecount[e] for _, e in entries]
        best = min(keys)
        tied = [we for we, k in zip(entries, keys) if k == best]
        if is_edge_policy:
            tied.sort(key=lambda we: we[1])
        return tied

    def dfs(pos: int, t: int, peak: int) -> None:
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            state["complete"] = False
            return
        if t > horizon:
            trailing = max(horizon - (lv if lv >= 0 else 0) for lv in vlast)
            total = max(peak, trailing)
            if total > state["best_peak"]:
                state["best_peak"] = total
                state["best_witness"] = tuple(choices)
            return
        tied = tied_at(pos)
        multi = len(tied) > 1
        for idx, (w, eid) in enumerate(tied):
            gap = t - (vlast[w] if vlast[w] >= 0 else 0)
            saved_v, saved_e = vlast[w], elast[eid]
            vlast[w] = t
            vcount[w] += 1
            elast[eid] = t
            ecount[eid] += 1
            if multi:
                choices.append(idx)
            dfs(w, t + 1, gap if gap > peak else peak)
            if multi:
                choices.pop()
            vlast[w], elast[eid] = saved_v, saved_e
            vcount[w] -= 1
            ecount[eid] -= 1
            if not state["complete"]:
                return

    if g.degree(start) == 0 and horizon > 0:
        raise ValueError(f"start vertex {start} is isolated")
    dfs(start, 1, 0)
    return WorstCaseResult(policy=policy, start=start, horizon=horizon,
                           peak=state["best_peak"],
                           witness=state["best_witness"],
                           complete=state["complete"],
                           nodes_explored=state["nodes"])


HAMILTONIAN_MAX_N = 24


def hamiltonian_cycle(g: Graph, max_n: int = HAMILTONIAN_MAX_N) -> int | None:
    """Exact backtracking search; returns n if a Hamiltonian cycle exists,
    else None.  Instances above ``max_n`` are refused -- use the n/r proxy
    bound instead of the |H(G)|/r baseline for those."""
    n = g.n
    if n > max_n:
        raise ValueError(
            f"n={n} exceeds the exact-search cap {max_n}; "
            "use n as a proxy for the Hamiltonian cycle length")
    if n < 3:
        return None
    if any(g.degree(v) < 2 for v in range(n)):
        return None
    used = [False] * n
    used[0] = True
    start_neighbors = {w for w, _ in g.neighbors(0)}

    def extend(pos: int, depth: int) -> bool:
        if depth == n:
            return pos in start_neighbors
        for w, _ in g.neighbors(pos):
            if not used[w]:
                used[w] = True
                if extend(w, depth + 1):
                    return True
                used[w] = False
        return False

    return n if extend(0, 1) else None


@dataclass(frozen=True)
class ReferenceTrace:
    events: tuple[tuple[int, int, int, int, int], ...]
    marks: tuple[tuple[int, int, int], ...]
    vertex_visit_counts: tuple[int, ...]
    edge_traversal_counts: tuple[int, ...]


def reference_run(config: SimConfig) -> ReferenceTrace:
    """Naive reimplementation of the simulation loop for differential
    testing.  Deliberately shares no code with the engine or the policy
    module: adjacency, state bookkeeping and the decision rules are all
    re-derived here from the edge list."""
    g = config.graph
    edge_ids = {}
    neighbors: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.n)}
    for eid, (u, v) in enumerate(sorted(tuple(sorted(e)) for e in g.edges)):
        edge_ids[(u, v)] = eid
        neighbors[u].append((v, eid))
        neighbors[v].append((u, eid))
    for v in neighbors:
        neighbors[v].sort()

    last_visit: dict[int, int] = {}
    visit_count: dict[int, int] = {v: 0 for v in range(g.n)}
    last_traversal: dict[int, int] = {}
    traversal_count: dict[int, int] = {e: 0 for e in range(len(edge_ids))}

    # tie-break resolution, re-implemented
    tb = config.tiebreak
    rng = random.Random(tb.seed if tb.seed is not None else config.seed)
    script = list(tb.script or ())

    def choose(n_tied: int) -> int:
        if n_tied == 1:
            return 0
        if tb.kind == "lowest_id":
            return 0
        if tb.kind == "seeded_random":
            return rng.randrange(n_tied)
        if not script:
            raise ValueError("script exhausted")
        idx = script.pop(0)
        if not (0 <= idx < n_tied):
            raise ValueError("script choice out of range")
        return idx

    events = []
    marks = []
    positions: list[int] = []

    def place(vertex: int, round_: int) -> None:
        positions.append(vertex)
        last_visit[vertex] = round_
        visit_count[vertex] += 1
        marks.append((round_, len(positions) - 1, vertex))

    for v in config.starts:
        place(v, 0)
    pending = sorted(((r, i, v) for i, (r, v) in enumerate(config.arrivals)),
                     key=lambda t: (t[0], t[1]))
    for r, _, v in [p for p in pending if p[0] == 0]:
        place(v, 0)
    pending = [p for p in pending if p[0] > 0]

    for t in range(1, config.horizon + 1):
        while pending and pending[0][0] == t:
            _, _, v = pending.pop(0)
            place(v, t)
        for rid in range(len(positions)):
            pos = positions[rid]
            nbrs = neighbors[pos]
            if not nbrs:
                raise ValueError(f"robot {rid} stranded at isolated vertex")
            if config.policy is PolicyKind.RANDOM:
                tied = list(nbrs)
            else:
                scored = []
                for w, eid in nbrs:
                    if config.policy is PolicyKind.LRV_V:
                        score = last_visit.get(w, -1)
                    elif config.policy is PolicyKind.LFV_V:
                        score = visit_count[w]
                    elif config.policy is PolicyKind.LRV_E:
                        score = last_traversal.get(eid, -1)
                    else:
                        score = traversal_count[eid]
                    scored.append((score, w, eid))
                lowest = min(s for s, _, _ in scored)
                tied = [(w, eid) for s, w, eid in scored if s == lowest]
                if config.policy in (PolicyKind.LRV_E, PolicyKind.LFV_E):
                    tied = sorted(tied, key=lambda we: we[1])
            w, eid = tied[choose(len(tied))]
            events.append((t, rid, pos, eid, w))
            positions[rid] = w
            last_visit[w] = t
            visit_count[w] += 1
            last_traversal[eid] = t
            traversal_count[eid] += 1

    return ReferenceTrace(
        events=tuple(events),
        marks=tuple(marks),
        vertex_visit_counts=tuple(visit_count[v] for v in range(g.n)),
        edge_traversal_counts=tuple(traversal_count[e]
                                    for e in range(len(edge_ids))))
