"""Synchronous-round multi-robot simulation producing a deterministic trace."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .graph import EdgeState, Graph, VertexState, make_local_view
from .policies import PolicyKind, TieBreakSpec, decide


@dataclass
class Robot:
    id: int
    position: int


@dataclass(frozen=True)
class SimConfig:
    graph: Graph
    policy: PolicyKind
    starts: tuple[int, ...]
    horizon: int
    tiebreak: TieBreakSpec = TieBreakSpec.lowest_id()
    seed: int = 0
    arrivals: tuple[tuple[int, int], ...] = ()  # (round, start vertex)

    def __post_init__(self):
        if self.horizon < 0:
            raise ValueError("horizon must be >= 0")
        if not self.starts and not self.arrivals:
            raise ValueError("at least one robot required")
        for v in self.starts:
            if not (0 <= v < self.graph.n):
                raise ValueError(f"start vertex {v} out of range")
        for r, v in self.arrivals:
            if not (0 <= v < self.graph.n):
                raise ValueError(f"arrival vertex {v} out of range")
            if not (0 <= r <= self.horizon):
                raise ValueError(f"arrival round {r} outside 0..horizon")


# Trace event: (round, robot, from_vertex, edge, to_vertex)
Event = tuple[int, int, int, int, int]
# Visit marking that is not a move: (round, robot, vertex)
Mark = tuple[int, int, int]


@dataclass
class Trace:
    config: SimConfig
    events: tuple[Event, ...]
    marks: tuple[Mark, ...]
    vertex_states: tuple[VertexState, ...]
    edge_states: tuple[EdgeState, ...]

    @property
    def graph(self) -> Graph:
        return self.config.graph

    @property
    def horizon(self) -> int:
        return self.config.horizon

    def events_csv(self) -> str:
        lines = ["round,robot,from,edge,to"]
        lines.extend(f"{r},{b},{u},{e},{v}" for r, b, u, e, v in self.events)
        return "\n".join(lines) + "\n"

    def summary_json(self) -> str:
        payload = {
            "policy": self.config.policy.value,
            "tiebreak": self.config.tiebreak.kind,
            "seed": self.config.seed,
            "horizon": self.horizon,
            "n": self.graph.n,
            "m": self.graph.m,
            "robots": len(self.config.starts) + len(self.config.arrivals),
            "events": len(self.events),
            "vertex_visit_counts": [s.visit_count for s in self.vertex_states],
            "edge_traversal_counts": [s.traversal_count
                                      for s in self.edge_states],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


class SimState:
    """Mutable state of one run.  Owned by the engine; policies only ever
    see the LocalView slices handed to them."""

    def __init__(self, config: SimConfig):
        self.config = config
        self.graph = config.graph
        self.round = 0
        self.vertex_states = [VertexState() for _ in range(self.graph.n)]
        self.edge_states = [EdgeState() for _ in range(self.graph.m)]
        self.robots: list[Robot] = []
        self.events: list[Event] = []
        self.marks: list[Mark] = []
        self.tiebreak = config.tiebreak.make(default_seed=config.seed)
        self._pending = sorted(
            ((r, i, v) for i, (r, v) in enumerate(config.arrivals)),
            key=lambda t: (t[0], t[1]))

    def _add_robot(self, vertex: int, round_: int) -> None:
        robot = Robot(id=len(self.robots), position=vertex)
        self.robots.append(robot)
        self.vertex_states[vertex].mark(round_)
        self.marks.append((round_, robot.id, vertex))

    def _activate_arrivals(self) -> None:
        while self._pending and self._pending[0][0] <= self.round:
            _, _, vertex = self._pending.pop(0)
            self._add_robot(vertex, self.round)


def init(config: SimConfig) -> SimState:
    """Round 0: place the initial robots and mark their start vertices."""
    state = SimState(config)
    for v in config.starts:
        state._add_robot(v, 0)
    state._activate_arrivals()  # arrivals scheduled for round 0
    return state


def step(state: SimState) -> SimState:
    """Advance one synchronous round.

    Robots act in ascending id order and read live state, so a later robot
    sees the visits committed by earlier robots in the same round.  Robots
    arriving this round are placed (their start vertex marked) before
    anyone moves, then move like everyone else.
    """
    if state.round >= state.config.horizon:
        raise ValueError("horizon reached")
    state.round += 1
    state._activate_arrivals()
    for robot in state.robots:
        view = make_local_view(state.graph, state.vertex_states,
                               state.edge_states, robot.position, state.round)
        to, via = decide(state.config.policy, view, state.tiebreak)
        state.events.append((state.round, robot.id, robot.position, via, to))
        robot.position = to
        state.vertex_states[to].mark(state.round)
        state.edge_states[via].mark(state.round)
    return state


def run(config: SimConfig) -> Trace:
    state = init(config)
    for _ in range(config.horizon):
        step(state)
    return Trace(config=config,
                 events=tuple(state.events),
                 marks=tuple(state.marks),
                 vertex_states=tuple(state.vertex_states),
                 edge_states=tuple(state.edge_states))
