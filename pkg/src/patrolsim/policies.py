"""Local patrolling policies: pure decision functions over a LocalView."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .graph import LocalView


class PolicyKind(Enum):
    LRV_V = "lrv-v"   # least recently visited neighbor vertex
    LRV_E = "lrv-e"   # least recently traversed incident edge
    LFV_V = "lfv-v"   # least frequently visited neighbor vertex
    LFV_E = "lfv-e"   # least frequently traversed incident edge
    RANDOM = "random"

    @staticmethod
    def parse(name: str) -> "PolicyKind":
        key = name.strip().lower().replace("_", "-")
        for kind in PolicyKind:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown policy {name!r}")


class IsolatedVertexError(ValueError):
    """A robot has nowhere to move."""


class ScriptExhaustedError(ValueError):
    """A SCRIPTED tie-break ran out of choice indices."""


class ScriptChoiceError(ValueError):
    """A SCRIPTED choice index fell outside the tied set."""


@dataclass(frozen=True)
class TieBreakSpec:
    """Declarative tie-break rule; ``make()`` yields a fresh stateful
    resolver so that repeated runs of the same config are identical."""

    kind: str  # lowest_id | seeded_random | scripted
    seed: int | None = None
    script: tuple[int, ...] | None = None

    @staticmethod
    def lowest_id() -> "TieBreakSpec":
        return TieBreakSpec("lowest_id")

    @staticmethod
    def seeded_random(seed: int | None = None) -> "TieBreakSpec":
        return TieBreakSpec("seeded_random", seed=seed)

    @staticmethod
    def scripted(indices) -> "TieBreakSpec":
        return TieBreakSpec("scripted", script=tuple(int(i) for i in indices))

    def make(self, default_seed: int = 0):
        if self.kind == "lowest_id":
            return LowestId()
        if self.kind == "seeded_random":
            return SeededRandom(self.seed if self.seed is not None
                                else default_seed)
        if self.kind == "scripted":
            return Scripted(self.script or ())
        raise ValueError(f"unknown tie-break kind {self.kind!r}")


class LowestId:
    def choose(self, n_tied: int) -> int:
        return 0


class SeededRandom:
    def __init__(self, seed: int):
        self._rng = random.Random(seed)

    def choose(self, n_tied: int) -> int:
        return self._rng.randrange(n_tied)


class Scripted:
    def __init__(self, indices):
        self._indices = list(indices)
        self._cursor = 0

    def choose(self, n_tied: int) -> int:
        if self._cursor >= len(self._indices):
            raise ScriptExhaustedError(
                f"script exhausted after {self._cursor} choices")
        idx = self._indices[self._cursor]
        self._cursor += 1
        if not (0 <= idx < n_tied):
            raise ScriptChoiceError(
                f"choice {idx} out of range for tied set of {n_tied}")
        return idx


def tied_candidates(policy: PolicyKind, view: LocalView) -> list[tuple[int, int]]:
    """The (vertex, edge) pairs minimizing the policy's criterion.

    Vertex policies order ties by ascending neighbor id, edge policies by
    ascending edge id.  An element never visited/traversed precedes every
    visited one for the LRV policies; for LFV a zero count is simply the
    minimum.
    """
    if not view.neighbors:
        raise IsolatedVertexError(f"vertex {view.current} has no neighbors")

    if policy is PolicyKind.RANDOM:
        return [(w, eid) for w, _, eid, _ in view.neighbors]

    if policy is PolicyKind.LRV_V:
        def key(entry):  # absent last_visit precedes all rounds
            return -1 if entry[1].last_visit is None else entry[1].last_visit
    elif policy is PolicyKind.LFV_V:
        def key(entry):
            return entry[1].visit_count
    elif policy is PolicyKind.LRV_E:
        def key(entry):
            return -1 if entry[3].last_traversal is None else entry[3].last_traversal
    elif policy is PolicyKind.LFV_E:
        def key(entry):
            return entry[3].traversal_count
    else:  # pragma: no cover
        raise ValueError(f"unhandled policy {policy}")

    best = min(key(e) for e in view.neighbors)
    tied = [(w, eid) for (w, _, eid, _), k
            in ((e, key(e)) for e in view.neighbors) if k == best]
    if policy in (PolicyKind.LRV_E, PolicyKind.LFV_E):
        tied.sort(key=lambda we: we[1])
    return tied


def decide(policy: PolicyKind, view: LocalView, tiebreak) -> tuple[int, int]:
    """Pick the next vertex and the edge to traverse, reading only the view."""
    tied = tied_candidates(policy, view)
    idx = tiebreak.choose(len(tied)) if len(tied) > 1 else _take_first(tiebreak)
    return tied[idx]


def _take_first(tiebreak) -> int:
    # singleton candidate sets do not consume script entries or randomness
    return 0
