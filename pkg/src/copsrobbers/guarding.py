"""Single-cop guarding of an isometric path via the shadow strategy.

The shadow of a vertex s is the path vertex at offset min(dist(s, a), L)
from the path's first endpoint a (L = path length in edges).  The guard
walks to a, advances toward b until it stands on the robber's shadow, and
from then on tracks the shadow, which moves at most one path edge per
robber move because hop distances are 1-Lipschitz along edges.  Once the
guard is settled, a robber stepping onto the path is caught by the guard's
next move.

Discrete alternating moves only; the cop moves first each round.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

from .graph import Graph, check_isometric_path, distances_from
from .rng import make_rng


@dataclass
class GuardState:
    """Mutable guard bookkeeping for one play; cheap to clone."""

    graph: Graph
    path: tuple[int, ...]
    dist_a: tuple[int | float, ...]
    index_of: dict[int, int]
    cop_pos: int
    settled: bool = False

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def clone(self) -> "GuardState":
        return replace(self)


def make_guard(g: Graph, path: Sequence[int], cop_start: int) -> GuardState:
    """Validate the path and set up the guard at its starting vertex."""
    if not check_isometric_path(g, path):
        raise ValueError(f"path {list(path)} is not isometric")
    if not 0 <= cop_start < g.n:
        raise ValueError(f"cop start {cop_start} out of range")
    dist_a = tuple(distances_from(g, path[0]))
    if math.isinf(dist_a[cop_start]):
        raise ValueError("cop start cannot reach the path")
    return GuardState(
        graph=g,
        path=tuple(path),
        dist_a=dist_a,
        index_of={v: i for i, v in enumerate(path)},
        cop_pos=cop_start,
    )


def shadow(gs: GuardState, s: int) -> int:
    """Path vertex at offset min(dist(s, a), L) from a."""
    return gs.path[min(gs.dist_a[s], gs.length)]


def shadow_index(gs: GuardState, s: int) -> int:
    return min(gs.dist_a[s], gs.length)


def guard_step(gs: GuardState, robber: int) -> int:
    """Advance the guard one half-move; returns its new position.

    Off the path the guard walks a shortest path to a; on the path it steps
    toward the robber's shadow and latches `settled` on reaching it.  After
    settling the shadow is always within one path edge, so tracking needs
    a single step.
    """
    target = shadow_index(gs, robber)
    idx = gs.index_of.get(gs.cop_pos)
    if idx is None:
        d = gs.dist_a[gs.cop_pos]
        gs.cop_pos = min(
            v for v in gs.graph.adjacency[gs.cop_pos] if gs.dist_a[v] == d - 1
        )
        idx = gs.index_of.get(gs.cop_pos)
        if idx is not None and idx == target:
            gs.settled = True
        return gs.cop_pos
    if idx != target:
        if gs.settled and abs(idx - target) > 1:
            raise AssertionError("shadow jumped more than one edge while settled")
        idx += 1 if idx < target else -1
        gs.cop_pos = gs.path[idx]
    if idx == target:
        gs.settled = True
    return gs.cop_pos


# ---------------------------------------------------------------------------
# Robber policies for guard testing
# ---------------------------------------------------------------------------


class RandomWalkRobber:
    """Uniform legal move, staying allowed."""

    name = "random"

    def place(self, gs: GuardState, rng) -> int:
        pool = [v for v in range(gs.graph.n) if v != gs.cop_pos]
        return pool[int(rng.integers(0, len(pool)))]

    def move(self, gs: GuardState, robber: int, rng) -> int:
        options = (robber, *gs.graph.adjacency[robber])
        return options[int(rng.integers(0, len(options)))]


class GreedyAwayRobber:
    """Maximize distance to the guard, ties to the smallest vertex."""

    name = "greedy-away"

    def place(self, gs: GuardState, rng) -> int:
        dist = distances_from(gs.graph, gs.cop_pos)
        return max(
            (v for v in range(gs.graph.n) if v != gs.cop_pos),
            key=lambda v: (dist[v], -v),
        )

    def move(self, gs: GuardState, robber: int, rng) -> int:
        dist = distances_from(gs.graph, gs.cop_pos)
        options = (robber, *gs.graph.adjacency[robber])
        return max(options, key=lambda v: (dist[v], -v))


class AdversarialRobber:
    """Bounded-horizon search for a safe entry onto the guarded path.

    The guard's replies are deterministic, so the lookahead is a plain DFS
    over robber move sequences simulated on cloned guard states.  Reward
    reaching the path uncaptured, punish capture, break ties by distance
    from the guard.
    """

    name = "adversarial"

    def __init__(self, horizon: int = 4):
        self.horizon = horizon

    def place(self, gs: GuardState, rng) -> int:
        dist = distances_from(gs.graph, gs.cop_pos)
        return max(
            (v for v in range(gs.graph.n) if v != gs.cop_pos),
            key=lambda v: (dist[v], -v),
        )

    def move(self, gs: GuardState, robber: int, rng) -> int:
        _, best = self._search(gs, robber, self.horizon)
        return best

    def _search(self, gs: GuardState, robber: int, depth: int) -> tuple[float, int]:
        best_score = -math.inf
        best_move = robber
        for m in (robber, *gs.graph.adjacency[robber]):
            if m == gs.cop_pos:
                score = -1000.0  # walking into the guard
            else:
                sim = gs.clone()
                entered = m in sim.index_of
                was_settled = sim.settled
                cop = guard_step(sim, m)
                if cop == m:
                    score = -1000.0 + (self.horizon - depth)
                elif entered and was_settled:
                    score = 1000.0 - (self.horizon - depth)
                elif depth <= 1:
                    score = float(distances_from(sim.graph, cop)[m])
                else:
                    score = self._search(sim, m, depth - 1)[0] * 0.9
            if score > best_score:
                best_score, best_move = score, m
        return best_score, best_move


POLICIES = {
    "random": RandomWalkRobber,
    "greedy-away": GreedyAwayRobber,
    "adversarial": AdversarialRobber,
}


# ---------------------------------------------------------------------------
# Verification drivers
# ---------------------------------------------------------------------------


@dataclass
class GuardVerdict:
    """Aggregated result of guard trials on one (graph, path) pair."""

    isometric: bool
    trials: int
    violations: int
    captures: int
    path_entries: int
    settle_steps: int | None
    settle_bound: int
    settle_within_bound: bool
    policy: str

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.settle_within_bound

    def to_json(self) -> dict:
        return {
            "isometric": self.isometric,
            "settle_steps": self.settle_steps,
            "settle_bound": self.settle_bound,
            "settle_within_bound": self.settle_within_bound,
            "trials": self.trials,
            "violations": self.violations,
            "captures": self.captures,
            "path_entries": self.path_entries,
            "policy": self.policy,
        }


def verify_guard(
    g: Graph,
    path: Sequence[int],
    policy,
    trials: int = 1000,
    seed: int = 0,
    cop_start: int = 0,
    rounds: int | None = None,
    trace_dir: str | Path | None = None,
) -> GuardVerdict:
    """Run seeded robber trials against the shadow guard.

    A violation is a robber standing on the path at the guard's turn, after
    the guard has settled, that the guard's move fails to capture.  Also
    checks that settling takes at most dist(cop_start, a) + L rounds.
    With trace_dir set, each trial is dumped as trial_NNNN.json in the
    same trace format the game simulator emits.
    """
    proto = make_guard(g, path, cop_start)
    settle_bound = int(proto.dist_a[cop_start]) + proto.length
    if rounds is None:
        rounds = settle_bound + max(20, 2 * g.n)
    rng = make_rng(seed)
    if trace_dir is not None:
        trace_dir = Path(trace_dir)
        trace_dir.mkdir(parents=True, exist_ok=True)

    violations = captures = entries = 0
    settle_max: int | None = None
    settle_ok = True
    for trial in range(trials):
        gs = proto.clone()
        robber = policy.place(gs, rng)
        log = None
        if trace_dir is not None:
            log = [
                {"step": 0, "mover": "cops", "positions": [gs.cop_pos]},
                {"step": 0, "mover": "robber", "positions": robber},
            ]
        capture_step: int | None = None
        if robber == gs.cop_pos:
            captures += 1
            capture_step = 0
        settled_at: int | None = None
        rnd = 0
        while capture_step is None and rnd < rounds:
            rnd += 1
            was_settled = gs.settled
            on_path = robber in gs.index_of
            cop = guard_step(gs, robber)
            if log is not None:
                log.append({"step": rnd, "mover": "cops", "positions": [cop]})
            if gs.settled and settled_at is None:
                settled_at = rnd
            if on_path and was_settled:
                entries += 1
                if cop != robber:
                    violations += 1
            if cop == robber:
                captures += 1
                capture_step = rnd
                break
            robber = policy.move(gs, robber, rng)
            if log is not None:
                log.append({"step": rnd, "mover": "robber", "positions": robber})
            if robber == cop:
                captures += 1
                capture_step = rnd
                break
        if settled_at is not None:
            if settle_max is None or settled_at > settle_max:
                settle_max = settled_at
            if settled_at > settle_bound:
                settle_ok = False
        if log is not None:
            blob = {
                "outcome": "captured" if capture_step is not None else "survived",
                "capture_step": capture_step,
                "rounds": rnd,
                "trace": log,
            }
            (trace_dir / f"trial_{trial:04d}.json").write_text(
                json.dumps(blob, indent=2) + "\n", encoding="utf-8"
            )
    return GuardVerdict(
        isometric=True,
        trials=trials,
        violations=violations,
        captures=captures,
        path_entries=entries,
        settle_steps=settle_max,
        settle_bound=settle_bound,
        settle_within_bound=settle_ok,
        policy=policy.name,
    )


def exhaustive_guard_check(
    g: Graph,
    path: Sequence[int],
    cop_start: int = 0,
    max_robber_moves: int = 10,
) -> int:
    """Count capture-on-entry violations over ALL short robber trajectories.

    The guard is deterministic, so enumerating every robber trajectory of
    at most max_robber_moves moves reduces to a BFS over (guard position,
    settled flag, robber position) product states; each state's guard reply
    is checked once at its first (shallowest) occurrence.
    """
    proto = make_guard(g, path, cop_start)
    violations = 0
    start_states = [
        (proto.cop_pos, False, r) for r in range(g.n) if r != proto.cop_pos
    ]
    seen = set(start_states)
    frontier = start_states
    depth = 0
    while frontier and depth <= max_robber_moves:
        next_frontier = []
        for cop_pos, settled, robber in frontier:
            gs = proto.clone()
            gs.cop_pos = cop_pos
            gs.settled = settled
            was_settled = gs.settled
            on_path = robber in gs.index_of
            cop = guard_step(gs, robber)
            if on_path and was_settled and cop != robber:
                violations += 1
            if cop == robber:
                continue
            for m in (robber, *g.adjacency[robber]):
                if m == cop:
                    continue  # robber will not walk into the guard
                state = (gs.cop_pos, gs.settled, m)
                if state not in seen:
                    seen.add(state)
                    next_frontier.append(state)
        frontier = next_frontier
        depth += 1
    return violations
