"""Exact k-cop pursuit solving on graphs.

The solver decides whether k cops capture the robber under the classical
rules: cops pick a starting multiset of vertices, the robber then picks a
vertex, and play alternates with the cops moving first.  Each cop may cross
one edge or stay; all cops move in one joint half-move; the robber likewise;
capture is vertex coincidence after any half-move.  Backward induction over
the full game digraph yields capture-time labels from which both the cop
strategy and the robber escape strategy are read off.

The hot fixpoint loop lives in a kernel module with two interchangeable
lanes: a compiled Cython extension and a pure-Python fallback, selected at
import (set COPSROBBERS_PURE=1 to force the fallback).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from math import inf
from typing import Sequence

import numpy as np

from ._states import rank_multiset, state_space_size, unrank_multiset
from .graph import Graph, components, distances_from, girth, is_connected
from .rng import make_rng

DEFAULT_STATE_LIMIT = 50_000_000

COPS = "cops"
ROBBER = "robber"


class StateLimitError(RuntimeError):
    """The solve would exceed the configured state-space limit."""

    def __init__(self, estimate: int, limit: int):
        super().__init__(
            f"state space estimate {estimate} exceeds limit {limit}"
        )
        self.estimate = estimate
        self.limit = limit


class StrategyError(RuntimeError):
    """A strategy table was queried outside its domain."""


def _load_default_kernel():
    if os.environ.get("COPSROBBERS_PURE"):
        from . import _fixpoint_py as kern

        return kern
    try:
        from . import _fixpoint as kern  # type: ignore[attr-defined]
    except ImportError:
        from . import _fixpoint_py as kern
    return kern


_DEFAULT_KERNEL = _load_default_kernel()


def kernel_name() -> str:
    """Which fixpoint lane is active: "cython" or "python"."""
    return _DEFAULT_KERNEL.KERNEL_NAME


def _kernel_module(kernel: str | None):
    if kernel is None:
        return _DEFAULT_KERNEL
    if kernel == "python":
        from . import _fixpoint_py as kern

        return kern
    if kernel == "cython":
        from . import _fixpoint as kern  # type: ignore[attr-defined]

        return kern
    raise ValueError(f"unknown kernel {kernel!r}")


@dataclass(frozen=True)
class GameState:
    """One node of the game digraph.

    The cop tuple is kept sorted (cops are interchangeable, so states are
    canonical up to permutation); cops may share a vertex.
    """

    cops: tuple[int, ...]
    robber: int
    to_move: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "cops", tuple(sorted(self.cops)))
        if self.to_move not in (COPS, ROBBER):
            raise ValueError(f"to_move must be 'cops' or 'robber', got {self.to_move!r}")


def _closed_neighborhoods(g: Graph) -> list[tuple[int, ...]]:
    return [tuple(sorted((v, *g.adjacency[v]))) for v in range(g.n)]


def _joint_moves(g: Graph, cops: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All distinct sorted cop tuples reachable in one joint half-move."""
    closed = [(c, *g.adjacency[c]) for c in cops]
    return sorted({tuple(sorted(combo)) for combo in itertools.product(*closed)})


@dataclass
class SolveResult:
    """Outcome of solving one (graph, k) instance.

    capture_time is exposed as a method over GameState; levels are stored
    densely (int32, -1 = robber wins) because big solves have millions of
    states.  capture_time_max is the optimal game length: the best worst
    case over winning initial placements, in cop moves.
    """

    graph: Graph
    k: int
    cop_win: bool
    state_count: int
    winning_initial_placement: tuple[int, ...] | None
    capture_time_max: int | None
    _levels: np.ndarray = field(repr=False)

    def _level(self, cops: tuple[int, ...], robber: int, side: int) -> int:
        if len(cops) != self.k:
            raise ValueError(f"expected {self.k} cops, got {len(cops)}")
        n = self.graph.n
        if not 0 <= robber < n or any(not 0 <= c < n for c in cops):
            raise ValueError("vertex out of range")
        sid = (rank_multiset(tuple(sorted(cops))) * n + robber) * 2 + side
        return int(self._levels[sid])

    def capture_time(self, state: GameState) -> int | float:
        """Cop moves needed from this state under optimal play, or inf."""
        side = 0 if state.to_move == COPS else 1
        level = self._level(state.cops, state.robber, side)
        return inf if level < 0 else level

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "cop_win": self.cop_win,
            "capture_time_max": self.capture_time_max,
            "initial_placement": (
                list(self.winning_initial_placement)
                if self.winning_initial_placement is not None
                else None
            ),
            "state_count": self.state_count,
        }


def solve(
    g: Graph,
    k: int,
    state_limit: int = DEFAULT_STATE_LIMIT,
    kernel: str | None = None,
) -> SolveResult:
    """Decide whether k cops win on a connected graph, with full labels."""
    if k < 1:
        raise ValueError(f"cop count must be >= 1, got {k}")
    if not is_connected(g):
        raise ValueError("graph is disconnected; solve requires a connected graph"
                         " (see cop_number for the component-sum semantics)")
    estimate = state_space_size(g.n, k)
    if estimate > state_limit:
        raise StateLimitError(estimate, state_limit)

    kern = _kernel_module(kernel)
    levels = kern.solve_levels(g.n, k, _closed_neighborhoods(g))

    n = g.n
    cop_side = levels.reshape(-1, n, 2)[:, :, 0]
    finite = cop_side >= 0
    winning_rows = finite.all(axis=1)
    cop_win = bool(winning_rows.any())
    placement = None
    capture_time_max = None
    if cop_win:
        worst = cop_side.max(axis=1)
        best = int(worst[winning_rows].min())
        candidates = np.flatnonzero(winning_rows & (worst == best))
        placement = min(unrank_multiset(int(r), k) for r in candidates)
        capture_time_max = best
    return SolveResult(
        graph=g,
        k=k,
        cop_win=cop_win,
        state_count=int(levels.shape[0]),
        winning_initial_placement=placement,
        capture_time_max=capture_time_max,
        _levels=levels,
    )


def cop_number(g: Graph, state_limit: int = DEFAULT_STATE_LIMIT) -> int:
    """Least k such that k cops win, summed over connected components.

    The robber commits to one component but the cops must pre-place, so the
    disconnected value is the sum of per-component cop numbers.  A single
    vertex needs one cop (capture requires a cop on the robber's vertex).
    """
    total = 0
    for comp, _ in components(g):
        total += _connected_cop_number(comp, state_limit)
    return total


def _connected_cop_number(g: Graph, state_limit: int) -> int:
    for k in range(1, g.n + 1):
        if solve(g, k, state_limit=state_limit).cop_win:
            return k
    raise AssertionError("n cops always win on a connected graph")


def is_copwin_dismantlable(g: Graph) -> bool:
    """Corner-removal characterization of one-cop-win graphs.

    Repeatedly delete a dominated vertex (closed neighborhood contained in
    another vertex's closed neighborhood); true iff this empties the graph.
    Independent of the fixpoint solver, and used to cross-validate it.
    """
    if not is_connected(g):
        raise ValueError("dismantlability check requires a connected graph")
    alive: set[int] = set(range(g.n))
    closed = {v: set(g.adjacency[v]) | {v} for v in range(g.n)}
    removed = True
    while len(alive) > 1 and removed:
        removed = False
        for v in sorted(alive):
            cv = closed[v] & alive
            for u in sorted(alive):
                if u != v and cv <= (closed[u] & alive):
                    alive.discard(v)
                    removed = True
                    break
            if removed:
                break
    return len(alive) == 1


@dataclass
class StrategyTable:
    """Positional strategy read off a solved game.

    For the cop side (requires cop_win) the move from any winning
    cops-to-move state strictly decreases the capture time.  For the robber
    side (requires not cop_win) the move from any robber-to-move state
    outside the cops' winning region stays outside it forever.
    """

    side: str
    result: SolveResult

    def move(self, state: GameState):
        if state.to_move != self.side:
            raise StrategyError(
                f"{self.side} strategy queried on a {state.to_move}-to-move state"
            )
        if self.side == COPS:
            return self._cop_move(state)
        return self._robber_move(state)

    __getitem__ = move

    def _cop_move(self, state: GameState) -> tuple[int, ...]:
        res = self.result
        own = res._level(state.cops, state.robber, 0)
        if own < 0:
            raise StrategyError("cop strategy queried on a robber-win state")
        if own == 0:
            return state.cops  # already capturing; nothing to do
        best_level = None
        best_move = None
        for nxt in _joint_moves(res.graph, state.cops):
            lvl = res._level(nxt, state.robber, 1)
            if lvl < 0:
                continue
            if best_level is None or lvl < best_level or (
                lvl == best_level and nxt < best_move
            ):
                best_level, best_move = lvl, nxt
        if best_level != own - 1:
            raise StrategyError("inconsistent capture-time labels (extraction bug)")
        return best_move

    def _robber_move(self, state: GameState) -> int:
        res = self.result
        g = res.graph
        own = res._level(state.cops, state.robber, 1)
        if own >= 0:
            raise StrategyError("robber strategy queried inside the cops' winning region")
        safe = [
            r2
            for r2 in (state.robber, *g.adjacency[state.robber])
            if res._level(state.cops, r2, 0) < 0
        ]
        if not safe:
            raise StrategyError("inconsistent labels: losing state with no safe reply")
        return max(safe, key=lambda r2: (_min_cop_distance(g, state.cops, r2), -r2))


def _min_cop_distance(g: Graph, cops: Sequence[int], v: int) -> int | float:
    dist = distances_from(g, v)
    return min(dist[c] for c in cops)


def extract_strategy(result: SolveResult, side: str) -> StrategyTable:
    """Strategy table for one side; the side must have won the solve."""
    if side == COPS:
        if not result.cop_win:
            raise StrategyError("cop strategy requested but the robber wins")
    elif side == ROBBER:
        if result.cop_win:
            raise StrategyError("robber strategy requested but the cops win")
    else:
        raise ValueError(f"side must be 'cops' or 'robber', got {side!r}")
    return StrategyTable(side=side, result=result)


def girth5_escape_move(
    g: Graph, cops: Sequence[int], robber: int
) -> int | None:
    """An unguarded neighbor of the robber, or None if all are guarded.

    A cop guards a vertex u when it stands on u or on a neighbor of u.  At
    girth >= 5 each cop guards at most one neighbor of the robber's vertex,
    so with fewer cops than the minimum degree an unguarded neighbor always
    exists and moving there is safe.
    """
    if girth(g) < 5:
        raise ValueError("escape rule requires girth >= 5")
    if not 0 <= robber < g.n:
        raise ValueError(f"robber vertex {robber} out of range")
    for u in g.adjacency[robber]:
        if not any(c == u or g.has_edge(c, u) for c in cops):
            return u
    return None


# ---------------------------------------------------------------------------
# Play simulation
# ---------------------------------------------------------------------------


@dataclass
class Trace:
    """Alternating move record of one simulated play."""

    entries: list[dict]
    outcome: str  # "captured" | "survived"
    capture_step: int | None
    rounds: int

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "capture_step": self.capture_step,
            "rounds": self.rounds,
            "trace": self.entries,
        }


class RandomCops:
    """Cops placing and moving uniformly at random."""

    def __init__(self, k: int):
        self.k = k

    def place(self, g: Graph, rng) -> tuple[int, ...]:
        return tuple(sorted(int(v) for v in rng.integers(0, g.n, size=self.k)))

    def move(self, g: Graph, cops, robber, rng) -> tuple[int, ...]:
        out = []
        for c in cops:
            options = (c, *g.adjacency[c])
            out.append(options[int(rng.integers(0, len(options)))])
        return tuple(sorted(out))


class StrategyCops:
    """Cops following an extracted optimal strategy."""

    def __init__(self, result: SolveResult):
        self.table = extract_strategy(result, COPS)
        self.result = result
        self.k = result.k

    def place(self, g: Graph, rng) -> tuple[int, ...]:
        return self.result.winning_initial_placement

    def move(self, g: Graph, cops, robber, rng) -> tuple[int, ...]:
        return self.table.move(GameState(cops, robber, COPS))


class RandomRobber:
    """Robber placing and moving uniformly at random."""

    def place(self, g: Graph, cops, rng) -> int:
        free = [v for v in range(g.n) if v not in cops]
        pool = free or list(range(g.n))
        return pool[int(rng.integers(0, len(pool)))]

    def move(self, g: Graph, cops, robber, rng) -> int:
        options = (robber, *g.adjacency[robber])
        return options[int(rng.integers(0, len(options)))]


class StrategyRobber:
    """Robber following an extracted escape strategy (robber-win games)."""

    def __init__(self, result: SolveResult):
        self.table = extract_strategy(result, ROBBER)
        self.result = result

    def place(self, g: Graph, cops, rng) -> int:
        res = self.result
        safe = [r for r in range(g.n) if res._level(cops, r, 0) < 0]
        if not safe:
            raise StrategyError("no safe placement exists against this cop placement")
        return max(safe, key=lambda r: (_min_cop_distance(g, cops, r), -r))

    def move(self, g: Graph, cops, robber, rng) -> int:
        return self.table.move(GameState(cops, robber, ROBBER))


class MaxDelayRobber:
    """Robber maximizing capture time in a game the cops win.

    Against the extracted cop strategy this realizes the optimal-vs-optimal
    game length exactly.
    """

    def __init__(self, result: SolveResult):
        self.result = result

    def _delay(self, cops, r) -> int | float:
        level = self.result._level(cops, r, 0)
        return inf if level < 0 else level

    def place(self, g: Graph, cops, rng) -> int:
        return max(range(g.n), key=lambda r: (self._delay(cops, r), -r))

    def move(self, g: Graph, cops, robber, rng) -> int:
        options = (robber, *g.adjacency[robber])
        return max(options, key=lambda r2: (self._delay(cops, r2), -r2))


class EscapeFailedError(RuntimeError):
    """girth5_escape_move found every neighbor guarded."""


class Girth5EscapeRobber:
    """Robber playing the girth-5 escape rule: always step to an unguarded
    neighbor."""

    def place(self, g: Graph, cops, rng) -> int:
        safe = [v for v in range(g.n) if _min_cop_distance(g, cops, v) >= 2]
        if not safe:
            raise EscapeFailedError("no starting vertex at distance >= 2 from all cops")
        return safe[0]

    def move(self, g: Graph, cops, robber, rng) -> int:
        target = girth5_escape_move(g, cops, robber)
        if target is None:
            raise EscapeFailedError(
                f"every neighbor of {robber} is guarded by cops {cops}"
            )
        return target


def _is_legal_joint_move(g: Graph, old: tuple[int, ...], new: tuple[int, ...]) -> bool:
    """Does some cop-to-cop matching move each cop at most one edge?"""
    if len(old) != len(new):
        return False

    remaining = list(new)

    def assign(i: int) -> bool:
        if i == len(old):
            return True
        c = old[i]
        for j, target in enumerate(remaining):
            if target is None:
                continue
            if target == c or g.has_edge(c, target):
                remaining[j] = None
                if assign(i + 1):
                    return True
                remaining[j] = target
        return False

    return assign(0)


def simulate_play(
    g: Graph,
    cops_player,
    robber_player,
    max_rounds: int = 1000,
    seed: int = 0,
) -> Trace:
    """Play out one game: placement, then alternating joint moves.

    Cops place first, the robber places second, cops move first.  Capture is
    checked after every half-move.  capture_step counts cop half-moves, so
    it is directly comparable with capture-time labels.
    """
    rng = make_rng(seed)
    cops = tuple(sorted(cops_player.place(g, rng)))
    robber = robber_player.place(g, cops, rng)
    entries = [
        {"step": 0, "mover": "cops", "positions": list(cops)},
        {"step": 0, "mover": "robber", "positions": robber},
    ]
    if robber in cops:
        return Trace(entries, "captured", 0, 0)

    for step in range(1, max_rounds + 1):
        new_cops = tuple(sorted(cops_player.move(g, cops, robber, rng)))
        if not _is_legal_joint_move(g, cops, new_cops):
            raise ValueError(f"illegal joint cop move {cops} -> {new_cops}")
        cops = new_cops
        entries.append({"step": step, "mover": "cops", "positions": list(cops)})
        if robber in cops:
            return Trace(entries, "captured", step, step)

        new_robber = robber_player.move(g, cops, robber, rng)
        if new_robber != robber and not g.has_edge(robber, new_robber):
            raise ValueError(f"illegal robber move {robber} -> {new_robber}")
        robber = new_robber
        entries.append({"step": step, "mover": "robber", "positions": robber})
        if robber in cops:
            return Trace(entries, "captured", step, step)

    return Trace(entries, "survived", None, max_rounds)
