"""Strategy traces and their replay through the engine.

A trace is the serialisable unit of verification: rule config, fire
origins and one ordered position list per turn (index 0 is the initial
placement).  Replay applies every turn in order, fails fast on the first
illegal one, and reports the containment turn.

The reported containment turn follows the source material's counting:
it is the first turn number at which the fire can no longer spread, i.e.
``1 +`` the index of the earliest contained state.  A strategy whose last
move happens on turn ``n`` and seals the fire is "contained at turn
``n+1``"; the figures' captions ("contained in seven turns" for a
turn-0..6 trace) agree with this convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from . import engine
from .engine import (
    GameState,
    MoveJudgment,
    RuleConfig,
    crew_step,
)
from .lattice import Vertex


@dataclass
class StrategyTrace:
    config: RuleConfig
    fire_origins: tuple[Vertex, ...]
    turns: list[tuple[Vertex, ...]]
    annotations: dict = field(default_factory=dict)

    def __post_init__(self):
        self.fire_origins = tuple(tuple(v) for v in self.fire_origins)
        self.turns = [tuple(tuple(v) for v in row) for row in self.turns]

    def check_crew_counts(self) -> None:
        for t, row in enumerate(self.turns):
            want = crew_step(self.config.crew, t)
            if len(row) != want:
                raise engine.CrewMismatch(
                    f"turn {t}: expected {want} positions, got {len(row)}"
                )


@dataclass
class TurnRecord:
    turn: int
    positions: tuple[Vertex, ...]
    newly_burnt: tuple[Vertex, ...]
    judgment: Optional[MoveJudgment] = None


@dataclass
class ReplayReport:
    trace: StrategyTrace
    legal: bool
    history: list[TurnRecord]
    final_state: Optional[GameState]
    containment_turn: Optional[int]
    failed_turn: Optional[int] = None
    failure: Optional[MoveJudgment] = None
    error: Optional[str] = None

    @property
    def contained(self) -> bool:
        return self.containment_turn is not None

    @property
    def burnt_count(self) -> int:
        return len(self.final_state.burnt) if self.final_state else 0

    @property
    def protected_count(self) -> int:
        return len(self.final_state.protected) if self.final_state else 0

    def states(self) -> Iterator[GameState]:
        """Reconstruct the full state history from the recorded deltas."""
        state = engine.init(
            self.trace.config, self.trace.fire_origins, self.history[0].positions
        )
        yield state
        for rec in self.history[1:]:
            state = engine.apply_turn(state, rec.positions)
            yield state


def replay(trace: StrategyTrace, stop_when_contained: bool = False) -> ReplayReport:
    """Apply every turn in order; fail fast on the first illegal turn.

    Semantically identical to folding engine.apply_turn over the turns,
    but keeps one mutable burnt/protected pair and an incremental spread
    frontier so long traces stay cheap.
    """
    config = trace.config
    topo = config.topology
    try:
        trace.check_crew_counts()
        state0 = engine.init(config, trace.fire_origins, trace.turns[0])
    except engine.EngineError as e:
        return ReplayReport(trace, False, [], None, None, failed_turn=0, error=str(e))

    burnt = dict(state0.burnt)
    protected = dict(state0.protected)
    positions = state0.crew_positions
    pass_left = state0.pass_left
    history = [TurnRecord(0, positions, tuple(burnt))]

    # burnt cells that may still have open neighbours
    active = {
        v
        for v in burnt
        if any(w not in burnt and w not in protected for w in topo.neighbors(v))
    }
    containment_turn = None if active else 1

    def protect_cells(cells, turn):
        sealed_check = set()
        for c in cells:
            if c not in protected:
                protected[c] = turn
            for w in topo.neighbors(c):
                if w in active:
                    sealed_check.add(w)
        for v in sealed_check:
            if not any(
                w not in burnt and w not in protected for w in topo.neighbors(v)
            ):
                active.discard(v)

    def spread(turn):
        new = []
        for v in active:
            for w in topo.neighbors(v):
                if w not in burnt and w not in protected:
                    burnt[w] = turn
                    new.append(w)
        nxt = {
            v
            for v in new
            if any(w not in burnt and w not in protected for w in topo.neighbors(v))
        }
        active.clear()
        active.update(nxt)
        return new

    t = 0
    for t, proposal in enumerate(trace.turns[1:], start=1):
        if containment_turn is not None and stop_when_contained:
            t -= 1
            break
        # crew schedule: additions spawn on the trailing occupied vertex,
        # removals drop trailing indices
        k_next = crew_step(config.crew, t)
        if k_next > len(positions):
            positions = positions + (positions[-1],) * (k_next - len(positions))
        elif k_next < len(positions):
            positions = positions[:k_next]

        newly: list[Vertex] = []
        if not config.move_first:
            newly = spread(t)
        judgment = engine._judge(config, burnt, positions, proposal, pass_left)
        if not judgment.legal:
            return ReplayReport(
                trace, False, history, None, None, failed_turn=t, failure=judgment
            )
        if judgment.uses_pass_through and pass_left is not None:
            pass_left -= 1
        positions = tuple(tuple(v) for v in proposal)
        protect_cells(positions, t)
        if config.move_first:
            newly = spread(t)

        history.append(TurnRecord(t, positions, tuple(newly), judgment))
        if containment_turn is None and not active:
            containment_turn = t + 1

    final = GameState(
        config=config,
        burnt=burnt,
        protected=protected,
        crew_positions=positions,
        turn=t,
        pass_left=pass_left,
    )
    return ReplayReport(trace, True, history, final, containment_turn)
