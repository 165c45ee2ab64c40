"""Live simulation harness for strategy generators.

Generators emit moves phase by phase while reading the evolving burnt
set, so "extend the wall until the front stops" style plans stay honest:
every emitted turn is judged by the engine rules as it is produced.  The
finished move list becomes a StrategyTrace that tests replay again from
scratch.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .. import engine
from ..engine import CrewSchedule, RuleConfig, crew_step
from ..lattice import Vertex
from ..trace import StrategyTrace


class PlanError(RuntimeError):
    """A generator produced a move the engine rejects (a design bug)."""


class Driver:
    def __init__(
        self,
        config: RuleConfig,
        fire_origins: Iterable[Vertex],
        initial_positions: Sequence[Vertex],
    ):
        self.config = config
        self.topo = config.topology
        state = engine.init(config, fire_origins, initial_positions)
        self.burnt: dict[Vertex, int] = dict(state.burnt)
        self.protected: dict[Vertex, int] = dict(state.protected)
        self.positions: tuple[Vertex, ...] = state.crew_positions
        self.turn = 0
        self.pass_left = state.pass_left
        self.fire_origins = state.burnt_set
        self.turns: list[tuple[Vertex, ...]] = [state.crew_positions]
        self._active = {
            v
            for v in self.burnt
            if any(
                w not in self.burnt and w not in self.protected
                for w in self.topo.neighbors(v)
            )
        }

    # -- queries -----------------------------------------------------------

    def is_burnt(self, v: Vertex) -> bool:
        return v in self.burnt

    def contained(self) -> bool:
        return not self._active

    def crew(self, i: int) -> Vertex:
        return self.positions[i]

    # -- stepping ----------------------------------------------------------

    def _spread(self):
        new = []
        burnt, protected = self.burnt, self.protected
        for v in self._active:
            for w in self.topo.neighbors(v):
                if w not in burnt and w not in protected:
                    burnt[w] = self.turn
                    new.append(w)
        self._active = {
            v
            for v in new
            if any(
                w not in burnt and w not in protected for w in self.topo.neighbors(v)
            )
        }

    def _protect(self, cells: Iterable[Vertex]):
        burnt, protected = self.burnt, self.protected
        recheck = set()
        for c in cells:
            if c not in protected:
                protected[c] = self.turn
            for w in self.topo.neighbors(c):
                if w in self._active:
                    recheck.add(w)
        for v in recheck:
            if not any(
                w not in burnt and w not in protected for w in self.topo.neighbors(v)
            ):
                self._active.discard(v)

    def step(self, moves: Sequence[Vertex]) -> None:
        """Advance one turn with the given destinations (engine-judged)."""
        self.turn += 1
        k = crew_step(self.config.crew, self.turn)
        positions = self.positions
        if k > len(positions):
            positions = positions + (positions[-1],) * (k - len(positions))
        elif k < len(positions):
            positions = positions[:k]
        if not self.config.move_first:
            self._spread()
        judgment = engine._judge(
            self.config, self.burnt, positions, moves, self.pass_left
        )
        if not judgment.legal:
            bad = [e for e in judgment.per_firefighter if e.reason]
            raise PlanError(
                f"turn {self.turn}: {bad or judgment.reason} "
                f"(from {positions}, to {tuple(moves)})"
            )
        if judgment.uses_pass_through and self.pass_left is not None:
            self.pass_left -= 1
        self.positions = tuple(tuple(v) for v in moves)
        self._protect(self.positions)
        if self.config.move_first:
            self._spread()
        self.turns.append(self.positions)

    def run_until_contained(self, stepper, limit: int = 100000) -> None:
        """Call stepper() for moves each turn until containment."""
        for _ in range(limit):
            if self.contained():
                return
            self.step(stepper(self))
        raise PlanError(f"not contained after {limit} turns")

    def hold(self, turns: int = 1) -> None:
        """Stay put for the given number of turns."""
        for _ in range(turns):
            self.step(self.positions)

    def finish(self, annotations: Optional[dict] = None) -> StrategyTrace:
        if not self.contained():
            raise PlanError(f"plan ended at turn {self.turn} without containment")
        # one closing stay-put turn: the turn on which the fire fails to spread
        self.step(self.positions)
        return StrategyTrace(
            self.config,
            tuple(sorted(self.fire_origins)),
            list(self.turns),
            annotations or {},
        )

    def finish_prefix(self, annotations: Optional[dict] = None) -> StrategyTrace:
        """A legal trace with no containment claim (prefix strategies)."""
        return StrategyTrace(
            self.config,
            tuple(sorted(self.fire_origins)),
            list(self.turns),
            annotations or {},
        )
