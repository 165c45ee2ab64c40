"""Turn engine for distance-restricted firefighting.

Within-turn order
-----------------
A turn is: fire spreads once, then the crew schedule is applied, then the
firefighters move (each destination becomes protected).  Containment is
judged between turns.  The order is configurable through
``RuleConfig.move_first`` (single code point); the shipped default is
spread-before-move, which is the only order under which the surround
counts of the source figures come out right (e.g. two firefighters cannot
instantly seal a square-grid fire, and the subdivided-hex strategy needs
its full move allowance of 11).

Movement is measured in the subgraph induced by unburnt vertices.  The
pass-through variant relaxes path interiors to arbitrary vertices while
destinations stay unburnt; a finite ``pass_through_budget`` counts the
number of turns on which any firefighter may do so.  The sum-distance
variant pools the per-turn movement budget d*k across the crew.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .lattice import Topology, Vertex

STANDARD = "standard"
PASS_THROUGH = "pass_through"
SUM_DISTANCE = "sum_distance"
VARIANTS = (STANDARD, PASS_THROUGH, SUM_DISTANCE)


class EngineError(ValueError):
    pass


class IllegalPlacement(EngineError):
    pass


class CrewMismatch(EngineError):
    pass


class ScheduleError(EngineError):
    pass


class IllegalMove(EngineError):
    """Raised by apply_turn on an illegal proposal; carries the judgment."""

    def __init__(self, judgment: "MoveJudgment"):
        self.judgment = judgment
        reasons = [
            f"ff{e.index} {e.frm}->{e.to}: {e.reason}"
            for e in judgment.per_firefighter
            if e.reason
        ]
        super().__init__("illegal move: " + ("; ".join(reasons) or "budget"))


@dataclass(frozen=True)
class CrewSchedule:
    """Turn-indexed crew size: base count plus (turn, change) deltas."""

    base: int = 1
    deltas: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.base < 0:
            raise ScheduleError("crew base must be >= 0")
        size = self.base
        for turn, change in sorted(self.deltas):
            if turn < 0:
                raise ScheduleError("delta turns must be >= 0")
            size = self.size_at(turn)
            if size < 0:
                raise ScheduleError(f"crew size becomes negative at turn {turn}")

    def size_at(self, turn: int) -> int:
        return self.base + sum(c for t, c in self.deltas if t <= turn)


def crew_step(schedule: CrewSchedule, turn: int) -> int:
    """Crew size at the given turn; pure function of the schedule."""
    return schedule.size_at(turn)


@dataclass(frozen=True)
class RuleConfig:
    topology: Topology
    d: int = 1
    variant: str = STANDARD
    crew: CrewSchedule = field(default_factory=CrewSchedule)
    pass_through_budget: Optional[int] = None  # None = unlimited
    move_first: bool = False  # the within-turn order code point

    def __post_init__(self):
        if self.d < 1:
            raise EngineError("move bound d must be >= 1")
        if self.variant not in VARIANTS:
            raise EngineError(f"unknown variant {self.variant!r}")

    def budget_for(self, crew_size: int) -> int:
        return self.d * crew_size

    def initial_pass_budget(self) -> Optional[int]:
        if self.variant == STANDARD:
            return 0
        return self.pass_through_budget


@dataclass(frozen=True)
class MoveEntry:
    index: int
    frm: Vertex
    to: Vertex
    path_length: Optional[int]
    reason: Optional[str] = None  # None when this firefighter's move is fine


@dataclass(frozen=True)
class MoveJudgment:
    legal: bool
    per_firefighter: tuple[MoveEntry, ...]
    budget_used: int = 0
    uses_pass_through: bool = False
    reason: Optional[str] = None  # whole-proposal failures (budget, crew)


@dataclass(frozen=True)
class GameState:
    """Immutable snapshot.  burnt/protected map vertex -> turn acquired."""

    config: RuleConfig
    burnt: dict[Vertex, int]
    protected: dict[Vertex, int]
    crew_positions: tuple[Vertex, ...]
    turn: int
    pass_left: Optional[int]  # None = unlimited

    @property
    def burnt_set(self) -> set[Vertex]:
        return set(self.burnt)

    @property
    def protected_set(self) -> set[Vertex]:
        return set(self.protected)

    def crew_size(self) -> int:
        return len(self.crew_positions)


def init(
    config: RuleConfig,
    fire_origins: Iterable[Vertex],
    initial_positions: Sequence[Vertex],
) -> GameState:
    """Turn-0 state: fire placed, crew placed, no spread yet.

    No distance constraint applies at turn 0.
    """
    topo = config.topology
    origins = [tuple(v) for v in fire_origins]
    positions = tuple(tuple(v) for v in initial_positions)
    if not origins:
        raise IllegalPlacement("fire needs at least one origin")
    for v in origins:
        topo.check_vertex(v)
    for v in positions:
        topo.check_vertex(v)
    k0 = crew_step(config.crew, 0)
    if len(positions) != k0:
        raise CrewMismatch(f"expected {k0} initial positions, got {len(positions)}")
    origin_set = set(origins)
    for v in positions:
        if v in origin_set:
            raise IllegalPlacement(f"firefighter placed on fire origin {v}")
    return GameState(
        config=config,
        burnt={v: 0 for v in origins},
        protected={v: 0 for v in positions},
        crew_positions=positions,
        turn=0,
        pass_left=config.initial_pass_budget(),
    )


def spread_once(
    topo: Topology, burnt: dict, protected: dict, turn: int
) -> list[Vertex]:
    """One synchronous spread step in place; returns the newly burnt vertices."""
    new = []
    for v in list(burnt):
        for w in topo.neighbors(v):
            if w not in burnt and w not in protected:
                burnt[w] = turn
                new.append(w)
    return new


def _next_spread(state: GameState) -> set[Vertex]:
    topo = state.config.topology
    burnt, protected = state.burnt, state.protected
    out = set()
    for v in burnt:
        for w in topo.neighbors(v):
            if w not in burnt and w not in protected:
                out.add(w)
    return out


def is_contained(state: GameState) -> bool:
    """True iff no burnt vertex has an unburnt, unprotected neighbour."""
    topo = state.config.topology
    burnt, protected = state.burnt, state.protected
    for v in burnt:
        for w in topo.neighbors(v):
            if w not in burnt and w not in protected:
                return False
    return True


def _adjusted_crew(state: GameState) -> tuple[Vertex, ...]:
    """Apply the crew schedule for the upcoming turn.

    Additions spawn on the trailing firefighter's vertex (an occupied
    vertex, as the rules require); removals drop trailing indices.
    """
    k_next = crew_step(state.config.crew, state.turn + 1)
    crew = state.crew_positions
    if k_next == len(crew):
        return crew
    if k_next > len(crew):
        if not crew:
            raise ScheduleError("cannot add firefighters to an empty crew")
        return crew + (crew[-1],) * (k_next - len(crew))
    return crew[:k_next]


def _judge(
    config: RuleConfig,
    burnt: dict,
    crew: tuple[Vertex, ...],
    proposed: Sequence[Vertex],
    pass_left: Optional[int],
) -> MoveJudgment:
    topo = config.topology
    if len(proposed) != len(crew):
        return MoveJudgment(
            False, (), reason=f"expected {len(crew)} destinations, got {len(proposed)}"
        )
    proposed = [tuple(v) for v in proposed]
    d = config.d
    cap = config.budget_for(len(crew)) if config.variant == SUM_DISTANCE else d
    unburnt = lambda v: v not in burnt
    anywhere = lambda v: True
    pass_available = pass_left is None or pass_left > 0

    entries = []
    lengths_plain: list[Optional[int]] = []
    lengths_thru: list[Optional[int]] = []
    for i, (frm, to) in enumerate(zip(crew, proposed)):
        if not topo.is_vertex(to):
            entries.append(MoveEntry(i, frm, to, None, "DestinationInvalid"))
            lengths_plain.append(None)
            lengths_thru.append(None)
            continue
        if to in burnt:
            entries.append(MoveEntry(i, frm, to, None, "DestinationBurnt"))
            lengths_plain.append(None)
            lengths_thru.append(None)
            continue
        if to == frm:
            entries.append(MoveEntry(i, frm, to, 0))
            lengths_plain.append(0)
            lengths_thru.append(0)
            continue
        lp = topo.restricted_distance(frm, to, unburnt, cap)
        lt = None
        if config.variant != STANDARD and pass_available:
            lt = topo.restricted_distance(frm, to, anywhere, cap)
        lengths_plain.append(lp)
        lengths_thru.append(lt)
        entries.append(MoveEntry(i, frm, to, lp if lp is not None else lt))

    if any(e.reason for e in entries):
        return MoveJudgment(False, tuple(entries))

    def finish(lengths: list[int], uses_pass: bool) -> MoveJudgment:
        total = sum(lengths)
        out = tuple(
            MoveEntry(e.index, e.frm, e.to, l) for e, l in zip(entries, lengths)
        )
        return MoveJudgment(True, out, budget_used=total, uses_pass_through=uses_pass)

    if config.variant == SUM_DISTANCE:
        budget = config.budget_for(len(crew))
        # prefer unburnt paths; fall back to through-fire paths if the
        # one-time allowance is still available
        if all(l is not None for l in lengths_plain) and sum(lengths_plain) <= budget:
            return finish(lengths_plain, False)
        if pass_available:
            eff = [
                min(x for x in (lp, lt) if x is not None)
                if (lp is not None or lt is not None)
                else None
                for lp, lt in zip(lengths_plain, lengths_thru)
            ]
            if all(l is not None for l in eff) and sum(l for l in eff) <= budget:
                used = any(
                    lp is None or (lt is not None and lt < lp)
                    for lp, lt in zip(lengths_plain, lengths_thru)
                )
                if used:
                    return finish(eff, True)
                return finish(eff, False)
        bad = []
        for e, lp, lt in zip(entries, lengths_plain, lengths_thru):
            if lp is None and lt is None:
                bad.append(MoveEntry(e.index, e.frm, e.to, None, "Unreachable"))
            else:
                bad.append(e)
        if any(e.reason for e in bad):
            return MoveJudgment(False, tuple(bad))
        return MoveJudgment(
            False,
            tuple(entries),
            budget_used=sum(l for l in lengths_plain if l is not None),
            reason="BudgetExceeded",
        )

    # standard / pass_through: per-firefighter bound d
    final = []
    uses_pass = False
    ok = True
    for e, lp, lt in zip(entries, lengths_plain, lengths_thru):
        if lp is not None and lp <= d:
            final.append(MoveEntry(e.index, e.frm, e.to, lp))
        elif config.variant == PASS_THROUGH and pass_available and lt is not None and lt <= d:
            final.append(MoveEntry(e.index, e.frm, e.to, lt))
            uses_pass = True
        else:
            reason = "TooFar" if (lp is not None or lt is not None) else "Unreachable"
            final.append(MoveEntry(e.index, e.frm, e.to, lp if lp is not None else lt, reason))
            ok = False
    if not ok:
        return MoveJudgment(False, tuple(final))
    return MoveJudgment(
        True,
        tuple(final),
        budget_used=sum(e.path_length for e in final),
        uses_pass_through=uses_pass,
    )


def validate_moves(state: GameState, proposed: Sequence[Vertex]) -> MoveJudgment:
    """Judge a proposal for the upcoming turn without applying it.

    Judged against the burnt set the firefighters will actually face,
    i.e. after this turn's spread unless the config says moves come first.
    """
    crew = _adjusted_crew(state)
    if state.config.move_first:
        burnt = state.burnt
    else:
        burnt = dict(state.burnt)
        for v in _next_spread(state):
            burnt[v] = state.turn + 1
    return _judge(state.config, burnt, crew, proposed, state.pass_left)


def apply_turn(state: GameState, proposed: Sequence[Vertex]) -> GameState:
    """Advance one turn; raises IllegalMove (with judgment) if illegal."""
    config = state.config
    crew = _adjusted_crew(state)
    turn = state.turn + 1
    burnt = dict(state.burnt)
    protected = dict(state.protected)

    if config.move_first:
        judgment = _judge(config, burnt, crew, proposed, state.pass_left)
        if not judgment.legal:
            raise IllegalMove(judgment)
        positions = tuple(tuple(v) for v in proposed)
        for v in positions:
            protected.setdefault(v, turn)
        spread_once(config.topology, burnt, protected, turn)
    else:
        for v in _next_spread(state):
            burnt[v] = turn
        judgment = _judge(config, burnt, crew, proposed, state.pass_left)
        if not judgment.legal:
            raise IllegalMove(judgment)
        positions = tuple(tuple(v) for v in proposed)
        for v in positions:
            protected.setdefault(v, turn)

    pass_left = state.pass_left
    if judgment.uses_pass_through and pass_left is not None:
        pass_left -= 1
    return GameState(
        config=config,
        burnt=burnt,
        protected=protected,
        crew_positions=positions,
        turn=turn,
        pass_left=pass_left,
    )


def reachable_cells(state: GameState, firefighter_index: int) -> set[Vertex]:
    """Legal destinations for one firefighter this turn (others staying).

    Always contains the current position.
    """
    crew = _adjusted_crew(state)
    if not 0 <= firefighter_index < len(crew):
        raise IndexError(f"no firefighter {firefighter_index} (crew {len(crew)})")
    config = state.config
    if config.move_first:
        burnt = state.burnt
    else:
        burnt = dict(state.burnt)
        for v in _next_spread(state):
            burnt[v] = state.turn + 1
    frm = crew[firefighter_index]
    if config.variant == SUM_DISTANCE:
        cap = config.budget_for(len(crew))
    else:
        cap = config.d
    pass_ok = config.variant != STANDARD and (
        state.pass_left is None or state.pass_left > 0
    )

    def sweep(passable) -> set[Vertex]:
        topo = config.topology
        seen = {frm}
        frontier = [frm]
        for _ in range(cap):
            nxt = []
            for u in frontier:
                for w in topo.neighbors(u):
                    if w in seen or not passable(w):
                        continue
                    seen.add(w)
                    nxt.append(w)
            frontier = nxt
        return seen

    cells = sweep(lambda v: v not in burnt)
    if pass_ok:
        cells |= sweep(lambda v: True)
    return {v for v in cells if v not in burnt}
