"""Containment strategies transcribed vertex-by-vertex from the source
diagrams.  Coordinates for the hexagonal entries are in the brick-wall
embedding; the subdivided-hex entry keeps its diagram's coordinates since
the subdivision pattern is not translation invariant.
"""

from __future__ import annotations

from ..engine import CrewSchedule, RuleConfig
from ..lattice import Topology
from ..trace import StrategyTrace


def square_3ff_d2() -> StrategyTrace:
    """Three firefighters pen the fire into a 7-cell column (d=2)."""
    cfg = RuleConfig(Topology("square"), d=2, crew=CrewSchedule(base=3))
    turns = [
        [(-1, 0), (1, 0), (0, -1)],
        [(-1, 1), (1, 1), (-2, -1)],
        [(-1, 2), (1, 2), (-2, 1)],
        [(-1, 3), (1, 3), (-2, 3)],
        [(-1, 4), (1, 4), (-2, 5)],
        [(-1, 5), (1, 5), (-2, 7)],
        [(-1, 6), (1, 6), (0, 7)],
        [(-1, 6), (1, 6), (0, 7)],  # closing turn: the spread is empty
    ]
    return StrategyTrace(cfg, [(0, 0)], turns)


def hex_2ff_d2() -> StrategyTrace:
    """Two firefighters on the hexagonal grid, d=2, five turns."""
    cfg = RuleConfig(Topology("hex"), d=2, crew=CrewSchedule(base=2))
    turns = [
        [(-1, 0), (0, -1)],
        [(0, 1), (2, -1)],
        [(1, 2), (4, -1)],
        [(3, 2), (5, 0)],
        [(4, 1), (5, 0)],
        [(4, 1), (5, 0)],
    ]
    return StrategyTrace(cfg, [(0, 0)], turns)


def subhex_1ff_d11() -> StrategyTrace:
    """One firefighter, subdivided hexagonal grid, d=11, four turns.

    The shortest legal relocation on turn 1 is exactly 11 edges, which is
    why the distance bound cannot be lowered for this strategy.
    """
    cfg = RuleConfig(Topology("subdivided_hex"), d=11, crew=CrewSchedule(base=1))
    turns = [
        [(2, 2)],
        [(5, 2)],
        [(2, 4)],
        [(5, 0)],
        [(5, 0)],
    ]
    return StrategyTrace(cfg, [(3, 2)], turns)


def strong_4ff_d2() -> StrategyTrace:
    """Four firefighters on the strong grid, d=2: one walks the top row
    while three wheel around the other side."""
    cfg = RuleConfig(Topology("strong"), d=2, crew=CrewSchedule(base=4))
    turns = [
        [(10, 8), (12, 8), (11, 8), (12, 7)],
        [(9, 8), (13, 7), (13, 6), (13, 5)],
        [(8, 8), (13, 5), (13, 4), (12, 4)],
        [(7, 8), (12, 3), (11, 3), (10, 3)],
        [(6, 8), (10, 2), (9, 2), (8, 2)],
        [(5, 8), (8, 1), (7, 1), (6, 1)],
        [(4, 8), (6, 0), (5, 0), (4, 0)],
        [(3, 8), (4, 0), (3, 0), (3, 1)],
        [(2, 8), (2, 1), (2, 2), (2, 3)],
        [(1, 8), (1, 3), (1, 4), (1, 5)],
        [(0, 8), (0, 5), (0, 6), (0, 7)],
        [(0, 8), (0, 5), (0, 6), (0, 7)],
    ]
    return StrategyTrace(cfg, [(11, 7)], turns)


def strong_avg_3T(T: int = 2, prefix_turns: int = 4) -> StrategyTrace:
    """Legal prefix of the 3 + 1/T crew schedule on the strong grid (d=2).

    Four firefighters are available on turns divisible by T, three
    otherwise.  The published strategy gives only the first four moves;
    this generator emits that prefix (longer prefixes continue the top
    wall and the right-hand descent while legal).  No containment claim.
    """
    if T < 2:
        raise ValueError("T must be >= 2")
    if not 1 <= prefix_turns <= 4:
        raise ValueError("prefix_turns must be in 1..4")
    deltas = []
    for t in range(0, prefix_turns + 1, T):
        deltas.append((t, 1))
        deltas.append((t + 1, -1))
    cfg = RuleConfig(
        Topology("strong"), d=2, crew=CrewSchedule(base=3, deltas=tuple(deltas))
    )
    rows = [
        [(10, 8), (12, 8), (11, 8), (12, 7)],
        [(9, 8), (13, 7), (13, 6)],
        [(8, 8), (14, 5), (14, 4), (14, 6)],
        [(7, 8), (13, 3), (14, 3)],
    ]
    # the figure's schedule is T=2; for larger T the extra firefighter
    # simply arrives later, so trim rows to the schedule's sizes by
    # dropping the trailing entries of four-strong rows
    turns = []
    for t, row in enumerate(rows[: prefix_turns + 1]):
        k = CrewSchedule(base=3, deltas=tuple(deltas)).size_at(t)
        if len(row) < k:
            row = row + [row[-1]] * (k - len(row))
        turns.append(row[:k])
    return StrategyTrace(cfg, [(11, 7)], turns)
