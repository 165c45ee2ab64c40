"""Distance-restricted firefighting on infinite lattices.

Simulator, strategy catalog, bounded-horizon solver and analysis tools
for the firefighter game in which each firefighter moves at most d per
turn through unburnt territory.
"""

from .lattice import Topology, Vertex, parse_topology
from .engine import (
    CrewSchedule,
    GameState,
    MoveJudgment,
    RuleConfig,
    apply_turn,
    crew_step,
    init,
    is_contained,
    reachable_cells,
    validate_moves,
)
from .trace import ReplayReport, StrategyTrace, replay

__all__ = [
    "Topology",
    "Vertex",
    "parse_topology",
    "CrewSchedule",
    "GameState",
    "MoveJudgment",
    "RuleConfig",
    "apply_turn",
    "crew_step",
    "init",
    "is_contained",
    "reachable_cells",
    "validate_moves",
    "ReplayReport",
    "StrategyTrace",
    "replay",
]

__version__ = "0.1.0"
