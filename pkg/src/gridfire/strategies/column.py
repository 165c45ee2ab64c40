"""Corral-to-column strategies and their shared completion.

These constructions hinge on corner turns and a pivot that converts the
bottom wall into a vertical crossing ahead of the fire.  They are only
realisable when firefighters move before the fire spreads within a turn
(the source material's walls are laid "just in time", which under
spread-first ordering arrives one turn late at every corner), so every
config in this family sets ``move_first=True``.  The engine replays and
re-validates each emitted trace either way.

Shared frame: fire at (0, 0); the bottom wall runs along y = -1 heading
east, the left wall along x = -1 heading north.  The fire burns the
quarter plane x, y >= 0, cell (x, y) igniting at turn x + y.
"""

from __future__ import annotations

from ..engine import CrewSchedule, RuleConfig
from ..lattice import Topology
from ..trace import StrategyTrace
from .driver import Driver, PlanError


def _family_config(crew: CrewSchedule, variant: str = "standard",
                   pass_budget=None) -> RuleConfig:
    return RuleConfig(
        Topology("square"),
        d=2,
        variant=variant,
        crew=crew,
        pass_through_budget=pass_budget,
        move_first=True,
    )


def extra_ff_d2(t_extra: int = 4) -> StrategyTrace:
    """Two firefighters plus one extra on turn ``t_extra``.

    Plan: corral along the axes; when the extra arrives, turn the left
    wall ninety degrees into a top wall (the corner is exactly what the
    one extra protection pays for), then pivot the bottom wall up into a
    vertical crossing that meets the top wall, sealing the column.
    """
    if t_extra < 1:
        raise ValueError("t_extra must be >= 1")
    tau = t_extra
    crew = CrewSchedule(base=2, deltas=((tau, 1), (tau + 1, -1)))
    cfg = _family_config(crew)
    # crew order: [bottom, left]; the extra spawns on the trailing
    # (left-wall) firefighter and is dropped again after its one move
    drv = Driver(cfg, [(0, 0)], [(0, -1), (-1, 0)])

    W = tau + 2          # interior rows 0..tau+1 once the corner is made
    X = tau + W + 2      # crossing column; pivot happens at turn X

    for t in range(1, tau):
        drv.step([(t, -1), (-1, t)])
    # turn tau: three firefighters; the left wall steps two ahead while
    # the extra covers the skipped cell
    drv.step([(tau, -1), (-1, tau + 1), (-1, tau)])
    # turn tau+1: the corner onto the future top wall row
    drv.step([(tau + 1, -1), (0, W)])
    # top wall east, bottom wall east until the pivot
    for t in range(tau + 2, X):
        drv.step([(t, -1), (t - tau - 1, W)])
    # pivot: bottom wall turns up into the crossing at column X
    drv.step([(X, 0), (X - tau - 2, W)])
    for y in range(1, W):
        drv.step([(X, y), (X - tau - 2 + y, W)])
    # top wall reaches the crossing; one more cell closes the seam
    while not drv.contained():
        x_top = drv.crew(1)[0]
        drv.step([drv.crew(0), (x_top + 1, W)])
        if drv.turn > X + W + 8:
            raise PlanError("extra_ff_d2 failed to close")
    return drv.finish()


def corral_completion(width: int = 4, wall_length: int | None = None) -> StrategyTrace:
    """Containment from an established column corral.

    Instantiates the corral hypothesis directly: a large turn-0 crew lays
    the two walls (of the given length) and a rear seal, then all but two
    firefighters retire.  The remaining pair keeps the column corralled
    and finishes it with the bottom-wall pivot into a vertical crossing.
    ``width`` is the interior row count; ``wall_length`` the pre-built
    wall extent (defaults to the shortest length the completion needs).
    """
    if width < 1:
        raise ValueError("width must be >= 1")
    W = width
    if wall_length is None:
        wall_length = W + 4
    L = wall_length
    if L < 3:
        raise ValueError("wall_length must be >= 3")

    # pre-built walls: bottom (x, -1) for -1..L, top (x, W) for -1..L-W
    # (staggered like a corral reached from a point fire), left seal
    bottom = [(x, -1) for x in range(-1, L + 1)]
    top = [(x, W) for x in range(-1, max(0, L - W) + 1)]
    seal = [(-1, y) for y in range(0, W)]
    wall_cells = bottom + top + seal
    k0 = len(wall_cells) + 2
    crew = CrewSchedule(base=k0, deltas=((1, -(k0 - 2)),))
    cfg = _family_config(crew)
    # keepers first (removals drop trailing indices)
    ff_bottom = (L, -1)
    ff_top = (max(0, L - W), W)
    positions = [ff_bottom, ff_top] + wall_cells
    drv = Driver(cfg, [(0, 0)], positions)

    X = L + W + 2  # pivot column: far enough that the walls reach it in time
    t0 = drv.turn
    bx, by = drv.crew(0)
    tx, ty = drv.crew(1)
    # resume the corral: bottom wall must cover x<=t each turn t, the top
    # wall x <= t-W; catch up if the pre-built walls are ahead of need
    for t in range(t0 + 1, X):
        bx = max(bx + 1, min(t, X - 1)) if bx < t else bx
        nb = (min(bx, X - 1), -1) if bx <= t else (bx, -1)
        bx = nb[0]
        tx = tx + 1 if tx < t - W else tx
        drv.step([(bx, -1), (tx, W)])
    drv.step([(X, 0), (min(tx + 1, X - 1), W)])
    tx = min(tx + 1, X - 1)
    for y in range(1, W):
        tx = min(tx + 1, X - 1)
        drv.step([(X, y), (tx, W)])
    while not drv.contained():
        tx += 1
        drv.step([drv.crew(0), (tx, W)])
        if drv.turn > X + W + 10:
            raise PlanError("corral_completion failed to close")
    return drv.finish()


def sum_distance_d2() -> StrategyTrace:
    """The sum-distance game: two firefighters with a pooled budget of 4.

    Opens with the published five turns (one firefighter crossing through
    the fire once, moving 3 while the other moves 1), which corral the
    fire to a column; the corral is then walked out and closed with the
    same pivot used by the other column strategies.
    """
    crew = CrewSchedule(base=2)
    cfg = _family_config(crew, variant="sum_distance", pass_budget=1)
    drv = Driver(cfg, [(0, 0)], [(0, -1), (-1, 0)])
    # the five published turns (firefighter order: [a, b])
    drv.step([(1, -1), (2, 0)])     # b crosses through the fire: 1 + 3 = 4
    drv.step([(-2, -1), (2, 1)])    # a loops around the back: 3 + 1 = 4
    drv.step([(-3, 0), (2, 2)])
    drv.step([(-4, 1), (2, 3)])
    # column: left wall x=-4 (a), right wall x=2 (b), fire burning north
    # between them; a's wall lags, so b's side leads and b will pivot.
    Y = 14  # crossing row
    y_a, y_b = 1, 3
    while y_b < Y - 1:
        y_a += 1
        y_b += 1
        drv.step([(-4, y_a), (2, y_b)])
    # pivot: the right wall turns west along row Y, crossing the column
    drv.step([(-4, y_a + 1), (1, Y)])
    y_a += 1
    for x in range(0, -4, -1):
        y_a += 1
        drv.step([(-4, y_a), (x, Y)])
    while not drv.contained():
        y_a += 1
        drv.step([(-4, y_a), drv.crew(1)])
        if drv.turn > Y + 12:
            raise PlanError("sum_distance_d2 failed to close")
    return drv.finish(annotations={"pass_through_turn": 1})
