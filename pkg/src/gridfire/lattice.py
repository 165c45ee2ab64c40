"""Infinite lattice topologies given as implicit adjacency rules.

Vertices are integer pairs ``(x, y)``.  For the ring-based topologies
(layered wheel, spider, prism) ``x`` is the ring/ray index with ``-1``
denoting the hub, and ``y`` is the position modulo the cycle length.

The hexagonal grid uses the brick-wall embedding on Z^2: all horizontal
edges exist, and the vertical edge between (x, y) and (x, y+1) exists
iff x + y is odd.  The subdivided hexagonal grid additionally removes
horizontal edges whose left endpoint has both coordinates odd.  Both
rules are validated in the tests against edge lists transcribed from a
7x7 drawing of each grid.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

Vertex = tuple[int, int]

UNREACHABLE = None  # sentinel returned by restricted_distance

_SQUARE_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_STRONG_OFFSETS = _SQUARE_OFFSETS + ((1, 1), (-1, -1), (1, -1), (-1, 1))
_TRIANGULAR_OFFSETS = _SQUARE_OFFSETS + ((1, 1), (-1, -1))


class TopologyError(ValueError):
    """A vertex or parameter violates the topology's constraints."""


@dataclass(frozen=True)
class Topology:
    """A named infinite graph; `kind` plus an optional cycle parameter."""

    kind: str
    param: int = 0

    _KINDS = (
        "square",
        "strong",
        "triangular",
        "hex",
        "subdivided_hex",
        "square_minus_column",
        "half_square",
        "layered_wheel",
        "spider",
        "prism_path",
    )

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise TopologyError(f"unknown topology kind {self.kind!r}")
        if self.kind in ("layered_wheel", "spider", "prism_path"):
            if self.param < 3:
                raise TopologyError(f"{self.kind} requires a cycle parameter >= 3")
        elif self.param:
            raise TopologyError(f"{self.kind} takes no parameter")

    @property
    def name(self) -> str:
        if self.param:
            return f"{self.kind}:{self.param}"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "Topology":
        """Parse an identifier like "square" or "spider:5"."""
        if ":" in text:
            kind, _, raw = text.partition(":")
            try:
                param = int(raw)
            except ValueError:
                raise TopologyError(f"bad topology parameter in {text!r}")
            return cls(kind, param)
        return cls(text)

    # -- membership ------------------------------------------------------

    def is_vertex(self, v: Vertex) -> bool:
        x, y = v
        if self.kind == "half_square":
            return y >= 0
        if self.kind == "square_minus_column":
            return not (x == 0 and y < 0)
        if self.kind in ("layered_wheel", "spider"):
            if x == -1:
                return y == 0
            return x >= 0 and 0 <= y < self.param
        if self.kind == "prism_path":
            return 0 <= y < self.param
        return True

    def check_vertex(self, v: Vertex) -> None:
        if not self.is_vertex(v):
            raise TopologyError(f"{v} is not a vertex of {self.name}")

    # -- adjacency -------------------------------------------------------

    def neighbors(self, v: Vertex) -> set[Vertex]:
        """The adjacent vertex set.  Symmetric and finite everywhere."""
        self.check_vertex(v)
        x, y = v
        kind = self.kind
        if kind == "square":
            return {(x + dx, y + dy) for dx, dy in _SQUARE_OFFSETS}
        if kind == "strong":
            return {(x + dx, y + dy) for dx, dy in _STRONG_OFFSETS}
        if kind == "triangular":
            return {(x + dx, y + dy) for dx, dy in _TRIANGULAR_OFFSETS}
        if kind == "hex":
            out = {(x + 1, y), (x - 1, y)}
            # brick-wall rule: vertical edge at (x, y)-(x, y+1) iff x+y odd
            if (x + y) % 2 == 1:
                out.add((x, y + 1))
            else:
                out.add((x, y - 1))
            return out
        if kind == "subdivided_hex":
            out = set()
            if not (x % 2 != 0 and y % 2 != 0):  # horizontal (x,y)-(x+1,y)
                out.add((x + 1, y))
            if not ((x - 1) % 2 != 0 and y % 2 != 0):
                out.add((x - 1, y))
            if (x + y) % 2 == 1:
                out.add((x, y + 1))
            else:
                out.add((x, y - 1))
            return out
        if kind == "half_square":
            return {
                (x + dx, y + dy)
                for dx, dy in _SQUARE_OFFSETS
                if y + dy >= 0
            }
        if kind == "square_minus_column":
            return {
                (x + dx, y + dy)
                for dx, dy in _SQUARE_OFFSETS
                if self.is_vertex((x + dx, y + dy))
            }
        if kind == "layered_wheel":
            m = self.param
            if x == -1:
                return {(0, j) for j in range(m)}
            out = {(x, (y + 1) % m), (x, (y - 1) % m), (x + 1, y)}
            out.add((-1, 0) if x == 0 else (x - 1, y))
            return out
        if kind == "spider":
            m = self.param
            if x == -1:
                return {(0, j) for j in range(m)}
            out = {(x + 1, y)}
            out.add((-1, 0) if x == 0 else (x - 1, y))
            return out
        if kind == "prism_path":
            n = self.param
            return {(x + 1, y), (x - 1, y), (x, (y + 1) % n), (x, (y - 1) % n)}
        raise AssertionError(kind)

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    # -- distance and balls ----------------------------------------------

    def restricted_distance(
        self,
        src: Vertex,
        dst: Vertex,
        passable: Callable[[Vertex], bool],
        cap: int,
    ) -> Optional[int]:
        """BFS distance through `passable` vertices only, or None (unreachable).

        Both endpoints must be passable; the frontier never expands past
        distance `cap`, which keeps the search finite on infinite graphs.
        """
        self.check_vertex(src)
        self.check_vertex(dst)
        if not passable(src) or not passable(dst):
            raise ValueError("restricted_distance endpoints must be passable")
        if cap < 0:
            raise ValueError("cap must be >= 0")
        if src == dst:
            return 0
        seen = {src}
        frontier = [src]
        for dist in range(1, cap + 1):
            nxt = []
            for u in frontier:
                for w in self.neighbors(u):
                    if w in seen or not passable(w):
                        continue
                    if w == dst:
                        return dist
                    seen.add(w)
                    nxt.append(w)
            if not nxt:
                return UNREACHABLE
            frontier = nxt
        return UNREACHABLE

    def ball(self, center: Vertex, r: int) -> set[Vertex]:
        """All vertices at unrestricted graph distance <= r from center."""
        self.check_vertex(center)
        if r < 0:
            raise ValueError("radius must be >= 0")
        seen = {center}
        frontier = [center]
        for _ in range(r):
            nxt = []
            for u in frontier:
                for w in self.neighbors(u):
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return seen

    def sphere(self, center: Vertex, r: int) -> set[Vertex]:
        """Vertices at distance exactly r."""
        if r == 0:
            return {center}
        return self.ball(center, r) - self.ball(center, r - 1)

    # -- symmetries --------------------------------------------------------

    def automorphisms(self, origin: Vertex) -> list[Callable[[Vertex], Vertex]]:
        """Origin-stabilising adjacency-preserving maps, identity included.

        square/strong return the 8 dihedral maps, triangular the 4 maps
        preserving its diagonal family, hex the brick-wall reflection,
        ring topologies the dihedral maps of the cycle.  Everything else
        gets the identity only.  Adjacency preservation is property-tested
        on a finite window in the test-suite rather than assumed.
        """
        self.check_vertex(origin)
        ox, oy = origin
        ident = lambda v: v

        if self.kind in ("square", "strong"):
            maps = []
            for sx in (1, -1):
                for sy in (1, -1):
                    for swap in (False, True):
                        def f(v, sx=sx, sy=sy, swap=swap):
                            x, y = v[0] - ox, v[1] - oy
                            if swap:
                                x, y = y, x
                            return (ox + sx * x, oy + sy * y)
                        maps.append(f)
            return maps
        if self.kind == "triangular":
            # maps fixing the up-right diagonal family: id, swap, neg, neg-swap
            forms = ((False, 1), (True, 1), (False, -1), (True, -1))
            maps = []
            for swap, s in forms:
                def f(v, swap=swap, s=s):
                    x, y = v[0] - ox, v[1] - oy
                    if swap:
                        x, y = y, x
                    return (ox + s * x, oy + s * y)
                maps.append(f)
            return maps
        if self.kind == "hex":
            # x-reflection preserves the parity rule iff it fixes x-parity
            def mirror(v):
                return (2 * ox - v[0], v[1])
            return [ident, mirror]
        if self.kind in ("layered_wheel", "spider"):
            if origin != (-1, 0):
                return [ident]
            m = self.param
            maps = []
            for k in range(m):
                for s in (1, -1):
                    def f(v, k=k, s=s):
                        x, y = v
                        if x == -1:
                            return v
                        return (x, (s * y + k) % m)
                    maps.append(f)
            return maps
        if self.kind == "prism_path":
            n = self.param
            def xmirror(v):
                return (2 * ox - v[0], v[1])
            def ymirror(v):
                return (v[0], (2 * oy - v[1]) % n)
            def both(v):
                return (2 * ox - v[0], (2 * oy - v[1]) % n)
            return [ident, xmirror, ymirror, both]
        return [ident]


def parse_topology(text: str) -> Topology:
    return Topology.parse(text)
