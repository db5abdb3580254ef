"""Geometric world model: square bounds, circular obstacles, task points, base.

All collision and clearance queries used by the planners live here. Tests
are analytic (closest point of a segment to a disc centre), never sampled.
Distances are metres throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Obstacle:
    """Circular impassable region."""

    center: Point
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.center.x) and math.isfinite(self.center.y)):
            raise ValueError("obstacle center must be finite")
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"obstacle radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class TaskPoint:
    """A service location with an optional payload demand in kilograms."""

    id: int
    location: Point
    demand: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.location.x) and math.isfinite(self.location.y)):
            raise ValueError(f"task {self.id}: location must be finite")
        if self.demand < 0:
            raise ValueError(f"task {self.id}: demand must be >= 0, got {self.demand}")


def straight_line_cost(a: Sequence[float], b: Sequence[float]) -> float:
    """Euclidean distance between two planar points."""
    return math.hypot(b[0] - a[0], b[1] - a[1])


def _check_finite(p: Sequence[float], what: str) -> None:
    if not (math.isfinite(p[0]) and math.isfinite(p[1])):
        raise ValueError(f"{what} must have finite coordinates, got {p!r}")


@dataclass(frozen=True)
class Environment:
    """Square world [-half_extent, +half_extent]^2 with obstacles, tasks and a base.

    Immutable after construction; all queries are read-only and safe for
    concurrent use.
    """

    half_extent: float
    obstacles: tuple[Obstacle, ...]
    tasks: tuple[TaskPoint, ...]
    base: Point
    safety_distance: float = 50.0

    # flat (cx, cy, r) tuples for the hot scalar loops
    _discs: tuple[tuple[float, float, float], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        object.__setattr__(
            self, "obstacles", tuple(self.obstacles)
        )
        object.__setattr__(self, "tasks", tuple(self.tasks))
        object.__setattr__(
            self,
            "_discs",
            tuple((o.center.x, o.center.y, o.radius) for o in self.obstacles),
        )
        self._validate()

    def _validate(self) -> None:
        if not (self.half_extent > 0 and math.isfinite(self.half_extent)):
            raise ValueError("half_extent must be positive and finite")
        if self.safety_distance < 0:
            raise ValueError("safety_distance must be >= 0")
        _check_finite(self.base, "base")
        if not self.contains(self.base):
            raise ValueError("base lies outside the world bounds")
        if self.obstacle_clearance(self.base) < self.safety_distance:
            raise ValueError("base is closer than safety_distance to an obstacle")
        seen: set[int] = set()
        for t in self.tasks:
            if t.id in seen:
                raise ValueError(f"duplicate task id {t.id}")
            seen.add(t.id)
            if not self.contains(t.location):
                raise ValueError(f"task {t.id} lies outside the world bounds")
            if self.obstacle_clearance(t.location) < self.safety_distance:
                raise ValueError(
                    f"task {t.id} is closer than safety_distance to an obstacle"
                )

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def contains(self, p: Sequence[float]) -> bool:
        h = self.half_extent
        return -h <= p[0] <= h and -h <= p[1] <= h

    def boundary_distance(self, p: Sequence[float]) -> float:
        """Signed distance to the nearest world edge (negative outside)."""
        return self.half_extent - max(abs(p[0]), abs(p[1]))

    def obstacle_clearance(self, p: Sequence[float]) -> float:
        """Min over obstacles of distance to centre minus radius; +inf when no obstacles."""
        x, y = p[0], p[1]
        best = math.inf
        for cx, cy, r in self._discs:
            c = math.hypot(x - cx, y - cy) - r
            if c < best:
                best = c
        return best

    def point_clearance(self, p: Sequence[float]) -> float:
        """Clearance of a point: min of obstacle clearance and boundary distance.

        Negative means inside an obstacle (or outside the world).
        """
        _check_finite(p, "point")
        return min(self.obstacle_clearance(p), self.boundary_distance(p))

    def segment_collides(
        self, a: Sequence[float], b: Sequence[float], margin: float = 0.0
    ) -> bool:
        """True iff the closed segment ab passes strictly within (radius + margin)
        of an obstacle centre, or within margin of the world boundary.

        Exact segment-to-disc distance; symmetric in (a, b). A degenerate
        segment (a == b) collides iff point_clearance(a) < margin.
        """
        _check_finite(a, "segment endpoint")
        _check_finite(b, "segment endpoint")
        if margin < 0:
            raise ValueError("margin must be >= 0")
        if min(self.boundary_distance(a), self.boundary_distance(b)) < margin:
            return True
        ax, ay = a[0], a[1]
        dx, dy = b[0] - ax, b[1] - ay
        ll = dx * dx + dy * dy
        for cx, cy, r in self._discs:
            px, py = cx - ax, cy - ay
            if ll > 0.0:
                t = (px * dx + py * dy) / ll
                if t < 0.0:
                    t = 0.0
                elif t > 1.0:
                    t = 1.0
            else:
                t = 0.0
            ex, ey = px - t * dx, py - t * dy
            reach = r + margin
            if ex * ex + ey * ey < reach * reach:
                return True
        return False
