"""Folds over time steps and spatial iteration paths.

At every step the model is filtered down to the step's window and the
aggregator combines the accumulator with that sub-invariant.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, TypeVar

from .errors import ParameterError
from .filtering import TimeWindow, filter_space, filter_time
from .geometry import calculate_area
from .terms import AND, BIGAND, IMPLIES, Invariant, OccupyBox, OccupyPoint, Owner

__all__ = [
    "Aggregator", "TimeIteration", "IterationPath", "fold_time", "fold_space",
    "add_area_occupied", "add_cloudy_area", "owner_point_counter",
]

A = TypeVar("A")
Aggregator = Callable[[A, Invariant], A]


@dataclass(frozen=True)
class TimeIteration:
    start: int
    stop: int
    step: int = 1

    def __post_init__(self):
        if self.step <= 0:
            raise ParameterError(f"time step must be positive, got {self.step}")
        if self.start > self.stop:
            raise ParameterError(f"start time {self.start} after stop time {self.stop}")

    def times(self) -> range:
        """Visited times; ``stop`` itself is visited when it lies on the grid."""
        return range(self.start, self.stop + 1, self.step)


@dataclass(frozen=True)
class IterationPath:
    start_area: OccupyBox
    stop_area: OccupyBox
    translation: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "translation", tuple(self.translation))
        self.steps()

    def steps(self) -> int:
        """Number of translations ``k`` taking the start box onto the stop box."""
        dx, dy = self.translation
        if dx == 0 and dy == 0:
            raise ParameterError("translation (0, 0) never reaches the stop box")
        s, e = self.start_area, self.stop_area
        deltas = (e.x1 - s.x1, e.y1 - s.y1, e.x2 - s.x2, e.y2 - s.y2)
        moves = (dx, dy, dx, dy)
        k = None
        for d, m in zip(deltas, moves):
            if m == 0:
                if d != 0:
                    break
                continue
            q, r = divmod(d, m)
            if r or q < 0 or (k is not None and q != k):
                break
            k = q
        else:
            return k
        raise ParameterError(
            f"stop box {e.corners} is not reachable from {s.corners} by steps of {(dx, dy)}")

    def boxes(self) -> Iterator[OccupyBox]:
        dx, dy = self.translation
        b = self.start_area
        for i in range(self.steps() + 1):
            yield OccupyBox(b.x1 + i * dx, b.y1 + i * dy, b.x2 + i * dx, b.y2 + i * dy)


def fold_time(model: Invariant, init: A, iteration: TimeIteration, f: Aggregator) -> A:
    acc = init
    for t in iteration.times():
        sub = filter_time(model, TimeWindow(t, t + iteration.step), True)
        acc = f(acc, sub)
    return acc


def fold_space(model: Invariant, init: A, path: IterationPath, f: Aggregator) -> A:
    acc = init
    for box in path.boxes():
        acc = f(acc, filter_space(model, box))
    return acc


# ---------------------------------------------------------------------------
# aggregators

def _implied_area(item: Invariant) -> int:
    if type(item) is IMPLIES and type(item.conclusion) is OccupyBox:
        return calculate_area(item.conclusion)
    return 0


def add_area_occupied(total: int, item: Invariant) -> int:
    """Add the area of boxes implied by ``item``; looks one level into conjunctions."""
    if type(item) is AND:
        return total + _implied_area(item.t1) + _implied_area(item.t2)
    if type(item) is BIGAND:
        return total + sum(_implied_area(c) for c in item.args)
    return total + _implied_area(item)


def _owned_points(item: Invariant, label: str) -> int:
    if type(item) is not IMPLIES or item.premise != Owner(label):
        return 0
    c = item.conclusion
    if type(c) is OccupyPoint:
        return 1
    if type(c) is AND and type(c.t1) is OccupyPoint and type(c.t2) is OccupyPoint:
        return 2
    if type(c) is BIGAND and all(type(p) is OccupyPoint for p in c.args):
        return len(c.args)
    return 0


def owner_point_counter(label: str) -> Callable[[int, Invariant], int]:
    """Aggregator adding the number of points owned by ``label`` in a filtered step."""

    def count(total: int, sub: Invariant) -> int:
        if type(sub) is AND:
            items = (sub.t1, sub.t2)
        elif type(sub) is BIGAND:
            items = sub.args
        else:
            # a lone implication is a conjunction of one
            items = (sub,)
        return total + sum(_owned_points(i, label) for i in items)

    count.__name__ = f"add_{label}_points"
    return count


add_cloudy_area = owner_point_counter("cloud")
