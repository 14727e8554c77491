"""Time and space filters.

Both rewrite the irrelevant parts of an invariant into Boolean constants (time)
or clip geometry to a window (space), and let the simplifier prune the rest.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .geometry import guarded_clauses
from .rewrite import simplify
from .terms import (
    AND, BIGAND, BIGOR, FALSE, IMPLIES, OR, TRUE, Invariant, OccupyBox, OccupyPoint,
    TimePoint, conj,
)

__all__ = ["TimeWindow", "filter_time", "filter_space", "encode_points"]


@dataclass(frozen=True)
class TimeWindow:
    """Half-open window ``[start, stop)``."""

    start: int
    stop: int

    def __post_init__(self):
        if self.start > self.stop:
            raise ParameterError(f"time window start {self.start} after stop {self.stop}")

    def __contains__(self, t: int) -> bool:
        return self.start <= t < self.stop


def _rewrite_time(inv: Invariant, window: TimeWindow, miss: Invariant) -> Invariant:
    cls = type(inv)
    if cls is TimePoint:
        return inv if inv.timepoint in window else miss
    if cls is IMPLIES:
        return IMPLIES(_rewrite_time(inv.premise, window, miss),
                       _rewrite_time(inv.conclusion, window, miss))
    if cls is AND or cls is OR:
        return cls(_rewrite_time(inv.t1, window, miss), _rewrite_time(inv.t2, window, miss))
    if cls is BIGAND or cls is BIGOR:
        return cls([_rewrite_time(c, window, miss) for c in inv.args])
    # NOT, TimeInterval and every other atom pass through untouched
    return inv


def filter_time(inv: Invariant, window: TimeWindow, miss_value: bool = True) -> Invariant:
    """Keep what is relevant to ``window``.

    Time points outside the window become the negation of ``miss_value``
    (``FALSE`` by default, which suits conjunctions of implications), then the
    whole term is simplified.
    """
    miss = FALSE() if miss_value else TRUE()
    return simplify(_rewrite_time(inv, window, miss))


def encode_points(points: list[tuple[int, int]]) -> Invariant:
    """Point list as a single point, a binary AND, or a BIGAND.  Empty lists give TRUE."""
    atoms = [OccupyPoint(x, y) for x, y in points]
    if len(atoms) == 2:
        return AND(atoms[0], atoms[1])
    return conj(atoms)


def filter_space(inv: Invariant, window: OccupyBox) -> Invariant:
    """Clip every implication's geometry to ``window``, expressed as grid points.

    Implications left with no points are dropped.  The model must be in
    guarded normal form; normalize it first otherwise.
    """
    win = window.corners
    kept = []
    for clause in guarded_clauses(inv):
        pts = clause.points(win)
        if not pts:
            continue
        geom = encode_points(pts)
        kept.append(geom if clause.premise is None else IMPLIES(clause.premise, geom))
    return conj(kept)
