"""Areas, box-to-point expansion and the brute-force point-set semantics.

The semantics works on *guarded normal form*: a conjunction of implications
whose premise is a conjunction of time and owner atoms and whose conclusion is
occupancy geometry.  Anything else raises :class:`~stinv.errors.ShapeError`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernels
from .errors import ShapeError, UnsupportedAtomError
from .terms import (
    AND, BIGAND, IMPLIES, TRUE, Invariant, Occupy3DBox, Occupy3DPoint, OccupyBox,
    OccupyCircle, OccupyNode, OccupyPoint, Edge, Owner, OwnBox, OwnPoint, TimeInterval,
    TimePoint, Transition,
)

GridPoint = tuple[int, int]
PointSemantics = dict[str, set[GridPoint]]

ANONYMOUS = ""

_UNSUPPORTED = (Occupy3DPoint, Occupy3DBox, OccupyCircle, OccupyNode, Edge, Transition)


def calculate_area(box: OccupyBox) -> int:
    return abs((box.x2 - box.x1 + 1) * (box.y2 - box.y1 + 1))


def expand_box_to_points(box: OccupyBox) -> list[GridPoint]:
    return kernels.expand_box(box.x1, box.y1, box.x2, box.y2)


def intersect_boxes(a: OccupyBox, b: OccupyBox) -> Optional[OccupyBox]:
    """Overlap of two boxes, or ``None`` when they share no grid point."""
    x1, y1 = max(a.x1, b.x1), max(a.y1, b.y1)
    x2, y2 = min(a.x2, b.x2), min(a.y2, b.y2)
    if x1 > x2 or y1 > y2:
        return None
    return OccupyBox(x1, y1, x2, y2)


@dataclass(frozen=True)
class Clause:
    """One implication of a guarded model, decomposed.

    ``premise`` is the original guard term (``None`` for unguarded geometry);
    ``boxes`` holds the conclusion's geometry as corner tuples, points included
    as degenerate boxes.
    """

    premise: Optional[Invariant]
    owner: str
    times: tuple[Invariant, ...]
    boxes: tuple[tuple[int, int, int, int], ...]

    def holds_at(self, t: int) -> bool:
        for a in self.times:
            if type(a) is TimePoint:
                if a.timepoint != t:
                    return False
            elif not a.timepoint1 <= t <= a.timepoint2:
                return False
        return True

    def points(self, window: Optional[tuple[int, int, int, int]] = None) -> list[GridPoint]:
        return kernels.clip_union(self.boxes, window)


def _reject(inv: Invariant, where: str):
    if isinstance(inv, _UNSUPPORTED):
        raise UnsupportedAtomError(f"{type(inv).__name__} has no point semantics")
    raise ShapeError(f"{type(inv).__name__} not allowed in {where}")


def _guard_atoms(inv: Invariant, out: list[Invariant]) -> None:
    cls = type(inv)
    if cls in (TimePoint, TimeInterval, Owner):
        out.append(inv)
    elif cls is TRUE:
        pass
    elif cls is AND:
        _guard_atoms(inv.t1, out)
        _guard_atoms(inv.t2, out)
    elif cls is BIGAND:
        for c in inv.args:
            _guard_atoms(c, out)
    else:
        _reject(inv, "a guard")


def _geometry(inv: Invariant, out: list[tuple[int, int, int, int]]) -> None:
    cls = type(inv)
    if cls is OccupyBox:
        out.append((inv.x1, inv.y1, inv.x2, inv.y2))
    elif cls is OccupyPoint:
        out.append((inv.x, inv.y, inv.x, inv.y))
    elif cls is TRUE:
        pass
    elif cls is AND:
        _geometry(inv.t1, out)
        _geometry(inv.t2, out)
    elif cls is BIGAND:
        for c in inv.args:
            _geometry(c, out)
    else:
        _reject(inv, "an occupancy conclusion")


def _clause(premise: Optional[Invariant], conclusion: Invariant) -> Clause:
    atoms: list[Invariant] = []
    if premise is not None:
        _guard_atoms(premise, atoms)
    owners = {a.owner for a in atoms if type(a) is Owner}
    if len(owners) > 1:
        raise ShapeError(f"guard names several owners: {sorted(owners)}")
    boxes: list[tuple[int, int, int, int]] = []
    _geometry(conclusion, boxes)
    return Clause(
        premise=premise,
        owner=owners.pop() if owners else ANONYMOUS,
        times=tuple(a for a in atoms if type(a) is not Owner),
        boxes=tuple(boxes),
    )


def _collect(inv: Invariant, out: list[Clause]) -> None:
    cls = type(inv)
    if cls is BIGAND:
        for c in inv.args:
            _collect(c, out)
    elif cls is AND:
        _collect(inv.t1, out)
        _collect(inv.t2, out)
    elif cls is TRUE:
        pass
    elif cls is IMPLIES:
        out.append(_clause(inv.premise, inv.conclusion))
    elif cls is OwnBox:
        out.append(_clause(Owner(inv.owner), inv.box))
    elif cls is OwnPoint:
        out.append(_clause(Owner(inv.owner), OccupyPoint(inv.x, inv.y)))
    elif cls in (OccupyBox, OccupyPoint):
        out.append(_clause(None, inv))
    else:
        _reject(inv, "a guarded model")


def guarded_clauses(model: Invariant) -> list[Clause]:
    """Decompose a guarded model into clauses, in document order."""
    out: list[Clause] = []
    _collect(model, out)
    return out


def is_guarded_normal_form(model: Invariant) -> bool:
    try:
        guarded_clauses(model)
    except ShapeError:
        return False
    return True


def point_semantics(model: Invariant, t: int) -> PointSemantics:
    """Owner -> occupied grid points at time ``t``.

    Implications without an owner land in the anonymous bucket ``""``.
    Owners occupying nothing at ``t`` are absent from the map.
    """
    sem: PointSemantics = {}
    for clause in guarded_clauses(model):
        if not clause.holds_at(t):
            continue
        pts = clause.points()
        if pts:
            sem.setdefault(clause.owner, set()).update(pts)
    return sem
