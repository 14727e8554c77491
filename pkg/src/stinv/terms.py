"""The invariant term language.

Every term is an immutable, hashable dataclass.  Structural equality is the
dataclass ``==``; :func:`compare` and :func:`sort_key` give the canonical total
order used by normalization.  Boxes are corner-ordered when constructed, so two
boxes naming the same region are always equal.
"""
from __future__ import annotations

from dataclasses import dataclass, fields
from typing import ClassVar, Iterable, Iterator

__all__ = [
    "Invariant", "TRUE", "FALSE", "NOT", "AND", "OR", "IMPLIES", "BIGAND", "BIGOR",
    "TimePoint", "TimeInterval", "Owner", "Event", "ComponentState", "Prob",
    "OccupyPoint", "OccupyBox", "OwnPoint", "OwnBox", "Occupy3DPoint", "Occupy3DBox",
    "OccupyCircle", "OccupyNode", "Edge", "Transition",
    "OP_TYPES", "CONNECTIVES", "mk_box", "compare", "sort_key", "node_count", "subterms", "conj",
]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class Invariant:
    """Base class of all terms."""

    __slots__ = ()
    rank: ClassVar[int]

    def __repr__(self) -> str:
        vals = ", ".join(repr(getattr(self, f.name)) for f in fields(self))
        return f"{type(self).__name__}({vals})"

    def children(self) -> tuple[Invariant, ...]:
        return ()


def _term(rank: int):
    def wrap(cls):
        cls = dataclass(frozen=True, slots=True, repr=False)(cls)
        cls.rank = rank
        return cls
    return wrap


def _check_time(t: int) -> None:
    if not INT64_MIN <= t <= INT64_MAX:
        raise ValueError(f"time {t} outside the signed 64-bit range")


# ---------------------------------------------------------------------------
# constants and connectives

@_term(0)
class TRUE(Invariant):
    pass


@_term(1)
class FALSE(Invariant):
    pass


@_term(18)
class NOT(Invariant):
    t: Invariant

    def children(self):
        return (self.t,)


@_term(19)
class AND(Invariant):
    t1: Invariant
    t2: Invariant

    def children(self):
        return (self.t1, self.t2)


@_term(20)
class OR(Invariant):
    t1: Invariant
    t2: Invariant

    def children(self):
        return (self.t1, self.t2)


@_term(21)
class IMPLIES(Invariant):
    premise: Invariant
    conclusion: Invariant

    def children(self):
        return (self.premise, self.conclusion)


@_term(22)
class BIGAND(Invariant):
    args: tuple[Invariant, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))

    def children(self):
        return self.args


@_term(23)
class BIGOR(Invariant):
    args: tuple[Invariant, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))

    def children(self):
        return self.args


# ---------------------------------------------------------------------------
# time, labels, probability

@_term(2)
class TimePoint(Invariant):
    timepoint: int

    def __post_init__(self):
        _check_time(self.timepoint)


@_term(3)
class TimeInterval(Invariant):
    timepoint1: int
    timepoint2: int

    def __post_init__(self):
        _check_time(self.timepoint1)
        _check_time(self.timepoint2)
        if self.timepoint1 > self.timepoint2:
            raise ValueError(
                f"TimeInterval start {self.timepoint1} after stop {self.timepoint2}")


@_term(4)
class Owner(Invariant):
    owner: str


@_term(5)
class Event(Invariant):
    event: str


@_term(6)
class ComponentState(Invariant):
    state: str


@_term(7)
class Prob(Invariant):
    p: float

    def __post_init__(self):
        object.__setattr__(self, "p", float(self.p))
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"probability {self.p} outside [0, 1]")


# ---------------------------------------------------------------------------
# geometry

@_term(8)
class OccupyPoint(Invariant):
    x: int
    y: int


@_term(9)
class OccupyBox(Invariant):
    """Axis-aligned integer box; both corners are occupied."""

    x1: int
    y1: int
    x2: int
    y2: int

    def __post_init__(self):
        if self.x1 > self.x2:
            x1, x2 = self.x2, self.x1
            object.__setattr__(self, "x1", x1)
            object.__setattr__(self, "x2", x2)
        if self.y1 > self.y2:
            y1, y2 = self.y2, self.y1
            object.__setattr__(self, "y1", y1)
            object.__setattr__(self, "y2", y2)

    @property
    def corners(self) -> tuple[int, int, int, int]:
        return (self.x1, self.y1, self.x2, self.y2)


@_term(10)
class OwnPoint(Invariant):
    owner: str
    x: int
    y: int


@_term(11)
class OwnBox(Invariant):
    owner: str
    x1: int
    y1: int
    x2: int
    y2: int

    def __post_init__(self):
        if self.x1 > self.x2:
            x1, x2 = self.x2, self.x1
            object.__setattr__(self, "x1", x1)
            object.__setattr__(self, "x2", x2)
        if self.y1 > self.y2:
            y1, y2 = self.y2, self.y1
            object.__setattr__(self, "y1", y1)
            object.__setattr__(self, "y2", y2)

    @property
    def box(self) -> OccupyBox:
        return OccupyBox(self.x1, self.y1, self.x2, self.y2)


@_term(12)
class Occupy3DPoint(Invariant):
    x: int
    y: int
    z: int


@_term(13)
class Occupy3DBox(Invariant):
    x1: int
    y1: int
    z1: int
    x2: int
    y2: int
    z2: int

    def __post_init__(self):
        for lo, hi in (("x1", "x2"), ("y1", "y2"), ("z1", "z2")):
            a, b = getattr(self, lo), getattr(self, hi)
            if a > b:
                object.__setattr__(self, lo, b)
                object.__setattr__(self, hi, a)


@_term(14)
class OccupyCircle(Invariant):
    x: int
    y: int
    radius: int


# ---------------------------------------------------------------------------
# topology

@_term(15)
class OccupyNode(Invariant):
    node: str


@_term(16)
class Edge(Invariant):
    source: str
    target: str


@_term(17)
class Transition(Invariant):
    source: str
    event: str
    target: str


OP_TYPES: dict[str, type[Invariant]] = {
    cls.__name__: cls
    for cls in sorted(
        (TRUE, FALSE, TimePoint, TimeInterval, Owner, Event, ComponentState, Prob,
         OccupyPoint, OccupyBox, OwnPoint, OwnBox, Occupy3DPoint, Occupy3DBox,
         OccupyCircle, OccupyNode, Edge, Transition, NOT, AND, OR, IMPLIES, BIGAND, BIGOR),
        key=lambda c: c.rank,
    )
}

CONNECTIVES = (NOT, AND, OR, IMPLIES, BIGAND, BIGOR)


def mk_box(x1: int, y1: int, x2: int, y2: int) -> OccupyBox:
    """Build a corner-ordered box; ``mk_box(a, b, c, d) == mk_box(c, d, a, b)``."""
    return OccupyBox(x1, y1, x2, y2)


# ---------------------------------------------------------------------------
# canonical order

def sort_key(inv: Invariant) -> tuple:
    """Key realising the canonical order: constructor rank, then fields left to right.

    Text compares by code point, which for UTF-8 coincides with byte order.
    Child lists compare element-wise with the shorter list first on a common prefix.
    """
    key = [inv.rank]
    for f in fields(inv):
        v = getattr(inv, f.name)
        if isinstance(v, Invariant):
            key.append(sort_key(v))
        elif isinstance(v, tuple):
            key.append(tuple(sort_key(c) for c in v))
        else:
            key.append(v)
    return tuple(key)


def compare(a: Invariant, b: Invariant) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    ka, kb = sort_key(a), sort_key(b)
    return (ka > kb) - (ka < kb)


def subterms(inv: Invariant) -> Iterator[Invariant]:
    """Pre-order walk over ``inv`` and all its descendants."""
    stack = [inv]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def node_count(inv: Invariant) -> int:
    return sum(1 for _ in subterms(inv))


def conj(items: Iterable[Invariant]) -> Invariant:
    """Conjunction with the wrapping convention used throughout: TRUE, the item, or BIGAND."""
    items = list(items)
    if not items:
        return TRUE()
    if len(items) == 1:
        return items[0]
    return BIGAND(items)
