"""Seeded random term and model generators for property checks and benchmarks."""
from __future__ import annotations

import random

from .terms import (
    AND, BIGAND, BIGOR, FALSE, IMPLIES, NOT, OR, TRUE, ComponentState, Edge, Event, Invariant,
    Occupy3DBox, Occupy3DPoint, OccupyBox, OccupyCircle, OccupyNode, OccupyPoint, Owner,
    OwnBox, OwnPoint, Prob, TimeInterval, TimePoint, Transition,
)

LABELS = ("a", "b", "cloud", "mountain")


def random_atom(rng: random.Random) -> Invariant:
    lab = lambda: rng.choice(LABELS)  # noqa: E731
    c = lambda: rng.randint(-5, 5)  # noqa: E731
    kind = rng.randrange(22)
    if kind < 4:
        return TRUE()
    if kind < 7:
        return FALSE()
    if kind < 9:
        return TimePoint(rng.randint(0, 5))
    if kind == 9:
        a = rng.randint(0, 5)
        return TimeInterval(a, a + rng.randint(0, 3))
    if kind == 10:
        return Owner(lab())
    if kind == 11:
        return rng.choice((Event(lab()), ComponentState(lab())))
    if kind == 12:
        return Prob(rng.choice((0.0, 0.25, 0.5, 1.0)))
    if kind == 13:
        return OccupyPoint(c(), c())
    if kind in (14, 15):
        return OccupyBox(c(), c(), c(), c())
    if kind == 16:
        return rng.choice((OwnPoint(lab(), c(), c()), OwnBox(lab(), c(), c(), c(), c())))
    if kind == 17:
        return rng.choice((Occupy3DPoint(c(), c(), c()),
                           Occupy3DBox(c(), c(), c(), c(), c(), c())))
    if kind == 18:
        return OccupyCircle(c(), c(), rng.randint(0, 4))
    if kind == 19:
        return OccupyNode(lab())
    if kind == 20:
        return Edge(lab(), lab())
    return Transition(lab(), lab(), lab())


def random_term(rng: random.Random, depth: int = 6) -> Invariant:
    """Random term of nesting depth at most ``depth``."""
    if depth <= 0 or rng.random() < 0.3:
        return random_atom(rng)
    sub = lambda: random_term(rng, depth - 1)  # noqa: E731
    kind = rng.randrange(6)
    if kind == 0:
        return NOT(sub())
    if kind == 1:
        return AND(sub(), sub())
    if kind == 2:
        return OR(sub(), sub())
    if kind == 3:
        return IMPLIES(sub(), sub())
    cls = BIGAND if kind == 4 else BIGOR
    return cls([sub() for _ in range(rng.randint(0, 4))])


def random_box(rng: random.Random, lo: int, hi: int) -> OccupyBox:
    return OccupyBox(rng.randint(lo, hi), rng.randint(lo, hi), rng.randint(lo, hi), rng.randint(lo, hi))


def _guard(rng: random.Random, max_time: int) -> Invariant:
    t = rng.randint(0, max_time)
    time_atom = TimePoint(t) if rng.random() < 0.6 else TimeInterval(t, rng.randint(t, max_time))
    owner = Owner(rng.choice(LABELS))
    shape = rng.randrange(6)
    if shape == 0:
        return time_atom
    if shape == 1:
        return owner
    if shape == 2:
        return AND(time_atom, owner)
    if shape == 3:
        return BIGAND([owner, time_atom])
    if shape == 4:
        return AND(TRUE(), rng.choice((owner, time_atom)))
    return BIGAND([time_atom, TRUE(), owner, time_atom])


def _conclusion(rng: random.Random, grid: int) -> Invariant:
    pieces = []
    for _ in range(rng.randint(1, 3)):
        if rng.random() < 0.75:
            pieces.append(random_box(rng, 0, grid))
        else:
            pieces.append(OccupyPoint(rng.randint(0, grid), rng.randint(0, grid)))
    if rng.random() < 0.2:
        pieces.append(TRUE())
    if len(pieces) == 1:
        return pieces[0]
    if len(pieces) == 2 and rng.random() < 0.5:
        return AND(*pieces)
    return BIGAND(pieces)


def random_gnf_model(rng: random.Random, grid: int = 20, max_time: int = 10,
                     max_clauses: int = 5) -> Invariant:
    """BIGAND of guarded implications over a ``[0, grid]^2`` grid and times ``0..max_time``."""
    clauses = [IMPLIES(_guard(rng, max_time), _conclusion(rng, grid))
               for _ in range(rng.randint(1, max_clauses))]
    if len(clauses) > 1 and rng.random() < 0.2:
        clauses.append(rng.choice(clauses))
    return BIGAND(clauses)
