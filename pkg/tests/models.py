"""Worked models used across the suite."""
from stinv.terms import AND, BIGAND, IMPLIES, OccupyBox, Owner, TimePoint

B1 = OccupyBox(1, 1, 10, 10)
B2 = OccupyBox(5, 5, 15, 15)
B3 = OccupyBox(10, 10, 20, 20)
B4 = OccupyBox(21, 21, 30, 30)

MOUNTAIN = Owner("mountain")
CLOUD = Owner("cloud")

TO1 = IMPLIES(TimePoint(1), B1)
TO2 = IMPLIES(TimePoint(2), B2)
TO3 = IMPLIES(TimePoint(3), B3)
TIME_SERIES = BIGAND([TO1, TO2, TO3])

SPACE_SERIES = BIGAND([
    IMPLIES(MOUNTAIN, B1),
    IMPLIES(CLOUD, B2),
    IMPLIES(CLOUD, B3),
    IMPLIES(MOUNTAIN, B4),
])

MERGE_INPUT = BIGAND([
    IMPLIES(Owner("A"), Owner("X")),
    IMPLIES(Owner("B"), Owner("Y")),
    IMPLIES(Owner("A"), Owner("Z")),
])
MERGE_OUTPUT = BIGAND([
    IMPLIES(Owner("A"), AND(Owner("X"), Owner("Z"))),
    IMPLIES(Owner("B"), Owner("Y")),
])


def points_of(*boxes):
    """Brute-force point set of a union of boxes."""
    return {(x, y) for b in boxes for x in range(b.x1, b.x2 + 1) for y in range(b.y1, b.y2 + 1)}
