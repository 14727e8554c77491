import random

import pytest

from stinv.errors import ParameterError, ShapeError
from stinv.filtering import TimeWindow, encode_points, filter_space, filter_time
from stinv.geometry import guarded_clauses, point_semantics
from stinv.random_terms import random_gnf_model, random_term
from stinv.rewrite import simplify
from stinv.terms import (
    AND, BIGAND, BIGOR, FALSE, IMPLIES, NOT, OR, TRUE, OccupyBox, OccupyPoint, OccupyCircle,
    TimeInterval, TimePoint, subterms,
)

from models import B1, B2, B3, CLOUD, MOUNTAIN, TIME_SERIES, TO1, points_of


def row_major(box):
    return [OccupyPoint(x, y) for y in range(box.y1, box.y2 + 1) for x in range(box.x1, box.x2 + 1)]


# --- time ------------------------------------------------------------------

def test_filter_time_picks_window():
    assert filter_time(TIME_SERIES, TimeWindow(1, 2), True) == TO1


def test_filter_time_atoms():
    assert filter_time(TRUE(), TimeWindow(0, 100), True) == TRUE()
    assert filter_time(TimePoint(5), TimeWindow(0, 3), True) == FALSE()
    assert filter_time(TimePoint(5), TimeWindow(0, 3), False) == TRUE()
    assert filter_time(TimePoint(2), TimeWindow(0, 3), True) == TimePoint(2)


def test_filter_time_empty_window_removes_all_points():
    assert filter_time(TIME_SERIES, TimeWindow(5, 5), True) == TRUE()


def test_filter_time_disjunctive_miss():
    m = BIGOR([AND(TimePoint(1), B1), AND(TimePoint(9), B2)])
    assert filter_time(m, TimeWindow(0, 5), True) == AND(TimePoint(1), B1)


def test_filter_time_leaves_not_and_intervals_alone():
    m = BIGAND([IMPLIES(TimeInterval(0, 50), B1), NOT(TimePoint(99))])
    assert filter_time(m, TimeWindow(0, 5), True) == m


def test_window_rejects_reversed_bounds():
    with pytest.raises(ParameterError):
        TimeWindow(3, 1)


def test_filter_time_is_simplify_of_rewrite():
    # oracle: substitute by hand-written walk, then simplify
    def subst(t, w, miss):
        if type(t) is TimePoint:
            return t if w.start <= t.timepoint < w.stop else miss
        if type(t) in (AND, OR, IMPLIES):
            return type(t)(*(subst(c, w, miss) for c in t.children()))
        if type(t) in (BIGAND, BIGOR):
            return type(t)([subst(c, w, miss) for c in t.args])
        return t

    rng = random.Random(2)
    for _ in range(2000):
        t = random_term(rng, 5)
        w = TimeWindow(rng.randint(0, 3), rng.randint(3, 6))
        assert filter_time(t, w, True) == simplify(subst(t, w, FALSE()))


def test_filter_time_output_in_window():
    rng = random.Random(12)
    for _ in range(2000):
        t = random_term(rng, 5)
        w = TimeWindow(2, 4)
        out = filter_time(t, w, True)
        for s in subterms(out):
            if type(s) is TimePoint:
                # NOT hides its operand from the rewrite
                assert s.timepoint in w or any(
                    type(n) is NOT and s in list(subterms(n)) for n in subterms(out))


def test_filter_time_semantics():
    rng = random.Random(31)
    for _ in range(300):
        m = random_gnf_model(rng)
        w = TimeWindow(rng.randint(0, 5), rng.randint(5, 11))
        out = filter_time(m, w, True)
        for t in range(0, 12):
            if t in w:
                assert point_semantics(out, t) == point_semantics(m, t)
            else:
                assert all(not any(type(a) is TimePoint for a in c.times)
                           for c in guarded_clauses(out) if c.holds_at(t) and c.points())


# --- space -----------------------------------------------------------------

def test_filter_space_first_iteration_box():
    m = BIGAND([IMPLIES(MOUNTAIN, B1), IMPLIES(CLOUD, B2)])
    out = filter_space(m, OccupyBox(1, 1, 5, 5))
    assert out == BIGAND([
        IMPLIES(MOUNTAIN, BIGAND(row_major(OccupyBox(1, 1, 5, 5)))),
        IMPLIES(CLOUD, OccupyPoint(5, 5)),
    ])


def test_filter_space_empty_model():
    assert filter_space(BIGAND([]), OccupyBox(0, 0, 9, 9)) == TRUE()


def test_filter_space_single_survivor_unwrapped():
    out = filter_space(BIGAND([IMPLIES(CLOUD, B2)]), OccupyBox(6, 6, 10, 10))
    assert out == IMPLIES(CLOUD, BIGAND(row_major(OccupyBox(6, 6, 10, 10))))


def test_filter_space_two_points_use_and():
    out = filter_space(IMPLIES(CLOUD, OccupyBox(0, 0, 1, 0)), OccupyBox(-5, -5, 5, 5))
    assert out == IMPLIES(CLOUD, AND(OccupyPoint(0, 0), OccupyPoint(1, 0)))


def test_filter_space_drops_empty_implications():
    out = filter_space(BIGAND([IMPLIES(CLOUD, B3), IMPLIES(MOUNTAIN, B1)]), OccupyBox(1, 1, 2, 2))
    assert out == IMPLIES(MOUNTAIN, BIGAND(row_major(OccupyBox(1, 1, 2, 2))))


def test_filter_space_rejects_non_guarded():
    with pytest.raises(ShapeError):
        filter_space(OR(B1, B2), OccupyBox(0, 0, 1, 1))
    with pytest.raises(ShapeError):
        filter_space(IMPLIES(CLOUD, OccupyCircle(1, 1, 1)), OccupyBox(0, 0, 1, 1))


def test_encode_points():
    assert encode_points([]) == TRUE()
    assert encode_points([(1, 2)]) == OccupyPoint(1, 2)


def test_filter_space_point_counts_brute_force():
    rng = random.Random(44)
    for _ in range(300):
        m = random_gnf_model(rng)
        win = OccupyBox(*(rng.randint(0, 20) for _ in range(4)))
        out = filter_space(m, win)
        wpts = points_of(win)
        for clause, kept in zip(
            [c for c in guarded_clauses(m) if c.points(win.corners)], guarded_clauses(out)
        ):
            expected = set(clause.points()) & wpts
            assert set(kept.points()) == expected
            assert all((x, y) in wpts for x, y in kept.points())
