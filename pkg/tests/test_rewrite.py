import random

import pytest
from hypothesis import given

from stinv.random_terms import random_term
from stinv.rewrite import RULES, apply_once, rewrite_step, simplify, simplify_counted
from stinv.terms import (
    AND, BIGAND, BIGOR, FALSE, IMPLIES, NOT, OR, TRUE, Invariant, OccupyBox, TimePoint,
    node_count, subterms,
)

from models import B1
from strategies import terms

T, F = TRUE(), FALSE()


# Independent oracle: smart constructors applied to already-simplified children.
# Written against the rule table directly, not against rewrite.py.
def oracle(inv: Invariant) -> Invariant:
    cls = type(inv)
    if cls is NOT:
        c = oracle(inv.t)
        return F if c == T else T if c == F else NOT(c)
    if cls is AND:
        a, b = oracle(inv.t1), oracle(inv.t2)
        if F in (a, b):
            return F
        if a == T:
            return b
        return a if b == T else AND(a, b)
    if cls is OR:
        a, b = oracle(inv.t1), oracle(inv.t2)
        if T in (a, b):
            return T
        if a == F:
            return b
        return a if b == F else OR(a, b)
    if cls is IMPLIES:
        p, c = oracle(inv.premise), oracle(inv.conclusion)
        if p == F or c == T:
            return T
        return c if p == T else IMPLIES(p, c)
    if cls in (BIGAND, BIGOR):
        unit, zero = (T, F) if cls is BIGAND else (F, T)
        kids = [oracle(c) for c in inv.args]
        if zero in kids:
            return zero
        kids = [k for k in kids if k != unit]
        if not kids:
            return unit
        return kids[0] if len(kids) == 1 else cls(kids)
    return inv


def redexes(inv):
    return [(r.name, s) for s in subterms(inv) for r in RULES
            if type(s) is r.node_type and r(s) is not None]


@pytest.mark.parametrize("term, expected", [
    (IMPLIES(F, OccupyBox(1, 1, 10, 10)), T),
    (BIGAND([IMPLIES(F, B1), IMPLIES(TimePoint(1), B1), T]), IMPLIES(TimePoint(1), B1)),
    (T, T),
    (IMPLIES(T, B1), B1),
    (IMPLIES(B1, T), T),
    (AND(T, F), F),
    (OR(F, B1), B1),
    (OR(B1, T), T),
    (BIGAND([]), T),
    (BIGOR([]), F),
    (BIGOR([F, B1]), B1),
    (BIGOR([B1, T, F]), T),
    (BIGAND([B1, B1]), BIGAND([B1, B1])),
    (AND(B1, NOT(B1)), AND(B1, NOT(B1))),
])
def test_simplify_examples(term, expected):
    assert simplify(term) == expected
    assert oracle(term) == expected


def test_apply_once_examples():
    assert apply_once(T) == (T, False)
    assert apply_once(AND(T, F)) == (F, True)
    assert apply_once(NOT(NOT(T))) in ((T, True), (NOT(F), True))
    assert simplify(NOT(NOT(T))) == T


def test_apply_once_unchanged_is_fixpoint():
    rng = random.Random(3)
    for _ in range(2000):
        t = random_term(rng)
        out, changed = apply_once(t)
        if not changed:
            assert out is t
            assert simplify(t) == t


def test_agrees_with_oracle_on_random_terms():
    rng = random.Random(5)
    for _ in range(5000):
        t = random_term(rng)
        assert simplify(t) == oracle(t)


@given(terms)
def test_result_has_no_redex(t):
    assert redexes(simplify(t)) == []


@given(terms)
def test_idempotent(t):
    s = simplify(t)
    assert simplify(s) == s


def test_size_never_grows_and_passes_bounded():
    rng = random.Random(9)
    for _ in range(3000):
        t = random_term(rng)
        n0 = size = node_count(t)
        passes = 0
        while True:
            t, changed = apply_once(t)
            assert node_count(t) <= size
            size = node_count(t)
            if not changed:
                break
            passes += 1
        assert passes <= n0
        assert simplify_counted(t)[1] == 0


def test_innermost_strategies_confluent():
    rng = random.Random(13)
    for _ in range(1000):
        t = random_term(rng)
        left = simplify(t, "leftmost-innermost")
        right = simplify(t, "rightmost-innermost")
        assert left == right == simplify(t)


def test_rewrite_step_fires_one_redex():
    t = AND(NOT(T), NOT(F))
    assert rewrite_step(t) == (AND(F, NOT(F)), True)
    assert rewrite_step(t, rightmost=True) == (AND(NOT(T), T), True)


def test_every_rule_shrinks():
    rng = random.Random(17)
    for _ in range(3000):
        for s in subterms(random_term(rng)):
            for r in RULES:
                if type(s) is r.node_type and (out := r(s)) is not None:
                    if r.name.endswith("-empty"):
                        assert node_count(out) == node_count(s) == 1
                    else:
                        assert node_count(out) < node_count(s), r.name
                    if type(out) in (BIGAND, BIGOR) and not out.args:
                        assert out in s.children(), r.name


def test_simplify_counted_reports_passes():
    assert simplify_counted(T) == (T, 0)
    assert simplify_counted(BIGAND([])) == (T, 1)
    assert simplify_counted(NOT(NOT(T))) == (T, 1)
