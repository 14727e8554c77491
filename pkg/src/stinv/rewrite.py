"""Fixpoint simplification with a fixed Boolean rule set.

Every rule strictly shrinks the term it fires on, except the two that turn an
empty BIGAND/BIGOR into a constant.  Rules never produce an empty list, so
those two fire only in the first pass, and the number of rewriting passes is
bounded by ``node_count(term)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .terms import (
    AND, BIGAND, BIGOR, FALSE, IMPLIES, NOT, OR, TRUE, Invariant,
)

__all__ = ["RewriteRule", "RULES", "apply_once", "simplify", "simplify_counted", "rewrite_step"]


@dataclass(frozen=True)
class RewriteRule:
    name: str
    node_type: type
    matcher: Callable[[Invariant], Optional[Invariant]]

    def __call__(self, inv: Invariant) -> Optional[Invariant]:
        return self.matcher(inv)


def _is(inv, cls) -> bool:
    return type(inv) is cls


def _bigand_false(inv):
    if any(_is(c, FALSE) for c in inv.args):
        return FALSE()


def _bigand_drop_true(inv):
    if any(_is(c, TRUE) for c in inv.args):
        kept = [c for c in inv.args if not _is(c, TRUE)]
        return BIGAND(kept) if kept else TRUE()


def _bigor_true(inv):
    if any(_is(c, TRUE) for c in inv.args):
        return TRUE()


def _bigor_drop_false(inv):
    if any(_is(c, FALSE) for c in inv.args):
        kept = [c for c in inv.args if not _is(c, FALSE)]
        return BIGOR(kept) if kept else FALSE()


def _empty(result):
    def match(inv):
        if not inv.args:
            return result()
    return match


def _singleton(inv):
    if len(inv.args) == 1:
        return inv.args[0]


# Within one node type the first matching rule wins.
RULES: tuple[RewriteRule, ...] = (
    RewriteRule("implies-false-premise", IMPLIES,
                lambda i: TRUE() if _is(i.premise, FALSE) else None),
    RewriteRule("implies-true-premise", IMPLIES,
                lambda i: i.conclusion if _is(i.premise, TRUE) else None),
    RewriteRule("implies-true-conclusion", IMPLIES,
                lambda i: TRUE() if _is(i.conclusion, TRUE) else None),
    RewriteRule("and-false", AND,
                lambda i: FALSE() if _is(i.t1, FALSE) or _is(i.t2, FALSE) else None),
    RewriteRule("and-true-left", AND, lambda i: i.t2 if _is(i.t1, TRUE) else None),
    RewriteRule("and-true-right", AND, lambda i: i.t1 if _is(i.t2, TRUE) else None),
    RewriteRule("or-true", OR,
                lambda i: TRUE() if _is(i.t1, TRUE) or _is(i.t2, TRUE) else None),
    RewriteRule("or-false-left", OR, lambda i: i.t2 if _is(i.t1, FALSE) else None),
    RewriteRule("or-false-right", OR, lambda i: i.t1 if _is(i.t2, FALSE) else None),
    RewriteRule("not-true", NOT, lambda i: FALSE() if _is(i.t, TRUE) else None),
    RewriteRule("not-false", NOT, lambda i: TRUE() if _is(i.t, FALSE) else None),
    RewriteRule("bigand-false", BIGAND, _bigand_false),
    RewriteRule("bigand-drop-true", BIGAND, _bigand_drop_true),
    RewriteRule("bigand-empty", BIGAND, _empty(TRUE)),
    RewriteRule("bigand-singleton", BIGAND, _singleton),
    RewriteRule("bigor-true", BIGOR, _bigor_true),
    RewriteRule("bigor-drop-false", BIGOR, _bigor_drop_false),
    RewriteRule("bigor-empty", BIGOR, _empty(FALSE)),
    RewriteRule("bigor-singleton", BIGOR, _singleton),
)

_BY_TYPE: dict[type, tuple[RewriteRule, ...]] = {}
for _rule in RULES:
    _BY_TYPE[_rule.node_type] = _BY_TYPE.get(_rule.node_type, ()) + (_rule,)


def _fire(inv: Invariant) -> Optional[Invariant]:
    for rule in _BY_TYPE.get(type(inv), ()):
        out = rule(inv)
        if out is not None:
            return out
    return None


def _rebuild(inv: Invariant, kids: list[Invariant]) -> Invariant:
    cls = type(inv)
    if cls is BIGAND or cls is BIGOR:
        return cls(kids)
    return cls(*kids)


def apply_once(inv: Invariant) -> tuple[Invariant, bool]:
    """One bottom-up pass: simplify the children, then try the rules once at this node."""
    kids = inv.children()
    changed = False
    if kids:
        new_kids = []
        for k in kids:
            nk, c = apply_once(k)
            new_kids.append(nk)
            changed |= c
        if changed:
            inv = _rebuild(inv, new_kids)
    out = _fire(inv)
    if out is not None:
        return out, True
    return inv, changed


def rewrite_step(inv: Invariant, rightmost: bool = False) -> tuple[Invariant, bool]:
    """Rewrite the single leftmost (or rightmost) innermost redex."""
    kids = inv.children()
    order = range(len(kids) - 1, -1, -1) if rightmost else range(len(kids))
    for i in order:
        nk, fired = rewrite_step(kids[i], rightmost)
        if fired:
            new_kids = list(kids)
            new_kids[i] = nk
            return _rebuild(inv, new_kids), True
    out = _fire(inv)
    if out is not None:
        return out, True
    return inv, False


_STRATEGIES = {
    "bottom-up": apply_once,
    "leftmost-innermost": lambda i: rewrite_step(i, rightmost=False),
    "rightmost-innermost": lambda i: rewrite_step(i, rightmost=True),
}


def simplify_counted(inv: Invariant, strategy: str = "bottom-up") -> tuple[Invariant, int]:
    """Return the fixpoint and the number of passes that rewrote something."""
    step = _STRATEGIES[strategy]
    passes = 0
    while True:
        inv, changed = step(inv)
        if not changed:
            return inv, passes
        passes += 1


def simplify(inv: Invariant, strategy: str = "bottom-up") -> Invariant:
    """Rewrite ``inv`` until no rule matches any subterm.

    >>> from stinv.terms import OccupyBox
    >>> simplify(IMPLIES(FALSE(), OccupyBox(1, 1, 10, 10)))
    TRUE()
    """
    return simplify_counted(inv, strategy)[0]
