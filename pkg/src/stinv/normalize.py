"""Invariant processors and the normalization pipelines built from them."""
from __future__ import annotations

from functools import reduce
from typing import Callable

from .errors import ShapeError
from .rewrite import simplify
from .terms import AND, BIGAND, BIGOR, IMPLIES, OR, Invariant, sort_key

__all__ = [
    "InvariantProcessor", "compose", "flatten", "order", "deduplicate",
    "normalize_std", "merge_owners", "normalize_owner_occupied",
]

InvariantProcessor = Callable[[Invariant], Invariant]


def compose(*procs: InvariantProcessor) -> InvariantProcessor:
    """Right-to-left composition: ``compose(f, g)(x) == f(g(x))``."""
    return reduce(lambda f, g: lambda x: f(g(x)), procs)


def _map_children(inv: Invariant, proc: InvariantProcessor) -> Invariant:
    cls = type(inv)
    if cls is BIGAND or cls is BIGOR:
        return cls([proc(c) for c in inv.args])
    kids = inv.children()
    if not kids:
        return inv
    return cls(*(proc(c) for c in kids))


_FAMILY = {AND: BIGAND, BIGAND: BIGAND, OR: BIGOR, BIGOR: BIGOR}


def _splice(inv: Invariant, big: type, out: list[Invariant]) -> None:
    if _FAMILY.get(type(inv)) is big:
        for c in inv.children():
            _splice(c, big, out)
    else:
        out.append(flatten(inv))


def flatten(inv: Invariant) -> Invariant:
    """Turn nested AND/BIGAND (OR/BIGOR) chains into one BIGAND (BIGOR), order kept."""
    big = _FAMILY.get(type(inv))
    if big is None:
        return _map_children(inv, flatten)
    out: list[Invariant] = []
    for c in inv.children():
        _splice(c, big, out)
    return big(out)


def order(inv: Invariant) -> Invariant:
    """Sort the children of every BIGAND/BIGOR by the canonical order."""
    inv = _map_children(inv, order)
    if type(inv) is BIGAND or type(inv) is BIGOR:
        return type(inv)(sorted(inv.args, key=sort_key))
    return inv


def deduplicate(inv: Invariant) -> Invariant:
    """Drop repeated BIGAND/BIGOR siblings, keeping the first occurrence."""
    inv = _map_children(inv, deduplicate)
    if type(inv) is BIGAND or type(inv) is BIGOR:
        return type(inv)(dict.fromkeys(inv.args))
    return inv


_std_pass = compose(order, flatten, order, deduplicate, simplify)


def normalize_std(inv: Invariant) -> Invariant:
    """Canonical representative: simplify, deduplicate, order, flatten, order.

    The pass repeats until nothing changes, since flattening can expose new
    duplicates and deduplication can leave singleton conjunctions behind.
    Every pass either shrinks the term or is the last one.
    """
    while True:
        out = _std_pass(inv)
        if out == inv:
            return out
        inv = out


def merge_owners(inv: Invariant) -> Invariant:
    """Conjoin the conclusions of implications with identical premises.

    Expects a BIGAND of IMPLIES (a lone IMPLIES is accepted as a group of one).
    Groups keep the order in which their premise first occurs; two conclusions
    merge into AND, three or more into BIGAND.
    """
    if type(inv) is IMPLIES:
        return inv
    if type(inv) is not BIGAND or not all(type(c) is IMPLIES for c in inv.args):
        raise ShapeError(f"merge_owners expects a BIGAND of IMPLIES, got {inv!r}")
    groups: dict[Invariant, list[Invariant]] = {}
    for imp in inv.args:
        groups.setdefault(imp.premise, []).append(imp.conclusion)
    merged = []
    for premise, concs in groups.items():
        if len(concs) == 1:
            body = concs[0]
        elif len(concs) == 2:
            body = AND(*concs)
        else:
            body = BIGAND(concs)
        merged.append(IMPLIES(premise, body))
    return BIGAND(merged)


def normalize_owner_occupied(inv: Invariant) -> Invariant:
    """Standard normalization, owner merge, then standard normalization of the merged form.

    The trailing pass rewrites the merged ``AND`` conclusions into canonical
    BIGANDs so that the pipeline is idempotent.
    """
    return normalize_std(merge_owners(normalize_std(inv)))
