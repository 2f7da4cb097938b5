"""Pairwise irreducibility of element sets."""

from __future__ import annotations

from .contract import Element, ElementSet, Simplifier


def mutually_irreducible(x: Element, s: ElementSet, sim: Simplifier) -> bool:
    """True iff ``x`` neither rewrites nor is rewritten by any single member of ``s``."""
    return not any(sim.rewritable(x, [d]) or sim.rewritable(d, [x]) for d in s)


def irreducible_list(s: ElementSet, sim: Simplifier) -> bool:
    s = list(s)
    return all(mutually_irreducible(x, s[k + 1:], sim) for k, x in enumerate(s))


def reducible_pairs(s: ElementSet, sim: Simplifier) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)`` where member ``j`` rewrites member ``i``; for diagnostics."""
    s = list(s)
    return [(i, j) for i, x in enumerate(s) for j, d in enumerate(s)
            if i != j and sim.rewritable(x, [d])]
