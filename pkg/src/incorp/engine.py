"""Direct and limbo incorporation of new elements into an irreducible database.

Both procedures take a queue ``q`` of new elements and a database ``s`` and
return a database equivalent to ``q`` and ``s`` together.  They are written
as explicit loops whose state transitions follow the recursive definitions
one-for-one:

direct incorporation
    ``c = simplify(head(q), s)``; drop ``c`` if it is TRUE, otherwise queue
    the members of ``s`` that ``c`` rewrites (after simplifying them by
    ``c``) and make ``c`` the new first member of ``s``.

limbo incorporation
    First forward-simplify every member of ``q`` into a limbo list without
    touching ``s``.  Then, for each limbo element ``b``, pull the members
    of ``s`` that ``b`` rewrites out of ``s``, re-simplify them and append
    them to the limbo list, and cons ``b`` onto ``s``.

Each loop records the pair ``(1 + lcount(queue) + lcount(db), 1 + lcount(queue))``
before every iteration and after the last one, and raises
:class:`~incorp.errors.MeasureError` if the pair ever fails to decrease
lexicographically.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .contract import Element, ElementSet, Simplifier
from .errors import MeasureError

log = logging.getLogger(__name__)

MeasurePair = tuple[int, int]


@dataclass
class IncorporationStats:
    iterations: int = 0
    true_discards: int = 0
    back_simplifications: int = 0
    # main-loop iterations whose extraction from the database was non-empty / empty
    nonempty_extractions: int = 0
    empty_extractions: int = 0
    measure_trace: list[MeasurePair] = field(default_factory=list)

    def as_dict(self, trace: bool = False) -> dict:
        out = {
            "iterations": self.iterations,
            "true_discards": self.true_discards,
            "back_simplifications": self.back_simplifications,
            "nonempty_extractions": self.nonempty_extractions,
            "empty_extractions": self.empty_extractions,
        }
        if trace:
            out["measure_trace"] = [list(p) for p in self.measure_trace]
        return out


@dataclass
class IncorporationResult:
    final_db: list[Element]
    stats: IncorporationStats


def lcount(x: ElementSet, sim: Simplifier) -> int:
    return sum(1 + sim.scount(e) for e in x)


def measure(queue: ElementSet, db: ElementSet, sim: Simplifier) -> MeasurePair:
    lq = lcount(queue, sim)
    return (1 + lq + lcount(db, sim), 1 + lq)


def _record(stats: IncorporationStats, queue, db, sim: Simplifier) -> None:
    m = measure(queue, db, sim)
    trace = stats.measure_trace
    if trace and not m < trace[-1]:
        raise MeasureError(
            f"termination measure did not decrease: {trace[-1]} -> {m}\n"
            f"  queue = {list(queue)!r}\n  db = {list(db)!r}")
    trace.append(m)


def extract_rewritables(x: Element, s: ElementSet, sim: Simplifier) -> list[Element]:
    """Members of ``s`` that ``[x]`` rewrites, in their original order."""
    return [d for d in s if sim.rewritable(d, [x])]


def extract_and_simplify_rewritables(x: Element, s: ElementSet,
                                     sim: Simplifier) -> list[Element]:
    return [sim.simplify(d, [x]) for d in extract_rewritables(x, s, sim)]


def remove_rewritables(x: Element, s: ElementSet, sim: Simplifier) -> list[Element]:
    """Members of ``s`` that ``[x]`` leaves unchanged, in their original order."""
    return [d for d in s if not sim.rewritable(d, [x])]


def _partition(x: Element, s: ElementSet, sim: Simplifier) -> tuple[list, list]:
    extracted, kept = [], []
    for d in s:
        (extracted if sim.rewritable(d, [x]) else kept).append(d)
    return extracted, kept


def direct_incorporate(q: ElementSet, s: ElementSet, sim: Simplifier) -> IncorporationResult:
    stats = IncorporationStats()
    queue = deque(q)
    db = list(s)
    _record(stats, queue, db, sim)
    while queue:
        stats.iterations += 1
        c = sim.simplify(queue.popleft(), db)
        if sim.is_true_symbol(c):
            stats.true_discards += 1
        else:
            extracted, kept = _partition(c, db, sim)
            if extracted:
                stats.nonempty_extractions += 1
                stats.back_simplifications += len(extracted)
            else:
                stats.empty_extractions += 1
            # TRUE results stay in the queue and are dropped when they reach the head
            queue.extend(sim.simplify(d, [c]) for d in extracted)
            db = [c, *kept]
        _record(stats, queue, db, sim)
    log.debug("direct incorporation done: %s", stats.as_dict())
    return IncorporationResult(db, stats)


def _preprocess(x: Element, simplifiers: Sequence[Element], limbo: list[Element],
                sim: Simplifier, stats: IncorporationStats | None) -> None:
    # in-place variant of preprocess(): appends to limbo unless x simplifies to TRUE
    c = sim.simplify(x, [*simplifiers, *limbo])
    if sim.is_true_symbol(c):
        if stats is not None:
            stats.true_discards += 1
    else:
        limbo.append(c)


def preprocess(x: Element, s: ElementSet, l: ElementSet, sim: Simplifier) -> list[Element]:
    """``l`` extended by ``simplify(x, s ++ l)`` unless that is TRUE."""
    out = list(l)
    _preprocess(x, s, out, sim, None)
    return out


def _initial_limbo(q: ElementSet, s: ElementSet, sim: Simplifier,
                   stats: IncorporationStats | None) -> list[Element]:
    limbo: list[Element] = []
    for x in q:
        _preprocess(x, s, limbo, sim, stats)
    return limbo


def initial_limbo(q: ElementSet, s: ElementSet, sim: Simplifier) -> list[Element]:
    return _initial_limbo(q, s, sim, None)


def _preprocess_list(d: ElementSet, s: ElementSet, r: ElementSet, sim: Simplifier,
                     stats: IncorporationStats | None) -> list[Element]:
    out = list(r)
    d = list(d)
    for k, x in enumerate(d):
        # simplifier set: s, the unprocessed rest of d, then everything kept so far
        _preprocess(x, [*s, *d[k + 1:]], out, sim, stats)
    return out


def preprocess_list(d: ElementSet, s: ElementSet, r: ElementSet,
                    sim: Simplifier) -> list[Element]:
    return _preprocess_list(d, s, r, sim, None)


def _process_limbo(l: ElementSet, s: ElementSet, sim: Simplifier,
                   stats: IncorporationStats) -> list[Element]:
    limbo = deque(l)
    db = list(s)
    _record(stats, limbo, db, sim)
    while limbo:
        stats.iterations += 1
        b = limbo[0]
        extracted, kept = _partition(b, db, sim)
        if extracted:
            stats.nonempty_extractions += 1
            stats.back_simplifications += len(extracted)
        else:
            stats.empty_extractions += 1
        # the simplifier set is kept ++ l with b still at the head of l
        resimplified = _preprocess_list(extracted, [*kept, *limbo], [], sim, stats)
        limbo.popleft()
        limbo.extend(resimplified)
        db = [b, *kept]
        _record(stats, limbo, db, sim)
    return db


def process_limbo(l: ElementSet, s: ElementSet, sim: Simplifier) -> IncorporationResult:
    stats = IncorporationStats()
    return IncorporationResult(_process_limbo(l, s, sim, stats), stats)


def limbo_incorporate(q: ElementSet, s: ElementSet, sim: Simplifier) -> IncorporationResult:
    """Forward-simplify ``q`` into a limbo list, then back-simplify ``s`` with it.

    ``stats.iterations`` counts only second-stage iterations; ``true_discards``
    covers both stages.  The measure trace is that of the second stage.
    """
    stats = IncorporationStats()
    limbo = _initial_limbo(q, s, sim, stats)
    db = _process_limbo(limbo, s, sim, stats)
    log.debug("limbo incorporation done: %s", stats.as_dict())
    return IncorporationResult(db, stats)


def incorporate(mode: str, q: ElementSet, s: ElementSet, sim: Simplifier) -> IncorporationResult:
    if mode == "direct":
        return direct_incorporate(q, s, sim)
    if mode == "limbo":
        return limbo_incorporate(q, s, sim)
    raise ValueError(f"unknown incorporation mode {mode!r}")


def bootstrap(elements: ElementSet, sim: Simplifier) -> list[Element]:
    """Build an irreducible database by incorporating ``elements`` one at a time."""
    db: list[Element] = []
    for e in elements:
        db = direct_incorporate([e], db, sim).final_db
    return db
