"""Deliberately broken clause simplifiers, one per law.

Each mutant differs from :class:`~incorp.clauses.UnitClauseSimplifier` in a
single place and violates the law it is keyed by in :data:`MUTANTS`.  Some
also break other laws as a side effect; the mapping records the law each
one is designed to expose.
"""

from __future__ import annotations

from typing import Sequence

from .clauses import TRUE, Clause, UnitClauseSimplifier, _step, _subsumes


class NegativeSize(UnitClauseSimplifier):
    """scount-natural: unit clauses get size -1."""

    name = "mutant-negative-size"

    def scount(self, x: Clause) -> int:
        return 0 if x.true else len(x) - 2


class ConstantSize(UnitClauseSimplifier):
    """scount-simplify: every element has the same size, so nothing shrinks."""

    name = "mutant-constant-size"

    def scount(self, x: Clause) -> int:
        return 1


class SingleStep(UnitClauseSimplifier):
    """simplify-idempotent: applies one rewrite step instead of iterating to a fixpoint."""

    name = "mutant-single-step"

    def simplify(self, x: Clause, y: Sequence[Clause]) -> Clause:
        return x if x.true else _step(x, y)


class HeadOnly(UnitClauseSimplifier):
    """simplify-subset: consults only the first member of the simplifier set."""

    name = "mutant-head-only"

    def simplify(self, x: Clause, y: Sequence[Clause]) -> Clause:
        return super().simplify(x, list(y[:1]))


class PairCollapse(UnitClauseSimplifier):
    """simplify-append: any two simplifiers jointly reduce an irreducible clause to TRUE."""

    name = "mutant-pair-collapse"

    def simplify(self, x: Clause, y: Sequence[Clause]) -> Clause:
        r = super().simplify(x, y)
        if r == x and not x.true and x.literals and len(y) >= 2:
            return TRUE
        return r


class IntegerEval(UnitClauseSimplifier):
    """ceval-boolean: evaluation returns 0/1 instead of booleans."""

    name = "mutant-integer-eval"

    def ceval(self, x: Clause, i) -> int:
        return int(super().ceval(x, i))


class FalseTrue(UnitClauseSimplifier):
    """true-symbolp-ceval: TRUE evaluates to false."""

    name = "mutant-false-true"

    def ceval(self, x: Clause, i) -> bool:
        return False if x.true else super().ceval(x, i)


class ReverseSubsumption(UnitClauseSimplifier):
    """simplify-sound: a clause contained in some simplifier is rewritten to TRUE."""

    name = "mutant-reverse-subsumption"

    def simplify(self, x: Clause, y: Sequence[Clause]) -> Clause:
        r = super().simplify(x, y)
        if not r.true and any(_subsumes(r, d) for d in y):
            return TRUE
        return r


MUTANTS = {
    "scount-natural": NegativeSize,
    "scount-simplify": ConstantSize,
    "simplify-idempotent": SingleStep,
    "simplify-subset": HeadOnly,
    "simplify-append": PairCollapse,
    "ceval-boolean": IntegerEval,
    "true-symbolp-ceval": FalseTrue,
    "simplify-sound": ReverseSubsumption,
}
