"""Propositional clauses simplified by subsumption and unit resolution.

Text format, one clause per line::

    # a comment line
    p -q r
    $T
    $F

Literals are ``atom`` or ``-atom``; ``$T`` is the TRUE clause and ``$F`` the
empty clause.  Comments must sit on their own line.  Clauses are canonicalized on
construction (sorted by atom, positive before negative, duplicates dropped),
so structural equality is clause equality.  Tautologies are kept as they are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .contract import Simplifier
from .errors import ParseError, UniverseError

TRUE_TOKEN = "$T"
EMPTY_TOKEN = "$F"


@dataclass(frozen=True, order=True)
class Literal:
    atom: str
    negated: bool = False

    def __neg__(self) -> "Literal":
        return Literal(self.atom, not self.negated)

    def __str__(self) -> str:
        return f"-{self.atom}" if self.negated else self.atom


@dataclass(frozen=True)
class Clause:
    """A canonical clause, or the TRUE element when ``true`` is set."""

    literals: tuple[Literal, ...] = ()
    true: bool = False

    @classmethod
    def of(cls, literals: Iterable[Literal]) -> "Clause":
        return cls(tuple(sorted(set(literals))))

    @property
    def is_unit(self) -> bool:
        return not self.true and len(self.literals) == 1

    def atoms(self) -> set[str]:
        return {lit.atom for lit in self.literals}

    def __len__(self) -> int:
        return len(self.literals)

    def __str__(self) -> str:
        return format_clause(self)


TRUE = Clause(true=True)
EMPTY = Clause()


def clause(text: str) -> Clause:
    """Shorthand constructor: ``clause("p -q")``."""
    return parse_clause(text)


def _subsumes(d: Clause, c: Clause) -> bool:
    return not d.true and set(d.literals) <= set(c.literals)


def _step(c: Clause, y: Sequence[Clause]) -> Clause:
    # One rewrite step; returns c itself when nothing applies.
    for d in y:
        if _subsumes(d, c):
            return TRUE
    present = set(c.literals)
    for d in y:
        if d.is_unit:
            target = -d.literals[0]
            if target in present:
                return Clause(tuple(lit for lit in c.literals if lit != target))
    return c


def unit_simplify(c: Clause, y: Sequence[Clause]) -> Clause:
    """Simplify ``c`` by ``y`` to a fixpoint of subsumption and unit resolution."""
    while not c.true:
        nxt = _step(c, y)
        if nxt == c:
            break
        c = nxt
    return c


def clause_eval(c: Clause, v: Mapping[str, bool]) -> bool:
    if c.true:
        return True
    result = False
    for lit in c.literals:
        try:
            value = v[lit.atom]
        except KeyError:
            raise UniverseError(f"atom {lit.atom!r} is not in the valuation's universe") from None
        if value != lit.negated:
            result = True
    return result


def clause_scount(c: Clause) -> int:
    return 0 if c.true else 1 + len(c.literals)


class UnitClauseSimplifier(Simplifier):
    name = "clauses"

    def simplify(self, x: Clause, y: Sequence[Clause]) -> Clause:
        return unit_simplify(x, y)

    def is_true_symbol(self, x: Clause) -> bool:
        return x.true

    def ceval(self, x: Clause, i: Mapping[str, bool]) -> bool:
        return clause_eval(x, i)

    def scount(self, x: Clause) -> int:
        return clause_scount(x)


# -- text format -------------------------------------------------------------

def _parse_literal(token: str, source: str, line: int | None) -> Literal:
    negated = token.startswith("-")
    atom = token[1:] if negated else token
    if not atom or atom[0] in "-$#":
        raise ParseError(f"malformed literal {token!r}", source, line)
    return Literal(atom, negated)


def parse_clause(text: str, source: str = "<input>", line: int | None = None) -> Clause:
    tokens = text.split()
    if TRUE_TOKEN in tokens or EMPTY_TOKEN in tokens:
        if len(tokens) != 1:
            raise ParseError(f"{TRUE_TOKEN}/{EMPTY_TOKEN} must stand alone on a line",
                             source, line)
        return TRUE if tokens[0] == TRUE_TOKEN else EMPTY
    if not tokens:
        raise ParseError("empty clause line (write $F for the empty clause)", source, line)
    return Clause.of(_parse_literal(tok, source, line) for tok in tokens)


def format_clause(c: Clause) -> str:
    if c.true:
        return TRUE_TOKEN
    if not c.literals:
        return EMPTY_TOKEN
    return " ".join(str(lit) for lit in c.literals)


def parse_clause_file(text: str, source: str = "<input>") -> list[Clause]:
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        clauses.append(parse_clause(stripped, source, lineno))
    return clauses


def format_clause_file(clauses: Iterable[Clause]) -> str:
    return "".join(format_clause(c) + "\n" for c in clauses)


def atoms_of(clauses: Iterable[Clause]) -> list[str]:
    """Sorted union of the atoms occurring in ``clauses``."""
    found: set[str] = set()
    for c in clauses:
        found |= c.atoms()
    return sorted(found)
