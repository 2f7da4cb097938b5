"""Ground equations simplified by strictly size-decreasing rewriting.

An equation is stored oriented: the larger side (by symbol count, ties
broken by a total lexicographic term order) is the left-hand side.  Only
equations whose left side is strictly larger than the right side act as
rewrite rules; equal-size equations sit in a database but never rewrite.

Equation files hold one s-expression per line, ``(= lhs rhs)``, where a term
is a bare symbol or ``(f t1 ... tn)``.  ``$T`` stands for TRUE.  Algebra
files, used to replay evaluations, look like::

    carrier 2
    a/0 0
    f/1 1 0
    g/2 0 1 1 0

with one row-major operation table per ``symbol/arity``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .contract import Simplifier
from .errors import ParseError, SignatureError

TRUE_TOKEN = "$T"


@dataclass(frozen=True)
class Term:
    symbol: str
    args: tuple["Term", ...] = ()
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "size", 1 + sum(a.size for a in self.args))

    def key(self) -> tuple:
        """Total lexicographic order: symbol first, then arguments left to right."""
        return (self.symbol, tuple(a.key() for a in self.args))

    def symbols(self) -> Iterable[tuple[str, int]]:
        yield self.symbol, len(self.args)
        for a in self.args:
            yield from a.symbols()

    def __str__(self) -> str:
        return format_term(self)


def term(symbol: str, *args: Term) -> Term:
    return Term(symbol, tuple(args))


@dataclass(frozen=True)
class Equation:
    """An oriented equation ``lhs = rhs``, or TRUE when both sides are ``None``."""

    lhs: Term | None = None
    rhs: Term | None = None

    @property
    def true(self) -> bool:
        return self.lhs is None

    @property
    def usable(self) -> bool:
        return not self.true and self.lhs.size > self.rhs.size

    def __str__(self) -> str:
        return format_equation(self)


TRUE = Equation()


def _greater_or_equal(s: Term, t: Term) -> bool:
    return (s.size, s.key()) >= (t.size, t.key())


def make_equation(a: Term, b: Term) -> Equation:
    """Canonical equation for ``a = b``; identical sides give TRUE."""
    if a == b:
        return TRUE
    return Equation(a, b) if _greater_or_equal(a, b) else Equation(b, a)


def usable_rules(rules: Sequence[Equation]) -> list[tuple[Term, Term]]:
    return [(e.lhs, e.rhs) for e in rules if e.usable]


def _normalize(t: Term, rules: list[tuple[Term, Term]], steps: list[int]) -> Term:
    # innermost-leftmost: arguments first, then the root, first matching rule wins
    args = tuple(_normalize(a, rules, steps) for a in t.args)
    if args != t.args:
        t = Term(t.symbol, args)
    for lhs, rhs in rules:
        if t == lhs:
            steps[0] += 1
            return _normalize(rhs, rules, steps)
    return t


def normalize_counting(t: Term, rules: Sequence[Equation]) -> tuple[Term, int]:
    """Normal form of ``t`` together with the number of rewrite steps taken."""
    steps = [0]
    return _normalize(t, usable_rules(rules), steps), steps[0]


def normalize(t: Term, rules: Sequence[Equation]) -> Term:
    return normalize_counting(t, rules)[0]


def eq_simplify(e: Equation, y: Sequence[Equation]) -> Equation:
    if e.true:
        return e
    rules = usable_rules(y)
    if not rules:
        return e
    steps = [0]
    lhs = _normalize(e.lhs, rules, steps)
    rhs = _normalize(e.rhs, rules, steps)
    if lhs == e.lhs and rhs == e.rhs:
        return e
    return make_equation(lhs, rhs)


def eq_scount(e: Equation) -> int:
    return 0 if e.true else e.lhs.size + e.rhs.size


@dataclass(frozen=True)
class FiniteAlgebra:
    """Carrier ``{0..carrier-1}`` with one row-major table per symbol."""

    carrier: int
    tables: Mapping[str, tuple[int, tuple[int, ...]]]

    def __post_init__(self):
        if self.carrier < 1:
            raise ValueError("carrier size must be at least 1")
        for sym, (arity, table) in self.tables.items():
            if len(table) != self.carrier ** arity:
                raise ValueError(f"table for {sym}/{arity} needs {self.carrier ** arity} "
                                 f"entries, got {len(table)}")
            if any(not 0 <= v < self.carrier for v in table):
                raise ValueError(f"table for {sym}/{arity} leaves the carrier")

    def value(self, t: Term) -> int:
        try:
            arity, table = self.tables[t.symbol]
        except KeyError:
            raise SignatureError(f"symbol {t.symbol!r} is not interpreted") from None
        if arity != len(t.args):
            raise SignatureError(f"symbol {t.symbol!r} has arity {arity}, "
                                 f"used with {len(t.args)} arguments")
        index = 0
        for a in t.args:
            index = index * self.carrier + self.value(a)
        return table[index]


def eq_eval(e: Equation, algebra: FiniteAlgebra) -> bool:
    if e.true:
        return True
    return algebra.value(e.lhs) == algebra.value(e.rhs)


def random_algebra(signature: Mapping[str, int], rng: random.Random,
                   carrier: int | None = None) -> FiniteAlgebra:
    n = carrier if carrier is not None else rng.randint(2, 3)
    tables = {sym: (k, tuple(rng.randrange(n) for _ in range(n ** k)))
              for sym, k in sorted(signature.items())}
    return FiniteAlgebra(n, tables)


class GroundEquationSimplifier(Simplifier):
    name = "equations"

    def simplify(self, x: Equation, y: Sequence[Equation]) -> Equation:
        return eq_simplify(x, y)

    def is_true_symbol(self, x: Equation) -> bool:
        return x.true

    def ceval(self, x: Equation, i: FiniteAlgebra) -> bool:
        return eq_eval(x, i)

    def scount(self, x: Equation) -> int:
        return eq_scount(x)


def signature_of(equations: Iterable[Equation],
                 into: dict[str, int] | None = None) -> dict[str, int]:
    """Symbol arities used by ``equations``; raises ValueError on a clash."""
    sig = {} if into is None else into
    for e in equations:
        if e.true:
            continue
        for side in (e.lhs, e.rhs):
            for sym, k in side.symbols():
                if sig.setdefault(sym, k) != k:
                    raise ValueError(f"symbol {sym!r} used with arities {sig[sym]} and {k}")
    return sig


# -- text formats --------------------------------------------------------------

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def _tokenize(text: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(text)]


class _Reader:
    def __init__(self, text: str, source: str, line: int | None, arities: dict[str, int]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.source = source
        self.line = line
        self.arities = arities
        self.end_column = len(text) + 1

    def error(self, message: str, column: int | None = None):
        if column is None:
            column = self.tokens[self.pos][1] if self.pos < len(self.tokens) else self.end_column
        return ParseError(message, self.source, self.line, column)

    def next(self) -> tuple[str, int]:
        if self.pos >= len(self.tokens):
            raise self.error("unexpected end of input")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, want: str):
        tok, col = self.next()
        if tok != want:
            raise self.error(f"expected {want!r}, found {tok!r}", col)

    def symbol(self) -> tuple[str, int]:
        tok, col = self.next()
        if tok in ("(", ")", "=") or tok.startswith("$"):
            raise self.error(f"expected a symbol, found {tok!r}", col)
        return tok, col

    def term(self) -> Term:
        if self.pos < len(self.tokens) and self.tokens[self.pos][0] == "(":
            self.pos += 1
            sym, col = self.symbol()
            args = []
            while self.pos < len(self.tokens) and self.tokens[self.pos][0] != ")":
                args.append(self.term())
            self.expect(")")
        else:
            sym, col = self.symbol()
            args = []
        known = self.arities.setdefault(sym, len(args))
        if known != len(args):
            raise self.error(f"symbol {sym!r} used with arity {len(args)}, "
                             f"earlier with {known}", col)
        return Term(sym, tuple(args))

    def done(self):
        if self.pos != len(self.tokens):
            raise self.error(f"trailing input {self.tokens[self.pos][0]!r}")


def parse_term(text: str, arities: dict[str, int] | None = None) -> Term:
    reader = _Reader(text, "<input>", None, {} if arities is None else arities)
    t = reader.term()
    reader.done()
    return t


def parse_equation(text: str, source: str = "<input>", line: int | None = None,
                   arities: dict[str, int] | None = None) -> Equation:
    """Parse ``(= s t)`` or ``$T``; ``arities`` is shared to enforce consistency."""
    if text.strip() == TRUE_TOKEN:
        return TRUE
    reader = _Reader(text, source, line, {} if arities is None else arities)
    reader.expect("(")
    tok, col = reader.next()
    if tok != "=":
        raise reader.error(f"expected '=', found {tok!r}", col)
    lhs = reader.term()
    rhs = reader.term()
    reader.expect(")")
    reader.done()
    return make_equation(lhs, rhs)


def format_term(t: Term) -> str:
    if not t.args:
        return t.symbol
    return "(" + " ".join([t.symbol, *(format_term(a) for a in t.args)]) + ")"


def format_equation(e: Equation) -> str:
    if e.true:
        return TRUE_TOKEN
    return f"(= {format_term(e.lhs)} {format_term(e.rhs)})"


def parse_equation_file(text: str, source: str = "<input>",
                        arities: dict[str, int] | None = None) -> list[Equation]:
    arities = {} if arities is None else arities
    equations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        equations.append(parse_equation(raw, source, lineno, arities))
    return equations


def format_equation_file(equations: Iterable[Equation]) -> str:
    return "".join(format_equation(e) + "\n" for e in equations)


def parse_algebra(text: str, source: str = "<input>") -> FiniteAlgebra:
    carrier = None
    tables: dict[str, tuple[int, tuple[int, ...]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0].startswith("#"):
            continue
        try:
            if fields[0] == "carrier":
                if len(fields) != 2 or carrier is not None:
                    raise ValueError("expected a single 'carrier N' line")
                carrier = int(fields[1])
                continue
            if carrier is None:
                raise ValueError("'carrier N' must come first")
            sym, _, arity = fields[0].rpartition("/")
            if not sym:
                raise ValueError(f"expected symbol/arity, found {fields[0]!r}")
            if sym in tables:
                raise ValueError(f"duplicate table for {sym!r}")
            tables[sym] = (int(arity), tuple(int(v) for v in fields[1:]))
        except ValueError as exc:
            raise ParseError(str(exc), source, lineno) from None
    if carrier is None:
        raise ParseError("missing 'carrier N' line", source)
    try:
        return FiniteAlgebra(carrier, tables)
    except ValueError as exc:
        raise ParseError(str(exc), source) from None


def format_algebra(algebra: FiniteAlgebra) -> str:
    lines = [f"carrier {algebra.carrier}"]
    for sym, (arity, table) in algebra.tables.items():
        lines.append(" ".join([f"{sym}/{arity}", *map(str, table)]))
    return "\n".join(lines) + "\n"
