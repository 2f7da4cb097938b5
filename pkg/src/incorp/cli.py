"""Command-line entry point: ``incorp incorporate|conform|verify``.

Exit status is 0 on success, 1 when a property is violated, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import clauses as cl
from . import equations as eq
from .contract import Simplifier
from .engine import incorporate
from .errors import AtomCapExceeded, ParseError, SignatureError
from .harness import (DEFAULT_ATOM_CAP, GENERATORS, ClauseGenerator, check_laws,
                      enumerate_valuations, sample_valuations, soundness_counterexample)
from .irreducible import irreducible_list, reducible_pairs
from .mutants import MUTANTS

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class Theory:
    name: str
    simplifier: Simplifier
    format_file: Callable[[Sequence], str]

    def parser(self) -> Callable[[str, str], list]:
        """A file parser; equation parsers share one arity table across files."""
        if self.name == "clauses":
            return cl.parse_clause_file
        arities: dict[str, int] = {}
        return lambda text, source: eq.parse_equation_file(text, source, arities)


THEORIES = {
    "clauses": Theory("clauses", cl.UnitClauseSimplifier(), cl.format_clause_file),
    "equations": Theory("equations", eq.GroundEquationSimplifier(), eq.format_equation_file),
}


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load(parse, path: str | None, flag: str) -> list:
    if path is None:
        raise InputError(f"{flag} is required")
    return parse(_read(path), path)


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from None


def cmd_incorporate(args) -> int:
    theory = THEORIES[args.theory]
    parse = theory.parser()
    db = _load(parse, args.db, "--db")
    new = _load(parse, args.new, "--new")
    if args.out is None:
        raise InputError("--out is required")
    result = incorporate(args.mode, new, db, theory.simplifier)
    _write(args.out, theory.format_file(result.final_db))
    stats = {"mode": args.mode, "theory": args.theory, "db_size": len(db),
             "new_size": len(new), "final_size": len(result.final_db),
             **result.stats.as_dict(trace=args.trace)}
    print(json.dumps(stats))
    return EXIT_OK


def cmd_conform(args) -> int:
    if args.mutant is not None:
        if args.theory != "clauses":
            raise InputError("mutants are defined for the clauses theory only")
        sim = MUTANTS[args.mutant]()
    else:
        sim = THEORIES[args.theory].simplifier
    gen = GENERATORS[args.theory]()
    reports = check_laws(sim, gen, args.iters, seed=args.seed)
    for report in reports:
        print(report)
    failed = [r.law for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} laws passed "
          f"({sim.name}, seed {args.seed}, {args.iters} cases)")
    if args.out is not None:
        payload = {"theory": args.theory, "simplifier": sim.name, "seed": args.seed,
                   "iters": args.iters, "reports": [r.as_dict() for r in reports]}
        _write(args.out, json.dumps(payload, indent=2) + "\n")
    return EXIT_VIOLATION if failed else EXIT_OK


def _interpretations(args, theory: Theory, elements: list) -> tuple[list, Callable]:
    rng = random.Random(args.seed)
    if theory.name == "clauses":
        atoms = cl.atoms_of(elements)
        if args.sampled:
            return sample_valuations(atoms, rng, args.iters), ClauseGenerator.show_interpretation
        return enumerate_valuations(atoms, args.atom_cap), ClauseGenerator.show_interpretation
    if args.algebra:
        return [eq.parse_algebra(_read(path), path) for path in args.algebra], eq.format_algebra
    try:
        signature = eq.signature_of(elements)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return [eq.random_algebra(signature, rng) for _ in range(args.iters)], eq.format_algebra


def cmd_verify(args) -> int:
    theory = THEORIES[args.theory]
    sim = theory.simplifier
    parse = theory.parser()
    before_s = _load(parse, args.db, "--db")
    before_q = _load(parse, args.new, "--new")
    after = _load(parse, args.out, "--out")
    interps, show = _interpretations(args, theory, [*before_s, *before_q, *after])
    before_ok = irreducible_list(before_s, sim)
    after_ok = irreducible_list(after, sim)
    witness = soundness_counterexample(before_q, before_s, after, sim, interps)
    report = {
        "theory": args.theory,
        "irreducible_before": before_ok,
        "irreducible_after": after_ok,
        "reducible_pairs_after": reducible_pairs(after, sim),
        "interpretations": len(interps),
        "sound": witness is None,
        "counterexample": None if witness is None else show(witness).strip(),
    }
    print(json.dumps(report))
    violated = (before_ok and not after_ok) or witness is not None
    return EXIT_VIOLATION if violated else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="incorp",
                                description="Incorporate new elements into an irreducible "
                                            "database and check simplifier laws.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--theory", choices=sorted(THEORIES), default="clauses")
        sp.add_argument("--seed", type=int, default=0)

    inc = sub.add_parser("incorporate", help="run direct or limbo incorporation")
    common(inc)
    inc.add_argument("--mode", choices=["direct", "limbo"], default="direct")
    inc.add_argument("--db", help="existing database file")
    inc.add_argument("--new", help="file of elements to incorporate")
    inc.add_argument("--out", help="where to write the final database")
    inc.add_argument("--trace", action="store_true", help="include the measure trace in stats")
    inc.set_defaults(func=cmd_incorporate)

    con = sub.add_parser("conform", help="randomized law checking")
    common(con)
    con.add_argument("--iters", type=int, default=1000)
    con.add_argument("--out", help="write a JSON report here")
    con.add_argument("--mutant", choices=sorted(MUTANTS),
                     help="check the mutant simplifier built to break this law")
    con.set_defaults(func=cmd_conform)

    ver = sub.add_parser("verify", help="check irreducibility and soundness of a result")
    common(ver)
    ver.add_argument("--db", help="database before incorporation")
    ver.add_argument("--new", help="elements that were incorporated")
    ver.add_argument("--out", help="database after incorporation")
    ver.add_argument("--iters", type=int, default=64,
                     help="sampled interpretations (algebras, or valuations with --sampled)")
    ver.add_argument("--atom-cap", type=int, default=DEFAULT_ATOM_CAP)
    ver.add_argument("--sampled", action="store_true",
                     help="sample valuations instead of enumerating them")
    ver.add_argument("--algebra", action="append", metavar="PATH",
                     help="evaluate under this algebra file (repeatable)")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "iters", 1) < 1:
        parser.error("--iters must be at least 1")
    try:
        return args.func(args)
    except (InputError, ParseError, AtomCapExceeded, SignatureError) as exc:
        print(f"incorp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
