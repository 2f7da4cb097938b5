"""Exit criteria.  Run with ``pytest tests/test_acceptance.py -s`` to see the summary lines."""

import time

import pytest

from incorp import clauses as cl
from incorp import equations as eq
from incorp.cli import main
from incorp.contract import LAWS
from incorp.harness import (ClauseGenerator, EquationGenerator, check_laws, equivalent,
                            enumerate_valuations, run_theorem_instances)
from incorp.mutants import MUTANTS

SEED = 1
LAW_CASES = 10_000
LAW_SECONDS = 60.0
MUTANT_CASES = 1_000
INSTANCES = 500
MAX_DB = MAX_QUEUE = 12
MAX_LITERALS, MAX_ATOMS, MAX_TERM_DEPTH = 4, 8, 3
MIN_ALGEBRAS = 64
MIN_BOTH_CASES = 50

SIMPLIFIERS = {"clauses": cl.UnitClauseSimplifier(), "equations": eq.GroundEquationSimplifier()}


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        return ok
    return emit


@pytest.fixture(scope="module")
def corpus():
    return {theory: run_theorem_instances(theory, sim, INSTANCES, seed=SEED)
            for theory, sim in SIMPLIFIERS.items()}


def _depth(t):
    return max((1 + _depth(a) for a in t.args), default=0)


def test_1_conformance(report):
    start = time.perf_counter()
    failures = []
    gens = {"clauses": ClauseGenerator(), "equations": EquationGenerator()}
    for theory, sim in SIMPLIFIERS.items():
        for r in check_laws(sim, gens[theory], LAW_CASES, seed=SEED):
            if not r.passed or r.cases != LAW_CASES:
                failures.append((theory, str(r)))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < LAW_SECONDS
    report(1, ok, f"2 theories x {len(LAWS)} laws x {LAW_CASES} cases, "
                  f"{len(failures)} failing, {elapsed:.1f}s (< {LAW_SECONDS:.0f}s)")
    assert not failures, failures
    assert elapsed < LAW_SECONDS


def test_2_mutation_sensitivity(report):
    caught = {}
    for law, mutant in MUTANTS.items():
        r = {x.law: x for x in check_laws(mutant(), ClauseGenerator(), MUTANT_CASES, seed=SEED)}[law]
        caught[law] = None if r.passed else r.counterexample["case"]
    ok = sorted(caught) == sorted(LAWS) and all(
        c is not None and c < MUTANT_CASES for c in caught.values())
    report(2, ok, "mutants caught at case " + ", ".join(f"{k}={v}" for k, v in caught.items()))
    assert ok


def test_3_irreducibility(report, corpus):
    failures = 0
    for theory, outs in corpus.items():
        for o in outs:
            assert len(o.s) <= MAX_DB and len(o.q) <= MAX_QUEUE
            elems = o.q + o.s
            if theory == "clauses":
                assert all(len(c) <= MAX_LITERALS for c in elems)
                assert len(cl.atoms_of(elems)) <= MAX_ATOMS
            else:
                assert all(_depth(t) <= MAX_TERM_DEPTH for e in elems if not e.true
                               for t in (e.lhs, e.rhs))
            if not (o.measure_error is None and o.irreducible_direct and o.irreducible_limbo):
                failures += 1
    total = sum(map(len, corpus.values()))
    report(3, failures == 0, f"{total - failures}/{total} instances irreducible after "
                             f"direct and limbo incorporation")
    assert all(len(outs) >= INSTANCES for outs in corpus.values())
    assert failures == 0


def test_4_soundness(report, corpus):
    bad = [(t, o.index) for t, outs in corpus.items() for o in outs
           if not (o.sound_direct and o.sound_limbo)]
    exhaustive = all(o.interpretations == 2 ** len(cl.atoms_of(o.q + o.s))
                     for o in corpus["clauses"])
    algebras = min(o.interpretations for o in corpus["equations"])
    ok = not bad and exhaustive and algebras >= MIN_ALGEBRAS
    report(4, ok, f"clauses exhaustive over all valuations, equations on >= {algebras} "
                  f"algebras; {len(bad)} violations")
    assert ok, bad


def _strictly_decreasing(trace):
    return all(b < a for a, b in zip(trace, trace[1:])) and all(min(m) >= 1 for m in trace)


def test_5_termination_measure(report, corpus):
    outs = [o for group in corpus.values() for o in group]
    errors = [o.index for o in outs if o.measure_error is not None]
    traces_ok = all(_strictly_decreasing(r.stats.measure_trace)
                    for o in outs if o.measure_error is None for r in (o.direct, o.limbo))
    both = sum(o.exercises_both_cases for o in outs if o.measure_error is None)
    ok = not errors and traces_ok and both >= MIN_BOTH_CASES
    report(5, ok, f"all traces strictly decreasing: {traces_ok and not errors}; "
                  f"{both} instances exercise both extraction cases (need {MIN_BOTH_CASES})")
    assert ok


def test_6_cross_procedure_equivalence(report, corpus):
    sim = SIMPLIFIERS["clauses"]
    not_equiv = []
    for o in corpus["clauses"]:
        vals = enumerate_valuations(cl.atoms_of(o.q + o.s))
        if not equivalent(o.direct.final_db, o.limbo.final_db, sim, vals):
            not_equiv.append(o.index)
    eq_not_equiv = [o.index for o in corpus["equations"] if not o.cross_equivalent]
    differing = {t: sum(o.syntactically_different for o in outs) for t, outs in corpus.items()}
    ok = not not_equiv and not eq_not_equiv and sum(differing.values()) >= 1
    report(6, ok, f"direct and limbo outputs equivalent on every instance; syntactically "
                  f"different sets: {differing}")
    assert ok, (not_equiv, eq_not_equiv)


GOLDEN = [
    # (theory, mode, db, new, expected output file)
    ("clauses", "direct", "-q r\n", "q\n", "r\nq\n"),
    ("clauses", "limbo", "-q r\n", "q\n", "r\nq\n"),
    ("clauses", "direct", "p\n", "-p q\n", "q\np\n"),
    ("clauses", "limbo", "p\n", "-p q\n", "q\np\n"),
    ("clauses", "direct", "p q\n", "p\n", "p\n"),
    ("clauses", "limbo", "p\n", "-p q\np q\n", "q\np\n"),
    ("clauses", "direct", "q\n", "p\n", "p\nq\n"),
    ("clauses", "direct", "-q r\np\n", "", "-q r\np\n"),
    ("clauses", "limbo", "-q r\np\n", "", "-q r\np\n"),
    ("equations", "direct", "(= (g (f a) b) b)\n", "(= (f a) a)\n",
     "(= (g a b) b)\n(= (f a) a)\n"),
    ("equations", "limbo", "(= (f a) a)\n", "(= (h (f a)) (h a))\n", "(= (f a) a)\n"),
    ("equations", "direct", "(= (f a) a)\n", "(= (g (f a) a) b)\n", "(= (g a a) b)\n(= (f a) a)\n"),
]


def test_7_golden_fixtures(report, tmp_path, capsys):
    mismatches = []
    for k, (theory, mode, db, new, expected) in enumerate(GOLDEN):
        (tmp_path / f"db{k}").write_text(db)
        (tmp_path / f"new{k}").write_text(new)
        out = tmp_path / f"out{k}"
        code = main(["incorporate", "--theory", theory, "--mode", mode,
                     "--db", str(tmp_path / f"db{k}"), "--new", str(tmp_path / f"new{k}"),
                     "--out", str(out)])
        capsys.readouterr()
        if code != 0 or out.read_bytes() != expected.encode():
            mismatches.append(k)
    report(7, not mismatches, f"{len(GOLDEN) - len(mismatches)}/{len(GOLDEN)} golden CLI runs "
                              f"byte-identical")
    assert not mismatches, mismatches
