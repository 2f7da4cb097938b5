import random

import pytest

from incorp import clauses as cl
from incorp import equations as eq
from incorp.contract import LAWS
from incorp.errors import AtomCapExceeded
from incorp.harness import (ClauseGenerator, EquationGenerator, check_laws, draw_case,
                            enumerate_valuations, replay_case, run_theorem_instances,
                            soundness_oracle)
from incorp.mutants import MUTANTS

from conftest import Cs

SIM = cl.UnitClauseSimplifier()


def test_enumerate_valuations():
    assert enumerate_valuations([]) == [{}]
    assert enumerate_valuations(["p"]) == [{"p": False}, {"p": True}]
    vals = enumerate_valuations(["p", "q"])
    assert len(vals) == 4 and len({tuple(v.items()) for v in vals}) == 4


def test_enumerate_valuations_cap():
    with pytest.raises(AtomCapExceeded, match="sampled"):
        enumerate_valuations([f"a{k}" for k in range(13)])
    assert len(enumerate_valuations(list("abc"), cap=3)) == 8


def test_soundness_oracle_examples():
    q, s = Cs("q"), Cs("-q r")
    vals = enumerate_valuations(["q", "r"])
    assert soundness_oracle(q, s, q + s, SIM, vals)
    assert soundness_oracle(q, s, Cs("r", "q"), SIM, vals)
    assert not soundness_oracle(q, s, Cs("r"), SIM, vals)
    assert not soundness_oracle(q, s, Cs("r"), SIM, [{"q": False, "r": True}])


def test_clause_laws_hold():
    reports = check_laws(SIM, ClauseGenerator(), 1000, seed=1)
    assert [r.law for r in reports] == list(LAWS)
    assert all(r.passed and r.cases == 1000 for r in reports)


def test_equation_laws_hold():
    reports = check_laws(eq.GroundEquationSimplifier(), EquationGenerator(), 500, seed=7)
    assert all(r.passed for r in reports)


def test_empty_set_generator_passes_once():
    reports = check_laws(SIM, ClauseGenerator(max_set=0), 1, seed=0)
    assert len(reports) == 8 and all(r.passed for r in reports)


def test_iters_must_be_positive():
    with pytest.raises(ValueError):
        check_laws(SIM, ClauseGenerator(), 0)


def test_deterministic():
    gen = ClauseGenerator()
    one = [r.as_dict() for r in check_laws(MUTANTS["simplify-sound"](), gen, 300, seed=4)]
    two = [r.as_dict() for r in check_laws(MUTANTS["simplify-sound"](), gen, 300, seed=4)]
    assert one == two
    assert draw_case(gen, 9, 17) == draw_case(gen, 9, 17)


@pytest.mark.parametrize("law", LAWS)
def test_mutant_caught_and_replays(law):
    mutant = MUTANTS[law]()
    gen = ClauseGenerator()
    report = {r.law: r for r in check_laws(mutant, gen, 1000, seed=1)}[law]
    assert not report.passed
    cx = report.counterexample
    assert replay_case(mutant, gen, 1, cx["case"], law) == {k: v for k, v in cx.items()
                                                            if k not in ("case", "seed")}
    # the reference simplifier passes the same case
    assert replay_case(SIM, gen, 1, cx["case"], law) is None


def test_equation_generator_respects_depth():
    gen = EquationGenerator(max_depth=3)
    rng = random.Random(0)

    def depth(t):
        return 1 + max((depth(a) for a in t.args), default=0)

    for _ in range(300):
        e = gen.element(rng)
        assert e.true or max(depth(e.lhs), depth(e.rhs)) <= 4


def test_theorem_instances_small():
    outs = run_theorem_instances("clauses", SIM, 40, seed=3)
    for o in outs:
        assert o.measure_error is None
        assert o.irreducible_direct and o.irreducible_limbo
        assert o.sound_direct and o.sound_limbo and o.cross_equivalent
        assert len(o.s) <= 12 and len(o.q) <= 12
