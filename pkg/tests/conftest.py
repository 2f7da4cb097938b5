import itertools

import pytest
from hypothesis import strategies as st

from incorp import clauses as cl
from incorp import equations as eq


def C(text):
    return cl.parse_clause(text)


def Cs(*texts):
    return [C(t) for t in texts]


def E(text):
    return eq.parse_equation(text)


def all_valuations(atoms):
    # independent of incorp.harness.enumerate_valuations
    atoms = sorted(atoms)
    for bits in itertools.product([True, False], repeat=len(atoms)):
        yield dict(zip(atoms, bits))


def holds(clause_set, v):
    return all(c.true or any(v[l.atom] != l.negated for l in c.literals) for c in clause_set)


def semantically_equal(a, b, atoms):
    return all(holds(a, v) == holds(b, v) for v in all_valuations(atoms))


ATOMS = ["p", "q", "r", "s"]

literals = st.builds(cl.Literal, st.sampled_from(ATOMS), st.booleans())
plain_clauses = st.lists(literals, min_size=0, max_size=4).map(cl.Clause.of)
clauses = st.one_of(st.just(cl.TRUE), plain_clauses, plain_clauses)
clause_sets = st.lists(clauses, max_size=6)
valuations = st.fixed_dictionaries({a: st.booleans() for a in ATOMS})

SIGNATURE = {"a": 0, "b": 0, "f": 1, "g": 2}


def _terms():
    leaves = st.sampled_from(["a", "b"]).map(eq.Term)
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.builds(lambda t: eq.Term("f", (t,)), inner),
            st.builds(lambda s, t: eq.Term("g", (s, t)), inner, inner)),
        max_leaves=6)


terms = _terms()
equations = st.one_of(st.just(eq.TRUE), st.builds(eq.make_equation, terms, terms))
equation_sets = st.lists(equations, max_size=6)
algebras = st.integers(2, 3).flatmap(lambda n: st.builds(
    lambda tables: eq.FiniteAlgebra(n, tables),
    st.fixed_dictionaries({
        sym: st.lists(st.integers(0, n - 1), min_size=n ** k, max_size=n ** k)
        .map(lambda vals, k=k: (k, tuple(vals)))
        for sym, k in SIGNATURE.items()})))


@pytest.fixture
def unit():
    return cl.UnitClauseSimplifier()


@pytest.fixture
def ground():
    return eq.GroundEquationSimplifier()
