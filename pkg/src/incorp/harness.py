"""Randomized law checking and semantic oracles.

:func:`check_laws` exercises a :class:`~incorp.contract.Simplifier` against
the eight laws in :data:`~incorp.contract.LAWS`.  Case ``k`` of a run with
seed ``s`` draws all of its inputs from ``random.Random(f"{s}/{k}")``, so a
counterexample can be replayed in isolation with :func:`replay_case`.

:func:`run_theorem_instances` checks the incorporation theorems end to end:
irreducibility preservation and logical equivalence for both procedures.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from . import clauses as cl
from . import equations as eq
from .contract import LAWS, Element, Simplifier, ceval_list
from .engine import IncorporationResult, bootstrap, direct_incorporate, limbo_incorporate
from .errors import AtomCapExceeded, MeasureError
from .irreducible import irreducible_list

DEFAULT_ATOM_CAP = 12


# -- generators ----------------------------------------------------------------

class ClauseGenerator:
    """Random clauses over a small atom universe, biased toward short clauses."""

    theory = "clauses"

    def __init__(self, atoms: int = 5, max_literals: int = 4, max_set: int = 6,
                 true_rate: float = 0.05, interps: int = 16):
        self.atoms = [f"p{k}" for k in range(atoms)]
        self.max_literals = max_literals
        self.max_set = max_set
        self.true_rate = true_rate
        self.interps = interps

    def element(self, rng: random.Random) -> cl.Clause:
        if rng.random() < self.true_rate:
            return cl.TRUE
        width = min(self.max_literals, len(self.atoms))
        weights = [1] + [max(1, 8 - 2 * k) for k in range(1, width + 1)]
        n = rng.choices(range(width + 1), weights=weights)[0]
        atoms = rng.sample(self.atoms, n)
        return cl.Clause.of(cl.Literal(a, rng.random() < 0.5) for a in atoms)

    def element_set(self, rng: random.Random, max_size: int | None = None) -> list[cl.Clause]:
        top = self.max_set if max_size is None else max_size
        return [self.element(rng) for _ in range(rng.randint(0, top))]

    def interpretations(self, rng: random.Random) -> list[dict[str, bool]]:
        return [{a: rng.random() < 0.5 for a in self.atoms} for _ in range(self.interps)]

    def oracle_interpretations(self, rng: random.Random, elements: Iterable[cl.Clause],
                               cap: int = DEFAULT_ATOM_CAP) -> list[dict[str, bool]]:
        return enumerate_valuations(cl.atoms_of(elements), cap)

    show = staticmethod(cl.format_clause)

    @staticmethod
    def show_interpretation(v: dict[str, bool]) -> str:
        return " ".join(a if v[a] else f"-{a}" for a in sorted(v))


class EquationGenerator:
    """Random ground equations over a fixed small signature."""

    theory = "equations"

    def __init__(self, signature: dict[str, int] | None = None, max_depth: int = 4,
                 max_set: int = 6, true_rate: float = 0.05, interps: int = 16,
                 oracle_algebras: int = 64):
        self.signature = dict(signature or {"a": 0, "b": 0, "f": 1, "g": 2})
        self.constants = sorted(s for s, k in self.signature.items() if k == 0)
        self.functions = sorted(s for s, k in self.signature.items() if k > 0)
        if not self.constants:
            raise ValueError("signature needs at least one constant")
        self.max_depth = max_depth
        self.max_set = max_set
        self.true_rate = true_rate
        self.interps = interps
        self.oracle_algebras = oracle_algebras

    def term(self, rng: random.Random, depth: int) -> eq.Term:
        if depth == 0 or not self.functions or rng.random() < 0.4:
            return eq.Term(rng.choice(self.constants))
        sym = rng.choice(self.functions)
        return eq.Term(sym, tuple(self.term(rng, depth - 1)
                                  for _ in range(self.signature[sym])))

    def element(self, rng: random.Random) -> eq.Equation:
        if rng.random() < self.true_rate:
            return eq.TRUE
        depth = rng.randint(0, self.max_depth)
        return eq.make_equation(self.term(rng, depth), self.term(rng, rng.randint(0, depth)))

    def element_set(self, rng: random.Random, max_size: int | None = None) -> list[eq.Equation]:
        top = self.max_set if max_size is None else max_size
        return [self.element(rng) for _ in range(rng.randint(0, top))]

    def interpretations(self, rng: random.Random) -> list[eq.FiniteAlgebra]:
        return [eq.random_algebra(self.signature, rng) for _ in range(self.interps)]

    def oracle_interpretations(self, rng: random.Random, elements: Iterable[eq.Equation],
                               cap: int = DEFAULT_ATOM_CAP) -> list[eq.FiniteAlgebra]:
        return [eq.random_algebra(self.signature, rng) for _ in range(self.oracle_algebras)]

    show = staticmethod(eq.format_equation)

    @staticmethod
    def show_interpretation(a: eq.FiniteAlgebra) -> str:
        return eq.format_algebra(a).strip().replace("\n", "; ")


GENERATORS = {"clauses": ClauseGenerator, "equations": EquationGenerator}


# -- law checking ----------------------------------------------------------------

@dataclass
class LawReport:
    law: str
    cases: int = 0
    vacuous: int = 0
    counterexample: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def as_dict(self) -> dict[str, Any]:
        return {"law": self.law, "cases": self.cases, "vacuous": self.vacuous,
                "passed": self.passed, "counterexample": self.counterexample}

    def __str__(self) -> str:
        status = "ok" if self.passed else "FAIL"
        line = f"{self.law:<20} {status:<4} cases={self.cases}"
        if self.vacuous:
            line += f" vacuous={self.vacuous}"
        if self.counterexample:
            cx = self.counterexample
            line += (f"\n    case {cx['case']}: expected {cx['expected']}, got {cx['actual']}"
                     f"\n    inputs: {cx['inputs']}")
        return line


@dataclass
class _Case:
    x: Element
    y: list
    sub: list
    z: list
    interps: list
    index: int = 0


def draw_case(gen, seed: int, index: int) -> _Case:
    rng = random.Random(f"{seed}/{index}")
    x = gen.element(rng)
    y = gen.element_set(rng)
    sub = [d for d in y if rng.random() < 0.5]
    z = gen.element_set(rng)
    return _Case(x, y, sub, z, gen.interpretations(rng), index)


def _is_natural(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool) and v >= 0


def _violation(law: str, sim: Simplifier, case: _Case, gen) -> tuple[bool, dict | None]:
    """Return (hypothesis held, counterexample or None) for one law on one case."""
    show = gen.show
    x, y = case.x, case.y
    r = sim.simplify(x, y)

    def shown(**kw):
        out = {}
        for k, v in kw.items():
            out[k] = [show(e) for e in v] if isinstance(v, list) else show(v)
        return out

    if law == "scount-natural":
        for e in [x, r, *y]:
            v = sim.scount(e)
            if not _is_natural(v):
                return True, dict(inputs=shown(x=e), expected="natural number", actual=repr(v))
    elif law == "scount-simplify":
        if r != x and not sim.scount(r) < sim.scount(x):
            return True, dict(inputs=shown(x=x, y=y), expected=f"scount < {sim.scount(x)}",
                              actual=f"{show(r)} with scount {sim.scount(r)}")
    elif law == "simplify-idempotent":
        rr = sim.simplify(r, y)
        if rr != r:
            return True, dict(inputs=shown(x=x, y=y), expected=show(r), actual=show(rr))
    elif law == "simplify-subset":
        if not sim.rewritable(x, case.sub):
            return False, None
        if not sim.rewritable(x, y):
            return True, dict(inputs=shown(a=x, x=case.sub, y=y),
                              expected="rewritable by the superset", actual="unchanged")
    elif law == "simplify-append":
        if sim.rewritable(x, y) or sim.rewritable(x, case.z):
            return False, None
        joined = sim.simplify(x, [*y, *case.z])
        if joined != x:
            return True, dict(inputs=shown(a=x, x=y, y=case.z), expected=show(x),
                              actual=show(joined))
    elif law == "ceval-boolean":
        for i in case.interps:
            for e in (x, r):
                v = sim.ceval(e, i)
                if type(v) is not bool:
                    return True, dict(inputs={**shown(x=e), "i": gen.show_interpretation(i)},
                                      expected="True or False", actual=repr(v))
    elif law == "true-symbolp-ceval":
        trues = [e for e in (x, r, *y, *case.z) if sim.is_true_symbol(e)]
        if not trues:
            return False, None
        for i in case.interps:
            for e in trues:
                if not sim.ceval(e, i):
                    return True, dict(inputs={**shown(x=e), "i": gen.show_interpretation(i)},
                                      expected="true", actual="false")
    elif law == "simplify-sound":
        held = False
        for i in case.interps:
            if not ceval_list(sim, y, i):
                continue
            held = True
            before, after = sim.ceval(x, i), sim.ceval(r, i)
            if before != after:
                return True, dict(inputs={**shown(x=x, y=y), "i": gen.show_interpretation(i)},
                                  expected=f"ceval({show(r)}) = {before}", actual=str(after))
        return held, None
    else:
        raise ValueError(f"unknown law {law!r}")
    return True, None


def check_laws(sim: Simplifier, gen, iters: int, seed: int = 0,
               laws: Sequence[str] = LAWS) -> list[LawReport]:
    """Run ``iters`` random cases against each law; one report per law.

    A law stops being checked after its first counterexample, so ``cases``
    is the number of cases examined up to and including the failing one.
    """
    if iters < 1:
        raise ValueError("iters must be at least 1")
    reports = {law: LawReport(law) for law in laws}
    for index in range(iters):
        case = draw_case(gen, seed, index)
        for law, report in reports.items():
            if not report.passed:
                continue
            report.cases += 1
            held, cx = _violation(law, sim, case, gen)
            if not held:
                report.vacuous += 1
            if cx is not None:
                report.counterexample = {"case": index, "seed": seed, **cx}
    return list(reports.values())


def replay_case(sim: Simplifier, gen, seed: int, index: int, law: str) -> dict | None:
    """Re-run one case for one law; returns the counterexample if it still fails."""
    _, cx = _violation(law, sim, draw_case(gen, seed, index), gen)
    return cx


# -- semantic oracles ----------------------------------------------------------------

def enumerate_valuations(atoms: Sequence[str], cap: int = DEFAULT_ATOM_CAP) -> list[dict[str, bool]]:
    """All ``2**len(atoms)`` valuations, first atom varying slowest."""
    atoms = list(atoms)
    if len(atoms) > cap:
        raise AtomCapExceeded(
            f"{len(atoms)} atoms exceed the exhaustive-enumeration cap of {cap}; "
            "raise the cap or use sampled mode")
    return [dict(zip(atoms, bits)) for bits in itertools.product((False, True), repeat=len(atoms))]


def sample_valuations(atoms: Sequence[str], rng: random.Random, n: int) -> list[dict[str, bool]]:
    return [{a: rng.random() < 0.5 for a in atoms} for _ in range(n)]


def soundness_counterexample(before_q: Sequence[Element], before_s: Sequence[Element],
                             after: Sequence[Element], sim: Simplifier,
                             interps: Iterable) -> Any | None:
    """First interpretation under which ``after`` and ``q`` ∧ ``s`` disagree, if any."""
    for i in interps:
        if ceval_list(sim, after, i) != (ceval_list(sim, before_q, i) and ceval_list(sim, before_s, i)):
            return i
    return None


def soundness_oracle(before_q: Sequence[Element], before_s: Sequence[Element],
                     after: Sequence[Element], sim: Simplifier, interps: Iterable) -> bool:
    return soundness_counterexample(before_q, before_s, after, sim, interps) is None


def equivalent(a: Sequence[Element], b: Sequence[Element], sim: Simplifier,
               interps: Iterable) -> bool:
    return all(ceval_list(sim, a, i) == ceval_list(sim, b, i) for i in interps)


# -- end-to-end theorem instances --------------------------------------------------

@dataclass
class InstanceOutcome:
    index: int
    q: list
    s: list
    direct: IncorporationResult | None
    limbo: IncorporationResult | None
    interpretations: int
    measure_error: str | None = None
    irreducible_direct: bool = False
    irreducible_limbo: bool = False
    sound_direct: bool = False
    sound_limbo: bool = False
    cross_equivalent: bool = False

    @property
    def syntactically_different(self) -> bool:
        """Direct and limbo results differ as sets of elements, not just in order."""
        return set(self.direct.final_db) != set(self.limbo.final_db)

    @property
    def exercises_both_cases(self) -> bool:
        return all(r.stats.nonempty_extractions > 0 and r.stats.empty_extractions > 0
                   for r in (self.direct, self.limbo))


def theorem_generator(theory: str):
    """Generator sized for the end-to-end checks: queue and db up to 12 elements."""
    if theory == "clauses":
        return ClauseGenerator(atoms=8, max_literals=4, max_set=12, true_rate=0.0)
    if theory == "equations":
        return EquationGenerator(max_depth=3, max_set=12, true_rate=0.0)
    raise ValueError(f"unknown theory {theory!r}")


def check_instance(q: Sequence[Element], s_raw: Sequence[Element], sim: Simplifier, gen,
                   rng: random.Random, index: int = 0) -> InstanceOutcome:
    s = bootstrap(s_raw, sim)
    interps = gen.oracle_interpretations(rng, [*q, *s])
    try:
        direct = direct_incorporate(q, s, sim)
        limbo = limbo_incorporate(q, s, sim)
    except MeasureError as exc:
        return InstanceOutcome(index, list(q), s, None, None, len(interps), measure_error=str(exc))
    return InstanceOutcome(
        index, list(q), s, direct, limbo, len(interps),
        irreducible_direct=irreducible_list(direct.final_db, sim),
        irreducible_limbo=irreducible_list(limbo.final_db, sim),
        sound_direct=soundness_oracle(q, s, direct.final_db, sim, interps),
        sound_limbo=soundness_oracle(q, s, limbo.final_db, sim, interps),
        cross_equivalent=equivalent(direct.final_db, limbo.final_db, sim, interps),
    )


def run_theorem_instances(theory: str, sim: Simplifier, instances: int,
                          seed: int = 0, gen=None) -> list[InstanceOutcome]:
    gen = gen or theorem_generator(theory)
    out = []
    for index in range(instances):
        rng = random.Random(f"theorem/{theory}/{seed}/{index}")
        s_raw = gen.element_set(rng)
        q = gen.element_set(rng)
        out.append(check_instance(q, s_raw, sim, gen, rng, index))
    return out
