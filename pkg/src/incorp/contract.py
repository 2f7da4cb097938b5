"""Abstract simplifier interface and the operations derived from it.

A simplifier bundles four pure functions over an opaque element type:

* ``simplify(x, y)`` simplifies element ``x`` by the element sequence ``y``;
* ``is_true_symbol(x)`` recognizes the theory's distinguished TRUE element;
* ``ceval(x, i)`` evaluates ``x`` under an interpretation ``i``;
* ``scount(x)`` is a natural-number size used for termination arguments.

Nothing in the incorporation engine or the irreducibility checker looks
inside an element; they only use these four functions together with
structural equality.  The laws every implementation must obey are listed in
:data:`LAWS` and are checked at runtime by :mod:`incorp.harness`.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Hashable, Iterable, Sequence

Element = Hashable
ElementSet = Sequence[Element]
Interpretation = Any

LAWS = (
    "scount-natural",
    "scount-simplify",
    "simplify-idempotent",
    "simplify-subset",
    "simplify-append",
    "ceval-boolean",
    "true-symbolp-ceval",
    "simplify-sound",
)


class Simplifier(ABC):
    """A theory of elements with simplification, evaluation and size.

    Implementations must be stateless: the same arguments always produce the
    same result, so one instance can be shared between threads.
    """

    name: str = "abstract"

    @abstractmethod
    def simplify(self, x: Element, y: ElementSet) -> Element:
        """Return ``x`` simplified as far as possible by the members of ``y``."""

    @abstractmethod
    def is_true_symbol(self, x: Element) -> bool:
        """True iff ``x`` is the theory's TRUE element."""

    @abstractmethod
    def ceval(self, x: Element, i: Interpretation) -> bool:
        """Evaluate ``x`` under interpretation ``i``."""

    @abstractmethod
    def scount(self, x: Element) -> int:
        """Size of ``x``; strictly decreases whenever simplification changes it."""

    def rewritable(self, x: Element, y: ElementSet) -> bool:
        return rewritable(self, x, y)

    def ceval_list(self, x: Iterable[Element], i: Interpretation) -> bool:
        return ceval_list(self, x, i)


def rewritable(sim: Simplifier, x: Element, y: ElementSet) -> bool:
    """True iff ``y`` changes ``x`` (structural inequality after simplify)."""
    return sim.simplify(x, y) != x


def ceval_list(sim: Simplifier, x: Iterable[Element], i: Interpretation) -> bool:
    """Conjunction of ``ceval`` over ``x``; the empty conjunction is true."""
    return all(sim.ceval(e, i) for e in x)
