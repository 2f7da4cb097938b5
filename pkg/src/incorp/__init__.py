"""Incorporating new clauses or equations into an irreducible database.

Two procedures, direct and limbo incorporation, run over any simplifier that
satisfies the contract in :mod:`incorp.contract`.  Two reference theories
are included: propositional clauses with subsumption and unit resolution,
and ground equations with size-decreasing rewriting.
"""

from .contract import LAWS, Simplifier, ceval_list, rewritable
from .engine import (IncorporationResult, IncorporationStats, bootstrap,
                     direct_incorporate, extract_and_simplify_rewritables,
                     extract_rewritables, initial_limbo, lcount, limbo_incorporate,
                     preprocess, preprocess_list, process_limbo, remove_rewritables)
from .irreducible import irreducible_list, mutually_irreducible

__all__ = [
    "LAWS", "Simplifier", "ceval_list", "rewritable",
    "IncorporationResult", "IncorporationStats", "bootstrap", "direct_incorporate",
    "extract_and_simplify_rewritables", "extract_rewritables", "initial_limbo", "lcount",
    "limbo_incorporate", "preprocess", "preprocess_list", "process_limbo",
    "remove_rewritables", "irreducible_list", "mutually_irreducible",
]
