"""Relational big-step semantics: proof search and derivation checking."""

from .derivation import (Aux, Derivation, InvalidDerivation, RuleName,
                         check_derivation, check_eval_all, check_eval_prefix,
                         explain_derivation, last, nth_def)
from .search import (DEFAULT_ORDER, DEPTH_EXHAUSTED, NO_DERIVATION, Found,
                     ProofSearch, SearchOutcome, SearchStatus,
                     enumerate_derivations, search, search_program)

__all__ = [
    "Aux", "DEFAULT_ORDER", "DEPTH_EXHAUSTED", "Derivation", "Found",
    "InvalidDerivation", "NO_DERIVATION", "ProofSearch", "RuleName",
    "SearchOutcome", "SearchStatus", "check_derivation", "check_eval_all",
    "check_eval_prefix", "enumerate_derivations", "explain_derivation", "last",
    "nth_def", "search", "search_program",
]
